#include "hopfcat/constructors.hpp"

#include <algorithm>

#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

HopfPtr group_algebra(const FiniteGroupTable& g, const FieldSpec& field) {
  const std::size_t n = g.order();
  HopfAlgebra::Columns cols;
  cols.mult.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) cols.mult.push_back(SparseVec::unit(field, g.mul(a, b)));
  }
  cols.unit = SparseVec::unit(field, g.identity());
  for (std::size_t a = 0; a < n; ++a) {
    cols.comult.push_back(SparseVec::unit(field, a * n + a));
    cols.counit.push_back(Scalar::one(field));
    cols.antipode.push_back(SparseVec::unit(field, g.inverse(a)));
  }
  return make_hopf(field, n, std::move(cols), g.name().empty() ? "K[G]" : "K[" + g.name() + "]");
}

HopfPtr truncated_primitive_constants(std::uint64_t p, const FieldSpec& field) {
  if (p < 2 || p > 7 || !is_prime(p)) throw InvalidPrimeError("truncated_primitive needs a prime p <= 7");
  const std::size_t n = static_cast<std::size_t>(p);
  HopfAlgebra::Columns cols;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cols.mult.push_back(i + j < n ? SparseVec::unit(field, i + j) : SparseVec());
    }
  }
  cols.unit = SparseVec::unit(field, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Term> terms;
    std::int64_t binom = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      Scalar c(field, binom);
      if (!c.is_zero()) terms.push_back({i * n + (k - i), c});
      binom = binom * static_cast<std::int64_t>(k - i) / static_cast<std::int64_t>(i + 1);
    }
    cols.comult.emplace_back(std::move(terms));
    cols.counit.push_back(k == 0 ? Scalar::one(field) : Scalar::zero(field));
    Scalar sign(field, k % 2 == 0 ? 1 : -1);
    cols.antipode.push_back(SparseVec({Term{k, sign}}));
  }
  return make_hopf(field, n, std::move(cols), "F" + std::to_string(p) + "[x]/(x^" + std::to_string(p) + ")");
}

HopfPtr truncated_primitive(std::uint64_t p) { return truncated_primitive(p, FieldSpec::prime(p)); }

HopfPtr truncated_primitive(std::uint64_t p, const FieldSpec& field) {
  if (p < 2 || p > 7 || !is_prime(p)) throw InvalidPrimeError("truncated_primitive needs a prime p <= 7");
  if (!(field == FieldSpec::prime(p))) {
    throw MalformedInputError("truncated_primitive(" + std::to_string(p) + ") is only a Hopf algebra over Fp:" +
                              std::to_string(p) + ", not over " + field.to_string());
  }
  return truncated_primitive_constants(p, field);
}

HopfMorphism hopf_from_group_hom(const GroupMap& f, const FiniteGroupTable& src, const FiniteGroupTable& tgt,
                                 const HopfPtr& src_algebra, const HopfPtr& tgt_algebra) {
  if (!is_homomorphism(src, tgt, f)) throw InvalidHomError("map is not a group homomorphism");
  if (src_algebra->dim() != src.order() || tgt_algebra->dim() != tgt.order()) {
    throw DimensionMismatchError("group algebra dimensions do not match the groups");
  }
  Matrix m(src_algebra->field(), tgt.order(), src.order());
  for (std::size_t a = 0; a < src.order(); ++a) m(f[a], a) = Scalar::one(src_algebra->field());
  return HopfMorphism(src_algebra, tgt_algebra, std::move(m));
}

HopfMorphism hopf_from_group_hom(const GroupMap& f, const FiniteGroupTable& src, const FiniteGroupTable& tgt,
                                 const FieldSpec& field) {
  return hopf_from_group_hom(f, src, tgt, group_algebra(src, field), group_algebra(tgt, field));
}

Subspace subgroup_subspace(const HopfAlgebra& group_alg, const ElementSet& elements) {
  std::vector<SparseVec> vectors;
  for (std::size_t e : elements) vectors.push_back(group_alg.basis(e));
  return Subspace::span(group_alg.field(), group_alg.dim(), vectors);
}

ModuleAction group_action(const HopfPtr& acting, const HopfPtr& carrier, const std::vector<GroupMap>& act) {
  const std::size_t nb = acting->dim();
  const std::size_t nx = carrier->dim();
  if (act.size() != nb) throw DimensionMismatchError("group action: one map per acting element expected");
  Matrix xi(carrier->field(), nx, nb * nx);
  for (std::size_t b = 0; b < nb; ++b) {
    if (act[b].size() != nx) throw DimensionMismatchError("group action: map of the wrong size");
    for (std::size_t x = 0; x < nx; ++x) xi(act[b][x], b * nx + x) = Scalar::one(carrier->field());
  }
  return ModuleAction(acting, carrier, std::move(xi));
}

SmashProduct smash_product_unchecked(const ModuleAction& action) {
  const HopfAlgebra& x = *action.carrier();
  const HopfAlgebra& b = *action.acting();
  const FieldSpec& k = x.field();
  const std::size_t nx = x.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = nx * nb;
  TensorOps plain(x, b);
  HopfAlgebra::Columns cols;
  cols.mult.reserve(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t i = p / nb;
    const std::size_t j = p % nb;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t kx = q / nb;
      const std::size_t l = q % nb;
      // (x⊗b)(x'⊗b') = x ^{b1}x' ⊗ b2 b'
      Accumulator acc(k, n);
      for (const Term& t : b.coproduct(j).terms()) {
        SparseVec left = x.mul(x.basis(i), action.act(t.index / nb, kx));
        const SparseVec& right = b.product(t.index % nb, l);
        for (const Term& u : left.terms()) {
          Scalar c = t.coeff * u.coeff;
          for (const Term& v : right.terms()) acc.add(u.index * nb + v.index, c * v.coeff);
        }
      }
      cols.mult.push_back(acc.take());
    }
  }
  cols.unit = plain.one();
  for (std::size_t p = 0; p < n; ++p) {
    SparseVec e = SparseVec::unit(k, p);
    cols.comult.push_back(plain.comul(e));
    cols.counit.push_back(plain.counit(e));
    // S(x⊗b) = ^{S(b1)}S(x) ⊗ S(b2)
    Accumulator acc(k, n);
    SparseVec sx = x.antipode(x.basis(p / nb));
    for (const Term& t : b.coproduct(p % nb).terms()) {
      SparseVec left = action.act(b.antipode(b.basis(t.index / nb)), sx);
      const SparseVec& right = b.antipode(t.index % nb);
      for (const Term& u : left.terms()) {
        Scalar c = t.coeff * u.coeff;
        for (const Term& v : right.terms()) acc.add(u.index * nb + v.index, c * v.coeff);
      }
    }
    cols.antipode.push_back(acc.take());
  }
  HopfPtr smash = make_hopf(k, n, std::move(cols), x.name() + "⋊" + b.name());

  std::vector<SparseVec> inj_x;
  for (std::size_t i = 0; i < nx; ++i) inj_x.push_back(tensor(x.basis(i), b.one(), nb));
  std::vector<SparseVec> inj_b;
  for (std::size_t j = 0; j < nb; ++j) inj_b.push_back(tensor(x.one(), b.basis(j), nb));
  Matrix proj(k, nb, n);
  for (std::size_t p = 0; p < n; ++p) proj(p % nb, p) = x.counit(p / nb);
  return {smash, HopfMorphism(action.carrier(), smash, Matrix::from_columns(k, n, inj_x)),
          HopfMorphism(action.acting(), smash, Matrix::from_columns(k, n, inj_b)),
          HopfMorphism(smash, action.acting(), std::move(proj))};
}

SmashProduct smash_product(const ModuleAction& action) {
  AxiomReport report = check_action_axioms(action);
  if (!report.ok()) {
    throw AxiomError("smash product: action fails " + report.first_failure()->name + "\n" + report.to_string());
  }
  return smash_product_unchecked(action);
}

namespace {

bool is_group_like(const HopfAlgebra& h, const SparseVec& g) {
  return h.counit(g).is_one() && h.comul(g) == tensor(g, g, h.dim());
}

void joint_eigen_search(const HopfAlgebra& h, const std::vector<Matrix>& ops, const Subspace& space, std::size_t i,
                        std::vector<Scalar>& lambda, std::vector<SparseVec>& out) {
  const std::size_t n = h.dim();
  const FieldSpec& k = h.field();
  if (i == n) {
    SparseVec g = SparseVec::from_dense(lambda);
    if (space.contains(g) && is_group_like(h, g)) out.push_back(g);
    return;
  }
  for (std::uint32_t v = 0; v < k.characteristic(); ++v) {
    Scalar l(k, static_cast<std::int64_t>(v));
    // Restrict L_i − λ to the current space and take its kernel there.
    std::vector<SparseVec> images;
    images.reserve(space.dim());
    for (const SparseVec& r : space.rows()) images.push_back(ops[i].apply(r) - r.scaled(l));
    Subspace next = kernel_within(space, images, n);
    if (next.is_zero()) continue;
    lambda[i] = l;
    joint_eigen_search(h, ops, next, i + 1, lambda, out);
  }
}

}  // namespace

GroupLikeSet group_likes(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const FieldSpec& k = h.field();
  GroupLikeSet result;
  for (std::size_t e = 0; e < n; ++e) {
    const SparseVec& d = h.coproduct(e);
    if (d.nnz() != 1 || d.terms().front().index != e * n + e) continue;
    SparseVec g = h.basis(e).scaled(d.terms().front().coeff);
    if (is_group_like(h, g)) result.elements.push_back(g);
  }
  if (result.elements.size() == n) {
    result.complete = true;
    return result;
  }
  if (!k.is_prime_field() || k.characteristic() > 257) return result;
  // g is group-like iff L_i g = g_i g for every i, where (L_i)_{jk} is the
  // coefficient of e_i⊗e_j in Δ(e_k).
  std::vector<Matrix> ops(n, Matrix(k, n, n));
  for (std::size_t c = 0; c < n; ++c) {
    for (const Term& t : h.coproduct(c).terms()) ops[t.index / n](t.index % n, c) = t.coeff;
  }
  std::vector<Scalar> lambda(n, Scalar::zero(k));
  std::vector<SparseVec> found;
  joint_eigen_search(h, ops, Subspace::full(k, n), 0, lambda, found);
  result.elements = std::move(found);
  result.complete = true;
  return result;
}

FiniteGroupTable group_of_group_likes(const HopfAlgebra& h, const std::vector<SparseVec>& elements) {
  const std::size_t n = elements.size();
  auto index_of = [&](const SparseVec& v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (elements[i] == v) return i;
    }
    throw InvariantError("group-likes are not closed under multiplication");
  };
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index_of(h.mul(elements[a], elements[b]));
  }
  return FiniteGroupTable(std::move(table), "G(" + h.name() + ")");
}

std::optional<HopfMorphism> find_isomorphism_by_group_likes(const HopfPtr& a, const HopfPtr& b) {
  if (a->dim() != b->dim() || !(a->field() == b->field())) return std::nullopt;
  GroupLikeSet ga = group_likes(*a);
  GroupLikeSet gb = group_likes(*b);
  const std::size_t n = a->dim();
  if (ga.elements.size() != n || gb.elements.size() != n) return std::nullopt;
  FiniteGroupTable ta = group_of_group_likes(*a, ga.elements);
  FiniteGroupTable tb = group_of_group_likes(*b, gb.elements);
  std::optional<GroupMap> phi = find_group_isomorphism(ta, tb);
  if (!phi) return std::nullopt;
  std::optional<Matrix> basis_inv = inverse(Matrix::from_columns(a->field(), n, ga.elements));
  if (!basis_inv) return std::nullopt;
  std::vector<SparseVec> targets;
  for (std::size_t i = 0; i < n; ++i) targets.push_back(gb.elements[(*phi)[i]]);
  HopfMorphism f(a, b, Matrix::from_columns(a->field(), n, targets) * *basis_inv);
  if (!check_morphism(f).ok() || !f.is_isomorphism()) return std::nullopt;
  return f;
}

}  // namespace hopfcat
