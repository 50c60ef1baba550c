#include "hopfcat/categorical.hpp"

#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

namespace {

// Images of the basis of a under the linear quotient by w.
std::vector<SparseVec> projected_basis(const HopfAlgebra& a, const Subspace& w) {
  std::vector<SparseVec> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(project_to_quotient(w, a.basis(i)));
  return out;
}

}  // namespace

HopfSubalgebra hkernel(const HopfMorphism& f) {
  const HopfAlgebra& a = *f.source();
  const HopfAlgebra& b = *f.target();
  require_cocommutative(a, "hkernel");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  auto leg = [&](std::size_t i) -> const SparseVec& { return f.image_of_basis(i); };
  std::vector<SparseVec> cols;
  cols.reserve(na);
  for (std::size_t i = 0; i < na; ++i) {
    SparseVec lhs = map_left_leg(a.coproduct(i), na, nb, a.field(), leg);
    cols.push_back(lhs - tensor(b.one(), a.basis(i), na));
  }
  Subspace space = kernel_of_columns(a.field(), nb * na, cols);
  HopfSubalgebra k = HopfSubalgebra::make(f.source(), space, "HKer");
  if (!is_normal_by_conjugation(k)) throw InvariantError("hkernel: result is not normal");
  return k;
}

bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& space) {
  for (const SparseVec& x : space.rows()) {
    if (!h.counit(x).is_zero()) return false;
    if (!space.contains(h.antipode(x))) return false;
    for (std::size_t i = 0; i < h.dim(); ++i) {
      SparseVec e = h.basis(i);
      if (!space.contains(h.mul(e, x)) || !space.contains(h.mul(x, e))) return false;
    }
  }
  return is_two_sided_coideal(h, space);
}

Quotient quotient_by_hopf_ideal(const HopfPtr& a, const Subspace& ideal, std::string name) {
  const HopfAlgebra& h = *a;
  if (!is_hopf_ideal(h, ideal)) throw InvariantError("quotient: subspace is not a Hopf ideal");
  QuotientSplit split = quotient_split(h.dim(), ideal);
  const std::size_t q = split.coset_basis.size();
  const FieldSpec& k = h.field();
  std::vector<SparseVec> proj = projected_basis(h, ideal);
  auto leg = [&](std::size_t i) -> const SparseVec& { return proj[i]; };
  auto pi = [&](const SparseVec& v) { return project_to_quotient(ideal, v); };
  HopfAlgebra::Columns cols;
  cols.mult.reserve(q * q);
  for (std::size_t i : split.coset_basis) {
    for (std::size_t j : split.coset_basis) cols.mult.push_back(pi(h.product(i, j)));
  }
  cols.unit = pi(h.one());
  for (std::size_t i : split.coset_basis) {
    SparseVec half = map_left_leg(h.coproduct(i), h.dim(), q, k, leg);
    cols.comult.push_back(map_right_leg(half, h.dim(), q, k, q, leg));
    cols.counit.push_back(h.counit(i));
    cols.antipode.push_back(pi(h.antipode(i)));
  }
  HopfPtr quotient = make_hopf(k, q, std::move(cols), name.empty() ? h.name() + "/I" : std::move(name));
  return {quotient, HopfMorphism(a, quotient, std::move(split.proj)), ideal};
}

Quotient cokernel(const HopfMorphism& f) {
  const HopfAlgebra& b = *f.target();
  require_cocommutative(b, "cokernel");
  std::vector<SparseVec> plus;
  for (std::size_t i = 0; i < f.source()->dim(); ++i) {
    const SparseVec& y = f.image_of_basis(i);
    plus.push_back(y - b.one().scaled(b.counit(y)));
  }
  Subspace generators = Subspace::span(b.field(), b.dim(), plus);
  Subspace ideal = two_sided_ideal(b, generators);
  Quotient q = quotient_by_hopf_ideal(f.target(), ideal, "coker");
  if (!(compose(q.proj, f) == HopfMorphism::zero(f.source(), q.quotient))) {
    throw InvariantError("cokernel: projection does not kill the morphism");
  }
  return q;
}

FactorizationResult image_factorization(const HopfMorphism& f) {
  HopfSubalgebra k = hkernel(f);
  Quotient q = cokernel(k.inclusion());
  if (!(q.ideal == f.linear_kernel())) {
    throw InvariantError("factorization: A HKer(f)+ A differs from the linear kernel");
  }
  QuotientSplit split = quotient_split(f.source()->dim(), q.ideal);
  std::vector<SparseVec> cols;
  for (std::size_t i : split.coset_basis) cols.push_back(f.image_of_basis(i));
  HopfMorphism mono(q.quotient, f.target(), Matrix::from_columns(f.target()->field(), f.target()->dim(), cols));
  if (!(compose(mono, q.proj) == f)) throw InvariantError("factorization does not recompose to f");
  if (!check_morphism(mono).ok()) throw InvariantError("factorization: induced map is not a Hopf morphism");
  return {q.proj, mono};
}

Pullback pullback(const HopfMorphism& f, const HopfMorphism& g) {
  if (f.target()->dim() != g.target()->dim()) {
    throw DimensionMismatchError("pullback: morphisms have different targets");
  }
  const HopfAlgebra& a = *f.source();
  const HopfAlgebra& c = *g.source();
  const HopfAlgebra& b = *f.target();
  require_cocommutative(a, "pullback");
  require_cocommutative(c, "pullback");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t nc = c.dim();
  const FieldSpec& k = a.field();
  // a⊗c ↦ a1⊗f(a2)⊗c − a⊗g(c1)⊗c2 in A⊗B⊗C
  std::vector<SparseVec> cols;
  cols.reserve(na * nc);
  for (std::size_t i = 0; i < na; ++i) {
    auto leg = [&](std::size_t j) -> const SparseVec& { return f.image_of_basis(j); };
    SparseVec left = map_right_leg(a.coproduct(i), na, nb, k, na, leg);
    for (std::size_t j = 0; j < nc; ++j) {
      Accumulator acc(k, na * nb * nc);
      for (const Term& t : left.terms()) acc.add(t.index * nc + j, t.coeff);
      for (const Term& t : c.coproduct(j).terms()) {
        for (const Term& y : g.image_of_basis(t.index / nc).terms()) {
          acc.add((i * nb + y.index) * nc + t.index % nc, -(t.coeff * y.coeff));
        }
      }
      cols.push_back(acc.take());
    }
  }
  Subspace space = kernel_of_columns(k, na * nb * nc, cols);
  TensorOps ops(a, c);
  HopfPtr object = restrict_structure(ops, space, a.name() + "x_" + b.name() + c.name());
  std::vector<SparseVec> p1;
  std::vector<SparseVec> p2;
  for (const SparseVec& r : space.rows()) {
    Accumulator x(k, na);
    Accumulator z(k, nc);
    for (const Term& t : r.terms()) {
      x.add(t.index / nc, t.coeff * c.counit(t.index % nc));
      z.add(t.index % nc, t.coeff * a.counit(t.index / nc));
    }
    p1.push_back(x.take());
    p2.push_back(z.take());
  }
  return {object, space, HopfMorphism(object, f.source(), Matrix::from_columns(k, na, p1)),
          HopfMorphism(object, g.source(), Matrix::from_columns(k, nc, p2))};
}

HopfMorphism pullback_pairing(const Pullback& pb, const HopfMorphism& f, const HopfMorphism& g, const HopfMorphism& u,
                              const HopfMorphism& v) {
  if (!(compose(f, u) == compose(g, v))) throw DiagramError("pullback pairing: f u differs from g v");
  const HopfAlgebra& t = *u.source();
  const std::size_t n = t.dim();
  const std::size_t na = u.target()->dim();
  const std::size_t nc = v.target()->dim();
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < n; ++i) {
    Accumulator acc(t.field(), na * nc);
    for (const Term& s : t.coproduct(i).terms()) {
      for (const Term& x : u.image_of_basis(s.index / n).terms()) {
        for (const Term& y : v.image_of_basis(s.index % n).terms()) {
          acc.add(x.index * nc + y.index, s.coeff * x.coeff * y.coeff);
        }
      }
    }
    SparseVec w = acc.take();
    if (!pb.space.contains(w)) throw DiagramError("pullback pairing: image leaves the pullback");
    cols.push_back(SparseVec::from_dense(pb.space.coordinates(w)));
  }
  return HopfMorphism(u.source(), pb.object, Matrix::from_columns(t.field(), pb.object->dim(), cols));
}

HopfSubalgebra equalizer(const HopfMorphism& f, const HopfMorphism& g) {
  if (f.source()->dim() != g.source()->dim() || f.target()->dim() != g.target()->dim()) {
    throw DimensionMismatchError("equalizer: morphisms have different shapes");
  }
  Subspace agree = kernel_space(f.matrix() - g.matrix());
  Subspace d = largest_subcoalgebra_in(*f.source(), agree);
  return HopfSubalgebra::make(f.source(), d, "Eq");
}

HopfSubalgebra h_inverse(const HopfMorphism& p, const HopfSubalgebra& c) {
  const HopfAlgebra& a = *p.source();
  const HopfAlgebra& b = *p.target();
  if (c.ambient()->dim() != b.dim()) throw DimensionMismatchError("h_inverse: subalgebra not in the target");
  Subspace cplus = plus_part(c);
  const std::size_t na = a.dim();
  const std::size_t q = b.dim() - cplus.dim();
  std::vector<SparseVec> pi_p;
  pi_p.reserve(na);
  for (std::size_t i = 0; i < na; ++i) pi_p.push_back(project_to_quotient(cplus, p.image_of_basis(i)));
  SparseVec pi_one = project_to_quotient(cplus, b.one());
  auto leg = [&](std::size_t i) -> const SparseVec& { return pi_p[i]; };
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < na; ++i) {
    SparseVec lhs = map_left_leg(a.coproduct(i), na, q, a.field(), leg);
    cols.push_back(lhs - tensor(pi_one, a.basis(i), na));
  }
  Subspace space = kernel_of_columns(a.field(), q * na, cols);
  return HopfSubalgebra::make(p.source(), space, "p^-1(C)");
}

HopfSubalgebra direct_image(const HopfMorphism& p, const HopfSubalgebra& d) {
  if (d.ambient()->dim() != p.source()->dim()) throw DimensionMismatchError("direct_image: subalgebra not in the source");
  return HopfSubalgebra::make(p.target(), map_subspace(p, d.space()), "p(D)");
}

LeftIdealCoideal newman_phi(const HopfSubalgebra& d) {
  const HopfAlgebra& a = *d.ambient();
  Subspace dplus = plus_part(d);
  std::vector<SparseVec> vectors;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    SparseVec e = a.basis(i);
    for (const SparseVec& x : dplus.rows()) vectors.push_back(a.mul(e, x));
  }
  return LeftIdealCoideal::make(d.ambient(), Subspace::span(a.field(), a.dim(), vectors));
}

HopfSubalgebra newman_psi(const LeftIdealCoideal& ideal) {
  const HopfAlgebra& a = *ideal.ambient();
  const std::size_t n = a.dim();
  const std::size_t q = n - ideal.dim();
  std::vector<SparseVec> proj = projected_basis(a, ideal.space());
  SparseVec pi_one = project_to_quotient(ideal.space(), a.one());
  auto leg = [&](std::size_t i) -> const SparseVec& { return proj[i]; };
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec lhs = map_right_leg(a.coproduct(i), n, q, a.field(), n, leg);
    cols.push_back(lhs - tensor(a.basis(i), pi_one, q));
  }
  return HopfSubalgebra::make(ideal.ambient(), kernel_of_columns(a.field(), n * q, cols), "Psi(I)");
}

bool is_normal_by_conjugation(const HopfSubalgebra& d) {
  const HopfAlgebra& a = *d.ambient();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (const SparseVec& x : d.space().rows()) {
      Accumulator acc(a.field(), n);
      for (const Term& t : a.coproduct(i).terms()) {
        acc.add_scaled(a.mul(a.mul(a.basis(t.index / n), x), a.antipode(a.basis(t.index % n))), t.coeff);
      }
      if (!d.space().contains(acc.take())) return false;
    }
  }
  return true;
}

bool is_normal_by_ideal(const HopfSubalgebra& d) {
  return is_hopf_ideal(*d.ambient(), newman_phi(d).space());
}

bool is_normal(const HopfSubalgebra& d) {
  bool conj = is_normal_by_conjugation(d);
  if (conj != is_normal_by_ideal(d)) throw InvariantError("normality criteria disagree");
  return conj;
}

Extension make_extension(const HopfMorphism& epi, std::optional<HopfMorphism> section) {
  if (!epi.is_surjective()) throw DiagramError("extension: the epimorphism is not surjective");
  if (section && !(compose(epi, *section) == HopfMorphism::identity(epi.target()))) {
    throw DiagramError("extension: section does not split the epimorphism");
  }
  return {hkernel(epi).inclusion(), epi, std::move(section)};
}

bool check_split_short_five(const Extension& top, const Extension& bottom, const HopfMorphism& kappa,
                            const HopfMorphism& alpha, const HopfMorphism& beta) {
  if (!top.section || !bottom.section) throw DiagramError("split short five: both extensions need sections");
  if (!(compose(alpha, top.kernel_inclusion) == compose(bottom.kernel_inclusion, kappa))) {
    throw DiagramError("split short five: kernel square does not commute");
  }
  if (!(compose(beta, top.epi) == compose(bottom.epi, alpha))) {
    throw DiagramError("split short five: quotient square does not commute");
  }
  if (!(compose(alpha, *top.section) == compose(*bottom.section, beta))) {
    throw DiagramError("split short five: section square does not commute");
  }
  return alpha.is_isomorphism();
}

bool diagonal_is_normal(const HopfPtr& x) {
  TensorProduct xx = tensor_product(x, x);
  HopfMorphism id = HopfMorphism::identity(x);
  HopfMorphism diag = pairing(id, id, xx.product);
  HopfSubalgebra image = HopfSubalgebra::make(xx.product, diag.image(), "diag");
  return is_normal_by_ideal(image);
}

}  // namespace hopfcat
