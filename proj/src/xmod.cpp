#include "hopfcat/xmod.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hopfcat/commutator.hpp"
#include "hopfcat/errors.hpp"

namespace hopfcat {

namespace {

SparseVec coords_or_throw(const Subspace& s, const SparseVec& v, const char* what) {
  auto c = detail::coordinates_in(s, v);
  if (!c) throw InvariantError(std::string(what) + ": vector outside the expected subspace");
  return *c;
}

// ^b k = i(b1) k i(S b2), computed in A1 and read back in K.
Matrix conjugation_on_kernel(const HopfSubalgebra& kernel, const HopfMorphism& i) {
  const HopfAlgebra& a = *kernel.ambient();
  const HopfAlgebra& b = *i.source();
  const std::size_t nb = b.dim();
  const std::size_t nk = kernel.dim();
  std::vector<SparseVec> cols;
  cols.reserve(nb * nk);
  for (std::size_t e = 0; e < nb; ++e) {
    for (std::size_t x = 0; x < nk; ++x) {
      const SparseVec& k = kernel.space().rows()[x];
      Accumulator acc(a.field(), a.dim());
      for (const Term& t : b.coproduct(e).terms()) {
        SparseVec left = a.mul(i.image_of_basis(t.index / nb), k);
        acc.add_scaled(a.mul(left, i.apply(b.antipode(t.index % nb))), t.coeff);
      }
      cols.push_back(coords_or_throw(kernel.space(), acc.take(), "kernel action"));
    }
  }
  return Matrix::from_columns(a.field(), nk, cols);
}

// Rewrites v ∈ A⊗B as an element of K⊗B, K a subspace of A.
SparseVec left_leg_coordinates(const Subspace& k, const SparseVec& v, std::size_t nb, const char* what) {
  std::map<std::size_t, std::vector<Term>> slices;
  for (const Term& t : v.terms()) slices[t.index % nb].push_back({t.index / nb, t.coeff});
  Accumulator acc(k.field(), k.dim() * nb);
  for (auto& [b, terms] : slices) {
    SparseVec c = coords_or_throw(k, SparseVec(std::move(terms)), what);
    for (const Term& t : c.terms()) acc.add(t.index * nb + b, t.coeff);
  }
  return acc.take();
}

// k⊗b ↦ k i(b) from K⋊A0 to A1.
HopfMorphism multiply_out(const HopfPtr& smash, const HopfSubalgebra& kernel, const HopfMorphism& i) {
  const HopfAlgebra& a = *kernel.ambient();
  const std::size_t nb = i.source()->dim();
  std::vector<SparseVec> cols;
  for (std::size_t k = 0; k < kernel.dim(); ++k) {
    for (std::size_t b = 0; b < nb; ++b) cols.push_back(a.mul(kernel.space().rows()[k], i.image_of_basis(b)));
  }
  return HopfMorphism(smash, kernel.ambient(), Matrix::from_columns(a.field(), a.dim(), cols));
}

bool try_equal(const std::function<HopfMorphism()>& lhs, const HopfMorphism& rhs) {
  try {
    return lhs() == rhs;
  } catch (const DiagramError&) {
    return false;
  }
}

AxiomCheck equality_check(std::string name, bool ok) {
  AxiomCheck c{std::move(name)};
  c.passed = ok;
  return c;
}

// Applies m, defined on the basis of P, to a vector of A1⊗A1 lying in P.
std::optional<SparseVec> apply_on_pairs(const GroupoidStructure& g, const SparseVec& v) {
  auto c = detail::coordinates_in(g.pairs.space, v);
  if (!c) return std::nullopt;
  return g.m.apply(*c);
}

std::optional<SparseVec> compose_left_first(const GroupoidStructure& g, const SparseVec& t, std::size_t n) {
  // (m⊗id) then m
  std::map<std::size_t, std::vector<Term>> slices;
  for (const Term& x : t.terms()) slices[x.index % n].push_back({x.index / n, x.coeff});
  Accumulator acc(g.m.target()->field(), n * n);
  for (auto& [c, terms] : slices) {
    auto v = apply_on_pairs(g, SparseVec(std::move(terms)));
    if (!v) return std::nullopt;
    for (const Term& x : v->terms()) acc.add(x.index * n + c, x.coeff);
  }
  return apply_on_pairs(g, acc.take());
}

std::optional<SparseVec> compose_right_first(const GroupoidStructure& g, const SparseVec& t, std::size_t n) {
  // (id⊗m) then m
  std::map<std::size_t, std::vector<Term>> slices;
  for (const Term& x : t.terms()) slices[x.index / (n * n)].push_back({x.index % (n * n), x.coeff});
  Accumulator acc(g.m.target()->field(), n * n);
  for (auto& [a, terms] : slices) {
    auto v = apply_on_pairs(g, SparseVec(std::move(terms)));
    if (!v) return std::nullopt;
    for (const Term& x : v->terms()) acc.add(a * n + x.index, x.coeff);
  }
  return apply_on_pairs(g, acc.take());
}

AxiomCheck associativity_check(const GroupoidStructure& g) {
  AxiomCheck c{"associativity"};
  const FieldSpec& k = g.m.target()->field();
  const std::size_t n = g.graph.a1()->dim();
  const Subspace& p = g.pairs.space;
  // Composable triples: (P⊗A1) ∩ (A1⊗P) inside A1⊗A1⊗A1.
  std::vector<SparseVec> right;
  std::vector<SparseVec> left;
  right.reserve(p.dim() * n);
  left.reserve(p.dim() * n);
  for (const SparseVec& r : p.rows()) {
    for (std::size_t e = 0; e < n; ++e) {
      right.push_back(tensor(r, SparseVec::unit(k, e), n));
      left.push_back(tensor(SparseVec::unit(k, e), r, n * n));
    }
  }
  Subspace triples = subspace_intersection(Subspace::span(k, n * n * n, right), Subspace::span(k, n * n * n, left));
  for (std::size_t t = 0; t < triples.dim(); ++t) {
    auto a = compose_left_first(g, triples.rows()[t], n);
    auto b = compose_right_first(g, triples.rows()[t], n);
    if (!a || !b || !(*a == *b)) {
      c.passed = false;
      c.witness = {t};
      c.detail = "composable triple basis vector";
      return c;
    }
  }
  return c;
}

}  // namespace

AxiomReport check_crossed_module(const CrossedModule& cm) {
  const ModuleAction& act = cm.action;
  const HopfAlgebra& x = *act.carrier();
  const HopfAlgebra& b = *act.acting();
  if (cm.d.source()->dim() != x.dim() || cm.d.target()->dim() != b.dim()) {
    throw DimensionMismatchError("crossed module: d does not go from the carrier to the acting algebra");
  }
  AxiomReport report;
  report.merge(check_action_axioms(act), "action:");
  report.merge(check_morphism(cm.d), "d:");
  const std::size_t nx = x.dim();
  const std::size_t nb = b.dim();

  AxiomCheck equi{"equivariance"};
  for (std::size_t e = 0; e < nb && equi.passed; ++e) {
    for (std::size_t y = 0; y < nx; ++y) {
      SparseVec lhs = cm.d.apply(act.act(e, y));
      Accumulator acc(b.field(), nb);
      for (const Term& t : b.coproduct(e).terms()) {
        acc.add_scaled(b.mul(b.mul(b.basis(t.index / nb), cm.d.image_of_basis(y)), b.antipode(t.index % nb)),
                       t.coeff);
      }
      if (!(lhs == acc.take())) {
        equi.passed = false;
        equi.witness = {e, y};
        break;
      }
    }
  }
  report.add(std::move(equi));

  AxiomCheck peiffer{"peiffer"};
  for (std::size_t y = 0; y < nx && peiffer.passed; ++y) {
    for (std::size_t z = 0; z < nx; ++z) {
      SparseVec lhs = act.act(cm.d.image_of_basis(y), x.basis(z));
      Accumulator acc(x.field(), nx);
      for (const Term& t : x.coproduct(y).terms()) {
        acc.add_scaled(x.mul(x.product(t.index / nx, z), x.antipode(t.index % nx)), t.coeff);
      }
      if (!(lhs == acc.take())) {
        peiffer.passed = false;
        peiffer.witness = {y, z};
        break;
      }
    }
  }
  report.add(std::move(peiffer));
  return report;
}

CrossedModule conjugation_crossed_module(const FiniteGroupTable& g, const ElementSet& n, const FieldSpec& field) {
  if (!is_normal_subgroup(g, n)) throw NormalityError("conjugation crossed module: subgroup is not normal");
  HopfPtr kg = group_algebra(g, field);
  HopfSubalgebra sub = HopfSubalgebra::make(kg, subgroup_subspace(*kg, n), "K[N]");
  std::vector<SparseVec> cols;
  for (std::size_t b = 0; b < g.order(); ++b) {
    for (std::size_t x : n) {
      auto it = std::lower_bound(n.begin(), n.end(), g.conjugate(b, x));
      cols.push_back(SparseVec::unit(field, static_cast<std::size_t>(it - n.begin())));
    }
  }
  ModuleAction act(kg, sub.algebra(), Matrix::from_columns(field, n.size(), cols));
  return {std::move(act), sub.inclusion()};
}

ReflexiveGraph make_reflexive_graph(HopfMorphism delta, HopfMorphism gamma, HopfMorphism i) {
  if (gamma.source()->dim() != delta.source()->dim() || gamma.target()->dim() != delta.target()->dim() ||
      i.source()->dim() != delta.target()->dim() || i.target()->dim() != delta.source()->dim()) {
    throw DimensionMismatchError("reflexive graph: maps do not share A1 and A0");
  }
  HopfMorphism id = HopfMorphism::identity(delta.target());
  if (!(compose(delta, i) == id) || !(compose(gamma, i) == id)) {
    throw DiagramError("reflexive graph: i is not a common section of delta and gamma");
  }
  return {std::move(delta), std::move(gamma), std::move(i)};
}

AxiomReport check_groupoid(const GroupoidStructure& g) {
  const ReflexiveGraph& r = g.graph;
  const Pullback& pb = g.pairs;
  HopfMorphism id1 = HopfMorphism::identity(r.a1());
  HopfMorphism id0 = HopfMorphism::identity(r.a0());
  HopfMorphism i_delta = compose(r.i, r.delta);
  HopfMorphism i_gamma = compose(r.i, r.gamma);
  auto pair = [&](const HopfMorphism& u, const HopfMorphism& v) {
    return pullback_pairing(pb, r.delta, r.gamma, u, v);
  };

  AxiomReport report;
  report.add(equality_check("reflexive", compose(r.delta, r.i) == id0 && compose(r.gamma, r.i) == id0));
  report.merge(check_morphism(g.m), "m:");
  report.merge(check_morphism(g.iota), "iota:");
  report.add(equality_check("unit-right", try_equal([&] { return compose(g.m, pair(id1, i_delta)); }, id1)));
  report.add(equality_check("unit-left", try_equal([&] { return compose(g.m, pair(i_gamma, id1)); }, id1)));
  report.add(equality_check("source", compose(r.delta, g.m) == compose(r.delta, pb.p2)));
  report.add(equality_check("target", compose(r.gamma, g.m) == compose(r.gamma, pb.p1)));
  report.add(associativity_check(g));
  report.add(equality_check("inverse-source", compose(r.delta, g.iota) == r.gamma));
  report.add(equality_check("inverse-target", compose(r.gamma, g.iota) == r.delta));
  report.add(equality_check("inverse-left", try_equal([&] { return compose(g.m, pair(g.iota, id1)); }, i_delta)));
  report.add(equality_check("inverse-right", try_equal([&] { return compose(g.m, pair(id1, g.iota)); }, i_gamma)));
  return report;
}

SplitDecomposition split_epi_to_action(const Extension& e) {
  if (!e.section) throw MissingSectionError("split_epi_to_action: extension has no section");
  const HopfMorphism& delta = e.epi;
  const HopfMorphism& i = *e.section;
  const HopfPtr& a = delta.source();
  const HopfAlgebra& h = *a;
  const std::size_t n = h.dim();
  const std::size_t nb = delta.target()->dim();
  HopfSubalgebra kernel = hkernel(delta);
  ModuleAction action(delta.target(), kernel.algebra(), conjugation_on_kernel(kernel, i));
  SmashProduct smash = smash_product(action);
  HopfMorphism phi = multiply_out(smash.algebra, kernel, i);

  HopfMorphism i_delta = compose(i, delta);
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    // a1 iδ(S a2) ⊗ δ(a3)
    Accumulator acc(h.field(), n * nb);
    for (const Term& s : h.coproduct(x).terms()) {
      for (const Term& t : h.coproduct(s.index % n).terms()) {
        SparseVec left = h.mul(h.basis(s.index / n), i_delta.apply(h.antipode(t.index / n)));
        SparseVec v = tensor(left, delta.image_of_basis(t.index % n), nb);
        acc.add_scaled(v, s.coeff * t.coeff);
      }
    }
    cols.push_back(left_leg_coordinates(kernel.space(), acc.take(), nb, "split_epi_to_action"));
  }
  HopfMorphism psi(a, smash.algebra, Matrix::from_columns(h.field(), kernel.dim() * nb, cols));
  if (!(compose(phi, psi) == HopfMorphism::identity(a)) ||
      !(compose(psi, phi) == HopfMorphism::identity(smash.algebra))) {
    throw InvariantError("split_epi_to_action: phi and psi are not inverse");
  }
  return {std::move(kernel), std::move(action), std::move(smash), std::move(phi), std::move(psi)};
}

GroupoidStructure crossed_to_cat1_unchecked(const CrossedModule& cm) {
  const HopfAlgebra& x = *cm.action.carrier();
  const HopfAlgebra& b = *cm.action.acting();
  const FieldSpec& k = x.field();
  const std::size_t nx = x.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = nx * nb;
  SmashProduct sp = smash_product_unchecked(cm.action);
  const HopfPtr& a1 = sp.algebra;

  std::vector<SparseVec> gamma_cols;
  gamma_cols.reserve(n);
  for (std::size_t p = 0; p < n; ++p) gamma_cols.push_back(b.mul(cm.d.image_of_basis(p / nb), b.basis(p % nb)));
  HopfMorphism gamma(a1, cm.action.acting(), Matrix::from_columns(k, nb, gamma_cols));
  ReflexiveGraph graph{sp.proj_b, gamma, sp.inj_b};
  Pullback pairs = pullback(graph.delta, graph.gamma);

  std::vector<SparseVec> m_cols;
  m_cols.reserve(pairs.space.dim());
  for (const SparseVec& r : pairs.space.rows()) {
    // m(x⊗b, x'⊗b') = xx' ⊗ ε(b)b'
    Accumulator acc(k, n);
    for (const Term& t : r.terms()) {
      const std::size_t p = t.index / n;
      const std::size_t q = t.index % n;
      Scalar c = t.coeff * b.counit(p % nb);
      if (c.is_zero()) continue;
      for (const Term& u : x.product(p / nb, q / nb).terms()) acc.add(u.index * nb + q % nb, c * u.coeff);
    }
    m_cols.push_back(acc.take());
  }
  HopfMorphism m(pairs.object, a1, Matrix::from_columns(k, n, m_cols));

  std::vector<SparseVec> iota_cols;
  iota_cols.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    // ι(x⊗b) = S(x1) ⊗ d(x2)b
    Accumulator acc(k, n);
    for (const Term& t : x.coproduct(p / nb).terms()) {
      SparseVec right = b.mul(cm.d.image_of_basis(t.index % nx), b.basis(p % nb));
      acc.add_scaled(tensor(x.antipode(t.index / nx), right, nb), t.coeff);
    }
    iota_cols.push_back(acc.take());
  }
  HopfMorphism iota(a1, a1, Matrix::from_columns(k, n, iota_cols));
  return {std::move(graph), std::move(pairs), std::move(m), std::move(iota)};
}

GroupoidStructure crossed_to_cat1(const CrossedModule& cm) {
  AxiomReport r = check_crossed_module(cm);
  if (!r.ok()) throw AxiomError("crossed_to_cat1: not a crossed module, fails " + r.first_failure()->name);
  GroupoidStructure g = crossed_to_cat1_unchecked(cm);
  AxiomReport gr = check_groupoid(g);
  if (!gr.ok()) throw InvariantError("crossed_to_cat1: groupoid axiom fails: " + gr.first_failure()->name);
  return g;
}

bool is_cat1(const ReflexiveGraph& g) { return commute_check(hkernel(g.delta), hkernel(g.gamma)).elementwise; }

CrossedModule cat1_to_crossed(const ReflexiveGraph& g) {
  if (!is_cat1(g)) throw NotCat1Error("cat1_to_crossed: the kernels of delta and gamma do not commute");
  HopfSubalgebra kernel = hkernel(g.delta);
  ModuleAction action(g.a0(), kernel.algebra(), conjugation_on_kernel(kernel, g.i));
  CrossedModule cm{std::move(action), compose(g.gamma, kernel.inclusion())};
  AxiomReport r = check_crossed_module(cm);
  if (!r.ok()) throw InvariantError("cat1_to_crossed: result fails " + r.first_failure()->name);
  return cm;
}

std::optional<HopfMorphism> solve_rmg_multiplication(const ReflexiveGraph& g, const Pullback& pairs) {
  const HopfAlgebra& a1 = *g.a1();
  const HopfAlgebra& p = *pairs.object;
  const FieldSpec& k = a1.field();
  const std::size_t n = a1.dim();
  const std::size_t np = p.dim();
  HopfMorphism id1 = HopfMorphism::identity(g.a1());
  HopfMorphism right = pullback_pairing(pairs, g.delta, g.gamma, id1, compose(g.i, g.delta));
  HopfMorphism left = pullback_pairing(pairs, g.delta, g.gamma, compose(g.i, g.gamma), id1);

  // Pairs (u, m(u)) forced by the unit laws, as vectors of P ⊕ A1.
  auto join = [&](const SparseVec& u, const SparseVec& v) {
    std::vector<Term> terms = u.terms();
    for (const Term& t : v.terms()) terms.push_back({np + t.index, t.coeff});
    return SparseVec(std::move(terms));
  };
  auto split = [&](const SparseVec& w) {
    std::vector<Term> u;
    std::vector<Term> v;
    for (const Term& t : w.terms()) {
      if (t.index < np) {
        u.push_back(t);
      } else {
        v.push_back({t.index - np, t.coeff});
      }
    }
    return std::make_pair(SparseVec(std::move(u)), SparseVec(std::move(v)));
  };
  std::vector<SparseVec> gens;
  for (std::size_t x = 0; x < n; ++x) {
    gens.push_back(join(right.image_of_basis(x), a1.basis(x)));
    gens.push_back(join(left.image_of_basis(x), a1.basis(x)));
  }
  // m must be multiplicative, so the graph of m is closed under products.
  Subspace span = Subspace::span(k, np + n, gens);
  while (true) {
    std::vector<SparseVec> next = span.rows();
    for (const SparseVec& r : span.rows()) {
      auto [ru, rv] = split(r);
      for (const SparseVec& s : span.rows()) {
        auto [su, sv] = split(s);
        SparseVec prod = join(p.mul(ru, su), a1.mul(rv, sv));
        if (!span.contains(prod)) next.push_back(std::move(prod));
      }
    }
    if (next.size() == span.dim()) break;
    span = Subspace::span(k, np + n, next);
  }
  // A pivot in the A1 block means some nonzero value is forced on 0.
  if (!span.pivots().empty() && span.pivots().back() >= np) return std::nullopt;
  if (span.dim() != np) throw InvariantError("solve_rmg_multiplication: unit-law pairs do not generate P");
  std::vector<SparseVec> cols;
  cols.reserve(np);
  for (const SparseVec& r : span.rows()) cols.push_back(split(r).second);
  HopfMorphism m(pairs.object, g.a1(), Matrix::from_columns(k, n, cols));
  if (!check_morphism(m).ok()) return std::nullopt;
  return m;
}

HopfMorphism groupoid_inverse(const ReflexiveGraph& g) {
  const HopfAlgebra& a = *g.a1();
  const std::size_t n = a.dim();
  HopfMorphism ig = compose(g.i, g.gamma);
  HopfMorphism id = compose(g.i, g.delta);
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    // iγ(a1) S(a2) iδ(a3)
    Accumulator acc(a.field(), n);
    for (const Term& s : a.coproduct(x).terms()) {
      for (const Term& t : a.coproduct(s.index % n).terms()) {
        SparseVec v = a.mul(a.mul(ig.image_of_basis(s.index / n), a.antipode(t.index / n)),
                            id.image_of_basis(t.index % n));
        acc.add_scaled(v, s.coeff * t.coeff);
      }
    }
    cols.push_back(acc.take());
  }
  return HopfMorphism(g.a1(), g.a1(), Matrix::from_columns(a.field(), n, cols));
}

std::optional<GroupoidStructure> solve_groupoid(const ReflexiveGraph& g) {
  Pullback pairs = pullback(g.delta, g.gamma);
  std::optional<HopfMorphism> m = solve_rmg_multiplication(g, pairs);
  if (!m) return std::nullopt;
  GroupoidStructure s{g, std::move(pairs), std::move(*m), groupoid_inverse(g)};
  if (!check_groupoid(s).ok()) return std::nullopt;
  return s;
}

Cat1Verdicts cat1_verdicts(const ReflexiveGraph& g) {
  Cat1Verdicts v;
  v.cat1 = is_cat1(g);
  Pullback pairs = pullback(g.delta, g.gamma);
  std::optional<HopfMorphism> m = solve_rmg_multiplication(g, pairs);
  v.multiplicative = m.has_value();
  if (m) {
    GroupoidStructure s{g, std::move(pairs), std::move(*m), groupoid_inverse(g)};
    v.groupoid = check_groupoid(s).ok();
  }
  v.huq_trivial = huq_commutator(hkernel(g.delta), hkernel(g.gamma)).closure.dim() == 1;
  return v;
}

AxiomReport check_crossed_module_iso(const CrossedModule& from, const CrossedModule& to, const HopfMorphism& alpha,
                                     const HopfMorphism& beta) {
  AxiomReport report;
  report.add(equality_check("d-square", compose(to.d, alpha) == compose(beta, from.d)));
  const HopfAlgebra& x = *from.action.carrier();
  const HopfAlgebra& b = *from.action.acting();
  AxiomCheck square{"action-square"};
  for (std::size_t e = 0; e < b.dim() && square.passed; ++e) {
    for (std::size_t y = 0; y < x.dim(); ++y) {
      SparseVec lhs = alpha.apply(from.action.act(e, y));
      SparseVec rhs = to.action.act(beta.image_of_basis(e), alpha.image_of_basis(y));
      if (!(lhs == rhs)) {
        square.passed = false;
        square.witness = {e, y};
        break;
      }
    }
  }
  report.add(std::move(square));
  report.add(equality_check("alpha-iso", alpha.is_isomorphism() && check_morphism(alpha).ok()));
  report.add(equality_check("beta-iso", beta.is_isomorphism() && check_morphism(beta).ok()));
  return report;
}

AxiomReport check_graph_iso(const ReflexiveGraph& g, const ReflexiveGraph& h, const HopfMorphism& f1,
                            const HopfMorphism& f0) {
  AxiomReport report;
  report.add(equality_check("delta-square", compose(h.delta, f1) == compose(f0, g.delta)));
  report.add(equality_check("gamma-square", compose(h.gamma, f1) == compose(f0, g.gamma)));
  report.add(equality_check("section-square", compose(f1, g.i) == compose(h.i, f0)));
  report.add(equality_check("a1-iso", f1.is_isomorphism() && check_morphism(f1).ok()));
  report.add(equality_check("a0-iso", f0.is_isomorphism() && check_morphism(f0).ok()));
  return report;
}

CrossedRoundTrip crossed_round_trip(const CrossedModule& cm) {
  GroupoidStructure g = crossed_to_cat1(cm);
  CrossedModule back = cat1_to_crossed(g.graph);
  const HopfAlgebra& x = *cm.action.carrier();
  const HopfAlgebra& b = *cm.action.acting();
  Subspace kernel = hkernel(g.graph.delta).space();
  std::vector<SparseVec> cols;
  for (std::size_t y = 0; y < x.dim(); ++y) {
    cols.push_back(coords_or_throw(kernel, tensor(x.basis(y), b.one(), b.dim()), "crossed_round_trip"));
  }
  HopfMorphism alpha(cm.action.carrier(), back.action.carrier(), Matrix::from_columns(x.field(), kernel.dim(), cols));
  HopfMorphism beta(cm.action.acting(), back.action.acting(), Matrix::identity(b.field(), b.dim()));
  AxiomReport report = check_crossed_module_iso(cm, back, alpha, beta);
  return {std::move(back), std::move(alpha), std::move(beta), std::move(report)};
}

GraphRoundTrip cat1_round_trip(const ReflexiveGraph& g) {
  CrossedModule cm = cat1_to_crossed(g);
  GroupoidStructure back = crossed_to_cat1(cm);
  HopfSubalgebra kernel = hkernel(g.delta);
  HopfMorphism f1 = multiply_out(back.graph.a1(), kernel, g.i);
  HopfMorphism f0(back.graph.a0(), g.a0(), Matrix::identity(g.a0()->field(), g.a0()->dim()));
  AxiomReport report = check_graph_iso(back.graph, g, f1, f0);
  return {std::move(back), std::move(f1), std::move(f0), std::move(report)};
}

}  // namespace hopfcat

namespace hopfcat {

std::vector<NamedCrossedModule> catalog_crossed_modules(const FieldSpec& field) {
  std::vector<NamedCrossedModule> out;
  const FiniteGroupTable& s3 = catalog_group("S3");
  const FiniteGroupTable& d4 = catalog_group("D4");
  const FiniteGroupTable& q8 = catalog_group("Q8");
  out.push_back({"A3->S3", conjugation_crossed_module(s3, {0, 4, 5}, field)});
  out.push_back({"S3->S3", conjugation_crossed_module(s3, {0, 1, 2, 3, 4, 5}, field)});
  out.push_back({"1->S3", conjugation_crossed_module(s3, {0}, field)});
  out.push_back({"C4->D4", conjugation_crossed_module(d4, {0, 1, 2, 3}, field)});
  out.push_back({"Z->Q8", conjugation_crossed_module(q8, {0, 4}, field)});

  const FiniteGroupTable& c2 = catalog_group("C2");
  const FiniteGroupTable& c3 = catalog_group("C3");
  const FiniteGroupTable& c4 = catalog_group("C4");
  HopfPtr kc2 = group_algebra(c2, field);
  HopfPtr kc3 = group_algebra(c3, field);
  HopfPtr kc4 = group_algebra(c4, field);
  out.push_back({"C3->C2 inversion", {group_action(kc2, kc3, {{0, 1, 2}, {0, 2, 1}}), HopfMorphism::zero(kc3, kc2)}});
  out.push_back({"C4->C2", {ModuleAction::trivial(kc2, kc4), hopf_from_group_hom({0, 1, 0, 1}, c4, c2, kc4, kc2)}});
  return out;
}

std::vector<NamedGraph> catalog_reflexive_graphs(const FieldSpec& field) {
  std::vector<NamedGraph> out;
  for (const NamedCrossedModule& c : catalog_crossed_modules(field)) {
    if (c.cm.action.carrier()->dim() * c.cm.action.acting()->dim() > 24) continue;
    out.push_back({"cat1(" + c.name + ")", crossed_to_cat1(c.cm).graph});
  }

  HopfPtr k = group_algebra(catalog_group("C1"), field);
  for (const char* name : {"C3", "C2xC2", "S3", "D4", "Q8"}) {
    HopfPtr a = group_algebra(catalog_group(name), field);
    HopfMorphism e = HopfMorphism::zero(a, k);
    out.push_back({std::string(name) + "=>1", make_reflexive_graph(e, e, HopfMorphism::zero(k, a))});
  }

  const FiniteGroupTable& c2 = catalog_group("C2");
  const FiniteGroupTable& s3 = catalog_group("S3");
  HopfPtr kc2 = group_algebra(c2, field);
  HopfPtr ks3 = group_algebra(s3, field);
  HopfMorphism sign = hopf_from_group_hom({0, 1, 1, 1, 0, 0}, s3, c2, ks3, kc2);
  out.push_back({"S3=>C2", make_reflexive_graph(sign, sign, hopf_from_group_hom({0, 1}, c2, s3, kc2, ks3))});

  // G×H at index g|H| + h.
  auto product_graph = [&](const FiniteGroupTable& g, const FiniteGroupTable& h, bool second, std::string name) {
    FiniteGroupTable gh = direct_product(g, h);
    HopfPtr kgh = group_algebra(gh, field);
    HopfPtr kh = group_algebra(h, field);
    GroupMap p1(gh.order());
    GroupMap p2(gh.order());
    for (std::size_t x = 0; x < gh.order(); ++x) {
      p1[x] = x / h.order();
      p2[x] = x % h.order();
    }
    HopfMorphism delta = hopf_from_group_hom(second ? p2 : p1, gh, h, kgh, kh);
    HopfMorphism gamma = hopf_from_group_hom(p2, gh, h, kgh, kh);
    GroupMap section(h.order());
    for (std::size_t y = 0; y < h.order(); ++y) section[y] = second ? y : y * h.order() + y;
    out.push_back({std::move(name), make_reflexive_graph(delta, gamma, hopf_from_group_hom(section, h, gh, kh, kgh))});
  };
  product_graph(c2, c2, false, "pair(C2)");
  product_graph(s3, c2, true, "S3xC2=>C2");
  product_graph(catalog_group("C3"), c2, true, "C3xC2=>C2");
  return out;
}

}  // namespace hopfcat
