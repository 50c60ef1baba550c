#include <catch_amalgamated.hpp>

#include <algorithm>

#include "hopfcat/commutator.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"
#include "hopfcat/xmod.hpp"

using namespace hopfcat;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FiniteGroupTable subgroup_table(const FiniteGroupTable& g, const ElementSet& n) {
  std::vector<std::vector<std::size_t>> t(n.size(), std::vector<std::size_t>(n.size()));
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) {
      auto it = std::lower_bound(n.begin(), n.end(), g.mul(n[i], n[j]));
      t[i][j] = static_cast<std::size_t>(it - n.begin());
    }
  }
  return FiniteGroupTable(std::move(t));
}

// The K[S3] over K crossed module with trivial action: Peiffer needs S3 abelian.
CrossedModule peiffer_violating() {
  HopfPtr ks3 = group_algebra(catalog_group("S3"), Q);
  HopfPtr k = group_algebra(catalog_group("C1"), Q);
  return {ModuleAction::trivial(k, ks3), HopfMorphism::zero(ks3, k)};
}

}  // namespace

TEST_CASE("crossed module axioms") {
  for (const NamedCrossedModule& c : catalog_crossed_modules(Q)) {
    INFO(c.name);
    CHECK(check_crossed_module(c.cm).ok());
  }
  AxiomReport bad = check_crossed_module(peiffer_violating());
  CHECK(bad.passed("equivariance"));
  CHECK_FALSE(bad.passed("peiffer"));
  CHECK(bad.passed("action:action-associative"));

  // The inclusion of A3 into S3 with the trivial action is not equivariant.
  HopfPtr ks3 = group_algebra(catalog_group("S3"), Q);
  HopfSubalgebra a3 = HopfSubalgebra::make(ks3, subgroup_subspace(*ks3, {0, 4, 5}));
  CrossedModule triv{ModuleAction::trivial(ks3, a3.algebra()), a3.inclusion()};
  CHECK_FALSE(check_crossed_module(triv).passed("equivariance"));
  CHECK_THROWS_AS(conjugation_crossed_module(catalog_group("S3"), {0, 1}, Q), NormalityError);
}

TEST_CASE("split extensions decompose as smash products") {
  const FiniteGroupTable& s3 = catalog_group("S3");
  const FiniteGroupTable& c2 = catalog_group("C2");
  HopfPtr ks3 = group_algebra(s3, Q);
  HopfPtr kc2 = group_algebra(c2, Q);
  HopfMorphism sign = hopf_from_group_hom({0, 1, 1, 1, 0, 0}, s3, c2, ks3, kc2);
  HopfMorphism sec = hopf_from_group_hom({0, 1}, c2, s3, kc2, ks3);
  SplitDecomposition d = split_epi_to_action(make_extension(sign, sec));
  CHECK(d.kernel.dim() == 3);
  CHECK(check_action_axioms(d.action).ok());
  CHECK(compose(d.phi, d.psi) == HopfMorphism::identity(ks3));
  CHECK(compose(d.psi, d.phi) == HopfMorphism::identity(d.smash.algebra));
  // (12) inverts the 3-cycles.
  CHECK(d.action.act(1, 1) == SparseVec::unit(Q, 2));
  CHECK(d.action.act(1, 2) == SparseVec::unit(Q, 1));

  // A product projection splits with trivial action.
  HopfPtr kc3 = group_algebra(catalog_group("C3"), Q);
  TensorProduct t = tensor_product(kc3, kc2);
  std::vector<SparseVec> cols{SparseVec::unit(Q, 0), SparseVec::unit(Q, 1)};
  HopfMorphism inj(kc2, t.product, Matrix::from_columns(Q, 6, cols));
  SplitDecomposition p = split_epi_to_action(make_extension(t.p2, inj));
  CHECK(p.action.xi() == ModuleAction::trivial(kc2, p.kernel.algebra()).xi());

  // Recovering the action of a smash product.
  ModuleAction inv = group_action(kc2, kc3, {{0, 1, 2}, {0, 2, 1}});
  SmashProduct sp = smash_product(inv);
  SplitDecomposition r = split_epi_to_action(make_extension(sp.proj_b, sp.inj_b));
  CHECK(r.action.xi() == inv.xi());

  CHECK_THROWS_AS(split_epi_to_action(make_extension(sign)), MissingSectionError);
}

TEST_CASE("crossed modules to groupoids") {
  for (const NamedCrossedModule& c : catalog_crossed_modules(Q)) {
    if (c.cm.action.carrier()->dim() * c.cm.action.acting()->dim() > 24) continue;
    INFO(c.name);
    GroupoidStructure g = crossed_to_cat1(c.cm);
    CHECK(check_groupoid(g).ok());
    CHECK(is_cat1(g.graph));
  }
  CrossedModule a3 = catalog_crossed_modules(Q)[0].cm;
  GroupoidStructure g = crossed_to_cat1(a3);
  CHECK(g.graph.a1()->dim() == 18);
  CHECK(g.pairs.object->dim() == 54);

  // X = K gives the identity graph on B.
  GroupoidStructure triv = crossed_to_cat1(catalog_crossed_modules(Q)[2].cm);
  CHECK(triv.graph.a1()->dim() == 6);
  CHECK(triv.graph.delta.matrix() == Matrix::identity(Q, 6));
  CHECK(triv.graph.gamma.matrix() == Matrix::identity(Q, 6));

  CHECK_THROWS_AS(crossed_to_cat1(peiffer_violating()), AxiomError);
}

TEST_CASE("the Peiffer identity is needed for m to be multiplicative") {
  GroupoidStructure g = crossed_to_cat1_unchecked(peiffer_violating());
  AxiomReport r = check_morphism(g.m);
  CHECK_FALSE(r.passed("multiplicative"));
  CHECK(r.passed("comultiplicative"));
  CHECK_FALSE(is_cat1(g.graph));
  CHECK_FALSE(solve_rmg_multiplication(g.graph, g.pairs).has_value());
}

TEST_CASE("a mutated multiplication breaks the groupoid laws") {
  GroupoidStructure g = crossed_to_cat1(catalog_crossed_modules(Q)[0].cm);
  // m' = S m
  Matrix mutated = g.graph.a1()->antipode_matrix() * g.m.matrix();
  GroupoidStructure bad{g.graph, g.pairs, HopfMorphism(g.pairs.object, g.graph.a1(), mutated), g.iota};
  AxiomReport r = check_groupoid(bad);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("unit-right"));
}

TEST_CASE("cat1 graphs to crossed modules") {
  HopfPtr ks3 = group_algebra(catalog_group("S3"), Q);
  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  HopfMorphism sign =
      hopf_from_group_hom({0, 1, 1, 1, 0, 0}, catalog_group("S3"), catalog_group("C2"), ks3, kc2);
  HopfMorphism sec = hopf_from_group_hom({0, 1}, catalog_group("C2"), catalog_group("S3"), kc2, ks3);
  ReflexiveGraph same = make_reflexive_graph(sign, sign, sec);
  CrossedModule cm = cat1_to_crossed(same);
  CHECK(cm.d == HopfMorphism::zero(cm.d.source(), kc2));

  for (const NamedGraph& n : catalog_reflexive_graphs(Q)) {
    INFO(n.name);
    if (is_cat1(n.graph)) {
      CHECK(check_crossed_module(cat1_to_crossed(n.graph)).ok());
    } else {
      CHECK_THROWS_AS(cat1_to_crossed(n.graph), NotCat1Error);
    }
  }
  CHECK_THROWS_AS(make_reflexive_graph(sign, sign, HopfMorphism::zero(kc2, ks3)), DiagramError);

  // The pair graph A⊗A ⇉ A: the kernels sit in different legs.
  TensorProduct t = tensor_product(ks3, ks3);
  HopfMorphism id = HopfMorphism::identity(ks3);
  ReflexiveGraph pair = make_reflexive_graph(t.p1, t.p2, pairing(id, id, t.product));
  CHECK(is_cat1(pair));
}

TEST_CASE("group cat1 structures match group crossed modules") {
  struct Case {
    const char* group;
    ElementSet normal;
  };
  for (const Case& c : {Case{"S3", {0, 4, 5}}, Case{"D4", {0, 1, 2, 3}}, Case{"C4", {0, 2}}}) {
    const FiniteGroupTable& g = catalog_group(c.group);
    const ElementSet& n = c.normal;
    FiniteGroupTable nt = subgroup_table(g, n);
    std::vector<GroupMap> act(g.order(), GroupMap(n.size()));
    for (std::size_t b = 0; b < g.order(); ++b) {
      for (std::size_t x = 0; x < n.size(); ++x) {
        act[b][x] = static_cast<std::size_t>(std::lower_bound(n.begin(), n.end(), g.conjugate(b, n[x])) - n.begin());
      }
    }
    FiniteGroupTable semi = semidirect_product(nt, g, act);
    GroupMap s(semi.order());
    GroupMap t(semi.order());
    GroupMap e(g.order());
    for (std::size_t x = 0; x < semi.order(); ++x) {
      s[x] = x % g.order();
      t[x] = g.mul(n[x / g.order()], x % g.order());
    }
    for (std::size_t b = 0; b < g.order(); ++b) e[b] = b;
    HopfPtr ka1 = group_algebra(semi, Q);
    HopfPtr ka0 = group_algebra(g, Q);
    ReflexiveGraph graph = make_reflexive_graph(hopf_from_group_hom(s, semi, g, ka1, ka0),
                                                hopf_from_group_hom(t, semi, g, ka1, ka0),
                                                hopf_from_group_hom(e, g, semi, ka0, ka1));
    REQUIRE(is_cat1(graph));
    CrossedModule got = cat1_to_crossed(graph);
    CrossedModule expect = conjugation_crossed_module(g, n, Q);
    HopfMorphism alpha(expect.action.carrier(), got.action.carrier(), Matrix::identity(Q, n.size()));
    HopfMorphism beta(expect.action.acting(), got.action.acting(), Matrix::identity(Q, g.order()));
    CHECK(check_crossed_module_iso(expect, got, alpha, beta).ok());
  }
}

TEST_CASE("round trips") {
  std::size_t count = 0;
  for (const NamedCrossedModule& c : catalog_crossed_modules(Q)) {
    if (c.cm.action.carrier()->dim() * c.cm.action.acting()->dim() > 24) continue;
    INFO(c.name);
    CrossedRoundTrip r = crossed_round_trip(c.cm);
    CHECK(r.report.ok());
    ++count;
  }
  CHECK(count >= 5);
  for (const NamedGraph& n : catalog_reflexive_graphs(Q)) {
    if (!is_cat1(n.graph)) continue;
    INFO(n.name);
    CHECK(cat1_round_trip(n.graph).report.ok());
  }
}

TEST_CASE("four equivalent conditions on reflexive graphs") {
  std::size_t graphs = 0;
  std::size_t negatives = 0;
  for (const FieldSpec& k : {Q, FieldSpec::prime(2)}) {
    for (const NamedGraph& n : catalog_reflexive_graphs(k)) {
      INFO(n.name << " over " << k.to_string());
      Cat1Verdicts v = cat1_verdicts(n.graph);
      CHECK(v.agree());
      ++graphs;
      negatives += !v.cat1;
    }
  }
  CHECK(graphs >= 20);
  CHECK(negatives >= 4);
}
