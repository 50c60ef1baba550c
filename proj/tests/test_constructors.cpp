#include <catch_amalgamated.hpp>

#include "hopfcat/action.hpp"
#include "hopfcat/constructors.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"

using namespace hopfcat;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// C2 acting on C3 by inversion.
std::vector<GroupMap> inversion_action() { return {{0, 1, 2}, {0, 2, 1}}; }

}  // namespace

TEST_CASE("group algebras over the catalog") {
  for (const std::string& name : catalog_names()) {
    const FiniteGroupTable& g = catalog_group(name);
    for (const FieldSpec& k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
      HopfPtr h = group_algebra(g, k);
      INFO(name << " over " << k.to_string());
      CHECK(h->dim() == g.order());
      CHECK(check_hopf_axioms(*h).ok());
      CHECK(h->is_commutative() == g.is_abelian());
    }
  }
  CHECK(group_algebra(catalog_group("C1"), Q)->dim() == 1);
  CHECK(group_algebra(catalog_group("S3"), Q)->name() == "K[S3]");
  CHECK_THROWS_AS(catalog_group("A5"), UnknownGroupError);
}

TEST_CASE("truncated primitive algebras") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    HopfPtr h = truncated_primitive(p);
    CHECK(h->dim() == p);
    CHECK(h->field() == FieldSpec::prime(p));
    CHECK(check_hopf_axioms(*h).ok());
    CHECK(h->is_commutative());
    CHECK(h->is_cocommutative());
  }
  CHECK_THROWS_AS(truncated_primitive(4), InvalidPrimeError);
  CHECK_THROWS_AS(truncated_primitive(11), InvalidPrimeError);
  CHECK_THROWS_AS(truncated_primitive(3, Q), MalformedInputError);

  // Over Q the same constants are not a bialgebra.
  AxiomReport r = check_hopf_axioms(*truncated_primitive_constants(3, Q));
  CHECK_FALSE(r.passed("comult-multiplicative"));
  CHECK(r.passed("associativity"));
  CHECK(r.passed("coassociativity"));
}

TEST_CASE("morphisms from group homomorphisms") {
  const FiniteGroupTable& s3 = catalog_group("S3");
  const FiniteGroupTable& c2 = catalog_group("C2");
  const FiniteGroupTable& c6 = catalog_group("C6");
  CHECK_THROWS_AS(hopf_from_group_hom({0, 1, 0, 0, 0, 0}, s3, c2, Q), InvalidHomError);
  CHECK_THROWS_AS(hopf_from_group_hom({0, 1}, s3, c2, Q), InvalidHomError);

  for (const GroupMap& f : homomorphisms(s3, c6)) {
    HopfMorphism m = hopf_from_group_hom(f, s3, c6, Q);
    CHECK(check_morphism(m).ok());
    CHECK(m.rank() == hom_image(c6, f).size());
  }

  // Composition of group maps matches composition of Hopf maps.
  GroupMap sign{0, 1, 1, 1, 0, 0};
  GroupMap into_c6{0, 3};
  GroupMap composite(6);
  for (std::size_t g = 0; g < 6; ++g) composite[g] = into_c6[sign[g]];
  HopfPtr ks3 = group_algebra(s3, Q);
  HopfPtr kc2 = group_algebra(c2, Q);
  HopfPtr kc6 = group_algebra(c6, Q);
  CHECK(compose(hopf_from_group_hom(into_c6, c2, c6, kc2, kc6), hopf_from_group_hom(sign, s3, c2, ks3, kc2)) ==
        hopf_from_group_hom(composite, s3, c6, ks3, kc6));
}

TEST_CASE("module actions") {
  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  HopfPtr kc3 = group_algebra(catalog_group("C3"), Q);
  CHECK(check_action_axioms(ModuleAction::trivial(kc2, kc3)).ok());
  CHECK(check_action_axioms(group_action(kc2, kc3, inversion_action())).ok());

  // g sends everything to the identity, so g·(g·x) differs from (gg)·x.
  Matrix xi(Q, 3, 6);
  for (std::size_t c = 0; c < 6; ++c) xi(c / 3 == 0 ? c % 3 : 0, c) = Scalar::one(Q);
  AxiomReport r = check_action_axioms(ModuleAction(kc2, kc3, xi));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("action-associative"));
}

TEST_CASE("smash products") {
  const FiniteGroupTable& c2 = catalog_group("C2");
  const FiniteGroupTable& c3 = catalog_group("C3");
  HopfPtr kc2 = group_algebra(c2, Q);
  HopfPtr kc3 = group_algebra(c3, Q);

  SmashProduct trivial = smash_product(ModuleAction::trivial(kc2, kc3));
  HopfPtr t = tensor_product(kc3, kc2).product;
  CHECK(trivial.algebra->mult_matrix() == t->mult_matrix());
  CHECK(trivial.algebra->comult_matrix() == t->comult_matrix());

  SmashProduct sp = smash_product(group_action(kc2, kc3, inversion_action()));
  CHECK(check_hopf_axioms(*sp.algebra).ok());
  CHECK_FALSE(sp.algebra->is_commutative());
  HopfPtr semi = group_algebra(semidirect_product(c3, c2, inversion_action()), Q);
  CHECK(sp.algebra->mult_matrix() == semi->mult_matrix());
  CHECK(sp.algebra->antipode_matrix() == semi->antipode_matrix());
  CHECK(find_isomorphism_by_group_likes(sp.algebra, group_algebra(catalog_group("S3"), Q)).has_value());
  for (const HopfMorphism* m : {&sp.inj_x, &sp.inj_b, &sp.proj_b}) CHECK(check_morphism(*m).ok());
  CHECK(compose(sp.proj_b, sp.inj_b) == HopfMorphism::identity(kc2));

  Matrix xi(Q, 3, 6);
  for (std::size_t c = 0; c < 6; ++c) xi(0, c) = Scalar::one(Q);
  CHECK_THROWS_AS(smash_product(ModuleAction(kc2, kc3, xi)), AxiomError);
}

TEST_CASE("group-like recovery of the group") {
  for (const std::string& name : {"S3", "D4", "Q8", "C2xC2"}) {
    const FiniteGroupTable& g = catalog_group(name);
    HopfPtr h = group_algebra(g, FieldSpec::prime(5));
    GroupLikeSet gl = group_likes(*h);
    REQUIRE(gl.complete);
    FiniteGroupTable recovered = group_of_group_likes(*h, gl.elements);
    CHECK(find_group_isomorphism(recovered, g).has_value());
  }
  // D4 and Q8 share order and abelianization but not their group algebras' group-likes.
  CHECK_FALSE(find_isomorphism_by_group_likes(group_algebra(catalog_group("D4"), Q),
                                              group_algebra(catalog_group("Q8"), Q))
                  .has_value());
}
