#include <catch_amalgamated.hpp>

#include "hopfcat/commutator.hpp"
#include "hopfcat/constructors.hpp"
#include "hopfcat/errors.hpp"

using namespace hopfcat;

namespace {

const FieldSpec Q = FieldSpec::rationals();

HopfSubalgebra sub(const HopfPtr& a, const ElementSet& h) { return HopfSubalgebra::make(a, subgroup_subspace(*a, h)); }

}  // namespace

TEST_CASE("commute_check") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfSubalgebra whole = HopfSubalgebra::whole(s3);
  CommuteVerdict v = commute_check(whole, whole);
  CHECK_FALSE(v.elementwise);
  CHECK_FALSE(v.sweedler);
  REQUIRE(v.witness);
  CHECK(v.witness->first == s3->basis(1));
  CHECK(v.witness->second == s3->basis(2));

  CommuteVerdict t = commute_check(HopfSubalgebra::trivial(s3), whole);
  CHECK(t.elementwise);
  CHECK(t.sweedler);

  HopfPtr c6 = group_algebra(catalog_group("C6"), Q);
  HopfSubalgebra c3 = sub(c6, {0, 2, 4});
  CHECK(commute_check(c3, c3).sweedler);

  CHECK_THROWS_AS(commute_check(whole, HopfSubalgebra::whole(c6)), DimensionMismatchError);
}

TEST_CASE("Huq commutators of named examples") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfSubalgebra w = HopfSubalgebra::whole(s3);
  CommutatorWitness c = huq_commutator(w, w);
  CHECK(c.closure.dim() == 3);
  CHECK(c.closure.space() == subgroup_subspace(*s3, {0, 4, 5}));
  CHECK(c.generators.size() == 36);
  for (const SparseVec& g : c.generators) CHECK(c.closure.space().contains(g));

  CHECK(huq_commutator(HopfSubalgebra::trivial(s3), w).closure.dim() == 1);

  HopfPtr q8 = group_algebra(catalog_group("Q8"), Q);
  HopfSubalgebra wq = HopfSubalgebra::whole(q8);
  CHECK(huq_commutator(wq, wq).closure.space() == subgroup_subspace(*q8, {0, 4}));

  CHECK_THROWS_AS(huq_commutator(sub(s3, {0, 1}), w), NormalityError);
}

TEST_CASE("Huq commutators match group commutator subgroups") {
  for (const FieldSpec& k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
    for (const std::string& name : catalog_names()) {
      const FiniteGroupTable& g = catalog_group(name);
      HopfPtr a = group_algebra(g, k);
      auto normals = normal_subgroups(g);
      for (const ElementSet& n : normals) {
        for (const ElementSet& m : normals) {
          INFO(name << " over " << k.to_string());
          HopfSubalgebra x = sub(a, n);
          HopfSubalgebra y = sub(a, m);
          HopfSubalgebra c = huq_commutator(x, y).closure;
          CHECK(c.space() == subgroup_subspace(*a, commutator_subgroup(g, n, m)));
          CHECK(c == huq_commutator(y, x).closure);
          CommuteVerdict v = commute_check(x, y);
          CHECK(v.elementwise == v.sweedler);
          CHECK(v.elementwise == (c.dim() == 1));
        }
      }
    }
  }
}

TEST_CASE("quotients by normal subalgebras") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  Quotient q = quotient_by_normal(sub(s3, {0, 4, 5}));
  CHECK(find_isomorphism_by_group_likes(q.quotient, group_algebra(catalog_group("C2"), Q)).has_value());
  CHECK(quotient_by_normal(HopfSubalgebra::trivial(s3)).quotient->dim() == 6);
  CHECK(quotient_by_normal(HopfSubalgebra::whole(s3)).quotient->dim() == 1);
  CHECK_THROWS_AS(quotient_by_normal(sub(s3, {0, 2})), NormalityError);
}

TEST_CASE("abelianization") {
  struct Case {
    const char* group;
    const char* ab;
  };
  for (const Case& c : {Case{"C6", "C6"}, Case{"S3", "C2"}, Case{"Q8", "C2xC2"}, Case{"D4", "C2xC2"}}) {
    Quotient q = abelianization(group_algebra(catalog_group(c.group), Q));
    CHECK(q.quotient->is_commutative());
    CHECK(find_isomorphism_by_group_likes(q.quotient, group_algebra(catalog_group(c.ab), Q)).has_value());
  }
  Quotient tp = abelianization(truncated_primitive(3));
  CHECK(tp.quotient->dim() == 3);
}

TEST_CASE("Takeuchi criterion over the catalog") {
  for (const std::string& name : catalog_names()) {
    HopfPtr a = group_algebra(catalog_group(name), FieldSpec::prime(3));
    HopfSubalgebra w = HopfSubalgebra::whole(a);
    bool diag = diagonal_is_normal(a);
    CHECK(diag == a->is_commutative());
    CHECK(diag == commute_check(w, w).elementwise);
    CHECK(diag == (huq_commutator(w, w).closure.dim() == 1));
  }
}
