#include <catch_amalgamated.hpp>

#include "hopfcat/constructors.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/subobjects.hpp"
#include "hopfcat/tensor.hpp"

using namespace hopfcat;

namespace {

const FieldSpec Q = FieldSpec::rationals();

HopfPtr ground_field(const FieldSpec& k) { return group_algebra(catalog_group("C1"), k); }

HopfPtr with_antipode(const HopfAlgebra& h, const Matrix& s) {
  return make_hopf(h.field(), h.dim(), h.mult_matrix(), h.unit_matrix(), h.comult_matrix(), h.counit_matrix(), s,
                   h.name());
}

bool is_subcoalgebra(const HopfAlgebra& h, const Subspace& s) {
  for (const SparseVec& x : s.rows()) {
    if (!detail::tensor_coordinates(s, h.comul(x))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("axioms of small algebras") {
  AxiomReport k = check_hopf_axioms(*ground_field(Q));
  CHECK(k.ok());

  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  AxiomReport r = check_hopf_axioms(*s3);
  CHECK(r.ok());
  for (const char* name : {"associativity", "unit", "coassociativity", "counit", "comult-multiplicative",
                           "comult-unit", "counit-multiplicative", "counit-unit", "antipode", "cocommutativity"}) {
    CHECK(r.passed(name));
  }
}

TEST_CASE("identity antipode on K[S3] is caught") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfPtr bad = with_antipode(*s3, Matrix::identity(Q, 6));
  AxiomReport r = check_hopf_axioms(*bad);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("antipode"));
  CHECK(r.passed("associativity"));
  const AxiomCheck* c = r.find("antipode");
  REQUIRE(c->witness.size() == 1);
  // The witness is an element that is not its own inverse: a 3-cycle.
  std::size_t g = c->witness[0];
  CHECK(catalog_group("S3").inverse(g) != g);
}

TEST_CASE("malformed structure constants are rejected before axiom checking") {
  CHECK_THROWS_AS(make_hopf(Q, 2, Matrix(Q, 2, 3), Matrix(Q, 2, 1), Matrix(Q, 4, 2), Matrix(Q, 1, 2), Matrix(Q, 2, 2)),
                  MalformedInputError);
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK_THROWS_AS(make_hopf(Q, 1, Matrix(f3, 1, 1), Matrix(Q, 1, 1), Matrix(Q, 1, 1), Matrix(Q, 1, 1), Matrix(Q, 1, 1)),
                  MalformedInputError);
}

TEST_CASE("check_morphism") {
  const FiniteGroupTable& c2 = catalog_group("C2");
  const FiniteGroupTable& s3 = catalog_group("S3");
  HopfPtr kc2 = group_algebra(c2, Q);
  CHECK(check_morphism(HopfMorphism::identity(kc2)).ok());

  GroupMap sign{0, 1, 1, 1, 0, 0};
  HopfMorphism f = hopf_from_group_hom(sign, s3, c2, Q);
  CHECK(check_morphism(f).ok());

  HopfMorphism swap(kc2, kc2, Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
  AxiomReport r = check_morphism(swap);
  CHECK_FALSE(r.passed("unit"));
  CHECK(r.find("antipode") != nullptr);
}

TEST_CASE("tensor products") {
  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  HopfPtr kc3 = group_algebra(catalog_group("C3"), Q);
  HopfPtr k = ground_field(Q);

  TensorProduct ka = tensor_product(k, kc3);
  CHECK(ka.product->dim() == 3);
  CHECK(ka.p2.is_isomorphism());
  CHECK(check_morphism(ka.p2).ok());

  TensorProduct t = tensor_product(kc2, kc3);
  CHECK(check_hopf_axioms(*t.product).ok());
  CHECK(check_morphism(t.p1).ok());
  CHECK(check_morphism(t.p2).ok());
  HopfPtr kc6 = group_algebra(catalog_group("C6"), Q);
  CHECK(find_isomorphism_by_group_likes(t.product, kc6).has_value());
  CHECK_FALSE(find_isomorphism_by_group_likes(group_algebra(catalog_group("S3"), Q), kc6).has_value());

  TensorProduct sq = tensor_product(kc2, kc2);
  // basis g⊗h at index 2g+h goes to g
  CHECK(sq.p1.matrix() == Matrix::from_ints(Q, {{1, 1, 0, 0}, {0, 0, 1, 1}}));

  // Pairing with the projections recovers the components.
  HopfMorphism id = HopfMorphism::identity(kc2);
  HopfMorphism diag = pairing(id, id, sq.product);
  CHECK(check_morphism(diag).ok());
  CHECK(compose(sq.p1, diag) == id);
  CHECK(compose(sq.p2, diag) == id);
}

TEST_CASE("group algebra tensor products match direct products") {
  const std::vector<std::string> names{"C2", "C3", "S3"};
  for (const std::string& a : names) {
    for (const std::string& b : names) {
      const FiniteGroupTable& ga = catalog_group(a);
      const FiniteGroupTable& gb = catalog_group(b);
      HopfPtr t = tensor_product(group_algebra(ga, Q), group_algebra(gb, Q)).product;
      HopfPtr d = group_algebra(direct_product(ga, gb), Q);
      // Same indexing convention, so equal on the nose.
      CHECK(t->mult_matrix() == d->mult_matrix());
      CHECK(t->comult_matrix() == d->comult_matrix());
      CHECK(t->antipode_matrix() == d->antipode_matrix());
    }
  }
}

TEST_CASE("plus_part") {
  CHECK(plus_part(*ground_field(Q)).dim() == 0);
  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  Subspace p = plus_part(*kc2);
  CHECK(p == rref_basis(Matrix::from_ints(Q, {{-1, 1}})));

  // f(C+) = f(C)+ for the sign morphism.
  const FiniteGroupTable& s3 = catalog_group("S3");
  HopfMorphism f = hopf_from_group_hom({0, 1, 1, 1, 0, 0}, s3, catalog_group("C2"), Q);
  CHECK(map_subspace(f, plus_part(*f.source())) == plus_part(HopfSubalgebra::make(f.target(), f.image())));
}

TEST_CASE("duals") {
  HopfPtr k = ground_field(Q);
  HopfPtr dk = dual_fd(*k);
  CHECK(dk->mult_matrix() == k->mult_matrix());
  CHECK(dk->comult_matrix() == k->comult_matrix());

  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  HopfPtr dc2 = dual_fd(*kc2);
  CHECK(check_hopf_axioms(*dc2).ok());
  // 1 ↦ δ_e + δ_g, g ↦ δ_e − δ_g
  HopfMorphism iso(kc2, dc2, Matrix::from_ints(Q, {{1, 1}, {1, -1}}));
  CHECK(check_morphism(iso).ok());
  CHECK(iso.is_isomorphism());

  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfPtr ds3 = dual_fd(*s3);
  AxiomReport r = check_hopf_axioms(*ds3);
  CHECK(ds3->is_commutative());
  CHECK_FALSE(r.passed("cocommutativity"));
  CHECK(r.passed("associativity"));
  CHECK(r.passed("antipode"));
  CHECK(r.passed("comult-multiplicative"));

  HopfPtr dd = dual_fd(*ds3);
  CHECK(dd->mult_matrix() == s3->mult_matrix());
  CHECK(dd->comult_matrix() == s3->comult_matrix());
  CHECK(dd->antipode_matrix() == s3->antipode_matrix());
}

TEST_CASE("group-likes") {
  for (const std::string& name : catalog_names()) {
    const FiniteGroupTable& g = catalog_group(name);
    for (const FieldSpec& k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
      GroupLikeSet gl = group_likes(*group_algebra(g, k));
      CHECK(gl.complete);
      CHECK(gl.elements.size() == g.order());
    }
  }
  // The dual of K[C2] over F3 has the two characters of C2 as group-likes,
  // found by the eigenspace search rather than the basis shortcut.
  FieldSpec f3 = FieldSpec::prime(3);
  HopfPtr dc2 = dual_fd(*group_algebra(catalog_group("C2"), f3));
  GroupLikeSet gl = group_likes(*dc2);
  CHECK(gl.complete);
  CHECK(gl.elements.size() == 2);
  // The dual of K[S3] over F3 has the two characters of S3.
  CHECK(group_likes(*dual_fd(*group_algebra(catalog_group("S3"), f3))).elements.size() == 2);
  // The truncated primitive algebra has only the unit.
  GroupLikeSet tp = group_likes(*truncated_primitive(3));
  CHECK(tp.complete);
  CHECK(tp.elements.size() == 1);
}

TEST_CASE("antipode identities over the catalog") {
  for (const std::string& name : catalog_names()) {
    for (const FieldSpec& k : {Q, FieldSpec::prime(2), FieldSpec::prime(5)}) {
      HopfPtr h = group_algebra(catalog_group(name), k);
      Matrix s = h->antipode_matrix();
      CHECK(s * s == Matrix::identity(k, h->dim()));
      CHECK(h->counit_matrix() * s == h->counit_matrix());
      CHECK(s * h->unit_matrix() == h->unit_matrix());
      bool anti = true;
      for (std::size_t i = 0; i < h->dim(); ++i) {
        for (std::size_t j = 0; j < h->dim(); ++j) {
          anti = anti && h->antipode(h->product(i, j)) == h->mul(h->antipode(j), h->antipode(i));
        }
      }
      CHECK(anti);
    }
  }
}

TEST_CASE("largest_subcoalgebra_in") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  CHECK(largest_subcoalgebra_in(*s3, Subspace::full(Q, 6)).is_full());
  CHECK(largest_subcoalgebra_in(*s3, Subspace(Q, 6)).is_zero());
  Subspace w = subgroup_subspace(*s3, {0, 1, 2, 3});
  CHECK(largest_subcoalgebra_in(*s3, w) == w);

  // 1 + (12) is not group-like, and nothing but 0 lives inside its line.
  std::vector<SparseVec> v{s3->basis(0) + s3->basis(1)};
  CHECK(largest_subcoalgebra_in(*s3, Subspace::span(Q, 6, v)).is_zero());
  std::vector<SparseVec> u{s3->basis(0), s3->basis(1) + s3->basis(2)};
  CHECK(largest_subcoalgebra_in(*s3, Subspace::span(Q, 6, u)) == subgroup_subspace(*s3, {0}));
}

TEST_CASE("largest_subcoalgebra_in is the sum of all subcoalgebras inside, by enumeration over F2") {
  FieldSpec f2 = FieldSpec::prime(2);
  HopfPtr h = group_algebra(catalog_group("S3"), f2);
  const std::size_t n = h->dim();
  // w ranges over a few 4-dimensional subspaces mixing group elements and sums.
  std::vector<std::vector<SparseVec>> spans{
      {h->basis(0), h->basis(1), h->basis(2) + h->basis(3), h->basis(4) + h->basis(5)},
      {h->basis(0) + h->basis(1), h->basis(2), h->basis(3), h->basis(4)},
      {h->basis(1) + h->basis(2) + h->basis(3), h->basis(4), h->basis(5), h->basis(0) + h->basis(4)},
  };
  for (const auto& gens : spans) {
    Subspace w = Subspace::span(f2, n, gens);
    REQUIRE(w.dim() == 4);
    std::vector<SparseVec> members;
    for (unsigned mask = 1; mask < 16; ++mask) {
      Accumulator acc(f2, n);
      for (unsigned b = 0; b < 4; ++b) {
        if (mask & (1u << b)) acc.add(w.rows()[b]);
      }
      members.push_back(acc.take());
    }
    Subspace total(f2, n);
    // Every subspace of w is spanned by at most 4 of its 15 nonzero vectors.
    const std::size_t m = members.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a; b < m; ++b) {
        for (std::size_t c = b; c < m; ++c) {
          for (std::size_t d = c; d < m; ++d) {
            std::vector<SparseVec> pick{members[a], members[b], members[c], members[d]};
            Subspace s = Subspace::span(f2, n, pick);
            if (is_subcoalgebra(*h, s)) total = subspace_sum(total, s);
          }
        }
      }
    }
    Subspace d = largest_subcoalgebra_in(*h, w);
    CHECK(d == total);
    CHECK(is_subcoalgebra(*h, d));
  }
}

TEST_CASE("subalgebra and ideal wrappers") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfSubalgebra a3 = HopfSubalgebra::make(s3, subgroup_subspace(*s3, {0, 4, 5}));
  CHECK(a3.dim() == 3);
  CHECK(check_hopf_axioms(*a3.algebra()).ok());
  CHECK(check_morphism(a3.inclusion()).ok());
  CHECK_THROWS_AS(HopfSubalgebra::make(s3, subgroup_subspace(*s3, {0, 1, 2})), InvariantError);
  CHECK_FALSE(HopfSubalgebra::try_make(s3, subgroup_subspace(*s3, {1})).has_value());
  CHECK_THROWS_AS(LeftIdealCoideal::make(s3, subgroup_subspace(*s3, {1})), InvariantError);
  CHECK(LeftIdealCoideal::make(s3, plus_part(*s3)).dim() == 5);
}
