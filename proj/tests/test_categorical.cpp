#include <catch_amalgamated.hpp>

#include <algorithm>

#include "hopfcat/categorical.hpp"
#include "hopfcat/constructors.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"

using namespace hopfcat;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const GroupMap sign{0, 1, 1, 1, 0, 0};

HopfMorphism sign_map(const FieldSpec& k = Q) {
  return hopf_from_group_hom(sign, catalog_group("S3"), catalog_group("C2"), k);
}

ElementSet preimage(const GroupMap& f, const ElementSet& h) {
  ElementSet out;
  for (std::size_t g = 0; g < f.size(); ++g) {
    if (std::binary_search(h.begin(), h.end(), f[g])) out.push_back(g);
  }
  return out;
}

HopfMorphism restrict_to_kernels(const HopfMorphism& alpha, const Extension& top, const Extension& bottom) {
  Subspace target = bottom.kernel_inclusion.image();
  Subspace source = top.kernel_inclusion.image();
  std::vector<SparseVec> cols;
  for (const SparseVec& x : source.rows()) {
    cols.push_back(*detail::coordinates_in(target, alpha.apply(x)));
  }
  const FieldSpec& k = alpha.source()->field();
  return HopfMorphism(top.kernel_inclusion.source(), bottom.kernel_inclusion.source(),
                      Matrix::from_columns(k, target.dim(), cols));
}

ElementSet normal_closure(const FiniteGroupTable& g, const ElementSet& h) {
  ElementSet conjugates;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y : h) conjugates.push_back(g.conjugate(x, y));
  }
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  return generated_subgroup(g, conjugates);
}

}  // namespace

TEST_CASE("Hopf kernel of the sign map") {
  HopfMorphism f = sign_map();
  HopfSubalgebra k = hkernel(f);
  CHECK(k.dim() == 3);
  CHECK(k.space() == subgroup_subspace(*f.source(), {0, 4, 5}));
  CHECK(is_normal(k));
  CHECK(hkernel(HopfMorphism::identity(f.source())).dim() == 1);
  CHECK(hkernel(HopfMorphism::zero(f.source(), f.target())).dim() == 6);
}

TEST_CASE("Hopf kernels and cokernels agree with group kernels and quotients") {
  for (const std::string& gn : {"C4", "S3", "D4", "Q8", "C2xC2"}) {
    const FiniteGroupTable& g = catalog_group(gn);
    HopfPtr kg = group_algebra(g, Q);
    for (const std::string& hn : {"C2", "C4", "S3"}) {
      const FiniteGroupTable& h = catalog_group(hn);
      HopfPtr kh = group_algebra(h, Q);
      for (const GroupMap& phi : homomorphisms(g, h)) {
        HopfMorphism f = hopf_from_group_hom(phi, g, h, kg, kh);
        INFO(gn << " -> " << hn);
        CHECK(hkernel(f).space() == subgroup_subspace(*kg, hom_kernel(g, h, phi)));

        Quotient c = cokernel(f);
        ElementSet img = hom_image(h, phi);
        ElementSet closure = normal_closure(h, img);
        CHECK(c.quotient->dim() * closure.size() == h.order());
        CHECK(compose(c.proj, f) == HopfMorphism::zero(kg, c.quotient));
        CHECK(check_hopf_axioms(*c.quotient).ok());
        HopfPtr expect = group_algebra(quotient_group(h, closure), Q);
        CHECK(find_isomorphism_by_group_likes(c.quotient, expect).has_value());

        FactorizationResult fac = image_factorization(f);
        CHECK(compose(fac.mono_part, fac.epi_part) == f);
        CHECK(fac.mono_part.is_injective());
        CHECK(fac.epi_part.is_surjective());
        CHECK(fac.epi_part.target()->dim() == img.size());
      }
    }
  }
}

TEST_CASE("cokernel of the alternating subgroup") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfSubalgebra a3 = HopfSubalgebra::make(s3, subgroup_subspace(*s3, {0, 4, 5}));
  Quotient c = cokernel(a3.inclusion());
  CHECK(c.quotient->dim() == 2);
  CHECK(find_isomorphism_by_group_likes(c.quotient, group_algebra(catalog_group("C2"), Q)).has_value());
  CHECK(is_hopf_ideal(*s3, c.ideal));
  CHECK_FALSE(is_hopf_ideal(*s3, subgroup_subspace(*s3, {1})));
}

TEST_CASE("pullbacks") {
  HopfMorphism f = sign_map();
  Pullback pb = pullback(f, f);
  CHECK(pb.object->dim() == 18);
  CHECK(check_hopf_axioms(*pb.object).ok());
  CHECK(check_morphism(pb.p1).ok());
  CHECK(check_morphism(pb.p2).ok());
  CHECK(compose(f, pb.p1) == compose(f, pb.p2));

  HopfPtr s3 = f.source();
  HopfMorphism id = HopfMorphism::identity(s3);
  HopfMorphism u = pullback_pairing(pb, f, f, id, id);
  CHECK(compose(pb.p1, u) == id);
  CHECK(compose(pb.p2, u) == id);
  HopfMorphism triv = HopfMorphism::zero(s3, s3);
  CHECK_THROWS_AS(pullback_pairing(pb, f, f, id, triv), DiagramError);
}

TEST_CASE("pullback sizes match fibre products of groups") {
  const FiniteGroupTable& c2 = catalog_group("C2");
  HopfPtr kc2 = group_algebra(c2, Q);
  for (const std::string& an : {"C4", "S3", "C2xC2"}) {
    for (const std::string& cn : {"C2", "C4", "S3"}) {
      const FiniteGroupTable& a = catalog_group(an);
      const FiniteGroupTable& c = catalog_group(cn);
      auto fa = homomorphisms(a, c2);
      auto fc = homomorphisms(c, c2);
      const GroupMap& f = fa.back();
      const GroupMap& g = fc.back();
      std::size_t pairs = 0;
      for (std::size_t x = 0; x < a.order(); ++x) {
        for (std::size_t y = 0; y < c.order(); ++y) pairs += f[x] == g[y];
      }
      Pullback pb = pullback(hopf_from_group_hom(f, a, c2, group_algebra(a, Q), kc2),
                             hopf_from_group_hom(g, c, c2, group_algebra(c, Q), kc2));
      CHECK(pb.object->dim() == pairs);
    }
  }
}

TEST_CASE("equalizers") {
  HopfMorphism f = sign_map();
  HopfMorphism z = HopfMorphism::zero(f.source(), f.target());
  HopfSubalgebra e = equalizer(f, z);
  CHECK(e.dim() == 3);
  CHECK(e.space() == hkernel(f).space());
  CHECK(equalizer(f, f).dim() == 6);

  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  TensorProduct t = tensor_product(kc2, kc2);
  HopfSubalgebra diag = equalizer(t.p1, t.p2);
  CHECK(diag.dim() == 2);
  CHECK(diag.space() == subgroup_subspace(*t.product, {0, 3}));

  // Agreement sets of pairs of group homomorphisms.
  const FiniteGroupTable& s3 = catalog_group("S3");
  HopfPtr ks3 = group_algebra(s3, Q);
  auto homs = homomorphisms(s3, s3);
  for (std::size_t i = 0; i < homs.size(); i += 3) {
    for (std::size_t j = 0; j < homs.size(); j += 5) {
      ElementSet agree;
      for (std::size_t g = 0; g < 6; ++g) {
        if (homs[i][g] == homs[j][g]) agree.push_back(g);
      }
      HopfSubalgebra eq = equalizer(hopf_from_group_hom(homs[i], s3, s3, ks3, ks3), hopf_from_group_hom(homs[j], s3, s3, ks3, ks3));
      CHECK(eq.space() == subgroup_subspace(*ks3, agree));
    }
  }
}

TEST_CASE("inverse and direct images") {
  const FiniteGroupTable& d4 = catalog_group("D4");
  const FiniteGroupTable& c2 = catalog_group("C2");
  HopfPtr kd4 = group_algebra(d4, Q);
  HopfPtr kc2 = group_algebra(c2, Q);
  for (const GroupMap& phi : homomorphisms(d4, c2)) {
    HopfMorphism p = hopf_from_group_hom(phi, d4, c2, kd4, kc2);
    for (const ElementSet& h : subgroups(c2)) {
      HopfSubalgebra c = HopfSubalgebra::make(kc2, subgroup_subspace(*kc2, h));
      CHECK(h_inverse(p, c).space() == subgroup_subspace(*kd4, preimage(phi, h)));
    }
    for (const ElementSet& h : subgroups(d4)) {
      HopfSubalgebra d = HopfSubalgebra::make(kd4, subgroup_subspace(*kd4, h));
      ElementSet img;
      for (std::size_t x : h) img.push_back(phi[x]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      CHECK(direct_image(p, d).space() == subgroup_subspace(*kc2, img));
    }
  }
}

TEST_CASE("Newman correspondence") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfSubalgebra a3 = HopfSubalgebra::make(s3, subgroup_subspace(*s3, {0, 4, 5}));
  CHECK(newman_phi(a3).dim() == 4);

  CHECK(newman_psi(LeftIdealCoideal::make(s3, Subspace(Q, 6))).dim() == 1);
  CHECK(newman_psi(LeftIdealCoideal::make(s3, plus_part(*s3))).dim() == 6);

  for (const std::string& name : {"S3", "D4", "Q8", "C6"}) {
    const FiniteGroupTable& g = catalog_group(name);
    HopfPtr kg = group_algebra(g, FieldSpec::prime(3));
    for (const ElementSet& h : subgroups(g)) {
      HopfSubalgebra d = HopfSubalgebra::make(kg, subgroup_subspace(*kg, h));
      LeftIdealCoideal phi = newman_phi(d);
      CHECK(phi.dim() == g.order() - g.order() / h.size());
      CHECK(newman_psi(phi) == d);
      CHECK(newman_phi(newman_psi(phi)).space() == phi.space());
      CHECK(is_normal(d) == is_normal_subgroup(g, h));
    }
  }
}

TEST_CASE("normality") {
  HopfPtr s3 = group_algebra(catalog_group("S3"), Q);
  HopfSubalgebra t = HopfSubalgebra::make(s3, subgroup_subspace(*s3, {0, 1}));
  CHECK_FALSE(is_normal_by_conjugation(t));
  CHECK_FALSE(is_normal_by_ideal(t));
  CHECK_FALSE(is_normal(t));
  CHECK(is_normal(HopfSubalgebra::whole(s3)));
  CHECK(is_normal(HopfSubalgebra::trivial(s3)));

  for (const std::string& name : catalog_names()) {
    const FiniteGroupTable& g = catalog_group(name);
    if (g.order() > 6) continue;
    CHECK(diagonal_is_normal(group_algebra(g, Q)) == g.is_abelian());
  }
  CHECK(diagonal_is_normal(truncated_primitive(3)));
}

TEST_CASE("split short five lemma") {
  // C3 → S3 → C2 split by the transposition (12), mapped to itself by
  // conjugation by (123).
  const FiniteGroupTable& s3 = catalog_group("S3");
  HopfPtr ks3 = group_algebra(s3, Q);
  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  HopfMorphism p = hopf_from_group_hom(sign, s3, catalog_group("C2"), ks3, kc2);
  HopfMorphism s = hopf_from_group_hom({0, 1}, catalog_group("C2"), s3, kc2, ks3);
  Extension e = make_extension(p, s);
  CHECK(e.kernel_inclusion.source()->dim() == 3);

  GroupMap conj(6);
  for (std::size_t g = 0; g < 6; ++g) conj[g] = s3.conjugate(4, g);
  HopfMorphism alpha = hopf_from_group_hom(conj, s3, s3, ks3, ks3);
  HopfMorphism section2 = compose(alpha, s);
  Extension e2 = make_extension(p, section2);
  HopfMorphism kappa = restrict_to_kernels(alpha, e, e2);
  CHECK(check_split_short_five(e, e2, kappa, alpha, HopfMorphism::identity(kc2)));

  HopfMorphism bad = HopfMorphism::zero(ks3, ks3);
  CHECK_THROWS_AS(check_split_short_five(e, e2, kappa, bad, HopfMorphism::identity(kc2)), DiagramError);
  CHECK_THROWS_AS(make_extension(p, HopfMorphism::zero(kc2, ks3)), DiagramError);
}
