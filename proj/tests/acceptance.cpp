// One line per acceptance criterion; exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hopfcat/commutator.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"
#include "hopfcat/xmod.hpp"

using namespace hopfcat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    detail = "first failure: " + what;
  }
};

const FieldSpec Q = FieldSpec::rationals();

std::vector<const FiniteGroupTable*> catalog() {
  std::vector<const FiniteGroupTable*> out;
  for (const std::string& n : catalog_names()) out.push_back(&catalog_group(n));
  return out;
}

HopfSubalgebra sub(const HopfPtr& a, const ElementSet& h) { return HopfSubalgebra::make(a, subgroup_subspace(*a, h)); }

ElementSet preimage(const GroupMap& f, const ElementSet& c) {
  ElementSet out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (std::binary_search(c.begin(), c.end(), f[x])) out.push_back(x);
  }
  return out;
}

ElementSet image_of(const GroupMap& f, const ElementSet& d) {
  ElementSet out;
  for (std::size_t x : d) out.push_back(f[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string hom_name(const FiniteGroupTable& g, const FiniteGroupTable& h, const GroupMap& f) {
  std::string s = g.name() + "->" + h.name() + " [";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

template <class F>
void each_hom(F&& f) {
  for (const FiniteGroupTable* g : catalog()) {
    for (const FiniteGroupTable* h : catalog()) {
      for (const GroupMap& phi : homomorphisms(*g, *h)) f(*g, *h, phi);
    }
  }
}

Outcome axioms() {
  Outcome o;
  std::size_t n = 0;
  auto one = [&](const HopfAlgebra& h) {
    AxiomReport r = check_hopf_axioms(h);
    Matrix s = h.antipode_matrix();
    o.require(r.ok() && s * s == Matrix::identity(h.field(), h.dim()), h.name() + " over " + h.field().to_string());
    ++n;
  };
  for (const FieldSpec& k : {Q, FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    for (const FiniteGroupTable* g : catalog()) one(*group_algebra(*g, k));
  }
  for (std::uint64_t p : {2, 3, 5}) one(*truncated_primitive(p));
  if (o.ok) o.detail = std::to_string(n) + " algebras";
  return o;
}

Outcome kernels(const FieldSpec& k) {
  Outcome o;
  std::size_t homs = 0;
  std::size_t quotients = 0;
  each_hom([&](const FiniteGroupTable& g, const FiniteGroupTable& h, const GroupMap& phi) {
    HopfPtr kg = group_algebra(g, k);
    HopfMorphism f = hopf_from_group_hom(phi, g, h, kg, group_algebra(h, k));
    o.require(hkernel(f).space() == subgroup_subspace(*kg, hom_kernel(g, h, phi)), "HKer of " + hom_name(g, h, phi));
    ++homs;
  });
  for (const FiniteGroupTable* g : catalog()) {
    HopfPtr a = group_algebra(*g, k);
    for (const ElementSet& n : normal_subgroups(*g)) {
      Quotient q = cokernel(sub(a, n).inclusion());
      HopfPtr expect = group_algebra(quotient_group(*g, n), k);
      o.require(find_isomorphism_by_group_likes(q.quotient, expect).has_value(), "cokernel in " + g->name());
      ++quotients;
    }
  }
  o.require(homs >= 40, "only " + std::to_string(homs) + " homomorphisms");
  if (o.ok) o.detail = std::to_string(homs) + " homs, " + std::to_string(quotients) + " quotients";
  return o;
}

Outcome newman(const FieldSpec& k) {
  Outcome o;
  std::size_t n = 0;
  for (const FiniteGroupTable* g : catalog()) {
    HopfPtr a = group_algebra(*g, k);
    for (const ElementSet& h : subgroups(*g)) {
      HopfSubalgebra d = sub(a, h);
      LeftIdealCoideal phi = newman_phi(d);
      HopfSubalgebra psi = newman_psi(phi);
      o.require(psi == d && newman_phi(psi) == phi, "subgroup of " + g->name());
      ++n;
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " subalgebras";
  return o;
}

Outcome regularity() {
  Outcome o;
  std::size_t surj = 0;
  each_hom([&](const FiniteGroupTable& g, const FiniteGroupTable& h, const GroupMap& phi) {
    if (hom_image(h, phi).size() != h.order()) return;
    ++surj;
    HopfPtr kg = group_algebra(g, Q);
    HopfPtr kh = group_algebra(h, Q);
    HopfMorphism p = hopf_from_group_hom(phi, g, h, kg, kh);
    const std::string name = hom_name(g, h, phi);
    std::vector<ElementSet> ds = subgroups(g);
    for (const ElementSet& c : subgroups(h)) {
      HopfSubalgebra cs = sub(kh, c);
      HopfSubalgebra inv = h_inverse(p, cs);
      o.require(inv.space() == subgroup_subspace(*kg, preimage(phi, c)), "h-inverse for " + name);
      Subspace back = map_subspace(p, inv.space());
      o.require(back.dim() == cs.dim(), "surjectivity for " + name);
      o.require(cs.space().contains(back), "(i) for " + name);
      bool hit = false;
      for (const ElementSet& d : ds) {
        hit = hit || image_of(phi, d) == c;
        HopfSubalgebra dsub = sub(kg, d);
        o.require(inv.space().contains(dsub.space()) == cs.space().contains(direct_image(p, dsub).space()),
                  "(iii) for " + name);
      }
      o.require((back == cs.space()) == hit, "(iv) for " + name);
    }
    for (const ElementSet& d : ds) {
      HopfSubalgebra dsub = sub(kg, d);
      o.require(h_inverse(p, direct_image(p, dsub)).space().contains(dsub.space()), "(ii) for " + name);
    }
  });
  if (o.ok) o.detail = std::to_string(surj) + " surjections";
  return o;
}

Outcome factorization() {
  Outcome o;
  std::size_t n = 0;
  each_hom([&](const FiniteGroupTable& g, const FiniteGroupTable& h, const GroupMap& phi) {
    HopfMorphism f = hopf_from_group_hom(phi, g, h, group_algebra(g, Q), group_algebra(h, Q));
    FactorizationResult r = image_factorization(f);
    o.require(f.linear_kernel() == newman_phi(hkernel(f)).space() && r.epi_part.target()->dim() == f.rank() &&
                  compose(r.mono_part, r.epi_part) == f,
              hom_name(g, h, phi));
    ++n;
  });
  if (o.ok) o.detail = std::to_string(n) + " morphisms";
  return o;
}

Outcome commutators(const FieldSpec& k) {
  Outcome o;
  std::size_t n = 0;
  for (const FiniteGroupTable* g : catalog()) {
    HopfPtr a = group_algebra(*g, k);
    std::vector<ElementSet> normals = normal_subgroups(*g);
    for (const ElementSet& x : normals) {
      for (const ElementSet& y : normals) {
        HopfSubalgebra xs = sub(a, x);
        HopfSubalgebra ys = sub(a, y);
        HopfSubalgebra c = huq_commutator(xs, ys).closure;
        o.require(c.space() == subgroup_subspace(*a, commutator_subgroup(*g, x, y)), "[N,M] in " + g->name());
        CommuteVerdict v = commute_check(xs, ys);
        o.require(v.elementwise == v.sweedler && v.elementwise == (c.dim() == 1), "verdicts in " + g->name());
        ++n;
      }
    }
  }
  auto whole = [&](const char* name) {
    HopfSubalgebra w = HopfSubalgebra::whole(group_algebra(catalog_group(name), k));
    return huq_commutator(w, w).closure.dim();
  };
  o.require(whole("S3") == 3, "[S3,S3] dimension");
  o.require(whole("Q8") == 2, "[Q8,Q8] dimension");
  if (o.ok) o.detail = std::to_string(n) + " pairs; dim[S3,S3]=3, dim[Q8,Q8]=2";
  return o;
}

Outcome takeuchi() {
  Outcome o;
  std::vector<HopfPtr> objects;
  for (const FieldSpec& k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
    for (const FiniteGroupTable* g : catalog()) objects.push_back(group_algebra(*g, k));
  }
  for (std::uint64_t p : {2, 3, 5}) objects.push_back(truncated_primitive(p));
  for (const HopfPtr& a : objects) {
    o.require(diagonal_is_normal(a) == a->is_commutative(), "diagonal of " + a->name());
    o.require(abelianization(a).quotient->is_commutative(), "abelianization of " + a->name());
  }
  if (o.ok) o.detail = std::to_string(objects.size()) + " objects";
  return o;
}

Outcome smash() {
  Outcome o;
  std::vector<ModuleAction> actions;
  for (const NamedCrossedModule& c : catalog_crossed_modules(Q)) actions.push_back(c.cm.action);
  for (const FiniteGroupTable* g : catalog()) {
    for (const ElementSet& n : normal_subgroups(*g)) actions.push_back(conjugation_crossed_module(*g, n, Q).action);
  }
  for (const ModuleAction& act : actions) {
    SmashProduct sp = smash_product(act);
    SplitDecomposition d = split_epi_to_action(make_extension(sp.proj_b, sp.inj_b));
    o.require(compose(d.phi, d.psi) == HopfMorphism::identity(sp.algebra) &&
                  compose(d.psi, d.phi) == HopfMorphism::identity(d.smash.algebra),
              sp.algebra->name());
  }
  HopfPtr kc2 = group_algebra(catalog_group("C2"), Q);
  HopfPtr kc3 = group_algebra(catalog_group("C3"), Q);
  SmashProduct s3 = smash_product(group_action(kc2, kc3, {{0, 1, 2}, {0, 2, 1}}));
  o.require(find_isomorphism_by_group_likes(s3.algebra, group_algebra(catalog_group("S3"), Q)).has_value(),
            "K[C3]#K[C2] vs K[S3]");
  if (o.ok) o.detail = std::to_string(actions.size()) + " smash products; K[C3]#K[C2] = K[S3]";
  return o;
}

Outcome crossed() {
  Outcome o;
  std::size_t trips = 0;
  for (const NamedCrossedModule& c : catalog_crossed_modules(Q)) {
    if (c.cm.action.carrier()->dim() * c.cm.action.acting()->dim() > 24) continue;
    o.require(crossed_round_trip(c.cm).report.ok(), "crossed round trip " + c.name);
    ++trips;
  }
  std::size_t graphs = 0;
  std::size_t negatives = 0;
  std::size_t graph_trips = 0;
  for (const NamedGraph& g : catalog_reflexive_graphs(Q)) {
    Cat1Verdicts v = cat1_verdicts(g.graph);
    o.require(v.agree(), "verdicts on " + g.name);
    ++graphs;
    negatives += !v.cat1;
    if (v.cat1) {
      o.require(cat1_round_trip(g.graph).report.ok(), "graph round trip " + g.name);
      ++graph_trips;
    }
  }
  o.require(trips >= 5, "fewer than 5 crossed round trips");
  o.require(graphs >= 10 && negatives > 0, "too few graphs or no negatives");

  HopfPtr ks3 = group_algebra(catalog_group("S3"), Q);
  HopfPtr k = group_algebra(catalog_group("C1"), Q);
  CrossedModule bad{ModuleAction::trivial(k, ks3), HopfMorphism::zero(ks3, k)};
  AxiomReport r = check_crossed_module(bad);
  o.require(!r.passed("peiffer") && r.passed("equivariance"), "Peiffer-violating input");
  o.require(!check_morphism(crossed_to_cat1_unchecked(bad).m).passed("multiplicative"), "m multiplicative without Peiffer");
  if (o.ok) {
    o.detail = std::to_string(trips) + "+" + std::to_string(graph_trips) + " round trips, " + std::to_string(graphs) +
               " graphs (" + std::to_string(negatives) + " negative), Peiffer failure breaks m";
  }
  return o;
}

Outcome positive_characteristic() {
  Outcome o;
  std::string summary;
  for (std::uint64_t p : {2, 3}) {
    FieldSpec k = FieldSpec::prime(p);
    const std::string f = "F" + std::to_string(p);
    Outcome a = kernels(k);
    Outcome b = newman(k);
    Outcome c = commutators(k);
    o.require(a.ok, f + " kernels: " + a.detail);
    o.require(b.ok, f + " newman: " + b.detail);
    o.require(c.ok, f + " commutators: " + c.detail);
  }
  if (o.ok) o.detail = "criteria 2, 3, 6 pass over F2 and F3";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"axiom foundation", axioms},
      {"kernel and cokernel oracles", [] { return kernels(Q); }},
      {"Newman bijection", [] { return newman(Q); }},
      {"regularity", regularity},
      {"factorization identity", factorization},
      {"commutator oracle", [] { return commutators(Q); }},
      {"Takeuchi criterion", takeuchi},
      {"split extension iso", smash},
      {"crossed-module equivalence", crossed},
      {"positive characteristic", positive_characteristic},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const Error& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60) {
      o.ok = false;
      o.detail += " (over 60 s)";
    }
    all = all && o.ok;
    std::printf("CRITERION %zu %s: %s (%s) %.2fs\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].name,
                o.detail.c_str(), secs);
  }
  return all ? 0 : 1;
}
