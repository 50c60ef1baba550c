#include "hopfcat/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hopfcat/commutator.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"
#include "hopfcat/xmod.hpp"

namespace hopfcat {

namespace {

using nlohmann::json;

class Prop {
 public:
  explicit Prop(std::string name) { r_.name = std::move(name); }

  // Runs one case; an exception from the library counts as a failure.
  void run(const std::function<bool()>& body, const std::function<json()>& witness) {
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const Error& e) {
      error = e.what();
    }
    ++r_.cases;
    if (ok) return;
    ++r_.failures;
    if (r_.witness) return;
    json w = witness();
    if (!error.empty()) w["error"] = error;
    r_.witness = w.dump();
  }

  PropertyResult take() { return std::move(r_); }

 private:
  PropertyResult r_;
};

struct Ctx {
  const SuiteConfig& cfg;
  std::vector<const FiniteGroupTable*> groups;
};

json where(const FieldSpec& k, const std::string& what) { return {{"field", k.to_string()}, {"object", what}}; }

ElementSet normal_closure(const FiniteGroupTable& g, const ElementSet& h) {
  ElementSet conj;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y : h) conj.push_back(g.conjugate(x, y));
  }
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  return generated_subgroup(g, conj);
}

ElementSet preimage(const GroupMap& f, const ElementSet& h) {
  ElementSet out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (std::binary_search(h.begin(), h.end(), f[x])) out.push_back(x);
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

bool subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

HopfSubalgebra sub(const HopfPtr& a, const ElementSet& h) { return HopfSubalgebra::make(a, subgroup_subspace(*a, h)); }

// At most `cap` homomorphisms, skipping duplicates of the trivial one.
std::vector<GroupMap> some_homs(const FiniteGroupTable& g, const FiniteGroupTable& h, std::size_t cap = 12) {
  std::vector<GroupMap> all = homomorphisms(g, h);
  if (all.size() > cap) all.resize(cap);
  return all;
}

std::string hom_text(const GroupMap& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s;
}

HopfPtr with_identity_antipode(const HopfAlgebra& h) {
  return make_hopf(h.field(), h.dim(), h.mult_matrix(), h.unit_matrix(), h.comult_matrix(), h.counit_matrix(),
                   Matrix::identity(h.field(), h.dim()), h.name());
}

std::vector<HopfPtr> algebras(const Ctx& c, const FieldSpec& k) {
  std::vector<HopfPtr> out;
  for (const FiniteGroupTable* g : c.groups) {
    if (g->order() <= c.cfg.max_dim) out.push_back(group_algebra(*g, k));
  }
  if (k.is_prime_field() && k.characteristic() <= 7) out.push_back(truncated_primitive(k.characteristic()));
  if (c.cfg.inject_antipode_fault) {
    for (HopfPtr& h : out) h = with_identity_antipode(*h);
  }
  return out;
}

bool has_group(const Ctx& c, const std::string& name) {
  return std::any_of(c.groups.begin(), c.groups.end(), [&](const FiniteGroupTable* g) { return g->name() == name; });
}

std::vector<NamedCrossedModule> crossed_modules(const Ctx& c, const FieldSpec& k) {
  std::vector<NamedCrossedModule> out;
  for (const FiniteGroupTable* g : c.groups) {
    for (const ElementSet& n : normal_subgroups(*g)) {
      if (n.size() * g->order() > c.cfg.max_dim) continue;
      out.push_back({g->name() + ":" + hom_text(n), conjugation_crossed_module(*g, n, k)});
    }
  }
  if (has_group(c, "C2") && has_group(c, "C3")) {
    HopfPtr kc2 = group_algebra(catalog_group("C2"), k);
    HopfPtr kc3 = group_algebra(catalog_group("C3"), k);
    out.push_back({"C3->C2 inversion", {group_action(kc2, kc3, {{0, 1, 2}, {0, 2, 1}}), HopfMorphism::zero(kc3, kc2)}});
  }
  if (has_group(c, "C2") && has_group(c, "C4")) {
    HopfPtr kc2 = group_algebra(catalog_group("C2"), k);
    HopfPtr kc4 = group_algebra(catalog_group("C4"), k);
    out.push_back({"C4->C2", {ModuleAction::trivial(kc2, kc4),
                              hopf_from_group_hom({0, 1, 0, 1}, catalog_group("C4"), catalog_group("C2"), kc4, kc2)}});
  }
  return out;
}

ReflexiveGraph product_graph(const FiniteGroupTable& g, const FiniteGroupTable& h, bool second, const FieldSpec& k) {
  FiniteGroupTable gh = direct_product(g, h);
  HopfPtr kgh = group_algebra(gh, k);
  HopfPtr kh = group_algebra(h, k);
  GroupMap p1(gh.order());
  GroupMap p2(gh.order());
  for (std::size_t x = 0; x < gh.order(); ++x) {
    p1[x] = x / h.order();
    p2[x] = x % h.order();
  }
  GroupMap section(h.order());
  for (std::size_t y = 0; y < h.order(); ++y) section[y] = second ? y : y * h.order() + y;
  return make_reflexive_graph(hopf_from_group_hom(second ? p2 : p1, gh, h, kgh, kh),
                              hopf_from_group_hom(p2, gh, h, kgh, kh),
                              hopf_from_group_hom(section, h, gh, kh, kgh));
}

std::vector<NamedGraph> graphs(const Ctx& c, const FieldSpec& k) {
  std::vector<NamedGraph> out;
  for (const NamedCrossedModule& cm : crossed_modules(c, k)) {
    out.push_back({"cat1(" + cm.name + ")", crossed_to_cat1(cm.cm).graph});
  }
  HopfPtr one = group_algebra(catalog_group("C1"), k);
  const FiniteGroupTable& c2 = catalog_group("C2");
  for (const FiniteGroupTable* g : c.groups) {
    if (g->order() > c.cfg.max_dim) continue;
    HopfPtr a = group_algebra(*g, k);
    HopfMorphism e = HopfMorphism::zero(a, one);
    out.push_back({g->name() + "=>1", make_reflexive_graph(e, e, HopfMorphism::zero(one, a))});
    if (g->order() * g->order() <= c.cfg.max_dim) out.push_back({"pair(" + g->name() + ")", product_graph(*g, *g, false, k)});
    if (2 * g->order() <= c.cfg.max_dim) out.push_back({g->name() + "xC2=>C2", product_graph(*g, c2, true, k)});
  }
  return out;
}

PropertyResult prop_hopf_axioms(const Ctx& c) {
  Prop p("hopf-axioms");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const HopfPtr& h : algebras(c, k)) {
      AxiomReport r;
      p.run(
          [&] {
            r = check_hopf_axioms(*h);
            for (const AxiomCheck& a : r.checks) {
              if (!a.passed && a.name != "antipode") return false;
            }
            return true;
          },
          [&] {
            json w = where(k, h->name());
            if (const AxiomCheck* f = r.first_failure()) w["axiom"] = f->name, w["basis"] = f->witness;
            return w;
          });
    }
  }
  return p.take();
}

PropertyResult prop_antipode(const Ctx& c) {
  Prop p("antipode");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const HopfPtr& h : algebras(c, k)) {
      json w = where(k, h->name());
      p.run(
          [&] {
            AxiomReport r = check_hopf_axioms(*h);
            if (!r.passed("antipode")) {
              w["axiom"] = "antipode";
              w["basis"] = r.find("antipode")->witness;
              return false;
            }
            Matrix s = h->antipode_matrix();
            if (!(s * s == Matrix::identity(k, h->dim()))) {
              w["axiom"] = "S^2=id";
              return false;
            }
            return h->counit_matrix() * s == h->counit_matrix() && s * h->unit_matrix() == h->unit_matrix();
          },
          [&] { return w; });
    }
  }
  return p.take();
}

PropertyResult prop_dual(const Ctx& c) {
  Prop p("dual");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const HopfPtr& h : algebras(c, k)) {
      if (c.cfg.inject_antipode_fault) continue;
      p.run(
          [&] {
            HopfPtr d = dual_fd(*h);
            HopfPtr dd = dual_fd(*d);
            AxiomReport r = check_hopf_axioms(*d);
            for (const AxiomCheck& a : r.checks) {
              if (!a.passed && a.name != "cocommutativity") return false;
            }
            return dd->mult_matrix() == h->mult_matrix() && dd->comult_matrix() == h->comult_matrix() &&
                   dd->antipode_matrix() == h->antipode_matrix() && d->is_cocommutative() == h->is_commutative();
          },
          [&] { return where(k, h->name()); });
    }
  }
  return p.take();
}

PropertyResult prop_tensor(const Ctx& c) {
  Prop p("tensor-product");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* g : c.groups) {
      for (const FiniteGroupTable* h : c.groups) {
        if (g->order() * h->order() > c.cfg.max_dim) continue;
        p.run(
            [&] {
              TensorProduct t = tensor_product(group_algebra(*g, k), group_algebra(*h, k));
              HopfPtr d = group_algebra(direct_product(*g, *h), k);
              return t.product->mult_matrix() == d->mult_matrix() && t.product->comult_matrix() == d->comult_matrix() &&
                     t.product->antipode_matrix() == d->antipode_matrix() && check_morphism(t.p1).ok() &&
                     check_morphism(t.p2).ok();
            },
            [&] { return where(k, g->name() + "x" + h->name()); });
      }
    }
  }
  return p.take();
}

PropertyResult prop_subcoalgebra(const Ctx& c, std::mt19937_64& rng) {
  // Subcoalgebras of K[G] are spanned by group elements, so the largest one
  // inside w is spanned by the e_g that lie in w.
  Prop p("largest-subcoalgebra");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* g : c.groups) {
      if (g->order() > c.cfg.max_dim) continue;
      HopfPtr a = group_algebra(*g, k);
      const std::size_t n = a->dim();
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<SparseVec> gens;
        std::vector<std::size_t> picked;
        for (std::size_t x = 0; x < n; ++x) {
          if (rng() % 3 == 0) {
            gens.push_back(a->basis(x));
            picked.push_back(x);
          }
        }
        for (int extra = 0; extra < 2; ++extra) {
          std::size_t x = rng() % n;
          std::size_t y = rng() % n;
          gens.push_back(a->basis(x) + a->basis(y).scaled(Scalar(k, 1 + static_cast<std::int64_t>(rng() % 3))));
        }
        Subspace w = Subspace::span(k, n, gens);
        p.run(
            [&] {
              std::vector<SparseVec> inside;
              for (std::size_t x = 0; x < n; ++x) {
                if (w.contains(a->basis(x))) inside.push_back(a->basis(x));
              }
              return largest_subcoalgebra_in(*a, w) == Subspace::span(k, n, inside);
            },
            [&] {
              json j = where(k, a->name());
              j["trial"] = trial;
              j["basis_elements"] = picked;
              return j;
            });
      }
    }
  }
  return p.take();
}

template <class F>
void for_each_hom(const Ctx& c, const FieldSpec& k, F&& f) {
  for (const FiniteGroupTable* g : c.groups) {
    if (g->order() > c.cfg.max_dim) continue;
    HopfPtr kg = group_algebra(*g, k);
    for (const FiniteGroupTable* h : c.groups) {
      if (h->order() > c.cfg.max_dim) continue;
      HopfPtr kh = group_algebra(*h, k);
      for (const GroupMap& phi : some_homs(*g, *h)) {
        f(*g, *h, kg, kh, phi, hopf_from_group_hom(phi, *g, *h, kg, kh));
      }
    }
  }
}

json hom_witness(const FieldSpec& k, const FiniteGroupTable& g, const FiniteGroupTable& h, const GroupMap& phi) {
  json w = where(k, g.name() + "->" + h.name());
  w["hom"] = phi;
  return w;
}

PropertyResult prop_hkernel(const Ctx& c) {
  Prop p("hkernel-oracle");
  for (const FieldSpec& k : c.cfg.fields) {
    for_each_hom(c, k, [&](const auto& g, const auto& h, const HopfPtr& kg, const HopfPtr&, const GroupMap& phi,
                           const HopfMorphism& f) {
      p.run([&] { return hkernel(f).space() == subgroup_subspace(*kg, hom_kernel(g, h, phi)); },
            [&] { return hom_witness(k, g, h, phi); });
    });
  }
  return p.take();
}

PropertyResult prop_cokernel(const Ctx& c) {
  Prop p("cokernel-oracle");
  for (const FieldSpec& k : c.cfg.fields) {
    for_each_hom(c, k, [&](const auto& g, const auto& h, const HopfPtr&, const HopfPtr&, const GroupMap& phi,
                           const HopfMorphism& f) {
      p.run(
          [&] {
            Quotient q = cokernel(f);
            ElementSet closure = normal_closure(h, hom_image(h, phi));
            HopfPtr expect = group_algebra(quotient_group(h, closure), k);
            return q.quotient->dim() * closure.size() == h.order() &&
                   find_isomorphism_by_group_likes(q.quotient, expect).has_value();
          },
          [&] { return hom_witness(k, g, h, phi); });
    });
  }
  return p.take();
}

PropertyResult prop_factorization(const Ctx& c) {
  Prop p("factorization");
  for (const FieldSpec& k : c.cfg.fields) {
    for_each_hom(c, k, [&](const auto& g, const auto& h, const HopfPtr&, const HopfPtr&, const GroupMap& phi,
                           const HopfMorphism& f) {
      p.run(
          [&] {
            FactorizationResult r = image_factorization(f);
            return compose(r.mono_part, r.epi_part) == f && r.epi_part.target()->dim() == f.rank() &&
                   f.linear_kernel() == newman_phi(hkernel(f)).space();
          },
          [&] { return hom_witness(k, g, h, phi); });
    });
  }
  return p.take();
}

PropertyResult prop_pullback(const Ctx& c) {
  Prop p("pullback-oracle");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* h : c.groups) {
      if (h->order() > 4) continue;
      HopfPtr kh = group_algebra(*h, k);
      for (const FiniteGroupTable* a : c.groups) {
        for (const FiniteGroupTable* b : c.groups) {
          if (a->order() * b->order() > 4 * c.cfg.max_dim) continue;
          GroupMap f = homomorphisms(*a, *h).back();
          GroupMap g = homomorphisms(*b, *h).back();
          p.run(
              [&] {
                HopfMorphism hf = hopf_from_group_hom(f, *a, *h, group_algebra(*a, k), kh);
                HopfMorphism hg = hopf_from_group_hom(g, *b, *h, group_algebra(*b, k), kh);
                Pullback pb = pullback(hf, hg);
                std::size_t pairs = 0;
                for (std::size_t x = 0; x < a->order(); ++x) {
                  for (std::size_t y = 0; y < b->order(); ++y) pairs += f[x] == g[y];
                }
                return pb.object->dim() == pairs && compose(hf, pb.p1) == compose(hg, pb.p2) &&
                       check_morphism(pb.p1).ok() && check_morphism(pb.p2).ok();
              },
              [&] { return where(k, a->name() + "x_" + h->name() + b->name()); });
        }
      }
    }
  }
  return p.take();
}

PropertyResult prop_equalizer(const Ctx& c) {
  Prop p("equalizer-oracle");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* g : c.groups) {
      if (g->order() > c.cfg.max_dim) continue;
      HopfPtr kg = group_algebra(*g, k);
      for (const FiniteGroupTable* h : c.groups) {
        if (h->order() > c.cfg.max_dim) continue;
        HopfPtr kh = group_algebra(*h, k);
        std::vector<GroupMap> homs = some_homs(*g, *h, 6);
        for (const GroupMap& f1 : homs) {
          for (const GroupMap& f2 : homs) {
            p.run(
                [&] {
                  ElementSet agree;
                  for (std::size_t x = 0; x < g->order(); ++x) {
                    if (f1[x] == f2[x]) agree.push_back(x);
                  }
                  HopfSubalgebra e =
                      equalizer(hopf_from_group_hom(f1, *g, *h, kg, kh), hopf_from_group_hom(f2, *g, *h, kg, kh));
                  return e.space() == subgroup_subspace(*kg, agree);
                },
                [&] {
                  json w = hom_witness(k, *g, *h, f1);
                  w["other"] = f2;
                  return w;
                });
          }
        }
      }
    }
  }
  return p.take();
}

PropertyResult prop_newman(const Ctx& c) {
  Prop p("newman-bijection");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* g : c.groups) {
      if (g->order() > c.cfg.max_dim) continue;
      HopfPtr a = group_algebra(*g, k);
      for (const ElementSet& h : subgroups(*g)) {
        p.run(
            [&] {
              HopfSubalgebra d = sub(a, h);
              LeftIdealCoideal phi = newman_phi(d);
              HopfSubalgebra back = newman_psi(phi);
              return back == d && newman_phi(back) == phi && phi.dim() == g->order() - g->order() / h.size();
            },
            [&] {
              json w = where(k, a->name());
              w["subgroup"] = h;
              return w;
            });
      }
    }
  }
  return p.take();
}

PropertyResult prop_normality(const Ctx& c) {
  Prop p("normality");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* g : c.groups) {
      if (g->order() > c.cfg.max_dim) continue;
      HopfPtr a = group_algebra(*g, k);
      for (const ElementSet& h : subgroups(*g)) {
        p.run([&] { return is_normal(sub(a, h)) == is_normal_subgroup(*g, h); },
              [&] {
                json w = where(k, a->name());
                w["subgroup"] = h;
                return w;
              });
      }
    }
  }
  return p.take();
}

PropertyResult prop_regularity(const Ctx& c) {
  Prop p("regularity");
  for (const FieldSpec& k : c.cfg.fields) {
    for_each_hom(c, k, [&](const auto& g, const auto& h, const HopfPtr& kg, const HopfPtr& kh, const GroupMap& phi,
                           const HopfMorphism& f) {
      std::vector<ElementSet> ds = subgroups(g);
      std::vector<ElementSet> cs = subgroups(h);
      const bool onto = hom_image(h, phi).size() == h.order();
      p.run(
          [&] {
            for (const ElementSet& cset : cs) {
              HopfSubalgebra csub = sub(kh, cset);
              HopfSubalgebra inv = h_inverse(f, csub);
              if (!(inv.space() == subgroup_subspace(*kg, preimage(phi, cset)))) return false;
              Subspace back = map_subspace(f, inv.space());
              // (i)
              if (!csub.space().contains(back)) return false;
              // surjectivity of p⁻¹(C) → C for surjective p
              if (onto && back.dim() != csub.dim()) return false;
              // (iv)
              bool some_d = false;
              for (const ElementSet& d : ds) some_d = some_d || image_of(phi, d) == cset;
              if ((back == csub.space()) != some_d) return false;
              // (iii)
              for (const ElementSet& d : ds) {
                HopfSubalgebra dsub = sub(kg, d);
                bool left = inv.space().contains(dsub.space());
                bool right = csub.space().contains(direct_image(f, dsub).space());
                if (left != right) return false;
              }
            }
            // (ii)
            for (const ElementSet& d : ds) {
              HopfSubalgebra dsub = sub(kg, d);
              if (!h_inverse(f, direct_image(f, dsub)).space().contains(dsub.space())) return false;
            }
            return true;
          },
          [&] { return hom_witness(k, g, h, phi); });
    });
  }
  return p.take();
}

PropertyResult prop_commutator(const Ctx& c) {
  Prop p("commutator-oracle");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* g : c.groups) {
      if (g->order() > c.cfg.max_dim) continue;
      HopfPtr a = group_algebra(*g, k);
      std::vector<ElementSet> normals = normal_subgroups(*g);
      std::vector<Quotient> quotients;
      for (const ElementSet& n : normals) quotients.push_back(quotient_by_normal(sub(a, n)));
      for (const ElementSet& n : normals) {
        for (const ElementSet& m : normals) {
          p.run(
              [&] {
                HopfSubalgebra x = sub(a, n);
                HopfSubalgebra y = sub(a, m);
                HopfSubalgebra xy = huq_commutator(x, y).closure;
                if (!(xy.space() == subgroup_subspace(*a, commutator_subgroup(*g, n, m)))) return false;
                if (!(xy == huq_commutator(y, x).closure)) return false;
                CommuteVerdict v = commute_check(x, y);
                if (v.elementwise != v.sweedler || v.elementwise != (xy.dim() == 1)) return false;
                // Minimality against every quotient by a normal subalgebra.
                for (std::size_t q = 0; q < normals.size(); ++q) {
                  const HopfMorphism& pr = quotients[q].proj;
                  if (commute_check(direct_image(pr, x), direct_image(pr, y)).elementwise &&
                      !subset(commutator_subgroup(*g, n, m), normals[q])) {
                    return false;
                  }
                }
                return true;
              },
              [&] {
                json w = where(k, a->name());
                w["x"] = n;
                w["y"] = m;
                return w;
              });
        }
      }
    }
  }
  return p.take();
}

PropertyResult prop_takeuchi(const Ctx& c) {
  Prop p("takeuchi");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const FiniteGroupTable* g : c.groups) {
      if (g->order() > c.cfg.max_dim) continue;
      HopfPtr a = group_algebra(*g, k);
      p.run(
          [&] {
            HopfSubalgebra w = HopfSubalgebra::whole(a);
            bool diag = diagonal_is_normal(a);
            HopfSubalgebra aa = huq_commutator(w, w).closure;
            if (diag != a->is_commutative() || diag != commute_check(w, w).elementwise || diag != (aa.dim() == 1)) {
              return false;
            }
            Quotient ab = abelianization(a);
            if (!ab.quotient->is_commutative()) return false;
            // Every commutative quotient factors through the abelianization.
            for (const ElementSet& n : normal_subgroups(*g)) {
              if (quotient_by_normal(sub(a, n)).quotient->is_commutative() &&
                  !subgroup_subspace(*a, n).contains(aa.space())) {
                return false;
              }
            }
            return true;
          },
          [&] { return where(k, a->name()); });
    }
  }
  return p.take();
}

PropertyResult prop_action_fuzz(const Ctx& c, std::mt19937_64& rng) {
  Prop p("action-fuzz");
  const FieldSpec k = FieldSpec::rationals();
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (const FiniteGroupTable* b : c.groups) {
    for (const FiniteGroupTable* x : c.groups) {
      if (b->order() < 2 || x->order() < 2 || b->order() > 4 || x->order() > 4) continue;
      HopfPtr kb = group_algebra(*b, k);
      HopfPtr kx = group_algebra(*x, k);
      for (int trial = 0; trial < 3; ++trial) {
        Matrix xi(k, kx->dim(), kb->dim() * kx->dim());
        for (std::size_t r = 0; r < xi.rows(); ++r) {
          for (std::size_t col = 0; col < xi.cols(); ++col) xi(r, col) = Scalar(k, coeff(rng));
        }
        p.run(
            [&] {
              AxiomReport r = check_action_axioms(ModuleAction(kb, kx, xi));
              return !r.passed("action-associative") || !r.passed("action-multiplicative");
            },
            [&] {
              json w = where(k, b->name() + " on " + x->name());
              w["trial"] = trial;
              return w;
            });
      }
    }
  }
  return p.take();
}

PropertyResult prop_smash(const Ctx& c) {
  Prop p("smash-iso");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const NamedCrossedModule& cm : crossed_modules(c, k)) {
      p.run(
          [&] {
            const ModuleAction& act = cm.cm.action;
            SmashProduct sp = smash_product(act);
            SplitDecomposition d = split_epi_to_action(make_extension(sp.proj_b, sp.inj_b));
            return compose(d.phi, d.psi) == HopfMorphism::identity(sp.algebra) &&
                   compose(d.psi, d.phi) == HopfMorphism::identity(d.smash.algebra) && d.action.xi() == act.xi();
          },
          [&] { return where(k, cm.name); });
    }
  }
  return p.take();
}

PropertyResult prop_crossed_round_trip(const Ctx& c) {
  Prop p("crossed-round-trip");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const NamedCrossedModule& cm : crossed_modules(c, k)) {
      AxiomReport r;
      p.run(
          [&] {
            r = crossed_round_trip(cm.cm).report;
            return r.ok();
          },
          [&] {
            json w = where(k, cm.name);
            if (const AxiomCheck* f = r.first_failure()) w["check"] = f->name;
            return w;
          });
    }
  }
  return p.take();
}

PropertyResult prop_cat1_round_trip(const Ctx& c) {
  Prop p("cat1-round-trip");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const NamedGraph& g : graphs(c, k)) {
      if (!is_cat1(g.graph)) continue;
      p.run([&] { return cat1_round_trip(g.graph).report.ok(); }, [&] { return where(k, g.name); });
    }
  }
  return p.take();
}

PropertyResult prop_cat1_equivalence(const Ctx& c) {
  Prop p("cat1-equivalence");
  for (const FieldSpec& k : c.cfg.fields) {
    for (const NamedGraph& g : graphs(c, k)) {
      Cat1Verdicts v;
      p.run(
          [&] {
            v = cat1_verdicts(g.graph);
            return v.agree();
          },
          [&] {
            json w = where(k, g.name);
            w["verdicts"] = {v.cat1, v.multiplicative, v.groupoid, v.huq_trivial};
            return w;
          });
    }
  }
  return p.take();
}

PropertyResult prop_peiffer(const Ctx& c) {
  Prop p("peiffer-necessity");
  for (const FieldSpec& k : c.cfg.fields) {
    HopfPtr one = group_algebra(catalog_group("C1"), k);
    for (const FiniteGroupTable* g : c.groups) {
      if (g->is_abelian() || g->order() > c.cfg.max_dim) continue;
      HopfPtr a = group_algebra(*g, k);
      p.run(
          [&] {
            CrossedModule cm{ModuleAction::trivial(one, a), HopfMorphism::zero(a, one)};
            AxiomReport r = check_crossed_module(cm);
            for (const AxiomCheck& x : r.checks) {
              if (x.passed == (x.name == "peiffer")) return false;
            }
            GroupoidStructure s = crossed_to_cat1_unchecked(cm);
            return !check_morphism(s.m).passed("multiplicative");
          },
          [&] { return where(k, g->name()); });
    }
  }
  return p.take();
}

}  // namespace

SuiteConfig default_suite_config() {
  SuiteConfig cfg;
  cfg.groups = catalog_names();
  cfg.fields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)};
  return cfg;
}

void apply_seed_override(SuiteConfig& cfg) {
  const char* env = std::getenv("HOPFCAT_SEED");
  if (!env) return;
  std::string s(env);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw MalformedInputError("HOPFCAT_SEED must be an unsigned integer, got '" + s + "'");
  }
  try {
    cfg.seed = std::stoull(s);
  } catch (const std::out_of_range&) {
    throw MalformedInputError("HOPFCAT_SEED out of range: " + s);
  }
}

bool SuiteReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failures == 0; });
}

std::string SuiteReport::to_string() const {
  std::ostringstream out;
  for (const PropertyResult& p : properties) {
    out << "PROP " << p.name << " cases=" << p.cases << " fail=" << p.failures << "\n";
    if (p.witness) out << "WITNESS " << *p.witness << "\n";
  }
  return out.str();
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  Ctx c{cfg, {}};
  for (const std::string& name : cfg.groups) c.groups.push_back(&catalog_group(name));
  std::mt19937_64 rng(cfg.seed);
  SuiteReport report;
  auto& ps = report.properties;
  ps.push_back(prop_hopf_axioms(c));
  ps.push_back(prop_antipode(c));
  ps.push_back(prop_dual(c));
  ps.push_back(prop_tensor(c));
  ps.push_back(prop_subcoalgebra(c, rng));
  ps.push_back(prop_hkernel(c));
  ps.push_back(prop_cokernel(c));
  ps.push_back(prop_factorization(c));
  ps.push_back(prop_pullback(c));
  ps.push_back(prop_equalizer(c));
  ps.push_back(prop_newman(c));
  ps.push_back(prop_normality(c));
  ps.push_back(prop_regularity(c));
  ps.push_back(prop_commutator(c));
  ps.push_back(prop_takeuchi(c));
  ps.push_back(prop_action_fuzz(c, rng));
  ps.push_back(prop_smash(c));
  ps.push_back(prop_crossed_round_trip(c));
  ps.push_back(prop_cat1_round_trip(c));
  ps.push_back(prop_cat1_equivalence(c));
  ps.push_back(prop_peiffer(c));
  return report;
}

}  // namespace hopfcat
