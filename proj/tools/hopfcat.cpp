#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcat/commutator.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/hopf_file.hpp"
#include "hopfcat/suite.hpp"
#include "hopfcat/tensor.hpp"
#include "hopfcat/xmod.hpp"

using namespace hopfcat;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Inputs {
  std::string file;
  std::string group;
  std::string field = "Q";
  std::string target;
  std::string hom;
  std::string other;
  std::string other_hom;
  std::string subgroup;
  std::string subgroup2;
  std::string out;
};

FieldSpec field_of(const Inputs& in) { return FieldSpec::parse(in.field); }

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedInputError(std::string(what) + ": expected comma-separated indices, got '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

const FiniteGroupTable& require_group(const std::string& name, const char* option) {
  if (name.empty()) throw MalformedInputError(std::string(option) + " is required");
  return catalog_group(name);
}

ElementSet parse_subgroup(const FiniteGroupTable& g, const std::string& text) {
  ElementSet s = parse_list(text, "--subgroup");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (std::size_t x : s) {
    if (x >= g.order()) throw InvalidGroupError("element " + std::to_string(x) + " out of range");
  }
  if (!is_subgroup(g, s)) throw InvalidGroupError("'" + text + "' is not a subgroup of " + g.name());
  return s;
}

// The given hom, or the first surjective one, or the last one enumerated.
GroupMap pick_hom(const FiniteGroupTable& g, const FiniteGroupTable& h, const std::string& text) {
  if (!text.empty()) {
    GroupMap f = parse_list(text, "--hom");
    if (f.size() != g.order() || !is_homomorphism(g, h, f)) {
      throw InvalidHomError("'" + text + "' is not a homomorphism " + g.name() + " -> " + h.name());
    }
    return f;
  }
  std::vector<GroupMap> all = homomorphisms(g, h);
  for (const GroupMap& f : all) {
    if (hom_image(h, f).size() == h.order()) return f;
  }
  return all.back();
}

HopfPtr load_algebra(const Inputs& in, AxiomReport* report = nullptr) {
  if (!in.file.empty()) return read_hopf_file(in.file, report);
  return group_algebra(require_group(in.group, "--group or a file"), field_of(in));
}

struct Hom {
  const FiniteGroupTable* src;
  const FiniteGroupTable* tgt;
  GroupMap map;
  HopfMorphism f;
};

Hom load_hom(const Inputs& in) {
  const FiniteGroupTable& g = require_group(in.group, "--group");
  const FiniteGroupTable& h = require_group(in.target, "--target");
  GroupMap f = pick_hom(g, h, in.hom);
  FieldSpec k = field_of(in);
  return {&g, &h, f, hopf_from_group_hom(f, g, h, group_algebra(g, k), group_algebra(h, k))};
}

std::string vec_text(const SparseVec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const Term& t : v.terms()) {
    std::string c = t.coeff.to_string();
    bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (c != "1") s += c + "*";
    s += "e" + std::to_string(t.index);
  }
  return s;
}

void print_space(const std::string& label, const Subspace& s) {
  std::cout << label << " dim=" << s.dim() << "\n";
  for (const SparseVec& r : s.rows()) std::cout << "  " << vec_text(r) << "\n";
}

void maybe_write(const Inputs& in, const HopfAlgebra& h) {
  if (in.out.empty()) return;
  write_hopf_file(h, in.out);
  std::cout << "wrote " << in.out << "\n";
}

void print_hom(const Hom& h) {
  std::cout << "hom " << h.src->name() << " -> " << h.tgt->name() << " [";
  for (std::size_t i = 0; i < h.map.size(); ++i) std::cout << (i ? "," : "") << h.map[i];
  std::cout << "]\n";
}

int cmd_check(const Inputs& in) {
  AxiomReport r;
  HopfPtr h;
  try {
    h = load_algebra(in, &r);
  } catch (const AxiomError&) {
    std::cout << r.to_string();
    return kFail;
  }
  if (r.checks.empty()) r = check_hopf_axioms(*h);
  std::cout << h->name() << " over " << h->field().to_string() << " dim=" << h->dim() << "\n" << r.to_string();
  return r.ok() ? kPass : kFail;
}

int cmd_dual(const Inputs& in) {
  HopfPtr d = dual_fd(*load_algebra(in));
  std::cout << d->name() << " dim=" << d->dim() << " commutative=" << d->is_commutative()
            << " cocommutative=" << d->is_cocommutative() << "\n";
  maybe_write(in, *d);
  return kPass;
}

int cmd_kernel(const Inputs& in) {
  Hom h = load_hom(in);
  print_hom(h);
  HopfSubalgebra k = hkernel(h.f);
  print_space("hkernel", k.space());
  maybe_write(in, *k.algebra());
  return kPass;
}

int cmd_cokernel(const Inputs& in) {
  Quotient q = [&] {
    if (!in.subgroup.empty()) {
      const FiniteGroupTable& g = require_group(in.group, "--group");
      HopfPtr a = group_algebra(g, field_of(in));
      return cokernel(HopfSubalgebra::make(a, subgroup_subspace(*a, parse_subgroup(g, in.subgroup))).inclusion());
    }
    Hom h = load_hom(in);
    print_hom(h);
    return cokernel(h.f);
  }();
  std::cout << "cokernel dim=" << q.quotient->dim() << " commutative=" << q.quotient->is_commutative() << "\n";
  print_space("ideal", q.ideal);
  maybe_write(in, *q.quotient);
  return kPass;
}

int cmd_factorize(const Inputs& in) {
  Hom h = load_hom(in);
  print_hom(h);
  FactorizationResult r = image_factorization(h.f);
  bool composite = compose(r.mono_part, r.epi_part) == h.f;
  bool kernel = h.f.linear_kernel() == newman_phi(hkernel(h.f)).space();
  std::cout << "rank=" << h.f.rank() << " intermediate dim=" << r.epi_part.target()->dim() << "\n"
            << "mono*epi=f " << (composite ? "pass" : "FAIL") << "\n"
            << "ker(f)=A*HKer(f)+ " << (kernel ? "pass" : "FAIL") << "\n";
  maybe_write(in, *r.epi_part.target());
  return composite && kernel && r.epi_part.target()->dim() == h.f.rank() ? kPass : kFail;
}

int cmd_pullback(const Inputs& in) {
  Hom a = load_hom(in);
  Inputs second = in;
  second.group = in.other;
  second.hom = in.other_hom;
  Hom b = load_hom(second);
  print_hom(a);
  print_hom(b);
  Pullback pb = pullback(a.f, b.f);
  bool square = compose(a.f, pb.p1) == compose(b.f, pb.p2);
  std::cout << "pullback dim=" << pb.object->dim() << " square " << (square ? "pass" : "FAIL") << "\n";
  maybe_write(in, *pb.object);
  return square ? kPass : kFail;
}

int cmd_equalizer(const Inputs& in) {
  Hom a = load_hom(in);
  Inputs second = in;
  second.hom = in.other_hom;
  Hom b = load_hom(second);
  print_hom(a);
  print_hom(b);
  HopfSubalgebra e = equalizer(a.f, b.f);
  print_space("equalizer", e.space());
  maybe_write(in, *e.algebra());
  return kPass;
}

int cmd_hinv(const Inputs& in) {
  Hom h = load_hom(in);
  print_hom(h);
  HopfPtr kq = h.f.target();
  HopfSubalgebra c = HopfSubalgebra::make(kq, subgroup_subspace(*kq, parse_subgroup(*h.tgt, in.subgroup)));
  HopfSubalgebra inv = h_inverse(h.f, c);
  print_space("h-inverse", inv.space());
  Subspace back = map_subspace(h.f, inv.space());
  std::cout << "image of h-inverse dim=" << back.dim() << " of " << c.dim() << "\n";
  maybe_write(in, *inv.algebra());
  return kPass;
}

HopfSubalgebra group_sub(const Inputs& in, const HopfPtr& a, const std::string& text) {
  const FiniteGroupTable& g = require_group(in.group, "--group");
  if (text.empty()) return HopfSubalgebra::whole(a);
  return HopfSubalgebra::make(a, subgroup_subspace(*a, parse_subgroup(g, text)));
}

int cmd_newman(const Inputs& in, bool phi) {
  HopfPtr a = group_algebra(require_group(in.group, "--group"), field_of(in));
  HopfSubalgebra d = group_sub(in, a, in.subgroup);
  LeftIdealCoideal i = newman_phi(d);
  if (phi) {
    print_space("phi", i.space());
    return kPass;
  }
  // The ideal is named by the subgroup generating it.
  HopfSubalgebra back = newman_psi(i);
  print_space("psi", back.space());
  maybe_write(in, *back.algebra());
  return back == d ? kPass : kFail;
}

int cmd_normal(const Inputs& in) {
  HopfPtr a = group_algebra(require_group(in.group, "--group"), field_of(in));
  HopfSubalgebra d = group_sub(in, a, in.subgroup);
  bool conj = is_normal_by_conjugation(d);
  bool ideal = is_normal_by_ideal(d);
  std::cout << "normal by conjugation=" << conj << " by ideal=" << ideal << "\n";
  return conj == ideal ? kPass : kFail;
}

int cmd_commutator(const Inputs& in) {
  HopfPtr a = in.file.empty() ? group_algebra(require_group(in.group, "--group"), field_of(in)) : load_algebra(in);
  HopfSubalgebra x = in.file.empty() ? group_sub(in, a, in.subgroup) : HopfSubalgebra::whole(a);
  HopfSubalgebra y = in.file.empty() ? group_sub(in, a, in.subgroup2) : HopfSubalgebra::whole(a);
  CommuteVerdict v = commute_check(x, y);
  CommutatorWitness w = huq_commutator(x, y);
  std::cout << "commute elementwise=" << v.elementwise << " sweedler=" << v.sweedler << "\n";
  print_space("commutator", w.closure.space());
  maybe_write(in, *w.closure.algebra());
  return kPass;
}

int cmd_abelianize(const Inputs& in) {
  Quotient q = abelianization(load_algebra(in));
  std::cout << "abelianization dim=" << q.quotient->dim() << " commutative=" << q.quotient->is_commutative() << "\n";
  maybe_write(in, *q.quotient);
  return q.quotient->is_commutative() ? kPass : kFail;
}

int cmd_smash(const Inputs& in) {
  const FiniteGroupTable& g = require_group(in.group, "--group");
  FieldSpec k = field_of(in);
  ElementSet n = in.subgroup.empty() ? ElementSet{} : parse_subgroup(g, in.subgroup);
  if (n.empty()) {
    for (std::size_t x = 0; x < g.order(); ++x) n.push_back(x);
  }
  ModuleAction act = conjugation_crossed_module(g, n, k).action;
  SmashProduct sp = smash_product(act);
  SplitDecomposition d = split_epi_to_action(make_extension(sp.proj_b, sp.inj_b));
  bool phipsi = compose(d.phi, d.psi) == HopfMorphism::identity(sp.algebra);
  bool psiphi = compose(d.psi, d.phi) == HopfMorphism::identity(d.smash.algebra);
  bool action = d.action.xi() == act.xi();
  std::cout << "smash dim=" << sp.algebra->dim() << "\n"
            << "phi*psi=id " << (phipsi ? "pass" : "FAIL") << "\n"
            << "psi*phi=id " << (psiphi ? "pass" : "FAIL") << "\n"
            << "action recovered " << (action ? "pass" : "FAIL") << "\n";
  maybe_write(in, *sp.algebra);
  return phipsi && psiphi && action ? kPass : kFail;
}

CrossedModule load_crossed(const Inputs& in, const std::string& catalog) {
  FieldSpec k = field_of(in);
  if (!catalog.empty()) {
    for (const NamedCrossedModule& c : catalog_crossed_modules(k)) {
      if (c.name == catalog) return c.cm;
    }
    throw MalformedInputError("no catalog crossed module named '" + catalog + "'");
  }
  const FiniteGroupTable& g = require_group(in.group, "--group or --catalog");
  return conjugation_crossed_module(g, parse_subgroup(g, in.subgroup), k);
}

ReflexiveGraph load_graph(const Inputs& in, const std::string& name) {
  for (const NamedGraph& g : catalog_reflexive_graphs(field_of(in))) {
    if (g.name == name) return g.graph;
  }
  throw MalformedInputError("no catalog reflexive graph named '" + name + "'");
}

int cmd_xmod(const Inputs& in, const std::string& action, const std::string& catalog, const std::string& graph,
             bool list) {
  if (list) {
    for (const NamedCrossedModule& c : catalog_crossed_modules(field_of(in))) std::cout << "xmod " << c.name << "\n";
    for (const NamedGraph& g : catalog_reflexive_graphs(field_of(in))) std::cout << "graph " << g.name << "\n";
    return kPass;
  }
  if (action == "check") {
    AxiomReport r = check_crossed_module(load_crossed(in, catalog));
    std::cout << r.to_string();
    return r.ok() ? kPass : kFail;
  }
  if (action == "to-cat1") {
    GroupoidStructure g = crossed_to_cat1(load_crossed(in, catalog));
    AxiomReport r = check_groupoid(g);
    std::cout << "A1 dim=" << g.graph.a1()->dim() << " A0 dim=" << g.graph.a0()->dim()
              << " pairs dim=" << g.pairs.object->dim() << "\n"
              << r.to_string() << "cat1=" << is_cat1(g.graph) << "\n";
    return r.ok() ? kPass : kFail;
  }
  if (action == "from-cat1") {
    if (graph.empty()) throw MalformedInputError("--graph is required");
    ReflexiveGraph g = load_graph(in, graph);
    Cat1Verdicts v = cat1_verdicts(g);
    std::cout << "cat1=" << v.cat1 << " multiplicative=" << v.multiplicative << " groupoid=" << v.groupoid
              << " huq-trivial=" << v.huq_trivial << "\n";
    if (!v.cat1) return kFail;
    CrossedModule cm = cat1_to_crossed(g);
    std::cout << "carrier dim=" << cm.action.carrier()->dim() << " acting dim=" << cm.action.acting()->dim() << "\n"
              << check_crossed_module(cm).to_string();
    return v.agree() ? kPass : kFail;
  }
  if (action == "roundtrip") {
    AxiomReport r = graph.empty() ? crossed_round_trip(load_crossed(in, catalog)).report
                                  : cat1_round_trip(load_graph(in, graph)).report;
    std::cout << r.to_string();
    return r.ok() ? kPass : kFail;
  }
  throw MalformedInputError("unknown xmod action '" + action + "'");
}

int cmd_suite(const std::vector<std::string>& groups, const std::vector<std::string>& fields, std::uint64_t seed,
              bool seed_given, std::size_t max_dim, bool inject, const std::string& out) {
  SuiteConfig cfg = default_suite_config();
  if (!groups.empty()) cfg.groups = groups;
  if (!fields.empty()) {
    cfg.fields.clear();
    for (const std::string& f : fields) cfg.fields.push_back(FieldSpec::parse(f));
  }
  if (seed_given) cfg.seed = seed;
  apply_seed_override(cfg);
  cfg.max_dim = max_dim;
  cfg.inject_antipode_fault = inject;
  for (const std::string& g : cfg.groups) catalog_group(g);
  SuiteReport r = run_suite(cfg);
  std::string text = r.to_string();
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw MalformedInputError("cannot write " + out);
    f << text;
  }
  return r.ok() ? kPass : kFail;
}

void algebra_opts(CLI::App* c, Inputs& in, bool file) {
  if (file) c->add_option("file", in.file, "HopfFile input");
  c->add_option("--group", in.group, "catalog group");
  c->add_option("--field", in.field, "Q or Fp:<p>");
  c->add_option("--out", in.out, "write the resulting algebra here");
}

void hom_opts(CLI::App* c, Inputs& in) {
  algebra_opts(c, in, false);
  c->add_option("--target", in.target, "target catalog group");
  c->add_option("--hom", in.hom, "images of the source elements, comma separated");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional cocommutative Hopf algebras"};
  app.require_subcommand(1);
  Inputs in;

  auto* check = app.add_subcommand("check", "validate the Hopf axioms");
  algebra_opts(check, in, true);
  auto* dual = app.add_subcommand("dual", "linear dual");
  algebra_opts(dual, in, true);
  auto* kernel = app.add_subcommand("kernel", "Hopf kernel of K[f]");
  hom_opts(kernel, in);
  auto* coker = app.add_subcommand("cokernel", "cokernel of K[f] or of K[N] -> K[G]");
  hom_opts(coker, in);
  coker->add_option("--subgroup", in.subgroup, "normal subgroup N of --group");
  auto* fact = app.add_subcommand("factorize", "epi-mono factorization of K[f]");
  hom_opts(fact, in);
  auto* pb = app.add_subcommand("pullback", "pullback of K[f] and K[g] over --target");
  hom_opts(pb, in);
  pb->add_option("--other", in.other, "source group of g")->required();
  pb->add_option("--other-hom", in.other_hom, "g");
  auto* eq = app.add_subcommand("equalizer", "equalizer of K[f] and K[g]");
  hom_opts(eq, in);
  eq->add_option("--other-hom", in.other_hom, "g")->required();
  auto* hinv = app.add_subcommand("hinv", "h-inverse of K[C] along K[f]");
  hom_opts(hinv, in);
  hinv->add_option("--subgroup", in.subgroup, "subgroup C of --target")->required();

  auto* newman = app.add_subcommand("newman", "Newman correspondence");
  newman->require_subcommand(1);
  auto* phi = newman->add_subcommand("phi", "A D+ for D = K[subgroup]");
  algebra_opts(phi, in, false);
  phi->add_option("--subgroup", in.subgroup, "subgroup D");
  auto* psi = newman->add_subcommand("psi", "Psi of the ideal A K[subgroup]+");
  algebra_opts(psi, in, false);
  psi->add_option("--subgroup", in.subgroup, "subgroup generating the ideal");

  auto* normal = app.add_subcommand("normal", "normality of K[subgroup]");
  algebra_opts(normal, in, false);
  normal->add_option("--subgroup", in.subgroup, "subgroup");
  auto* comm = app.add_subcommand("commutator", "Huq commutator of K[N] and K[M]");
  algebra_opts(comm, in, true);
  comm->add_option("--subgroup", in.subgroup, "N (default G)");
  comm->add_option("--subgroup2", in.subgroup2, "M (default G)");
  auto* ab = app.add_subcommand("abelianize", "A/[A,A]");
  algebra_opts(ab, in, true);
  auto* smash = app.add_subcommand("smash", "K[N] # K[G] under conjugation and its split decomposition");
  algebra_opts(smash, in, false);
  smash->add_option("--subgroup", in.subgroup, "normal subgroup N (default G)");

  auto* xmod = app.add_subcommand("xmod", "crossed modules and cat1 graphs");
  std::string xmod_action;
  std::string catalog;
  std::string graph;
  bool list = false;
  xmod->add_option("action", xmod_action, "check, to-cat1, from-cat1 or roundtrip")
      ->check(CLI::IsMember({"check", "to-cat1", "from-cat1", "roundtrip"}));
  algebra_opts(xmod, in, false);
  xmod->add_option("--subgroup", in.subgroup, "normal subgroup for the conjugation crossed module");
  xmod->add_option("--catalog", catalog, "named catalog crossed module");
  xmod->add_option("--graph", graph, "named catalog reflexive graph");
  xmod->add_flag("--list", list, "list catalog crossed modules and graphs");

  auto* suite = app.add_subcommand("suite", "run the property suite");
  std::vector<std::string> groups;
  std::vector<std::string> fields;
  std::uint64_t seed = 0;
  std::size_t max_dim = 18;
  bool inject = false;
  std::string report;
  suite->add_option("--groups", groups, "catalog groups")->delimiter(',');
  suite->add_option("--fields", fields, "fields")->delimiter(',');
  auto* seed_opt = suite->add_option("--seed", seed, "RNG seed (HOPFCAT_SEED overrides)");
  suite->add_option("--max-dim", max_dim, "largest algebra dimension exercised");
  suite->add_flag("--inject-antipode-fault", inject, "replace every antipode by the identity");
  suite->add_option("--out", report, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(in);
    if (*dual) return cmd_dual(in);
    if (*kernel) return cmd_kernel(in);
    if (*coker) return cmd_cokernel(in);
    if (*fact) return cmd_factorize(in);
    if (*pb) return cmd_pullback(in);
    if (*eq) return cmd_equalizer(in);
    if (*hinv) return cmd_hinv(in);
    if (*phi) return cmd_newman(in, true);
    if (*psi) return cmd_newman(in, false);
    if (*normal) return cmd_normal(in);
    if (*comm) return cmd_commutator(in);
    if (*ab) return cmd_abelianize(in);
    if (*smash) return cmd_smash(in);
    if (*xmod) return cmd_xmod(in, xmod_action, catalog, graph, list);
    if (*suite) return cmd_suite(groups, fields, seed, seed_opt->count() > 0, max_dim, inject, report);
  } catch (const AxiomError& e) {
    std::cerr << "axiom failure: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    bool input = dynamic_cast<const ParseError*>(&e) || dynamic_cast<const MalformedInputError*>(&e) ||
                 dynamic_cast<const VersionMismatchError*>(&e) || dynamic_cast<const UnknownGroupError*>(&e) ||
                 dynamic_cast<const InvalidGroupError*>(&e) || dynamic_cast<const InvalidHomError*>(&e) ||
                 dynamic_cast<const InvalidPrimeError*>(&e) || dynamic_cast<const NormalityError*>(&e);
    std::cerr << (input ? "input error: " : "error: ") << e.what() << "\n";
    return input ? kInputError : kFail;
  }
  return kInputError;
}
