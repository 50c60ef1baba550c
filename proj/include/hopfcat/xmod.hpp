#ifndef HOPFCAT_XMOD_HPP
#define HOPFCAT_XMOD_HPP

#include <optional>

#include "hopfcat/action.hpp"
#include "hopfcat/categorical.hpp"
#include "hopfcat/constructors.hpp"

namespace hopfcat {

/// d: X → B with B acting on X.
struct CrossedModule {
  ModuleAction action;
  HopfMorphism d;
};

/// "equivariance" d(^b x) = b1 d(x) S(b2) and "peiffer" ^{d(y)}x = y1 x S(y2),
/// after the action axioms and the morphism axioms of d (prefixed "action:"
/// and "d:").
AxiomReport check_crossed_module(const CrossedModule& cm);

/// The crossed module of a normal subgroup under conjugation, K[N] → K[G].
CrossedModule conjugation_crossed_module(const FiniteGroupTable& g, const ElementSet& n, const FieldSpec& field);

/// δ, γ: A1 → A0 with a common section i.
struct ReflexiveGraph {
  HopfMorphism delta;
  HopfMorphism gamma;
  HopfMorphism i;

  const HopfPtr& a1() const { return delta.source(); }
  const HopfPtr& a0() const { return delta.target(); }
};

/// Throws DiagramError unless δ i = id = γ i.
ReflexiveGraph make_reflexive_graph(HopfMorphism delta, HopfMorphism gamma, HopfMorphism i);

/// A reflexive graph with composition m on the composable pairs
/// P = {(a, a') : δ(a) = γ(a')} and inversion ι.
struct GroupoidStructure {
  ReflexiveGraph graph;
  Pullback pairs;
  HopfMorphism m;
  HopfMorphism iota;
};

/// Unit laws, source and target of m, associativity on composable triples,
/// the inverse laws, and the morphism axioms of m and ι.
AxiomReport check_groupoid(const GroupoidStructure& g);

struct SplitDecomposition {
  HopfSubalgebra kernel;
  ModuleAction action;
  SmashProduct smash;
  /// HKer(δ)⋊B → A, k⊗b ↦ k i(b).
  HopfMorphism phi;
  /// A → HKer(δ)⋊B, a ↦ a1 iδ(S a2) ⊗ δ(a3).
  HopfMorphism psi;
};

/// Decomposes a split extension as a smash product. Throws MissingSectionError
/// without a section and InvariantError if φ and ψ are not mutually inverse.
SplitDecomposition split_epi_to_action(const Extension& e);

/// X⋊B ⇉ B with δ(x⊗b) = ε(x)b, γ(x⊗b) = d(x)b, i(b) = 1⊗b,
/// m(x⊗b, x'⊗b') = xx'⊗ε(b)b' and ι(x⊗b) = S(x1)⊗d(x2)b. Throws AxiomError
/// when cm is not a crossed module.
GroupoidStructure crossed_to_cat1(const CrossedModule& cm);
/// Same construction with no checks, for fault injection.
GroupoidStructure crossed_to_cat1_unchecked(const CrossedModule& cm);

/// HKer(δ) elementwise commutes with HKer(γ).
bool is_cat1(const ReflexiveGraph& g);

/// (A0, HKer(δ), γ restricted) with ^a k = i(a1) k i(S a2). Throws NotCat1Error
/// unless is_cat1(g).
CrossedModule cat1_to_crossed(const ReflexiveGraph& g);

/// The unique m: P → A1 satisfying the unit laws that is an algebra map, if it
/// exists and is a Hopf morphism.
std::optional<HopfMorphism> solve_rmg_multiplication(const ReflexiveGraph& g, const Pullback& pairs);

/// ι(a) = iγ(a1) S(a2) iδ(a3).
HopfMorphism groupoid_inverse(const ReflexiveGraph& g);

/// The groupoid carried by g when the solved multiplication exists.
std::optional<GroupoidStructure> solve_groupoid(const ReflexiveGraph& g);

/// The four equivalent conditions on a reflexive graph.
struct Cat1Verdicts {
  bool cat1 = false;
  bool multiplicative = false;
  bool groupoid = false;
  bool huq_trivial = false;

  bool agree() const { return cat1 == multiplicative && cat1 == groupoid && cat1 == huq_trivial; }
};
Cat1Verdicts cat1_verdicts(const ReflexiveGraph& g);

/// "d-square" d' α = β d and "action-square" α(^b x) = ^{β(b)} α(x), plus
/// "alpha-iso" and "beta-iso".
AxiomReport check_crossed_module_iso(const CrossedModule& from, const CrossedModule& to, const HopfMorphism& alpha,
                                     const HopfMorphism& beta);

/// "delta-square", "gamma-square", "section-square", "a1-iso" and "a0-iso" for
/// (f1, f0): g → h.
AxiomReport check_graph_iso(const ReflexiveGraph& g, const ReflexiveGraph& h, const HopfMorphism& f1,
                            const HopfMorphism& f0);

struct CrossedRoundTrip {
  CrossedModule back;
  HopfMorphism alpha;  // X → HKer(δ), x ↦ x⊗1
  HopfMorphism beta;   // identity on B
  AxiomReport report;
};
/// cat1_to_crossed(crossed_to_cat1(cm)) with the comparison isomorphism.
CrossedRoundTrip crossed_round_trip(const CrossedModule& cm);

struct GraphRoundTrip {
  GroupoidStructure back;
  HopfMorphism f1;  // HKer(δ)⋊A0 → A1, k⊗b ↦ k i(b)
  HopfMorphism f0;  // identity on A0
  AxiomReport report;
};
/// crossed_to_cat1(cat1_to_crossed(g)) with the comparison isomorphism.
GraphRoundTrip cat1_round_trip(const ReflexiveGraph& g);

struct NamedCrossedModule {
  std::string name;
  CrossedModule cm;
};
/// Crossed modules built from the group catalog: conjugation on normal
/// subgroups plus two with abelian carriers and non-injective d.
std::vector<NamedCrossedModule> catalog_crossed_modules(const FieldSpec& field);

struct NamedGraph {
  std::string name;
  ReflexiveGraph graph;
};
/// Reflexive graphs of group algebras, cat¹ and not.
std::vector<NamedGraph> catalog_reflexive_graphs(const FieldSpec& field);

}  // namespace hopfcat

#endif  // HOPFCAT_XMOD_HPP
