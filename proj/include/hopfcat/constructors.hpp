#ifndef HOPFCAT_CONSTRUCTORS_HPP
#define HOPFCAT_CONSTRUCTORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hopfcat/action.hpp"
#include "hopfcat/group.hpp"
#include "hopfcat/morphism.hpp"
#include "hopfcat/subspace.hpp"

namespace hopfcat {

/// K[G]: basis the group elements, Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfPtr group_algebra(const FiniteGroupTable& g, const FieldSpec& field);

/// F_p[x]/(x^p) with x primitive, over F_p. Throws InvalidPrimeError for
/// composite p or p > 7.
HopfPtr truncated_primitive(std::uint64_t p);
/// Same, but refuses (MalformedInputError) any field other than F_p.
HopfPtr truncated_primitive(std::uint64_t p, const FieldSpec& field);
/// The same structure constants written over an arbitrary field, without any
/// check. Over Q they violate the bialgebra compatibility on x^{p-1}·x.
HopfPtr truncated_primitive_constants(std::uint64_t p, const FieldSpec& field);

/// K[f] for a group homomorphism f; throws InvalidHomError otherwise.
HopfMorphism hopf_from_group_hom(const GroupMap& f, const FiniteGroupTable& src, const FiniteGroupTable& tgt,
                                 const FieldSpec& field);
HopfMorphism hopf_from_group_hom(const GroupMap& f, const FiniteGroupTable& src, const FiniteGroupTable& tgt,
                                 const HopfPtr& src_algebra, const HopfPtr& tgt_algebra);

/// Span of the basis vectors of the given group elements.
Subspace subgroup_subspace(const HopfAlgebra& group_alg, const ElementSet& elements);

/// The action of K[H] on K[N] induced by automorphisms act[h][n] = ^h n.
ModuleAction group_action(const HopfPtr& acting, const HopfPtr& carrier, const std::vector<GroupMap>& act);

struct SmashProduct {
  HopfPtr algebra;
  HopfMorphism inj_x;   // x ↦ x⊗1
  HopfMorphism inj_b;   // b ↦ 1⊗b
  HopfMorphism proj_b;  // x⊗b ↦ ε(x)b
};

/// X⋊B on the carrier X⊗B (X index major). Throws AxiomError when the action
/// fails its axioms.
SmashProduct smash_product(const ModuleAction& action);
/// Same construction without validating the action.
SmashProduct smash_product_unchecked(const ModuleAction& action);

struct GroupLikeSet {
  std::vector<SparseVec> elements;
  /// False when the search could not rule out further group-likes.
  bool complete = false;
};

/// Group-like elements (Δg = g⊗g, ε(g) = 1). Multiples of basis vectors are
/// tried first; when they do not already span, prime fields up to 257 are
/// searched exhaustively through the joint eigenspaces of the left
/// multiplications of the dual algebra.
GroupLikeSet group_likes(const HopfAlgebra& h);

/// The group formed by a spanning family of group-likes, indexed as given.
FiniteGroupTable group_of_group_likes(const HopfAlgebra& h, const std::vector<SparseVec>& elements);

/// An isomorphism A → B sending group-likes to group-likes, when both are
/// spanned by their group-likes and the groups are isomorphic.
std::optional<HopfMorphism> find_isomorphism_by_group_likes(const HopfPtr& a, const HopfPtr& b);

}  // namespace hopfcat

#endif  // HOPFCAT_CONSTRUCTORS_HPP
