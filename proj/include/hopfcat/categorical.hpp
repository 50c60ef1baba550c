#ifndef HOPFCAT_CATEGORICAL_HPP
#define HOPFCAT_CATEGORICAL_HPP

#include <optional>

#include "hopfcat/morphism.hpp"
#include "hopfcat/subobjects.hpp"

namespace hopfcat {

/// HKer(f) = {a : f(a1)⊗a2 = 1⊗a}, checked to be a normal Hopf subalgebra.
HopfSubalgebra hkernel(const HopfMorphism& f);

struct Quotient {
  HopfPtr quotient;
  HopfMorphism proj;
  /// The Hopf ideal that was factored out.
  Subspace ideal;
};

/// A/I for a Hopf ideal I, on the coset basis of quotient_split. Throws
/// InvariantError when I is not a Hopf ideal.
Quotient quotient_by_hopf_ideal(const HopfPtr& a, const Subspace& ideal, std::string name = {});

/// B/B f(A)⁺ B with its projection.
Quotient cokernel(const HopfMorphism& f);

struct FactorizationResult {
  HopfMorphism epi_part;
  HopfMorphism mono_part;
};

/// f = mono ∘ epi through A/A HKer(f)⁺ A.
FactorizationResult image_factorization(const HopfMorphism& f);

struct Pullback {
  HopfPtr object;
  /// The carrier as a subspace of A⊗C.
  Subspace space;
  HopfMorphism p1;
  HopfMorphism p2;
};

/// A ×_B C for f: A → B and g: C → B.
Pullback pullback(const HopfMorphism& f, const HopfMorphism& g);
/// The map T → A ×_B C induced by u: T → A and v: T → C with f u = g v.
/// Throws DiagramError when the square does not commute.
HopfMorphism pullback_pairing(const Pullback& pb, const HopfMorphism& f, const HopfMorphism& g, const HopfMorphism& u,
                              const HopfMorphism& v);

/// Largest Hopf subalgebra on which f and g agree.
HopfSubalgebra equalizer(const HopfMorphism& f, const HopfMorphism& g);

/// p⁻¹(C) = {x : (p⊗id)Δx − 1⊗x ∈ C⁺⊗A}.
HopfSubalgebra h_inverse(const HopfMorphism& p, const HopfSubalgebra& c);

/// p(D) as a Hopf subalgebra of the target.
HopfSubalgebra direct_image(const HopfMorphism& p, const HopfSubalgebra& d);

/// Φ(D) = A D⁺.
LeftIdealCoideal newman_phi(const HopfSubalgebra& d);
/// Ψ(I) = {x : (id⊗π)Δx = x⊗π(1)} with π: A → A/I.
HopfSubalgebra newman_psi(const LeftIdealCoideal& i);

/// a1 x S(a2) ∈ D for all a ∈ A, x ∈ D.
bool is_normal_by_conjugation(const HopfSubalgebra& d);
/// Φ(D) is a Hopf ideal.
bool is_normal_by_ideal(const HopfSubalgebra& d);
/// Both criteria; throws InvariantError if they disagree.
bool is_normal(const HopfSubalgebra& d);

/// Two-sided ideal, two-sided coideal, ε(I) = 0 and S(I) ⊆ I.
bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& space);

struct Extension {
  HopfMorphism kernel_inclusion;
  HopfMorphism epi;
  std::optional<HopfMorphism> section;
};

/// The extension HKer(epi) → A → B, with an optional section checked to split
/// epi.
Extension make_extension(const HopfMorphism& epi, std::optional<HopfMorphism> section = std::nullopt);

/// Given a morphism (kappa, alpha, beta) of split extensions, reports whether
/// alpha is an isomorphism. Throws DiagramError when a square fails to
/// commute.
bool check_split_short_five(const Extension& top, const Extension& bottom, const HopfMorphism& kappa,
                            const HopfMorphism& alpha, const HopfMorphism& beta);

/// Whether the diagonal X → X⊗X is a normal monomorphism, decided by
/// Φ_{X⊗X}(Δ(X)) being a Hopf ideal.
bool diagonal_is_normal(const HopfPtr& x);

}  // namespace hopfcat

#endif  // HOPFCAT_CATEGORICAL_HPP
