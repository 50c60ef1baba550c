#ifndef HOPFCAT_MORPHISM_HPP
#define HOPFCAT_MORPHISM_HPP

#include <cstddef>
#include <vector>

#include "hopfcat/hopf_algebra.hpp"
#include "hopfcat/subspace.hpp"

namespace hopfcat {

/// A linear map between two Hopf algebras, given by its matrix in the fixed
/// bases (target.dim × source.dim). Whether it preserves structure is a
/// separate question answered by check_morphism.
class HopfMorphism {
 public:
  HopfMorphism(HopfPtr source, HopfPtr target, Matrix map);

  static HopfMorphism identity(const HopfPtr& a);
  /// The zero morphism u_B·ε_A, which factors through K.
  static HopfMorphism zero(const HopfPtr& source, const HopfPtr& target);

  const HopfPtr& source() const noexcept { return source_; }
  const HopfPtr& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return map_; }

  SparseVec apply(const SparseVec& v) const;
  const SparseVec& image_of_basis(std::size_t i) const { return cols_[i]; }

  std::size_t rank() const;
  bool is_injective() const { return rank() == source_->dim(); }
  bool is_surjective() const { return rank() == target_->dim(); }
  bool is_isomorphism() const { return source_->dim() == target_->dim() && is_surjective(); }
  Subspace image() const;
  Subspace linear_kernel() const;

  bool operator==(const HopfMorphism& other) const;

 private:
  HopfPtr source_;
  HopfPtr target_;
  Matrix map_;
  std::vector<SparseVec> cols_;
};

/// g ∘ f.
HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f);

/// Algebra and coalgebra preservation, plus the antipode commutation
/// reported as its own check.
AxiomReport check_morphism(const HopfMorphism& f);

}  // namespace hopfcat

#endif  // HOPFCAT_MORPHISM_HPP
