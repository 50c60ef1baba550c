#ifndef HOPFCAT_TENSOR_HPP
#define HOPFCAT_TENSOR_HPP

#include <cstddef>

#include "hopfcat/hopf_algebra.hpp"
#include "hopfcat/morphism.hpp"

namespace hopfcat {

/// Structure maps of A⊗B evaluated on the fly from the two factors, without
/// materialising the dim(A)·dim(B) carrier. Basis index of a⊗b is a*dim(B)+b.
class TensorOps {
 public:
  TensorOps(const HopfAlgebra& a, const HopfAlgebra& b);

  const FieldSpec& field() const noexcept { return a_.field(); }
  std::size_t dim() const noexcept { return a_.dim() * b_.dim(); }

  SparseVec mul(const SparseVec& u, const SparseVec& v) const;
  SparseVec comul(const SparseVec& u) const;
  SparseVec antipode(const SparseVec& u) const;
  Scalar counit(const SparseVec& u) const;
  SparseVec one() const;

 private:
  const HopfAlgebra& a_;
  const HopfAlgebra& b_;
};

struct TensorProduct {
  HopfPtr product;
  HopfMorphism p1;  // a⊗b ↦ a ε(b)
  HopfMorphism p2;  // a⊗b ↦ ε(a) b
};

/// The categorical product A⊗B with its two projections.
TensorProduct tensor_product(const HopfPtr& a, const HopfPtr& b);

/// The pairing (f, g) = (f⊗g)·Δ_T : T → A⊗B into a materialised product.
HopfMorphism pairing(const HopfMorphism& f, const HopfMorphism& g, const HopfPtr& product);

/// Transposes all five structure maps; the result is commutative and need
/// not be cocommutative.
HopfPtr dual_fd(const HopfAlgebra& h);

}  // namespace hopfcat

#endif  // HOPFCAT_TENSOR_HPP
