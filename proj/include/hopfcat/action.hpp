#ifndef HOPFCAT_ACTION_HPP
#define HOPFCAT_ACTION_HPP

#include <cstddef>
#include <vector>

#include "hopfcat/hopf_algebra.hpp"

namespace hopfcat {

/// A linear map ξ: B⊗X → X, written ^b x. The matrix is dim(X) × dim(B)·dim(X)
/// with column b*dim(X) + x holding ^{e_b} e_x.
class ModuleAction {
 public:
  ModuleAction(HopfPtr acting, HopfPtr carrier, Matrix xi);

  /// ξ = ε_B ⊗ id_X.
  static ModuleAction trivial(const HopfPtr& acting, const HopfPtr& carrier);

  const HopfPtr& acting() const noexcept { return acting_; }
  const HopfPtr& carrier() const noexcept { return carrier_; }
  const Matrix& xi() const noexcept { return xi_; }

  const SparseVec& act(std::size_t b, std::size_t x) const { return cols_[b * carrier_->dim() + x]; }
  SparseVec act(const SparseVec& b, const SparseVec& x) const;
  /// ξ applied to a vector of B⊗X.
  SparseVec apply(const SparseVec& bx) const;

 private:
  HopfPtr acting_;
  HopfPtr carrier_;
  Matrix xi_;
  std::vector<SparseVec> cols_;
};

/// The six module Hopf algebra axioms, reported as "action-associative",
/// "action-unit", "action-multiplicative", "action-unit-preserving",
/// "action-comultiplicative" and "action-counit".
AxiomReport check_action_axioms(const ModuleAction& a);

}  // namespace hopfcat

#endif  // HOPFCAT_ACTION_HPP
