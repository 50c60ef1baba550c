#ifndef HOPFCAT_COMMUTATOR_HPP
#define HOPFCAT_COMMUTATOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hopfcat/categorical.hpp"

namespace hopfcat {

struct CommuteVerdict {
  /// ab = ba on all basis pairs.
  bool elementwise = true;
  /// {a,b} = ε(a)ε(b)1 on all basis pairs.
  bool sweedler = true;
  /// First basis pair (a from x, b from y) that fails, as ambient vectors.
  std::optional<std::pair<SparseVec, SparseVec>> witness;
};

/// {a,b} = a1 b1 S(a2) S(b2).
SparseVec sweedler_commutator(const HopfAlgebra& h, const SparseVec& a, const SparseVec& b);

/// Both commutation criteria for two Hopf subalgebras of one ambient. Throws
/// DimensionMismatchError for different ambients and InvariantError if the
/// criteria disagree.
CommuteVerdict commute_check(const HopfSubalgebra& x, const HopfSubalgebra& y);

struct CommutatorWitness {
  std::vector<SparseVec> generators;
  HopfSubalgebra closure;
};

/// [X,Y]: the subalgebra generated by the {a,b}. Throws NormalityError unless
/// x and y are normal; the result is checked to be normal and to make x and y
/// commute in the quotient.
CommutatorWitness huq_commutator(const HopfSubalgebra& x, const HopfSubalgebra& y);

/// A/A N⁺ A, checked to have HKer(proj) = N. Throws NormalityError unless n is
/// normal.
Quotient quotient_by_normal(const HopfSubalgebra& n);

/// A/[A,A], checked to be commutative.
Quotient abelianization(const HopfPtr& a);

}  // namespace hopfcat

#endif  // HOPFCAT_COMMUTATOR_HPP
