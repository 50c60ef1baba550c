#ifndef HOPFCAT_SUBOBJECTS_HPP
#define HOPFCAT_SUBOBJECTS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfcat/errors.hpp"
#include "hopfcat/morphism.hpp"
#include "hopfcat/subspace.hpp"

namespace hopfcat {

namespace detail {

// Coordinates of v ∈ S⊗S in the basis b_q⊗b_t of S's RREF rows, read off at
// pivot pairs, or nullopt when v is not in S⊗S.
std::optional<SparseVec> tensor_coordinates(const Subspace& s, const SparseVec& v);
std::optional<SparseVec> coordinates_in(const Subspace& s, const SparseVec& v);

}  // namespace detail

/// Restricts the Hopf structure exposed by ops (anything with field(), dim(),
/// mul, comul, antipode, counit, one) to the subspace s, using the RREF rows
/// of s as basis. Returns nullptr and fills defect when s is not a Hopf
/// subalgebra.
template <class Ops>
HopfPtr try_restrict(const Ops& ops, const Subspace& s, std::string name, std::string* defect) {
  auto fail = [&](std::string why) -> HopfPtr {
    if (defect) *defect = std::move(why);
    return nullptr;
  };
  const std::size_t d = s.dim();
  if (d == 0) return fail("zero subspace");
  HopfAlgebra::Columns cols;
  auto unit = detail::coordinates_in(s, ops.one());
  if (!unit) return fail("does not contain the unit");
  cols.unit = std::move(*unit);
  cols.mult.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto c = detail::coordinates_in(s, ops.mul(s.rows()[i], s.rows()[j]));
      if (!c) return fail("not closed under multiplication at basis pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      cols.mult.push_back(std::move(*c));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    auto c = detail::tensor_coordinates(s, ops.comul(s.rows()[i]));
    if (!c) return fail("not a subcoalgebra at basis vector " + std::to_string(i));
    cols.comult.push_back(std::move(*c));
    auto a = detail::coordinates_in(s, ops.antipode(s.rows()[i]));
    if (!a) return fail("not stable under the antipode at basis vector " + std::to_string(i));
    cols.antipode.push_back(std::move(*a));
    cols.counit.push_back(ops.counit(s.rows()[i]));
  }
  return make_hopf(ops.field(), d, std::move(cols), std::move(name));
}

template <class Ops>
HopfPtr restrict_structure(const Ops& ops, const Subspace& s, std::string name) {
  std::string defect;
  HopfPtr h = try_restrict(ops, s, std::move(name), &defect);
  if (!h) throw InvariantError("subspace is not a Hopf subalgebra: " + defect);
  return h;
}

/// A subspace of a Hopf algebra that is itself a Hopf subalgebra, together
/// with the induced structure on its RREF basis.
class HopfSubalgebra {
 public:
  /// Verifies the subalgebra conditions; throws InvariantError otherwise.
  static HopfSubalgebra make(const HopfPtr& ambient, const Subspace& space, std::string name = {});
  static std::optional<HopfSubalgebra> try_make(const HopfPtr& ambient, const Subspace& space,
                                                std::string* defect = nullptr);
  static HopfSubalgebra whole(const HopfPtr& ambient);
  static HopfSubalgebra trivial(const HopfPtr& ambient);

  const HopfPtr& ambient() const noexcept { return ambient_; }
  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  /// The subalgebra as a Hopf algebra in its own right.
  const HopfPtr& algebra() const noexcept { return algebra_; }
  /// algebra() → ambient().
  HopfMorphism inclusion() const;

  bool operator==(const HopfSubalgebra& other) const { return space_ == other.space_; }

 private:
  HopfSubalgebra(HopfPtr ambient, Subspace space, HopfPtr algebra)
      : ambient_(std::move(ambient)), space_(std::move(space)), algebra_(std::move(algebra)) {}

  HopfPtr ambient_;
  Subspace space_;
  HopfPtr algebra_;
};

/// A left ideal I with Δ(I) ⊆ I⊗A + A⊗I and ε(I) = 0.
class LeftIdealCoideal {
 public:
  static LeftIdealCoideal make(const HopfPtr& ambient, const Subspace& space);
  static std::optional<LeftIdealCoideal> try_make(const HopfPtr& ambient, const Subspace& space,
                                                  std::string* defect = nullptr);

  const HopfPtr& ambient() const noexcept { return ambient_; }
  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }

  bool operator==(const LeftIdealCoideal& other) const { return space_ == other.space_; }

 private:
  LeftIdealCoideal(HopfPtr ambient, Subspace space) : ambient_(std::move(ambient)), space_(std::move(space)) {}

  HopfPtr ambient_;
  Subspace space_;
};

/// C⁺ = ker ε.
Subspace plus_part(const HopfAlgebra& h);
/// D⁺ as a subspace of the ambient.
Subspace plus_part(const HopfSubalgebra& d);

/// Greatest W' ⊆ w with Δ(W') ⊆ W'⊗W'.
Subspace largest_subcoalgebra_in(const HopfAlgebra& h, const Subspace& w);

/// Checks whether space is a two-sided coideal: Δ(I) ⊆ I⊗A + A⊗I.
bool is_two_sided_coideal(const HopfAlgebra& h, const Subspace& space);

/// Smallest subalgebra containing the given vectors and the unit, obtained by
/// closing under multiplication with basis elements of the current span.
Subspace generated_subalgebra(const HopfAlgebra& h, std::span<const SparseVec> generators);

/// Smallest two-sided ideal containing the given subspace.
Subspace two_sided_ideal(const HopfAlgebra& h, const Subspace& generators);

/// The image of a subspace under a morphism.
Subspace map_subspace(const HopfMorphism& f, const Subspace& s);

}  // namespace hopfcat

#endif  // HOPFCAT_SUBOBJECTS_HPP
