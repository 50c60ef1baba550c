#ifndef HOPFCAT_SUBSPACE_HPP
#define HOPFCAT_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopfcat/matrix.hpp"

namespace hopfcat {

/// A linear subspace of K^n held by its reduced row echelon basis. Two
/// subspaces are equal exactly when their RREF matrices coincide.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  Subspace(const FieldSpec& field, std::size_t ambient_dim);

  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);
  /// Span of arbitrary vectors.
  static Subspace span(const FieldSpec& field, std::size_t ambient_dim, std::span<const SparseVec> vectors);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == ambient_; }

  /// RREF basis, one vector per row.
  Matrix basis() const;
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its component along the basis; zero iff v lies in the span.
  /// Supported on non-pivot coordinates.
  SparseVec residue(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return residue(v).is_zero(); }
  bool contains(const Subspace& other) const;
  /// Coordinates of a member: its entries at the pivot columns.
  std::vector<Scalar> coordinates(const SparseVec& v) const;
  SparseVec combination(std::span<const Scalar> coords) const;

  bool operator==(const Subspace& other) const;

 private:
  FieldSpec field_;
  std::size_t ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_row_;
};

Subspace rref_basis(const Matrix& vectors);
Subspace kernel_space(const Matrix& f);
/// Kernel of the map whose columns are given sparsely; rows counts the codomain.
Subspace kernel_of_columns(const FieldSpec& field, std::size_t rows, std::span<const SparseVec> columns);
/// {Σ c_r w_r : Σ c_r images[r] = 0}, where w_r are the basis rows of domain
/// and images[r] lives in a space of dimension image_dim.
Subspace kernel_within(const Subspace& domain, std::span<const SparseVec> images, std::size_t image_dim);
/// Image (column space) of a map given by sparse columns.
Subspace image_of_columns(const FieldSpec& field, std::size_t rows, std::span<const SparseVec> columns);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<Matrix> inverse(const Matrix& m);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains;  // a ⊇ b
  bool equals;
};

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

struct QuotientSplit {
  Matrix proj;     // (n - dim w) x n, kernel exactly w
  Matrix section;  // n x (n - dim w), proj * section = id
  std::vector<std::size_t> coset_basis;  // non-pivot coordinates of w
};

QuotientSplit quotient_split(std::size_t ambient_dim, const Subspace& w);

/// π(v) for the projection of quotient_split, computed without the matrix.
SparseVec project_to_quotient(const Subspace& w, const SparseVec& v);

}  // namespace hopfcat

#endif  // HOPFCAT_SUBSPACE_HPP
