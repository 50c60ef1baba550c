#ifndef HOPFCAT_MATRIX_HPP
#define HOPFCAT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfcat/field.hpp"

namespace hopfcat {

struct Term {
  std::size_t index;
  Scalar coeff;
};

/// Vector stored as its nonzero coordinates, sorted by index. The ambient
/// dimension is carried by context, never by the vector.
class SparseVec {
 public:
  SparseVec() = default;
  explicit SparseVec(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  static SparseVec unit(const FieldSpec& field, std::size_t index) {
    return SparseVec({Term{index, Scalar::one(field)}});
  }
  static SparseVec from_dense(std::span<const Scalar> values);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t nnz() const noexcept { return terms_.size(); }
  /// Coefficient at index, or nullptr when it is zero.
  const Scalar* find(std::size_t index) const;
  Scalar at(const FieldSpec& field, std::size_t index) const;
  std::vector<Scalar> to_dense(const FieldSpec& field, std::size_t dim) const;

  SparseVec scaled(const Scalar& c) const;
  SparseVec operator+(const SparseVec& other) const;
  SparseVec operator-(const SparseVec& other) const;
  SparseVec operator-() const;
  bool operator==(const SparseVec& other) const;

 private:
  std::vector<Term> terms_;
};

/// a ⊗ b with row-major indexing i*dim_b + j.
SparseVec tensor(const SparseVec& a, const SparseVec& b, std::size_t dim_b);

/// Scratch space for summing many sparse contributions. Dense below a size
/// threshold, hashed above it.
class Accumulator {
 public:
  Accumulator(const FieldSpec& field, std::size_t dim);

  void add(std::size_t index, const Scalar& c);
  void add_scaled(const SparseVec& v, const Scalar& c);
  void add(const SparseVec& v);
  /// Drains the accumulator into a sorted zero-free vector.
  SparseVec take();

 private:
  FieldSpec field_;
  bool dense_;
  std::vector<Scalar> values_;
  std::vector<char> touched_flag_;
  std::vector<std::size_t> touched_;
  std::unordered_map<std::size_t, Scalar> hashed_;
};

/// Dense row-major matrix over one exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, std::span<const SparseVec> rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, std::span<const SparseVec> columns);
  /// Integer entries, mainly for fixtures and tests.
  static Matrix from_ints(const FieldSpec& field, const std::vector<std::vector<std::int64_t>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  SparseVec row(std::size_t r) const;
  SparseVec column(std::size_t c) const;
  std::vector<SparseVec> columns() const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

  /// Matrix-vector product on a sparse input.
  SparseVec apply(const SparseVec& v) const;
  Matrix transpose() const;
  std::size_t rank() const;
  bool is_zero() const;
  std::string to_string() const;

 private:
  void require_same_shape(const Matrix& other) const;

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product a ⊗ b, first factor major.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace hopfcat

#endif  // HOPFCAT_MATRIX_HPP
