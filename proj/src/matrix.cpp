#include "hopfcat/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hopfcat/errors.hpp"
#include "hopfcat/subspace.hpp"

namespace hopfcat {

namespace {
constexpr std::size_t kDenseAccumulatorLimit = 1U << 16U;
}

SparseVec SparseVec::from_dense(std::span<const Scalar> values) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) terms.push_back({i, values[i]});
  }
  return SparseVec(std::move(terms));
}

const Scalar* SparseVec::find(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.index < i; });
  if (it == terms_.end() || it->index != index) return nullptr;
  return &it->coeff;
}

Scalar SparseVec::at(const FieldSpec& field, std::size_t index) const {
  const Scalar* c = find(index);
  return c ? *c : Scalar::zero(field);
}

std::vector<Scalar> SparseVec::to_dense(const FieldSpec& field, std::size_t dim) const {
  std::vector<Scalar> out(dim, Scalar::zero(field));
  for (const Term& t : terms_) {
    if (t.index >= dim) throw DimensionMismatchError("sparse index outside ambient dimension");
    out[t.index] = t.coeff;
  }
  return out;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.index, t.coeff * c});
  return SparseVec(std::move(out));
}

SparseVec SparseVec::operator+(const SparseVec& other) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->index < a->index) {
      out.push_back(*b++);
    } else {
      Scalar s = a->coeff + b->coeff;
      if (!s.is_zero()) out.push_back({a->index, s});
      ++a;
      ++b;
    }
  }
  return SparseVec(std::move(out));
}

SparseVec SparseVec::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.index, -t.coeff});
  return SparseVec(std::move(out));
}

SparseVec SparseVec::operator-(const SparseVec& other) const { return *this + (-other); }

bool SparseVec::operator==(const SparseVec& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].index != other.terms_[i].index || !(terms_[i].coeff == other.terms_[i].coeff)) return false;
  }
  return true;
}

SparseVec tensor(const SparseVec& a, const SparseVec& b, std::size_t dim_b) {
  std::vector<Term> out;
  out.reserve(a.nnz() * b.nnz());
  for (const Term& x : a.terms()) {
    for (const Term& y : b.terms()) out.push_back({x.index * dim_b + y.index, x.coeff * y.coeff});
  }
  return SparseVec(std::move(out));
}

Accumulator::Accumulator(const FieldSpec& field, std::size_t dim)
    : field_(field), dense_(dim <= kDenseAccumulatorLimit) {
  if (dense_) {
    values_.assign(dim, Scalar::zero(field));
    touched_flag_.assign(dim, 0);
  }
}

void Accumulator::add(std::size_t index, const Scalar& c) {
  if (c.is_zero()) return;
  if (dense_) {
    if (index >= values_.size()) throw DimensionMismatchError("accumulator index out of range");
    if (!touched_flag_[index]) {
      touched_flag_[index] = 1;
      touched_.push_back(index);
      values_[index] = c;
    } else {
      values_[index] += c;
    }
    return;
  }
  auto [it, inserted] = hashed_.try_emplace(index, c);
  if (!inserted) it->second += c;
}

void Accumulator::add_scaled(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const Term& t : v.terms()) add(t.index, t.coeff * c);
}

void Accumulator::add(const SparseVec& v) {
  for (const Term& t : v.terms()) add(t.index, t.coeff);
}

SparseVec Accumulator::take() {
  std::vector<Term> out;
  if (dense_) {
    std::sort(touched_.begin(), touched_.end());
    out.reserve(touched_.size());
    for (std::size_t i : touched_) {
      if (!values_[i].is_zero()) out.push_back({i, values_[i]});
      values_[i] = Scalar::zero(field_);
      touched_flag_[i] = 0;
    }
    touched_.clear();
  } else {
    out.reserve(hashed_.size());
    for (auto& [i, c] : hashed_) {
      if (!c.is_zero()) out.push_back({i, c});
    }
    hashed_.clear();
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  }
  return SparseVec(std::move(out));
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, std::span<const SparseVec> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const Term& t : rows[r].terms()) {
      if (t.index >= cols) throw DimensionMismatchError("row entry beyond column count");
      m(r, t.index) = t.coeff;
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows, std::span<const SparseVec> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const Term& t : columns[c].terms()) {
      if (t.index >= rows) throw DimensionMismatchError("column entry beyond row count");
      m(t.index, c) = t.coeff;
    }
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatchError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

SparseVec Matrix::row(std::size_t r) const {
  return SparseVec::from_dense(std::span<const Scalar>(data_.data() + r * cols_, cols_));
}

SparseVec Matrix::column(std::size_t c) const {
  std::vector<Term> terms;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Scalar& v = (*this)(r, c);
    if (!v.is_zero()) terms.push_back({r, v});
  }
  return SparseVec(std::move(terms));
}

std::vector<SparseVec> Matrix::columns() const {
  std::vector<SparseVec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void Matrix::require_same_shape(const Matrix& other) const {
  if (!(field_ == other.field_)) throw FieldMismatchError("matrix field mismatch");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatchError("matrix shape mismatch");
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (!(field_ == other.field_)) throw FieldMismatchError("matrix field mismatch");
  if (cols_ != other.rows_) throw DimensionMismatchError("matrix product shape mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_same_shape(other);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_same_shape(other);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

SparseVec Matrix::apply(const SparseVec& v) const {
  Accumulator acc(field_, rows_);
  for (const Term& t : v.terms()) {
    if (t.index >= cols_) throw DimensionMismatchError("vector longer than matrix columns");
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, t.index);
      if (!a.is_zero()) acc.add(r, a * t.coeff);
    }
  }
  return acc.take();
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

std::size_t Matrix::rank() const { return rref_basis(*this).dim(); }

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).to_string();
    out << "]\n";
  }
  return out.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatchError("kron field mismatch");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
      }
    }
  }
  return out;
}

}  // namespace hopfcat
