#include "hopfcat/subspace.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "hopfcat/errors.hpp"

namespace hopfcat {

namespace {

// Incremental Gaussian elimination on sparse rows. Rows are kept with a
// leading 1 but are only fully reduced when finish() is called.
class EchelonBuilder {
 public:
  EchelonBuilder(const FieldSpec& field, std::size_t ncols)
      : field_(field), ncols_(ncols), scratch_(ncols, Scalar::zero(field)), live_(ncols, 0), pivot_row_(ncols, -1) {}

  bool insert(const SparseVec& v) {
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
    std::vector<std::size_t> touched;
    auto load = [&](std::size_t j, const Scalar& c) {
      if (j >= ncols_) throw DimensionMismatchError("vector exceeds ambient dimension");
      if (!live_[j]) {
        live_[j] = 1;
        scratch_[j] = c;
        heap.push(j);
        touched.push_back(j);
      } else {
        scratch_[j] += c;
      }
    };
    for (const Term& t : v.terms()) load(t.index, t.coeff);

    std::vector<Term> residual;
    std::size_t last = static_cast<std::size_t>(-1);
    while (!heap.empty()) {
      std::size_t j = heap.top();
      heap.pop();
      if (j == last) continue;
      last = j;
      if (scratch_[j].is_zero()) continue;
      std::ptrdiff_t r = pivot_row_[j];
      if (r < 0) {
        residual.push_back({j, scratch_[j]});
        continue;
      }
      Scalar factor = -scratch_[j];
      for (const Term& t : rows_[static_cast<std::size_t>(r)].terms()) {
        if (t.index == j) {
          scratch_[j] = Scalar::zero(field_);
        } else {
          load(t.index, t.coeff * factor);
        }
      }
    }
    for (std::size_t j : touched) {
      live_[j] = 0;
      scratch_[j] = Scalar::zero(field_);
    }
    if (residual.empty()) return false;

    Scalar inv = residual.front().coeff.inverse();
    for (Term& t : residual) t.coeff = t.coeff * inv;
    pivot_row_[residual.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.emplace_back(std::move(residual));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Back-substitution to the reduced form, rows sorted by pivot.
  std::vector<SparseVec> finish() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rows_[a].terms().front().index < rows_[b].terms().front().index;
    });
    std::vector<SparseVec> reduced(rows_.size());
    std::vector<std::ptrdiff_t> slot(ncols_, -1);
    for (std::size_t k = order.size(); k-- > 0;) {
      const SparseVec& row = rows_[order[k]];
      std::size_t pivot = row.terms().front().index;
      Accumulator acc(field_, ncols_);
      acc.add(row);
      for (const Term& t : row.terms()) {
        if (t.index == pivot) continue;
        std::ptrdiff_t s = slot[t.index];
        if (s >= 0) acc.add_scaled(reduced[static_cast<std::size_t>(s)], -t.coeff);
      }
      reduced[k] = acc.take();
      slot[pivot] = static_cast<std::ptrdiff_t>(k);
    }
    return reduced;
  }

 private:
  FieldSpec field_;
  std::size_t ncols_;
  std::vector<Scalar> scratch_;
  std::vector<char> live_;
  std::vector<std::ptrdiff_t> pivot_row_;
  std::vector<SparseVec> rows_;
};

std::vector<SparseVec> rref_rows(const FieldSpec& field, std::size_t ncols, std::span<const SparseVec> vectors) {
  EchelonBuilder builder(field, ncols);
  for (const SparseVec& v : vectors) {
    if (builder.rank() == ncols) break;
    builder.insert(v);
  }
  return builder.finish();
}

}  // namespace

Subspace::Subspace(const FieldSpec& field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), pivot_row_(ambient_dim, -1) {}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(SparseVec::unit(field, i));
    s.pivots_.push_back(i);
    s.pivot_row_[i] = static_cast<std::ptrdiff_t>(i);
  }
  return s;
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient_dim, std::span<const SparseVec> vectors) {
  for (const SparseVec& v : vectors) {
    for (const Term& t : v.terms()) {
      if (!(t.coeff.field() == field)) throw FieldMismatchError("vector field differs from subspace field");
    }
  }
  Subspace s(field, ambient_dim);
  s.rows_ = rref_rows(field, ambient_dim, vectors);
  for (std::size_t r = 0; r < s.rows_.size(); ++r) {
    std::size_t p = s.rows_[r].terms().front().index;
    s.pivots_.push_back(p);
    s.pivot_row_[p] = static_cast<std::ptrdiff_t>(r);
  }
  return s;
}

Matrix Subspace::basis() const { return Matrix::from_rows(field_, ambient_, rows_); }

SparseVec Subspace::residue(const SparseVec& v) const {
  if (rows_.empty() || v.is_zero()) return v;
  Accumulator acc(field_, ambient_);
  acc.add(v);
  for (const Term& t : v.terms()) {
    if (t.index >= ambient_) throw DimensionMismatchError("vector exceeds ambient dimension");
    std::ptrdiff_t r = pivot_row_[t.index];
    if (r >= 0) acc.add_scaled(rows_[static_cast<std::size_t>(r)], -t.coeff);
  }
  return acc.take();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatchError("subspaces in different ambients");
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseVec& v) { return contains(v); });
}

std::vector<Scalar> Subspace::coordinates(const SparseVec& v) const {
  std::vector<Scalar> out;
  out.reserve(pivots_.size());
  for (std::size_t p : pivots_) out.push_back(v.at(field_, p));
  return out;
}

SparseVec Subspace::combination(std::span<const Scalar> coords) const {
  if (coords.size() != rows_.size()) throw DimensionMismatchError("coordinate count differs from dimension");
  Accumulator acc(field_, ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r) acc.add_scaled(rows_[r], coords[r]);
  return acc.take();
}

bool Subspace::operator==(const Subspace& other) const {
  return field_ == other.field_ && ambient_ == other.ambient_ && rows_ == other.rows_;
}

Subspace rref_basis(const Matrix& vectors) {
  std::vector<SparseVec> rows;
  rows.reserve(vectors.rows());
  for (std::size_t r = 0; r < vectors.rows(); ++r) rows.push_back(vectors.row(r));
  return Subspace::span(vectors.field(), vectors.cols(), rows);
}

Subspace kernel_of_columns(const FieldSpec& field, std::size_t rows, std::span<const SparseVec> columns) {
  const std::size_t n = columns.size();
  // Transpose into sparse rows; the kernel is the null space of the row system.
  std::vector<std::vector<Term>> bucket(rows);
  for (std::size_t c = 0; c < n; ++c) {
    for (const Term& t : columns[c].terms()) {
      if (t.index >= rows) throw DimensionMismatchError("column entry beyond row count");
      bucket[t.index].push_back({c, t.coeff});
    }
  }
  std::vector<SparseVec> system;
  system.reserve(rows);
  for (auto& b : bucket) {
    if (!b.empty()) system.emplace_back(std::move(b));
  }
  std::vector<SparseVec> reduced = rref_rows(field, n, system);

  std::vector<std::ptrdiff_t> pivot_of(n, -1);
  for (std::size_t r = 0; r < reduced.size(); ++r) pivot_of[reduced[r].terms().front().index] = static_cast<std::ptrdiff_t>(r);

  // Null space vector for each free column f: e_f - sum_r R[r][f] e_{pivot_r}.
  std::vector<std::vector<Term>> free_vecs(n);
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    std::size_t p = reduced[r].terms().front().index;
    for (const Term& t : reduced[r].terms()) {
      if (t.index != p) free_vecs[t.index].push_back({p, -t.coeff});
    }
  }
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_of[f] >= 0) continue;
    std::vector<Term>& terms = free_vecs[f];
    terms.push_back({f, Scalar::one(field)});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    basis.emplace_back(std::move(terms));
  }
  return Subspace::span(field, n, basis);
}

Subspace kernel_within(const Subspace& domain, std::span<const SparseVec> images, std::size_t image_dim) {
  if (images.size() != domain.dim()) throw DimensionMismatchError("kernel_within: one image per basis row expected");
  Subspace rel = kernel_of_columns(domain.field(), image_dim, images);
  std::vector<SparseVec> vectors;
  vectors.reserve(rel.dim());
  for (const SparseVec& k : rel.rows()) {
    Accumulator acc(domain.field(), domain.ambient_dim());
    for (const Term& t : k.terms()) acc.add_scaled(domain.rows()[t.index], t.coeff);
    vectors.push_back(acc.take());
  }
  return Subspace::span(domain.field(), domain.ambient_dim(), vectors);
}

Subspace image_of_columns(const FieldSpec& field, std::size_t rows, std::span<const SparseVec> columns) {
  return Subspace::span(field, rows, columns);
}

Subspace kernel_space(const Matrix& f) {
  std::vector<SparseVec> cols = f.columns();
  return kernel_of_columns(f.field(), f.rows(), cols);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<SparseVec> augmented;
  augmented.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Term> terms = m.row(r).terms();
    terms.push_back({n + r, Scalar::one(m.field())});
    augmented.emplace_back(std::move(terms));
  }
  Subspace s = Subspace::span(m.field(), 2 * n, augmented);
  if (s.dim() != n || (n > 0 && s.pivots().back() != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const Term& t : s.rows()[r].terms()) {
      if (t.index >= n) inv(r, t.index - n) = t.coeff;
    }
  }
  return inv;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatchError("subspace sum: ambient mismatch");
  if (!(a.field() == b.field())) throw FieldMismatchError("subspace sum: field mismatch");
  std::vector<SparseVec> all = a.rows();
  all.insert(all.end(), b.rows().begin(), b.rows().end());
  return Subspace::span(a.field(), a.ambient_dim(), all);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatchError("subspace intersection: ambient mismatch");
  if (!(a.field() == b.field())) throw FieldMismatchError("subspace intersection: field mismatch");
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0 and map the x part back.
  std::vector<SparseVec> cols = a.rows();
  for (const SparseVec& v : b.rows()) cols.push_back(-v);
  Subspace rel = kernel_of_columns(a.field(), a.ambient_dim(), cols);
  std::vector<SparseVec> vectors;
  for (const SparseVec& k : rel.rows()) {
    Accumulator acc(a.field(), a.ambient_dim());
    for (const Term& t : k.terms()) {
      if (t.index < a.dim()) acc.add_scaled(a.rows()[t.index], t.coeff);
    }
    vectors.push_back(acc.take());
  }
  return Subspace::span(a.field(), a.ambient_dim(), vectors);
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  SubspaceOps ops{subspace_sum(a, b), subspace_intersection(a, b), false, false};
  ops.contains = a.contains(b);
  ops.equals = a == b;
  return ops;
}

SparseVec project_to_quotient(const Subspace& w, const SparseVec& v) {
  SparseVec r = w.residue(v);
  std::vector<Term> out;
  out.reserve(r.nnz());
  const auto& piv = w.pivots();
  for (const Term& t : r.terms()) {
    auto below = static_cast<std::size_t>(std::lower_bound(piv.begin(), piv.end(), t.index) - piv.begin());
    out.push_back({t.index - below, t.coeff});
  }
  return SparseVec(std::move(out));
}

QuotientSplit quotient_split(std::size_t ambient_dim, const Subspace& w) {
  if (w.ambient_dim() != ambient_dim) throw DimensionMismatchError("quotient_split: ambient mismatch");
  const FieldSpec& field = w.field();
  QuotientSplit out;
  std::size_t next_pivot = 0;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (next_pivot < w.pivots().size() && w.pivots()[next_pivot] == j) {
      ++next_pivot;
    } else {
      out.coset_basis.push_back(j);
    }
  }
  const std::size_t q = out.coset_basis.size();
  std::vector<SparseVec> proj_cols;
  proj_cols.reserve(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) proj_cols.push_back(project_to_quotient(w, SparseVec::unit(field, j)));
  out.proj = Matrix::from_columns(field, q, proj_cols);
  out.section = Matrix(field, ambient_dim, q);
  for (std::size_t k = 0; k < q; ++k) out.section(out.coset_basis[k], k) = Scalar::one(field);
  return out;
}

}  // namespace hopfcat
