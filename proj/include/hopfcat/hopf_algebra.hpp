#ifndef HOPFCAT_HOPF_ALGEBRA_HPP
#define HOPFCAT_HOPF_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hopfcat/matrix.hpp"

namespace hopfcat {

/// One named axiom and, on failure, the basis tuple that breaks it.
struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  bool passed(const std::string& name) const;
  const AxiomCheck* find(const std::string& name) const;
  const AxiomCheck* first_failure() const;
  void add(AxiomCheck check) { checks.push_back(std::move(check)); }
  void merge(const AxiomReport& other, const std::string& prefix = {});
  std::string to_string() const;
};

/// Structure constants of a finite-dimensional Hopf algebra over the fixed
/// basis e_0..e_{n-1}, held column-sparse.
///
///   product(i, j)   = e_i e_j                 (vector in A)
///   coproduct(k)    = Δ(e_k)                  (vector in A⊗A, index i*n + j)
///   counit(k)       = ε(e_k)
///   antipode(k)     = S(e_k)
///
/// The class validates shapes only; the axioms are checked by
/// check_hopf_axioms.
class HopfAlgebra {
 public:
  struct Columns {
    std::vector<SparseVec> mult;      // n*n entries, (i, j) -> e_i e_j
    SparseVec unit;                   // 1_A
    std::vector<SparseVec> comult;    // n entries over n*n
    std::vector<Scalar> counit;       // n entries
    std::vector<SparseVec> antipode;  // n entries
  };

  HopfAlgebra(const FieldSpec& field, std::size_t dim, Columns columns, std::string name = {});
  /// Dense form: mult n x n², unit n x 1, comult n² x n, counit 1 x n, antipode n x n.
  HopfAlgebra(const FieldSpec& field, std::size_t dim, const Matrix& mult, const Matrix& unit, const Matrix& comult,
              const Matrix& counit, const Matrix& antipode, std::string name = {});

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  const Columns& columns() const noexcept { return cols_; }

  Matrix mult_matrix() const;
  Matrix unit_matrix() const;
  Matrix comult_matrix() const;
  Matrix counit_matrix() const;
  Matrix antipode_matrix() const;

  const SparseVec& product(std::size_t i, std::size_t j) const { return cols_.mult[i * dim_ + j]; }
  const SparseVec& coproduct(std::size_t k) const { return cols_.comult[k]; }
  const Scalar& counit(std::size_t k) const { return cols_.counit[k]; }
  const SparseVec& antipode(std::size_t k) const { return cols_.antipode[k]; }

  SparseVec basis(std::size_t i) const { return SparseVec::unit(field_, i); }
  const SparseVec& one() const noexcept { return cols_.unit; }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  SparseVec comul(const SparseVec& a) const;
  SparseVec antipode(const SparseVec& a) const;
  Scalar counit(const SparseVec& a) const;

  bool is_commutative() const;
  bool is_cocommutative() const;

  std::shared_ptr<const HopfAlgebra> renamed(std::string name) const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  Columns cols_;
  std::string name_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

template <class... Args>
HopfPtr make_hopf(Args&&... args) {
  return std::make_shared<const HopfAlgebra>(std::forward<Args>(args)...);
}

/// Checks associativity, unit, coassociativity, counit, the bialgebra
/// compatibilities, the antipode and cocommutativity on basis tuples.
AxiomReport check_hopf_axioms(const HopfAlgebra& h);

/// Throws AxiomError unless h is a cocommutative Hopf algebra.
void require_cocommutative(const HopfAlgebra& h, const char* context);

/// Applies f to the left or right leg of a vector in U⊗V.
template <class F>
SparseVec map_left_leg(const SparseVec& v, std::size_t dim_right, std::size_t dim_out_left, const FieldSpec& field,
                       F&& f) {
  Accumulator acc(field, dim_out_left * dim_right);
  for (const Term& t : v.terms()) {
    std::size_t i = t.index / dim_right;
    std::size_t j = t.index % dim_right;
    for (const Term& x : f(i).terms()) acc.add(x.index * dim_right + j, x.coeff * t.coeff);
  }
  return acc.take();
}

template <class F>
SparseVec map_right_leg(const SparseVec& v, std::size_t dim_right, std::size_t dim_out_right, const FieldSpec& field,
                        std::size_t dim_left, F&& f) {
  Accumulator acc(field, dim_left * dim_out_right);
  for (const Term& t : v.terms()) {
    std::size_t i = t.index / dim_right;
    std::size_t j = t.index % dim_right;
    for (const Term& x : f(j).terms()) acc.add(i * dim_out_right + x.index, x.coeff * t.coeff);
  }
  return acc.take();
}

/// The tensor swap σ on U⊗V, landing in V⊗U.
SparseVec swap_legs(const SparseVec& v, std::size_t dim_left, std::size_t dim_right);

}  // namespace hopfcat

#endif  // HOPFCAT_HOPF_ALGEBRA_HPP
