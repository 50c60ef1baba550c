#include "hopfcat/hopf_algebra.hpp"

#include <sstream>

#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

bool AxiomReport::ok() const {
  for (const AxiomCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const AxiomCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool AxiomReport::passed(const std::string& name) const {
  const AxiomCheck* c = find(name);
  return c != nullptr && c->passed;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const AxiomCheck& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

void AxiomReport::merge(const AxiomReport& other, const std::string& prefix) {
  for (AxiomCheck c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (const AxiomCheck& c : checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed && !c.witness.empty()) {
      out << " witness=(";
      for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? "," : "") << c.witness[i];
      out << ')';
    }
    if (!c.passed && !c.detail.empty()) out << " " << c.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

void check_vector(const SparseVec& v, std::size_t bound, const FieldSpec& field, const char* what) {
  for (const Term& t : v.terms()) {
    if (t.index >= bound) throw MalformedInputError(std::string(what) + ": index out of range");
    if (!(t.coeff.field() == field)) throw MalformedInputError(std::string(what) + ": coefficient in wrong field");
  }
}

HopfAlgebra::Columns columns_from_dense(const FieldSpec& field, std::size_t n, const Matrix& mult, const Matrix& unit,
                                        const Matrix& comult, const Matrix& counit, const Matrix& antipode) {
  auto require = [&](const Matrix& m, std::size_t r, std::size_t c, const char* what) {
    if (!(m.field() == field)) throw MalformedInputError(std::string(what) + ": field mismatch");
    if (m.rows() != r || m.cols() != c) {
      throw MalformedInputError(std::string(what) + ": expected " + std::to_string(r) + "x" + std::to_string(c) +
                                ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
  };
  require(mult, n, n * n, "mult");
  require(unit, n, 1, "unit");
  require(comult, n * n, n, "comult");
  require(counit, 1, n, "counit");
  require(antipode, n, n, "antipode");
  HopfAlgebra::Columns cols;
  cols.mult = mult.columns();
  cols.unit = unit.column(0);
  cols.comult = comult.columns();
  for (std::size_t k = 0; k < n; ++k) cols.counit.push_back(counit(0, k));
  cols.antipode = antipode.columns();
  return cols;
}

}  // namespace

HopfAlgebra::HopfAlgebra(const FieldSpec& field, std::size_t dim, Columns columns, std::string name)
    : field_(field), dim_(dim), cols_(std::move(columns)), name_(std::move(name)) {
  if (dim_ == 0) throw MalformedInputError("a Hopf algebra has dimension at least 1");
  if (cols_.mult.size() != dim_ * dim_) throw MalformedInputError("mult: expected dim² columns");
  if (cols_.comult.size() != dim_) throw MalformedInputError("comult: expected dim columns");
  if (cols_.counit.size() != dim_) throw MalformedInputError("counit: expected dim entries");
  if (cols_.antipode.size() != dim_) throw MalformedInputError("antipode: expected dim columns");
  for (const SparseVec& v : cols_.mult) check_vector(v, dim_, field_, "mult");
  check_vector(cols_.unit, dim_, field_, "unit");
  for (const SparseVec& v : cols_.comult) check_vector(v, dim_ * dim_, field_, "comult");
  for (const Scalar& s : cols_.counit) {
    if (!(s.field() == field_)) throw MalformedInputError("counit: coefficient in wrong field");
  }
  for (const SparseVec& v : cols_.antipode) check_vector(v, dim_, field_, "antipode");
}

HopfAlgebra::HopfAlgebra(const FieldSpec& field, std::size_t dim, const Matrix& mult, const Matrix& unit,
                         const Matrix& comult, const Matrix& counit, const Matrix& antipode, std::string name)
    : HopfAlgebra(field, dim, columns_from_dense(field, dim, mult, unit, comult, counit, antipode), std::move(name)) {}

Matrix HopfAlgebra::mult_matrix() const { return Matrix::from_columns(field_, dim_, cols_.mult); }

Matrix HopfAlgebra::unit_matrix() const {
  SparseVec u = cols_.unit;
  return Matrix::from_columns(field_, dim_, std::span<const SparseVec>(&u, 1));
}

Matrix HopfAlgebra::comult_matrix() const { return Matrix::from_columns(field_, dim_ * dim_, cols_.comult); }

Matrix HopfAlgebra::counit_matrix() const {
  Matrix m(field_, 1, dim_);
  for (std::size_t k = 0; k < dim_; ++k) m(0, k) = cols_.counit[k];
  return m;
}

Matrix HopfAlgebra::antipode_matrix() const { return Matrix::from_columns(field_, dim_, cols_.antipode); }

SparseVec HopfAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(field_, dim_);
  for (const Term& x : a.terms()) {
    for (const Term& y : b.terms()) acc.add_scaled(product(x.index, y.index), x.coeff * y.coeff);
  }
  return acc.take();
}

SparseVec HopfAlgebra::comul(const SparseVec& a) const {
  Accumulator acc(field_, dim_ * dim_);
  for (const Term& x : a.terms()) acc.add_scaled(coproduct(x.index), x.coeff);
  return acc.take();
}

SparseVec HopfAlgebra::antipode(const SparseVec& a) const {
  Accumulator acc(field_, dim_);
  for (const Term& x : a.terms()) acc.add_scaled(antipode(x.index), x.coeff);
  return acc.take();
}

Scalar HopfAlgebra::counit(const SparseVec& a) const {
  Scalar s = Scalar::zero(field_);
  for (const Term& x : a.terms()) s += counit(x.index) * x.coeff;
  return s;
}

bool HopfAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!(product(i, j) == product(j, i))) return false;
    }
  }
  return true;
}

bool HopfAlgebra::is_cocommutative() const {
  for (std::size_t k = 0; k < dim_; ++k) {
    if (!(swap_legs(coproduct(k), dim_, dim_) == coproduct(k))) return false;
  }
  return true;
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::renamed(std::string name) const {
  return make_hopf(field_, dim_, cols_, std::move(name));
}

SparseVec swap_legs(const SparseVec& v, std::size_t dim_left, std::size_t dim_right) {
  Accumulator acc(v.is_zero() ? FieldSpec() : v.terms().front().coeff.field(), dim_left * dim_right);
  for (const Term& t : v.terms()) acc.add((t.index % dim_right) * dim_left + t.index / dim_right, t.coeff);
  return acc.take();
}

AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const FieldSpec& k = h.field();
  const SparseVec& one = h.one();
  AxiomReport report;

  auto left_comul = [&](const SparseVec& v) {
    return map_left_leg(v, n, n * n, k, [&](std::size_t i) -> const SparseVec& { return h.coproduct(i); });
  };
  auto right_comul = [&](const SparseVec& v) {
    return map_right_leg(v, n, n * n, k, n, [&](std::size_t j) -> const SparseVec& { return h.coproduct(j); });
  };

  {
    AxiomCheck c{"associativity"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        for (std::size_t l = 0; l < n && c.passed; ++l) {
          if (!(h.mul(h.product(i, j), h.basis(l)) == h.mul(h.basis(i), h.product(j, l)))) {
            c.passed = false;
            c.witness = {i, j, l};
          }
        }
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"unit"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      SparseVec e = h.basis(i);
      if (!(h.mul(one, e) == e) || !(h.mul(e, one) == e)) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"coassociativity"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      if (!(left_comul(h.coproduct(i)) == right_comul(h.coproduct(i)))) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"counit"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      Accumulator left(k, n);
      Accumulator right(k, n);
      for (const Term& t : h.coproduct(i).terms()) {
        left.add(t.index / n, t.coeff * h.counit(t.index % n));
        right.add(t.index % n, t.coeff * h.counit(t.index / n));
      }
      SparseVec e = h.basis(i);
      if (!(left.take() == e) || !(right.take() == e)) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  TensorOps square(h, h);
  {
    AxiomCheck c{"comult-multiplicative"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        if (!(h.comul(h.product(i, j)) == square.mul(h.coproduct(i), h.coproduct(j)))) {
          c.passed = false;
          c.witness = {i, j};
        }
      }
    }
    report.add(c);
  }
  report.add({"comult-unit", h.comul(one) == tensor(one, one, n), {}, {}});
  {
    AxiomCheck c{"counit-multiplicative"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        if (!(h.counit(h.product(i, j)) == h.counit(i) * h.counit(j))) {
          c.passed = false;
          c.witness = {i, j};
        }
      }
    }
    report.add(c);
  }
  report.add({"counit-unit", h.counit(one).is_one(), {}, {}});
  {
    AxiomCheck c{"antipode"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      Accumulator left(k, n);
      Accumulator right(k, n);
      for (const Term& t : h.coproduct(i).terms()) {
        std::size_t a = t.index / n;
        std::size_t b = t.index % n;
        left.add_scaled(h.mul(h.antipode(a), h.basis(b)), t.coeff);
        right.add_scaled(h.mul(h.basis(a), h.antipode(b)), t.coeff);
      }
      SparseVec expected = one.scaled(h.counit(i));
      if (!(left.take() == expected) || !(right.take() == expected)) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"cocommutativity"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      if (!(swap_legs(h.coproduct(i), n, n) == h.coproduct(i))) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  return report;
}

void require_cocommutative(const HopfAlgebra& h, const char* context) {
  if (!h.is_cocommutative()) {
    throw AxiomError(std::string(context) + ": '" + h.name() + "' is not cocommutative");
  }
}

}  // namespace hopfcat
