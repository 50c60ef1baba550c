#include "hopfcat/action.hpp"

#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

ModuleAction::ModuleAction(HopfPtr acting, HopfPtr carrier, Matrix xi)
    : acting_(std::move(acting)), carrier_(std::move(carrier)), xi_(std::move(xi)) {
  if (!(acting_->field() == carrier_->field()) || !(xi_.field() == carrier_->field())) {
    throw FieldMismatchError("action: field mismatch");
  }
  if (xi_.rows() != carrier_->dim() || xi_.cols() != acting_->dim() * carrier_->dim()) {
    throw DimensionMismatchError("action matrix must be dim(X) x dim(B)*dim(X)");
  }
  cols_ = xi_.columns();
}

ModuleAction ModuleAction::trivial(const HopfPtr& acting, const HopfPtr& carrier) {
  const std::size_t nx = carrier->dim();
  Matrix xi(carrier->field(), nx, acting->dim() * nx);
  for (std::size_t b = 0; b < acting->dim(); ++b) {
    for (std::size_t x = 0; x < nx; ++x) xi(x, b * nx + x) = acting->counit(b);
  }
  return ModuleAction(acting, carrier, std::move(xi));
}

SparseVec ModuleAction::act(const SparseVec& b, const SparseVec& x) const {
  Accumulator acc(carrier_->field(), carrier_->dim());
  for (const Term& s : b.terms()) {
    for (const Term& t : x.terms()) acc.add_scaled(act(s.index, t.index), s.coeff * t.coeff);
  }
  return acc.take();
}

SparseVec ModuleAction::apply(const SparseVec& bx) const {
  Accumulator acc(carrier_->field(), carrier_->dim());
  for (const Term& t : bx.terms()) acc.add_scaled(cols_[t.index], t.coeff);
  return acc.take();
}

AxiomReport check_action_axioms(const ModuleAction& a) {
  const HopfAlgebra& b = *a.acting();
  const HopfAlgebra& x = *a.carrier();
  const std::size_t nb = b.dim();
  const std::size_t nx = x.dim();
  AxiomReport report;

  {
    AxiomCheck c{"action-associative"};
    for (std::size_t i = 0; i < nb && c.passed; ++i) {
      for (std::size_t j = 0; j < nb && c.passed; ++j) {
        for (std::size_t k = 0; k < nx && c.passed; ++k) {
          if (!(a.act(b.product(i, j), x.basis(k)) == a.act(b.basis(i), a.act(j, k)))) {
            c.passed = false;
            c.witness = {i, j, k};
          }
        }
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"action-unit"};
    for (std::size_t k = 0; k < nx && c.passed; ++k) {
      if (!(a.act(b.one(), x.basis(k)) == x.basis(k))) {
        c.passed = false;
        c.witness = {k};
      }
    }
    report.add(c);
  }
  {
    // ^b(xy) = ^{b1}x ^{b2}y
    AxiomCheck c{"action-multiplicative"};
    for (std::size_t i = 0; i < nb && c.passed; ++i) {
      for (std::size_t k = 0; k < nx && c.passed; ++k) {
        for (std::size_t l = 0; l < nx && c.passed; ++l) {
          Accumulator rhs(x.field(), nx);
          for (const Term& t : b.coproduct(i).terms()) {
            rhs.add_scaled(x.mul(a.act(t.index / nb, k), a.act(t.index % nb, l)), t.coeff);
          }
          if (!(a.act(b.basis(i), x.product(k, l)) == rhs.take())) {
            c.passed = false;
            c.witness = {i, k, l};
          }
        }
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"action-unit-preserving"};
    for (std::size_t i = 0; i < nb && c.passed; ++i) {
      if (!(a.act(b.basis(i), x.one()) == x.one().scaled(b.counit(i)))) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  {
    // Δ(^b x) = ^{b1}x1 ⊗ ^{b2}x2
    AxiomCheck c{"action-comultiplicative"};
    for (std::size_t i = 0; i < nb && c.passed; ++i) {
      for (std::size_t k = 0; k < nx && c.passed; ++k) {
        Accumulator rhs(x.field(), nx * nx);
        for (const Term& s : b.coproduct(i).terms()) {
          for (const Term& t : x.coproduct(k).terms()) {
            const SparseVec& left = a.act(s.index / nb, t.index / nx);
            const SparseVec& right = a.act(s.index % nb, t.index % nx);
            Scalar st = s.coeff * t.coeff;
            for (const Term& l : left.terms()) {
              for (const Term& r : right.terms()) rhs.add(l.index * nx + r.index, st * l.coeff * r.coeff);
            }
          }
        }
        if (!(x.comul(a.act(i, k)) == rhs.take())) {
          c.passed = false;
          c.witness = {i, k};
        }
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"action-counit"};
    for (std::size_t i = 0; i < nb && c.passed; ++i) {
      for (std::size_t k = 0; k < nx && c.passed; ++k) {
        if (!(x.counit(a.act(i, k)) == b.counit(i) * x.counit(k))) {
          c.passed = false;
          c.witness = {i, k};
        }
      }
    }
    report.add(c);
  }
  return report;
}

}  // namespace hopfcat
