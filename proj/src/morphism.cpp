#include "hopfcat/morphism.hpp"

#include "hopfcat/errors.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

HopfMorphism::HopfMorphism(HopfPtr source, HopfPtr target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) throw MalformedInputError("morphism needs a source and a target");
  if (!(source_->field() == target_->field())) {
    throw FieldMismatchError("morphism between algebras over " + source_->field().to_string() + " and " +
                             target_->field().to_string());
  }
  if (!(map_.field() == source_->field())) throw FieldMismatchError("morphism matrix over the wrong field");
  if (map_.rows() != target_->dim() || map_.cols() != source_->dim()) {
    throw DimensionMismatchError("morphism matrix is " + std::to_string(map_.rows()) + "x" +
                                 std::to_string(map_.cols()) + ", expected " + std::to_string(target_->dim()) + "x" +
                                 std::to_string(source_->dim()));
  }
  cols_ = map_.columns();
}

HopfMorphism HopfMorphism::identity(const HopfPtr& a) {
  return HopfMorphism(a, a, Matrix::identity(a->field(), a->dim()));
}

HopfMorphism HopfMorphism::zero(const HopfPtr& source, const HopfPtr& target) {
  Matrix m(source->field(), target->dim(), source->dim());
  for (std::size_t j = 0; j < source->dim(); ++j) {
    const Scalar& e = source->counit(j);
    if (e.is_zero()) continue;
    for (const Term& t : target->one().terms()) m(t.index, j) = t.coeff * e;
  }
  return HopfMorphism(source, target, std::move(m));
}

SparseVec HopfMorphism::apply(const SparseVec& v) const {
  Accumulator acc(target_->field(), target_->dim());
  for (const Term& t : v.terms()) acc.add_scaled(cols_[t.index], t.coeff);
  return acc.take();
}

std::size_t HopfMorphism::rank() const { return image().dim(); }

Subspace HopfMorphism::image() const { return image_of_columns(target_->field(), target_->dim(), cols_); }

Subspace HopfMorphism::linear_kernel() const { return kernel_of_columns(source_->field(), target_->dim(), cols_); }

bool HopfMorphism::operator==(const HopfMorphism& other) const {
  return source_->dim() == other.source_->dim() && target_->dim() == other.target_->dim() && map_ == other.map_;
}

HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f) {
  if (f.target()->dim() != g.source()->dim()) {
    throw DimensionMismatchError("cannot compose: target of f has dim " + std::to_string(f.target()->dim()) +
                                 ", source of g has dim " + std::to_string(g.source()->dim()));
  }
  return HopfMorphism(f.source(), g.target(), g.matrix() * f.matrix());
}

AxiomReport check_morphism(const HopfMorphism& f) {
  const HopfAlgebra& a = *f.source();
  const HopfAlgebra& b = *f.target();
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  AxiomReport report;
  {
    AxiomCheck c{"multiplicative"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        if (!(f.apply(a.product(i, j)) == b.mul(f.image_of_basis(i), f.image_of_basis(j)))) {
          c.passed = false;
          c.witness = {i, j};
        }
      }
    }
    report.add(c);
  }
  report.add({"unit", f.apply(a.one()) == b.one(), {}, {}});
  {
    AxiomCheck c{"comultiplicative"};
    auto leg = [&](std::size_t i) -> const SparseVec& { return f.image_of_basis(i); };
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      SparseVec lhs = b.comul(f.image_of_basis(i));
      SparseVec half = map_left_leg(a.coproduct(i), n, m, a.field(), leg);
      SparseVec rhs = map_right_leg(half, n, m, a.field(), m, leg);
      if (!(lhs == rhs)) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"counit"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      if (!(b.counit(f.image_of_basis(i)) == a.counit(i))) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  {
    AxiomCheck c{"antipode"};
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      if (!(f.apply(a.antipode(i)) == b.antipode(f.image_of_basis(i)))) {
        c.passed = false;
        c.witness = {i};
      }
    }
    report.add(c);
  }
  return report;
}

}  // namespace hopfcat
