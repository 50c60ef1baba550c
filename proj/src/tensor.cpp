#include "hopfcat/tensor.hpp"

#include "hopfcat/errors.hpp"

namespace hopfcat {

TensorOps::TensorOps(const HopfAlgebra& a, const HopfAlgebra& b) : a_(a), b_(b) {
  if (!(a.field() == b.field())) throw FieldMismatchError("tensor product of algebras over different fields");
}

SparseVec TensorOps::mul(const SparseVec& u, const SparseVec& v) const {
  const std::size_t nb = b_.dim();
  Accumulator acc(field(), dim());
  for (const Term& x : u.terms()) {
    for (const Term& y : v.terms()) {
      const SparseVec& left = a_.product(x.index / nb, y.index / nb);
      const SparseVec& right = b_.product(x.index % nb, y.index % nb);
      Scalar c = x.coeff * y.coeff;
      for (const Term& l : left.terms()) {
        Scalar lc = l.coeff * c;
        for (const Term& r : right.terms()) acc.add(l.index * nb + r.index, lc * r.coeff);
      }
    }
  }
  return acc.take();
}

SparseVec TensorOps::comul(const SparseVec& u) const {
  const std::size_t na = a_.dim();
  const std::size_t nb = b_.dim();
  const std::size_t n = dim();
  Accumulator acc(field(), n * n);
  for (const Term& x : u.terms()) {
    const SparseVec& da = a_.coproduct(x.index / nb);
    const SparseVec& db = b_.coproduct(x.index % nb);
    for (const Term& s : da.terms()) {
      std::size_t a1 = s.index / na;
      std::size_t a2 = s.index % na;
      Scalar sc = s.coeff * x.coeff;
      for (const Term& t : db.terms()) {
        std::size_t b1 = t.index / nb;
        std::size_t b2 = t.index % nb;
        acc.add((a1 * nb + b1) * n + (a2 * nb + b2), sc * t.coeff);
      }
    }
  }
  return acc.take();
}

SparseVec TensorOps::antipode(const SparseVec& u) const {
  const std::size_t nb = b_.dim();
  Accumulator acc(field(), dim());
  for (const Term& x : u.terms()) {
    const SparseVec& sa = a_.antipode(x.index / nb);
    const SparseVec& sb = b_.antipode(x.index % nb);
    for (const Term& l : sa.terms()) {
      for (const Term& r : sb.terms()) acc.add(l.index * nb + r.index, x.coeff * l.coeff * r.coeff);
    }
  }
  return acc.take();
}

Scalar TensorOps::counit(const SparseVec& u) const {
  const std::size_t nb = b_.dim();
  Scalar s = Scalar::zero(field());
  for (const Term& x : u.terms()) s += x.coeff * a_.counit(x.index / nb) * b_.counit(x.index % nb);
  return s;
}

SparseVec TensorOps::one() const { return tensor(a_.one(), b_.one(), b_.dim()); }

TensorProduct tensor_product(const HopfPtr& a, const HopfPtr& b) {
  TensorOps ops(*a, *b);
  const std::size_t n = ops.dim();
  const std::size_t nb = b->dim();
  HopfAlgebra::Columns cols;
  cols.mult.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec ei = SparseVec::unit(a->field(), i);
    for (std::size_t j = 0; j < n; ++j) cols.mult.push_back(ops.mul(ei, SparseVec::unit(a->field(), j)));
  }
  cols.unit = ops.one();
  for (std::size_t k = 0; k < n; ++k) {
    SparseVec ek = SparseVec::unit(a->field(), k);
    cols.comult.push_back(ops.comul(ek));
    cols.counit.push_back(ops.counit(ek));
    cols.antipode.push_back(ops.antipode(ek));
  }
  HopfPtr t = make_hopf(a->field(), n, std::move(cols), a->name() + "⊗" + b->name());
  Matrix p1(a->field(), a->dim(), n);
  Matrix p2(a->field(), nb, n);
  for (std::size_t k = 0; k < n; ++k) {
    p1(k / nb, k) = b->counit(k % nb);
    p2(k % nb, k) = a->counit(k / nb);
  }
  return {t, HopfMorphism(t, a, std::move(p1)), HopfMorphism(t, b, std::move(p2))};
}

HopfMorphism pairing(const HopfMorphism& f, const HopfMorphism& g, const HopfPtr& product) {
  if (!(f.source() == g.source()) && f.source()->dim() != g.source()->dim()) {
    throw DimensionMismatchError("pairing needs a common source");
  }
  const HopfAlgebra& t = *f.source();
  const std::size_t na = f.target()->dim();
  const std::size_t nb = g.target()->dim();
  if (product->dim() != na * nb) throw DimensionMismatchError("pairing: product has the wrong dimension");
  std::vector<SparseVec> cols;
  const std::size_t n = t.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Accumulator acc(t.field(), na * nb);
    for (const Term& s : t.coproduct(k).terms()) {
      const SparseVec& l = f.image_of_basis(s.index / n);
      const SparseVec& r = g.image_of_basis(s.index % n);
      for (const Term& x : l.terms()) {
        for (const Term& y : r.terms()) acc.add(x.index * nb + y.index, s.coeff * x.coeff * y.coeff);
      }
    }
    cols.push_back(acc.take());
  }
  return HopfMorphism(f.source(), product, Matrix::from_columns(t.field(), na * nb, cols));
}

HopfPtr dual_fd(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const FieldSpec& k = h.field();
  HopfAlgebra::Columns cols;
  // (e^i e^j)(e_k) = coefficient of e_i⊗e_j in Δ(e_k)
  std::vector<Accumulator> mult;
  mult.reserve(n * n);
  for (std::size_t p = 0; p < n * n; ++p) mult.emplace_back(k, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const Term& t : h.coproduct(c).terms()) mult[t.index].add(c, t.coeff);
  }
  for (Accumulator& acc : mult) cols.mult.push_back(acc.take());
  std::vector<Scalar> unit;
  for (std::size_t c = 0; c < n; ++c) unit.push_back(h.counit(c));
  cols.unit = SparseVec::from_dense(unit);
  // Δ*(e^k) = Σ_{i,j} (e_i e_j)[k] e^i⊗e^j
  std::vector<Accumulator> comult;
  for (std::size_t c = 0; c < n; ++c) comult.emplace_back(k, n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    for (const Term& t : h.columns().mult[p].terms()) comult[t.index].add(p, t.coeff);
  }
  for (Accumulator& acc : comult) cols.comult.push_back(acc.take());
  for (std::size_t c = 0; c < n; ++c) {
    const Scalar* u = h.one().find(c);
    cols.counit.push_back(u ? *u : Scalar::zero(k));
  }
  std::vector<Accumulator> anti;
  for (std::size_t c = 0; c < n; ++c) anti.emplace_back(k, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const Term& t : h.antipode(c).terms()) anti[t.index].add(c, t.coeff);
  }
  for (Accumulator& acc : anti) cols.antipode.push_back(acc.take());
  return make_hopf(k, n, std::move(cols), h.name() + "*");
}

}  // namespace hopfcat
