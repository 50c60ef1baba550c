#include "hopfcat/commutator.hpp"

#include "hopfcat/errors.hpp"

namespace hopfcat {

namespace {

bool same_ambient(const HopfSubalgebra& x, const HopfSubalgebra& y) {
  const HopfPtr& a = x.ambient();
  const HopfPtr& b = y.ambient();
  if (a == b) return true;
  return a->field() == b->field() && a->dim() == b->dim() && a->mult_matrix() == b->mult_matrix() &&
         a->comult_matrix() == b->comult_matrix() && a->antipode_matrix() == b->antipode_matrix();
}

}  // namespace

SparseVec sweedler_commutator(const HopfAlgebra& h, const SparseVec& a, const SparseVec& b) {
  const std::size_t n = h.dim();
  SparseVec da = h.comul(a);
  SparseVec db = h.comul(b);
  Accumulator acc(h.field(), n);
  for (const Term& s : da.terms()) {
    const std::size_t a1 = s.index / n;
    const SparseVec& sa2 = h.antipode(s.index % n);
    for (const Term& t : db.terms()) {
      const std::size_t b1 = t.index / n;
      const SparseVec& sb2 = h.antipode(t.index % n);
      SparseVec v = h.mul(h.mul(h.product(a1, b1), sa2), sb2);
      acc.add_scaled(v, s.coeff * t.coeff);
    }
  }
  return acc.take();
}

CommuteVerdict commute_check(const HopfSubalgebra& x, const HopfSubalgebra& y) {
  if (!same_ambient(x, y)) throw DimensionMismatchError("commute_check: subalgebras of different ambients");
  const HopfAlgebra& h = *x.ambient();
  CommuteVerdict v;
  for (const SparseVec& a : x.space().rows()) {
    for (const SparseVec& b : y.space().rows()) {
      bool e = h.mul(a, b) == h.mul(b, a);
      bool s = sweedler_commutator(h, a, b) == h.one().scaled(h.counit(a) * h.counit(b));
      if (e != s) throw InvariantError("commute_check: elementwise and Sweedler criteria disagree");
      if (!e) {
        v.elementwise = v.sweedler = false;
        v.witness = std::make_pair(a, b);
        return v;
      }
    }
  }
  return v;
}

CommutatorWitness huq_commutator(const HopfSubalgebra& x, const HopfSubalgebra& y) {
  if (!same_ambient(x, y)) throw DimensionMismatchError("huq_commutator: subalgebras of different ambients");
  if (!is_normal(x) || !is_normal(y)) throw NormalityError("huq_commutator: inputs must be normal");
  const HopfPtr& a = x.ambient();
  std::vector<SparseVec> gens;
  for (const SparseVec& u : x.space().rows()) {
    for (const SparseVec& w : y.space().rows()) gens.push_back(sweedler_commutator(*a, u, w));
  }
  // Closure is taken under multiplication only; Hopf subalgebra and normality
  // are asserted afterwards.
  Subspace span = generated_subalgebra(*a, gens);
  std::string defect;
  auto closure = HopfSubalgebra::try_make(a, span, &defect);
  if (!closure) throw InvariantError("huq_commutator: generated subalgebra is not a Hopf subalgebra: " + defect);
  if (!is_normal(*closure)) throw InvariantError("huq_commutator: commutator is not normal");

  Quotient q = quotient_by_normal(*closure);
  CommuteVerdict v = commute_check(direct_image(q.proj, x), direct_image(q.proj, y));
  if (!v.elementwise) throw InvariantError("huq_commutator: images do not commute in the quotient");
  return {std::move(gens), std::move(*closure)};
}

Quotient quotient_by_normal(const HopfSubalgebra& n) {
  if (!is_normal(n)) throw NormalityError("quotient_by_normal: subalgebra is not normal");
  Quotient q = cokernel(n.inclusion());
  if (!(hkernel(q.proj).space() == n.space())) throw InvariantError("quotient_by_normal: HKer(proj) differs from N");
  return q;
}

Quotient abelianization(const HopfPtr& a) {
  HopfSubalgebra whole = HopfSubalgebra::whole(a);
  Quotient q = quotient_by_normal(huq_commutator(whole, whole).closure);
  if (!q.quotient->is_commutative()) throw InvariantError("abelianization: quotient is not commutative");
  return q;
}

}  // namespace hopfcat
