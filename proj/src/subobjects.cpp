#include "hopfcat/subobjects.hpp"

#include <algorithm>

namespace hopfcat {

namespace detail {

namespace {

std::vector<std::ptrdiff_t> pivot_positions(const Subspace& s) {
  std::vector<std::ptrdiff_t> pos(s.ambient_dim(), -1);
  for (std::size_t q = 0; q < s.pivots().size(); ++q) pos[s.pivots()[q]] = static_cast<std::ptrdiff_t>(q);
  return pos;
}

}  // namespace

std::optional<SparseVec> coordinates_in(const Subspace& s, const SparseVec& v) {
  if (!s.contains(v)) return std::nullopt;
  std::vector<Scalar> c = s.coordinates(v);
  return SparseVec::from_dense(c);
}

std::optional<SparseVec> tensor_coordinates(const Subspace& s, const SparseVec& v) {
  const std::size_t n = s.ambient_dim();
  const std::size_t d = s.dim();
  std::vector<std::ptrdiff_t> pos = pivot_positions(s);
  std::vector<Term> coords;
  for (const Term& t : v.terms()) {
    std::ptrdiff_t q = pos[t.index / n];
    std::ptrdiff_t r = pos[t.index % n];
    if (q >= 0 && r >= 0) coords.push_back({static_cast<std::size_t>(q) * d + static_cast<std::size_t>(r), t.coeff});
  }
  std::sort(coords.begin(), coords.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVec c(std::move(coords));
  Accumulator acc(s.field(), n * n);
  for (const Term& t : c.terms()) {
    const SparseVec& left = s.rows()[t.index / d];
    const SparseVec& right = s.rows()[t.index % d];
    for (const Term& x : left.terms()) {
      Scalar xc = x.coeff * t.coeff;
      for (const Term& y : right.terms()) acc.add(x.index * n + y.index, xc * y.coeff);
    }
  }
  if (!(acc.take() == v)) return std::nullopt;
  return c;
}

}  // namespace detail

std::optional<HopfSubalgebra> HopfSubalgebra::try_make(const HopfPtr& ambient, const Subspace& space,
                                                       std::string* defect) {
  if (space.ambient_dim() != ambient->dim()) throw DimensionMismatchError("subalgebra: ambient dimension mismatch");
  HopfPtr alg = try_restrict(*ambient, space, {}, defect);
  if (!alg) return std::nullopt;
  return HopfSubalgebra(ambient, space, alg);
}

HopfSubalgebra HopfSubalgebra::make(const HopfPtr& ambient, const Subspace& space, std::string name) {
  if (space.ambient_dim() != ambient->dim()) throw DimensionMismatchError("subalgebra: ambient dimension mismatch");
  HopfPtr alg = restrict_structure(*ambient, space, std::move(name));
  return HopfSubalgebra(ambient, space, alg);
}

HopfSubalgebra HopfSubalgebra::whole(const HopfPtr& ambient) {
  return make(ambient, Subspace::full(ambient->field(), ambient->dim()), ambient->name());
}

HopfSubalgebra HopfSubalgebra::trivial(const HopfPtr& ambient) {
  const SparseVec& one = ambient->one();
  return make(ambient, Subspace::span(ambient->field(), ambient->dim(), std::span<const SparseVec>(&one, 1)), "K");
}

HopfMorphism HopfSubalgebra::inclusion() const {
  return HopfMorphism(algebra_, ambient_, Matrix::from_columns(ambient_->field(), ambient_->dim(), space_.rows()));
}

std::optional<LeftIdealCoideal> LeftIdealCoideal::try_make(const HopfPtr& ambient, const Subspace& space,
                                                           std::string* defect) {
  auto fail = [&](std::string why) -> std::optional<LeftIdealCoideal> {
    if (defect) *defect = std::move(why);
    return std::nullopt;
  };
  const HopfAlgebra& a = *ambient;
  if (space.ambient_dim() != a.dim()) throw DimensionMismatchError("ideal: ambient dimension mismatch");
  for (const SparseVec& x : space.rows()) {
    if (!a.counit(x).is_zero()) return fail("counit does not vanish");
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (const SparseVec& x : space.rows()) {
      if (!space.contains(a.mul(a.basis(i), x))) return fail("not a left ideal");
    }
  }
  if (!is_two_sided_coideal(a, space)) return fail("not a two-sided coideal");
  return LeftIdealCoideal(ambient, space);
}

LeftIdealCoideal LeftIdealCoideal::make(const HopfPtr& ambient, const Subspace& space) {
  std::string defect;
  auto r = try_make(ambient, space, &defect);
  if (!r) throw InvariantError("subspace is not a left ideal two-sided coideal: " + defect);
  return *r;
}

Subspace plus_part(const HopfAlgebra& h) {
  std::vector<SparseVec> cols;
  cols.reserve(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    cols.push_back(h.counit(k).is_zero() ? SparseVec() : SparseVec({Term{0, h.counit(k)}}));
  }
  return kernel_of_columns(h.field(), 1, cols);
}

Subspace plus_part(const HopfSubalgebra& d) {
  const HopfAlgebra& a = *d.ambient();
  std::vector<SparseVec> vectors;
  for (const SparseVec& b : d.space().rows()) vectors.push_back(b - a.one().scaled(a.counit(b)));
  return Subspace::span(a.field(), a.dim(), vectors);
}

bool is_two_sided_coideal(const HopfAlgebra& h, const Subspace& space) {
  const std::size_t n = h.dim();
  const std::size_t q = n - space.dim();
  std::vector<SparseVec> proj;
  proj.reserve(n);
  for (std::size_t i = 0; i < n; ++i) proj.push_back(project_to_quotient(space, h.basis(i)));
  auto leg = [&](std::size_t i) -> const SparseVec& { return proj[i]; };
  for (const SparseVec& x : space.rows()) {
    SparseVec half = map_left_leg(h.comul(x), n, q, h.field(), leg);
    if (!map_right_leg(half, n, q, h.field(), q, leg).is_zero()) return false;
  }
  return true;
}

Subspace largest_subcoalgebra_in(const HopfAlgebra& h, const Subspace& w) {
  const std::size_t n = h.dim();
  if (w.ambient_dim() != n) throw DimensionMismatchError("largest_subcoalgebra_in: ambient mismatch");
  Subspace current = w;
  for (std::size_t round = 0; round <= n; ++round) {
    const std::size_t q = n - current.dim();
    if (q == 0 || current.is_zero()) return current;
    std::vector<SparseVec> proj;
    proj.reserve(n);
    for (std::size_t i = 0; i < n; ++i) proj.push_back(project_to_quotient(current, h.basis(i)));
    auto leg = [&](std::size_t i) -> const SparseVec& { return proj[i]; };
    // Stack (π⊗id)Δx and (id⊗π)Δx into one vector of length 2·q·n.
    std::vector<SparseVec> images;
    images.reserve(current.dim());
    for (const SparseVec& x : current.rows()) {
      SparseVec dx = h.comul(x);
      SparseVec left = map_left_leg(dx, n, q, h.field(), leg);
      SparseVec right = map_right_leg(dx, n, q, h.field(), n, leg);
      std::vector<Term> terms = left.terms();
      for (const Term& t : right.terms()) terms.push_back({q * n + t.index, t.coeff});
      images.emplace_back(std::move(terms));
    }
    Subspace next = kernel_within(current, images, 2 * q * n);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
  return current;
}

Subspace generated_subalgebra(const HopfAlgebra& h, std::span<const SparseVec> generators) {
  std::vector<SparseVec> start(generators.begin(), generators.end());
  start.push_back(h.one());
  Subspace current = Subspace::span(h.field(), h.dim(), start);
  while (true) {
    std::vector<SparseVec> vectors = current.rows();
    for (const SparseVec& x : current.rows()) {
      for (const SparseVec& y : current.rows()) vectors.push_back(h.mul(x, y));
    }
    Subspace next = Subspace::span(h.field(), h.dim(), vectors);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace two_sided_ideal(const HopfAlgebra& h, const Subspace& generators) {
  Subspace current = generators;
  while (true) {
    std::vector<SparseVec> vectors = current.rows();
    for (std::size_t i = 0; i < h.dim(); ++i) {
      SparseVec e = h.basis(i);
      for (const SparseVec& x : current.rows()) {
        vectors.push_back(h.mul(e, x));
        vectors.push_back(h.mul(x, e));
      }
    }
    Subspace next = Subspace::span(h.field(), h.dim(), vectors);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace map_subspace(const HopfMorphism& f, const Subspace& s) {
  std::vector<SparseVec> vectors;
  vectors.reserve(s.dim());
  for (const SparseVec& x : s.rows()) vectors.push_back(f.apply(x));
  return Subspace::span(f.target()->field(), f.target()->dim(), vectors);
}

}  // namespace hopfcat
