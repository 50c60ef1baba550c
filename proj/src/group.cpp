#include "hopfcat/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "hopfcat/errors.hpp"

namespace hopfcat {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidGroupError("empty group table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw InvalidGroupError("table row " + std::to_string(a) + " has the wrong length");
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = table_[a][b];
      if (c >= n) throw InvalidGroupError("table entry out of range");
      if (seen[c]) throw InvalidGroupError("row " + std::to_string(a) + " repeats an element");
      seen[c] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[table_[a][b]]) throw InvalidGroupError("column " + std::to_string(b) + " repeats an element");
      seen[table_[a][b]] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InvalidGroupError("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
        }
      }
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidGroupError("no identity element");
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) inverse_[a] = b;
    }
  }
}

std::size_t FiniteGroupTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroupTable::commutator(std::size_t a, std::size_t b) const {
  return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

ElementSet generated_subgroup(const FiniteGroupTable& g, const ElementSet& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t s : generators) {
      std::size_t x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroupTable& g, const ElementSet& h) {
  if (h.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (std::size_t x : h) in[x] = 1;
  if (!in[g.identity()]) return false;
  for (std::size_t a : h) {
    for (std::size_t b : h) {
      if (!in[g.mul(a, g.inverse(b))]) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroupTable& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) return false;
  std::vector<char> in(g.order(), 0);
  for (std::size_t x : h) in[x] = 1;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t x : h) {
      if (!in[g.conjugate(a, x)]) return false;
    }
  }
  return true;
}

std::vector<ElementSet> subgroups(const FiniteGroupTable& g) {
  std::set<ElementSet> found;
  found.insert(ElementSet{g.identity()});
  std::vector<ElementSet> frontier{ElementSet{g.identity()}};
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const ElementSet& h : frontier) {
      for (std::size_t a = 0; a < g.order(); ++a) {
        if (std::binary_search(h.begin(), h.end(), a)) continue;
        ElementSet gens = h;
        gens.push_back(a);
        ElementSet k = generated_subgroup(g, gens);
        if (found.insert(k).second) next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroupTable& g) {
  std::vector<ElementSet> out;
  for (ElementSet& h : subgroups(g)) {
    if (is_normal_subgroup(g, h)) out.push_back(std::move(h));
  }
  return out;
}

ElementSet commutator_subgroup(const FiniteGroupTable& g, const ElementSet& n, const ElementSet& m) {
  ElementSet gens;
  for (std::size_t a : n) {
    for (std::size_t b : m) gens.push_back(g.commutator(a, b));
  }
  return generated_subgroup(g, gens);
}

ElementSet generators_of(const FiniteGroupTable& g) {
  ElementSet gens;
  ElementSet span{g.identity()};
  // Prefer elements of large order so cyclic groups get a single generator.
  std::vector<std::size_t> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return g.element_order(a) > g.element_order(b); });
  for (std::size_t a : by_order) {
    if (span.size() == g.order()) break;
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

bool is_homomorphism(const FiniteGroupTable& src, const FiniteGroupTable& tgt, const GroupMap& f) {
  if (f.size() != src.order()) return false;
  for (std::size_t x : f) {
    if (x >= tgt.order()) return false;
  }
  for (std::size_t a = 0; a < src.order(); ++a) {
    for (std::size_t b = 0; b < src.order(); ++b) {
      if (f[src.mul(a, b)] != tgt.mul(f[a], f[b])) return false;
    }
  }
  return true;
}

namespace {

// Extends an assignment on generators along words; nullopt when the
// assignment is inconsistent.
std::optional<GroupMap> extend(const FiniteGroupTable& src, const FiniteGroupTable& tgt, const ElementSet& gens,
                               const std::vector<std::size_t>& images) {
  const std::size_t none = src.order() + tgt.order();
  GroupMap f(src.order(), none);
  f[src.identity()] = tgt.identity();
  std::vector<std::size_t> queue{src.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t y = src.mul(x, gens[k]);
      std::size_t fy = tgt.mul(f[x], images[k]);
      if (f[y] == none) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (!is_homomorphism(src, tgt, f)) return std::nullopt;
  return f;
}

}  // namespace

std::vector<GroupMap> homomorphisms(const FiniteGroupTable& src, const FiniteGroupTable& tgt) {
  ElementSet gens = generators_of(src);
  std::vector<GroupMap> out;
  std::vector<std::size_t> images(gens.size(), 0);
  while (true) {
    bool orders_ok = true;
    for (std::size_t k = 0; k < gens.size() && orders_ok; ++k) {
      orders_ok = src.element_order(gens[k]) % tgt.element_order(images[k]) == 0;
    }
    if (orders_ok) {
      if (auto f = extend(src, tgt, gens, images)) out.push_back(std::move(*f));
    }
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == tgt.order()) images[k++] = 0;
    if (k == images.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet hom_kernel(const FiniteGroupTable& src, const FiniteGroupTable& tgt, const GroupMap& f) {
  ElementSet k;
  for (std::size_t a = 0; a < src.order(); ++a) {
    if (f[a] == tgt.identity()) k.push_back(a);
  }
  return k;
}

ElementSet hom_image(const FiniteGroupTable& tgt, const GroupMap& f) {
  std::vector<char> in(tgt.order(), 0);
  for (std::size_t x : f) in[x] = 1;
  ElementSet out;
  for (std::size_t x = 0; x < tgt.order(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

std::optional<GroupMap> find_group_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  ElementSet gens = generators_of(a);
  std::vector<std::size_t> images(gens.size(), 0);
  while (true) {
    bool orders_ok = true;
    for (std::size_t k = 0; k < gens.size() && orders_ok; ++k) {
      orders_ok = a.element_order(gens[k]) == b.element_order(images[k]);
    }
    if (orders_ok) {
      if (auto f = extend(a, b, gens, images)) {
        if (hom_image(b, *f).size() == b.order()) return f;
      }
    }
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == b.order()) images[k++] = 0;
    if (k == images.size()) break;
  }
  return std::nullopt;
}

FiniteGroupTable quotient_group(const FiniteGroupTable& g, const ElementSet& n, GroupMap* coset_of) {
  if (!is_normal_subgroup(g, n)) throw InvalidGroupError("quotient by a non-normal subgroup");
  const std::size_t none = g.order();
  GroupMap coset(g.order(), none);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset[a] != none) continue;
    for (std::size_t x : n) coset[g.mul(a, x)] = reps.size();
    reps.push_back(a);
  }
  std::vector<std::vector<std::size_t>> table(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) table[i][j] = coset[g.mul(reps[i], reps[j])];
  }
  if (coset_of) *coset_of = coset;
  return FiniteGroupTable(std::move(table), g.name() + "/N");
}

FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  }
  return FiniteGroupTable(std::move(table), g.name() + "x" + h.name());
}

FiniteGroupTable semidirect_product(const FiniteGroupTable& n, const FiniteGroupTable& h,
                                    const std::vector<GroupMap>& act) {
  if (act.size() != h.order()) throw InvalidGroupError("semidirect product: one automorphism per element expected");
  for (const GroupMap& phi : act) {
    if (!is_homomorphism(n, n, phi) || hom_image(n, phi).size() != n.order()) {
      throw InvalidGroupError("semidirect product: action is not by automorphisms");
    }
  }
  const std::size_t m = h.order();
  const std::size_t size = n.order() * m;
  std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      std::size_t x = n.mul(a / m, act[a % m][b / m]);
      table[a][b] = x * m + h.mul(a % m, b % m);
    }
  }
  return FiniteGroupTable(std::move(table), n.name() + "x|" + h.name());
}

FiniteGroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroupTable(std::move(table), "C" + std::to_string(n));
}

namespace {

using Perm = std::array<std::size_t, 3>;

FiniteGroupTable make_s3() {
  // e, (12), (13), (23), (123), (132) acting on {0,1,2}
  const std::vector<Perm> perms{Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0},
                                Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroupTable(std::move(table), "S3");
}

FiniteGroupTable make_d4() {
  // r^k s^e at index k + 4e, with s r = r^{-1} s
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      std::size_t k1 = a % 4, e1 = a / 4, k2 = b % 4, e2 = b / 4;
      std::size_t k = e1 ? (k1 + 4 - k2) % 4 : (k1 + k2) % 4;
      table[a][b] = k + 4 * ((e1 + e2) % 2);
    }
  }
  return FiniteGroupTable(std::move(table), "D4");
}

FiniteGroupTable make_q8() {
  // Quaternion units 1, i, j, k, -1, -i, -j, -k at indices 0..7.
  const int unit_mul[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const int* r = unit_mul[a % 4][b % 4];
      int sign = r[1] * (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1);
      table[a][b] = static_cast<std::size_t>(r[0]) + (sign < 0 ? 4 : 0);
    }
  }
  return FiniteGroupTable(std::move(table), "Q8");
}

const std::map<std::string, FiniteGroupTable>& catalog() {
  static const std::map<std::string, FiniteGroupTable> groups = [] {
    std::map<std::string, FiniteGroupTable> m;
    for (std::size_t n : {1, 2, 3, 4, 5, 6}) m.emplace("C" + std::to_string(n), cyclic_group(n));
    FiniteGroupTable v = direct_product(cyclic_group(2), cyclic_group(2));
    m.emplace("C2xC2", FiniteGroupTable(v.table(), "C2xC2"));
    m.emplace("S3", make_s3());
    m.emplace("D4", make_d4());
    m.emplace("Q8", make_q8());
    return m;
  }();
  return groups;
}

}  // namespace

const FiniteGroupTable& catalog_group(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw UnknownGroupError("unknown group '" + name + "'");
  return it->second;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "S3", "D4", "Q8"};
  return names;
}

}  // namespace hopfcat
