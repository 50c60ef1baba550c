#ifndef HOPFCAT_GROUP_HPP
#define HOPFCAT_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopfcat {

/// A finite group given by its Cayley table over elements 0..n-1.
class FiniteGroupTable {
 public:
  /// Validates the table (Latin square, associativity, identity, inverses);
  /// throws InvalidGroupError otherwise.
  explicit FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::string name = {});

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t element_order(std::size_t a) const;
  std::size_t conjugate(std::size_t g, std::size_t x) const { return mul(mul(g, x), inverse(g)); }
  std::size_t commutator(std::size_t a, std::size_t b) const;
  bool is_abelian() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::string name_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Subsets of a group are sorted vectors of element indices.
using ElementSet = std::vector<std::size_t>;

ElementSet generated_subgroup(const FiniteGroupTable& g, const ElementSet& generators);
bool is_subgroup(const FiniteGroupTable& g, const ElementSet& h);
bool is_normal_subgroup(const FiniteGroupTable& g, const ElementSet& h);
/// All subgroups, sorted by size then lexicographically.
std::vector<ElementSet> subgroups(const FiniteGroupTable& g);
std::vector<ElementSet> normal_subgroups(const FiniteGroupTable& g);
/// [N, M], generated by n m n⁻¹ m⁻¹.
ElementSet commutator_subgroup(const FiniteGroupTable& g, const ElementSet& n, const ElementSet& m);
/// A small generating set, greedily chosen.
ElementSet generators_of(const FiniteGroupTable& g);

/// A map of element indices, images[i] = f(i).
using GroupMap = std::vector<std::size_t>;

bool is_homomorphism(const FiniteGroupTable& src, const FiniteGroupTable& tgt, const GroupMap& f);
/// Every homomorphism src → tgt, found by assigning images to generators.
std::vector<GroupMap> homomorphisms(const FiniteGroupTable& src, const FiniteGroupTable& tgt);
ElementSet hom_kernel(const FiniteGroupTable& src, const FiniteGroupTable& tgt, const GroupMap& f);
ElementSet hom_image(const FiniteGroupTable& tgt, const GroupMap& f);
std::optional<GroupMap> find_group_isomorphism(const FiniteGroupTable& a, const FiniteGroupTable& b);

/// G/N with cosets ordered by their least element; coset_of[g] is the index
/// of gN.
FiniteGroupTable quotient_group(const FiniteGroupTable& g, const ElementSet& n, GroupMap* coset_of = nullptr);
/// G×H, element (g, h) at index g*|H| + h.
FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h);
/// N⋊H for an action given as automorphisms act[h][n] = ^h n; element (n, h)
/// at index n*|H| + h, with (n,h)(n',h') = (n·^h n', hh').
FiniteGroupTable semidirect_product(const FiniteGroupTable& n, const FiniteGroupTable& h,
                                    const std::vector<GroupMap>& act);

/// Built-in groups: C1 C2 C3 C4 C5 C6 C2xC2 S3 D4 Q8.
const FiniteGroupTable& catalog_group(const std::string& name);
const std::vector<std::string>& catalog_names();

/// Cyclic group of order n, generator 1.
FiniteGroupTable cyclic_group(std::size_t n);

}  // namespace hopfcat

#endif  // HOPFCAT_GROUP_HPP
