#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fqg {

using GroupTable = std::vector<std::vector<std::size_t>>;
/// A permutation of element indices, p[i] = image of i.
using Permutation = std::vector<std::size_t>;

/// Finite group given by its multiplication table over element indices.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity, associativity, inverses).
  /// Throws InvalidStructure.
  static FiniteGroup from_table(GroupTable table, std::string name = {});

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long k) const;
  std::size_t element_order(std::size_t a) const { return orders_[a]; }
  /// Least common multiple of all element orders.
  std::size_t exponent() const;
  bool is_abelian() const;
  bool is_cyclic() const;
  const GroupTable& table() const { return table_; }
  const std::string& name() const { return name_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  FiniteGroup() = default;

  GroupTable table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> orders_;
  std::string name_;
};

FiniteGroup group_from_table(GroupTable table, std::string name = {});

/// Catalog names: Zn (also Cn, cyclic(n)), Sn for n ≤ 4 (symmetric(n)), Dn
/// of order 2n (dihedral(n)), Q8 (quaternion8), K4 (klein4), trivial, and
/// products written AxB. Throws ParseError on unknown names.
FiniteGroup named_group(const std::string& name);

/// The names used by the built-in test catalog.
const std::vector<std::string>& catalog_group_names();

}  // namespace fqg
