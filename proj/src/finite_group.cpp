#include "fqg/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>

#include "fqg/error.hpp"

namespace fqg {

FiniteGroup FiniteGroup::from_table(GroupTable table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidStructure("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidStructure("group table is not square");
    for (auto v : row)
      if (v >= n) throw InvalidStructure("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_seen[table[a][b]] || col_seen[table[b][a]]) {
        throw InvalidStructure("group table is not a Latin square (row/column " + std::to_string(a) + ")");
      }
      row_seen[table[a][b]] = col_seen[table[b][a]] = true;
    }
  }
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e == n) throw InvalidStructure("group table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InvalidStructure("group table is not associative at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ", " + std::to_string(c) + ")");
        }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = e;
  g.name_ = std::move(name);
  g.inverse_.resize(n);
  g.orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] == e) g.inverse_[a] = b;
    std::size_t k = 1, x = a;
    while (x != e) {
      x = g.table_[x][a];
      ++k;
    }
    g.orders_[a] = k;
  }
  return g;
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
  std::size_t base = k < 0 ? inverse_[a] : a;
  unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k) % orders_[a];
  std::size_t out = identity_;
  while (m-- > 0) out = table_[out][base];
  return out;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t l = 1;
  for (auto o : orders_) l = std::lcm(l, o);
  return l;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  return std::find(orders_.begin(), orders_.end(), order()) != orders_.end();
}

FiniteGroup group_from_table(GroupTable table, std::string name) {
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

namespace {

GroupTable cyclic_table(std::size_t n) {
  GroupTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Permutations of {0..n-1} in lexicographic order; (σ·τ)(i) = σ(τ(i)).
GroupTable symmetric_table(std::size_t n) {
  std::vector<Permutation> perms;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  GroupTable t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Permutation c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

// r^k s^f at index f*n + k, with s r s = r^-1.
GroupTable dihedral_table(std::size_t n) {
  GroupTable t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t k = f == 0 ? (a + b) % n : (a + n - b) % n;
          t[f * n + a][g * n + b] = ((f + g) % 2) * n + k;
        }
  return t;
}

// ±1, ±i, ±j, ±k at index 4*sign + unit.
GroupTable quaternion_table() {
  // unit products: [a][b] = {sign, unit} for 1, i, j, k
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  GroupTable t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
      t[a][b] = 4 * s + unit[a % 4][b % 4];
    }
  return t;
}

GroupTable direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t m = a.order(), n = b.order();
  GroupTable t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t x = 0; x < m * n; ++x)
    for (std::size_t y = 0; y < m * n; ++y) t[x][y] = a.mul(x / n, y / n) * n + b.mul(x % n, y % n);
  return t;
}

std::size_t parse_size(const std::string& s, const std::string& name) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("unknown group name '" + name + "'");
  const std::size_t v = std::stoul(s);
  if (v == 0) throw ParseError("group parameter must be positive in '" + name + "'");
  return v;
}

FiniteGroup named_factor(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  std::smatch m;
  static const std::regex call(R"(([a-z]+)\((\d+)\))");
  static const std::regex short_form(R"(([a-z])(\d+))");
  std::string family, param;
  if (std::regex_match(lower, m, call) || std::regex_match(lower, m, short_form)) {
    family = m[1];
    param = m[2];
  }
  if (lower == "trivial") return FiniteGroup::from_table(cyclic_table(1), "trivial");
  if (lower == "q8" || lower == "quaternion8") return FiniteGroup::from_table(quaternion_table(), "Q8");
  if (lower == "k4" || lower == "klein4" || lower == "v4") {
    auto z2 = FiniteGroup::from_table(cyclic_table(2));
    return FiniteGroup::from_table(direct_product(z2, z2), "K4");
  }
  if (family == "z" || family == "c" || family == "cyclic") {
    const auto n = parse_size(param, name);
    return FiniteGroup::from_table(cyclic_table(n), "Z" + std::to_string(n));
  }
  if (family == "s" || family == "symmetric") {
    const auto n = parse_size(param, name);
    if (n > 4) throw ParseError("symmetric groups are supported up to n = 4, got '" + name + "'");
    return FiniteGroup::from_table(symmetric_table(n), "S" + std::to_string(n));
  }
  if (family == "d" || family == "dihedral") {
    const auto n = parse_size(param, name);
    return FiniteGroup::from_table(dihedral_table(n), "D" + std::to_string(n));
  }
  throw ParseError("unknown group name '" + raw + "'");
}

}  // namespace

FiniteGroup named_group(const std::string& name) {
  std::vector<std::string> factors;
  std::string current;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == 'x' || name[i] == 'X') {
      factors.push_back(current);
      current.clear();
    } else if (name.compare(i, 2, "×") == 0) {
      factors.push_back(current);
      current.clear();
      ++i;
    } else {
      current += name[i];
    }
  }
  factors.push_back(current);
  FiniteGroup g = named_factor(factors[0]);
  std::string label = g.name();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const FiniteGroup h = named_factor(factors[k]);
    label += "x" + h.name();
    g = FiniteGroup::from_table(direct_product(g, h), label);
  }
  if (g.order() > 64) throw ParseError("group '" + name + "' exceeds the supported order 64");
  return g;
}

const std::vector<std::string>& catalog_group_names() {
  static const std::vector<std::string> names = {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8",
                                                 "K4", "S3", "S4", "D4", "Q8"};
  return names;
}

}  // namespace fqg
