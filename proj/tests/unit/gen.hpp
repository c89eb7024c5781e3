#pragma once

#include <random>
#include <string>
#include <vector>

#include "fqg/linear_map.hpp"

namespace gen {

using fqg::Exact;

/// Deterministic source of small random exact data.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q + i r/s with small numerators and denominators; zero about a third of the time.
  Exact scalar() {
    if (integer(0, 2) == 0) return Exact(0);
    const mpq_class re(integer(-4, 4), integer(1, 3));
    const mpq_class im = coin() ? mpq_class(integer(-4, 4), integer(1, 3)) : mpq_class(0);
    return Exact(re, im);
  }

  fqg::Element<Exact> vector(std::size_t n) {
    fqg::Element<Exact> v(n);
    for (auto& x : v) x = scalar();
    return v;
  }

  fqg::LinearMap<Exact> matrix(std::size_t rows, std::size_t cols) {
    fqg::LinearMap<Exact> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
    return m;
  }

  /// A matrix of the given rank: unitriangular factors of full column and row rank.
  fqg::LinearMap<Exact> matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t rank) {
    fqg::LinearMap<Exact> left(rows, rank), right(rank, cols);
    for (std::size_t k = 0; k < rank; ++k) {
      for (std::size_t r = k + 1; r < rows; ++r) left(r, k) = scalar();
      for (std::size_t c = k + 1; c < cols; ++c) right(k, c) = scalar();
      left(k, k) = Exact(1);
      right(k, k) = Exact(1);
    }
    return left * right;
  }

  const std::string& small_group() {
    static const std::vector<std::string> names{"Z2", "Z3", "Z4", "K4", "S3", "Z5", "Z6"};
    return names[index(names.size())];
  }

 private:
  std::mt19937 rng_;
};

}  // namespace gen
