#include <doctest.h>

#include "fqg/error.hpp"
#include "fqg/linalg.hpp"
#include "gen.hpp"

using namespace fqg;

namespace {

// Textbook Gauss-Jordan elimination over the field, used as the rank oracle.
std::size_t oracle_rank(LinearMap<Exact> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      const Exact f = m(r, c) / m(rank, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

Exact oracle_det3(const LinearMap<Exact>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("gaussian rationals are exact and canonical") {
  const Exact third = Exact::ratio(1, 3);
  CHECK(third + third + third == Exact(1));
  CHECK(Exact::parse("2/6") == third);
  CHECK(Exact::parse("0.25", "-1/2") == Exact(mpq_class(1, 4), mpq_class(-1, 2)));
  const Exact i(0, 1);
  CHECK(i * i == Exact(-1));
  CHECK((Exact(3, 4) / Exact(3, 4)) == Exact(1));
  CHECK(Exact(2, 5).conj() == Exact(2, -5));
  CHECK_THROWS_AS(Exact::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Exact::parse("abc"), ParseError);
}

TEST_CASE("field axioms hold on random gaussian rationals") {
  gen::Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Exact a = g.scalar(), b = g.scalar(), c = g.scalar();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("approximate scalars compare within the tolerance") {
  const double saved = Approx::tolerance();
  Approx::set_tolerance(1e-6);
  CHECK(Approx(1.0, 0.0) == Approx(1.0 + 1e-8, 0.0));
  CHECK_FALSE(Approx(1.0, 0.0) == Approx(1.0 + 1e-4, 0.0));
  CHECK(Approx(1e-8, -1e-8).is_zero());
  Approx::set_tolerance(saved);
}

TEST_CASE("rank on fixed examples") {
  LinearMap<Exact> zero(3, 4);
  CHECK(rank(zero) == 0);
  CHECK(rank(LinearMap<Exact>::identity(5)) == 5);
  LinearMap<Exact> dependent(3, 3);
  const long rows[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) dependent(r, c) = rows[r][c];
  CHECK(rank(dependent) == 2);
  CHECK(determinant(dependent) == Exact(0));
  // Columns (1, i) and (i, -1) are proportional over ℂ but not over ℚ.
  LinearMap<Exact> complex_dependent(2, 2);
  complex_dependent(0, 0) = 1;
  complex_dependent(1, 0) = Exact(0, 1);
  complex_dependent(0, 1) = Exact(0, 1);
  complex_dependent(1, 1) = -1;
  CHECK(rank(complex_dependent) == 1);
}

TEST_CASE("rank agrees with elimination on random matrices of known rank") {
  gen::Gen g(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + g.index(6), cols = 1 + g.index(6);
    const std::size_t r = g.index(std::min(rows, cols) + 1);
    const auto m = g.matrix_of_rank(rows, cols, r);
    CHECK(oracle_rank(m) == r);
    CHECK(rank(m) == r);
    CHECK(rank(m.transpose()) == r);
  }
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = g.matrix(1 + g.index(7), 1 + g.index(7));
    CHECK(rank(m) == oracle_rank(m));
  }
}

TEST_CASE("nullspace, inverse and determinant are consistent") {
  gen::Gen g(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + g.index(5);
    const auto m = g.matrix_of_rank(n, n + 1, g.index(n + 1));
    const auto kernel = nullspace(m);
    CHECK(kernel.size() == m.cols() - rank(m));
    for (const auto& v : kernel) CHECK(is_zero_vector<Exact>(m.apply(v)));
    CHECK(rank_of_span(kernel) == kernel.size());
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = g.matrix(3, 3);
    const Exact det = determinant(m);
    CHECK(det == oracle_det3(m));
    const auto inv = inverse(m);
    CHECK(inv.has_value() == !det.is_zero());
    if (inv) {
      CHECK(*inv * m == LinearMap<Exact>::identity(3));
      CHECK(determinant(*inv) * det == Exact(1));
    }
    const auto other = g.matrix(3, 3);
    CHECK(determinant(m * other) == det * determinant(other));
  }
}

TEST_CASE("positive definiteness by leading minors") {
  gen::Gen g(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = g.matrix_of_rank(4, 4, 4);
    const auto gram = x.conjugate().transpose() * x;
    CHECK(is_hermitian(gram));
    CHECK(is_positive_definite(gram));
    const auto singular = g.matrix_of_rank(4, 4, 3);
    CHECK_FALSE(is_positive_definite(singular.conjugate().transpose() * singular));
  }
  LinearMap<Exact> indefinite = LinearMap<Exact>::identity(2);
  indefinite(1, 1) = -1;
  CHECK_FALSE(is_positive_definite(indefinite));
}
