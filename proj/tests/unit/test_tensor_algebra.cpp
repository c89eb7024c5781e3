#include <doctest.h>

#include "fqg/constructors.hpp"
#include "fqg/tensor.hpp"
#include "gen.hpp"

using namespace fqg;

TEST_CASE("acting on one tensor leg matches the Kronecker product") {
  gen::Gen g(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Dims dims{1 + g.index(3), 1 + g.index(3), 1 + g.index(3)};
    const auto x = g.vector(total_dim(dims));
    const auto m = g.matrix(1 + g.index(3), dims[1]);
    const auto id0 = LinearMap<Exact>::identity(dims[0]);
    const auto id2 = LinearMap<Exact>::identity(dims[2]);
    CHECK(apply_to_factor<Exact>(dims, 1, m, x) == kron(kron(id0, m), id2).apply(x));
  }
}

TEST_CASE("tensor products of vectors and maps are associative") {
  gen::Gen g(22);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = g.vector(1 + g.index(3)), b = g.vector(1 + g.index(3)), c = g.vector(1 + g.index(3));
    CHECK(tensor_vectors<Exact>(tensor_vectors<Exact>(a, b), c) == tensor_vectors<Exact>(a, tensor_vectors<Exact>(b, c)));
    const auto p = g.matrix(2, 1 + g.index(2)), q = g.matrix(1 + g.index(2), 2), r = g.matrix(2, 2);
    CHECK(kron(kron(p, q), r) == kron(p, kron(q, r)));
    CHECK(kron(p, q).apply(tensor_vectors<Exact>(g.vector(p.cols()), g.vector(q.cols()))).size() ==
          p.rows() * q.rows());
  }
}

TEST_CASE("permuting legs moves elementary tensors") {
  gen::Gen g(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = g.vector(2), b = g.vector(3), c = g.vector(2);
    const auto abc = tensor_vectors<Exact>(tensor_vectors<Exact>(a, b), c);
    const auto cab = tensor_vectors<Exact>(tensor_vectors<Exact>(c, a), b);
    CHECK(permute_factors<Exact>({2, 3, 2}, {2, 0, 1}, abc) == cab);
    const auto ab = tensor_vectors<Exact>(a, b);
    CHECK(flip<Exact>(2, 3).apply(ab) == tensor_vectors<Exact>(b, a));
  }
  CHECK(flip<Exact>(3, 2) * flip<Exact>(2, 3) == LinearMap<Exact>::identity(6));
}

TEST_CASE("tensor products of catalog algebras are *-algebras") {
  const auto a = group_algebra<Exact>(named_group("S3")).A();
  const auto b = make_block_algebra<Exact>({1, 2}).algebra;
  const auto ab = tensor_algebra(a, b);
  CHECK(ab.dim() == a.dim() * b.dim());
  CHECK(verify_star_algebra(ab).ok());
  gen::Gen g(24);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = g.vector(ab.dim()), y = g.vector(ab.dim());
    CHECK(tensor_multiply<Exact>(a, b, x, y) == ab.multiply(x, y));
    CHECK(tensor_star<Exact>(a, b, x) == ab.star(x));
    const auto a1 = g.vector(a.dim()), a2 = g.vector(a.dim()), b1 = g.vector(b.dim()), b2 = g.vector(b.dim());
    CHECK(ab.multiply(tensor_vectors<Exact>(a1, b1), tensor_vectors<Exact>(a2, b2)) ==
          tensor_vectors<Exact>(a.multiply(a1, a2), b.multiply(b1, b2)));
  }
}

TEST_CASE("block algebras") {
  const auto m2 = make_block_algebra<Exact>({2});
  CHECK(verify_star_algebra(m2.algebra).ok());
  CHECK(verify_block_trace(m2).ok());
  CHECK_FALSE(is_commutative(m2.algebra));
  CHECK_FALSE(is_point_basis(m2.algebra));
  // e_01 e_10 = e_00 and e_01* = e_10.
  CHECK(m2.algebra.multiply(m2.algebra.basis(1), m2.algebra.basis(2)) == m2.algebra.basis(0));
  CHECK(m2.algebra.star(m2.algebra.basis(1)) == m2.algebra.basis(2));
  const auto diag = make_block_algebra<Exact>({1, 1, 1});
  CHECK(is_point_basis(diag.algebra));
  CHECK_THROWS_AS(make_block_algebra<Exact>({2, 0}), InvalidStructure);
  CHECK_THROWS_AS(make_block_algebra<Exact>({1}, {Exact(-1)}), InvalidStructure);
}

TEST_CASE("a broken involution is reported") {
  const auto a = function_algebra<Exact>(named_group("Z3")).A();
  auto star = a.star_matrix();
  star(0, 0) = 2;
  const StarAlgebra<Exact> broken(a.dim(), [&] {
    std::vector<StarAlgebra<Exact>::TermList> p;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) p.push_back(a.product(i, j));
    return p;
  }(), a.unit(), star, "broken");
  CHECK_FALSE(verify_star_algebra(broken).ok());
}
