#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "slicekit/integer_matrix.hpp"

using namespace slicekit;

namespace {

void check_smith(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.u * s.u_inv == IntMatrix::identity(a.rows()));
  CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
  const std::vector<Integer> expect = oracle::smith_diagonal(a);
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(s.diagonal(i) >= 0);
    CHECK(s.diagonal(i) == expect[i]);
    if (i + 1 < expect.size() && s.diagonal(i) != 0) CHECK(s.diagonal(i + 1) % s.diagonal(i) == 0);
  }
}

}  // namespace

TEST_CASE("smith form of [[2]]") {
  SmithForm s = smith_normal_form(IntMatrix{{2}});
  CHECK(s.d == IntMatrix{{2}});
  CHECK(s.rank == 1);
}

TEST_CASE("smith form of [[1,2],[3,4]] is diag(1,2)") {
  IntMatrix a{{1, 2}, {3, 4}};
  SmithForm s = smith_normal_form(a);
  CHECK(s.d == IntMatrix{{1, 0}, {0, 2}});
  // det = -2 and the entries have gcd 1
  CHECK(oracle::determinant(a) == -2);
  check_smith(a);
}

TEST_CASE("smith form of a zero matrix is zero") {
  SmithForm s = smith_normal_form(IntMatrix(2, 3));
  CHECK(s.d.is_zero());
  CHECK(s.rank == 0);
}

TEST_CASE("smith form agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    check_smith(oracle::random_matrix(rng, rows, cols, trial % 2 ? 9 : 3));
  }
}

TEST_CASE("smith form handles entries beyond 64 bits") {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("98765432109876543210");
  a(1, 0) = Integer("-55555555555555555555555");
  a(1, 1) = 7;
  check_smith(a);
}

TEST_CASE("integer nullspace is the full kernel lattice") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t cols = 3;
    IntMatrix a = oracle::random_matrix(rng, 1 + trial % 2, cols, 4);
    IntMatrix n = integer_nullspace(a);
    CHECK((a * n).is_zero());
    // every small kernel vector lies in the lattice spanned by the columns
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < n.cols(); ++j) gens.push_back(n.column(j));
    IntLattice span = IntLattice::from_rows(cols, gens);
    CHECK(span.rank() == n.cols());
    for (const auto& v : oracle::box(cols, 3))
      if (is_zero(a * v)) CHECK(span.contains(v));
  }
}

TEST_CASE("integer nullspace of (1 2) is spanned by (-2,1)") {
  IntMatrix n = integer_nullspace(IntMatrix{{1, 2}});
  REQUIRE(n.cols() == 1);
  IntVector v = n.column(0);
  CHECK(((v[0] == -2 && v[1] == 1) || (v[0] == 2 && v[1] == -1)));
}

TEST_CASE("solve_integer finds solutions exactly when they exist") {
  IntMatrix a{{2, 4}, {0, 3}};
  auto x = solve_integer(a, IntVector{Integer(6), Integer(3)});
  REQUIRE(x);
  CHECK(a * *x == IntVector{Integer(6), Integer(3)});
  CHECK_FALSE(solve_integer(a, IntVector{Integer(1), Integer(0)}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = oracle::random_matrix(rng, 2, 3, 5);
    IntVector b = m * IntVector{Integer(trial % 3), Integer(-1), Integer(2)};
    auto y = solve_integer(m, b);
    REQUIRE(y);
    CHECK(m * *y == b);
  }
}

TEST_CASE("lattices are canonical") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix gens = oracle::random_matrix(rng, 3, 3, 6);
    IntMatrix mixed = oracle::random_unimodular(rng, 3) * gens;
    CHECK(IntLattice::from_row_matrix(gens) == IntLattice::from_row_matrix(mixed));
  }
  IntLattice a = IntLattice::from_rows(2, {IntVector{Integer(2), Integer(0)}, IntVector{Integer(0), Integer(3)}});
  CHECK(a.contains(IntVector{Integer(4), Integer(-3)}));
  CHECK_FALSE(a.contains(IntVector{Integer(1), Integer(0)}));
  IntLattice b = a;
  CHECK_FALSE(b.insert(IntVector{Integer(2), Integer(3)}));
  CHECK(b.insert(IntVector{Integer(1), Integer(0)}));
  CHECK(b.contains(a));
  CHECK_FALSE(a.contains(b));
  auto c = a.coordinates(IntVector{Integer(6), Integer(9)});
  REQUIRE(c);
  CHECK(a.basis_matrix().transpose() * *c == IntVector{Integer(6), Integer(9)});
}
