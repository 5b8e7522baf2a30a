#pragma once

// Brute-force reference computations shared by the tests. Nothing here calls
// the normal-form code it is used to check.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "slicekit/group.hpp"
#include "slicekit/integer_matrix.hpp"

namespace oracle {

using slicekit::Integer;
using slicekit::IntMatrix;
using slicekit::IntVector;

inline Integer determinant(const IntMatrix& a) {
  // Laplace expansion; only used on tiny matrices.
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = a(i, j);
    Integer term = a(0, c) * determinant(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, f);
    cur.pop_back();
  }
}

/// Determinantal divisors: gcd of all k x k minors, k = 1..min(m,n).
inline std::vector<Integer> determinantal_divisors(const IntMatrix& a) {
  std::vector<Integer> out;
  const std::size_t r = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    std::vector<std::size_t> rows, cols;
    subsets(a.rows(), k, 0, rows, [&](const std::vector<std::size_t>& rs) {
      subsets(a.cols(), k, 0, cols, [&](const std::vector<std::size_t>& cs) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rs[i], cs[j]);
        Integer d = determinant(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    out.push_back(g);
  }
  return out;
}

/// Smith diagonal from determinantal divisors: d_k = D_k / D_{k-1}.
inline std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  std::vector<Integer> dd = determinantal_divisors(a), out;
  Integer prev = 1;
  for (const auto& d : dd) {
    if (d == 0) {
      out.push_back(0);
      continue;
    }
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    u.add_row(a, b, factor(rng));
    if (s % 5 == 0) u.swap_rows(a, b);
  }
  return u;
}

/// Every integer vector of the given length with entries in [-bound, bound].
inline std::vector<IntVector> box(std::size_t n, int bound) {
  std::vector<IntVector> out{IntVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntVector> next;
    for (const auto& v : out)
      for (int x = -bound; x <= bound; ++x) {
        IntVector w = v;
        w[i] = x;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

/// All subgroups of a small group, by testing every subset of elements.
inline std::set<std::vector<int>> all_subgroups(const slicekit::PermGroup& g) {
  const int n = static_cast<int>(g.order());
  std::set<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (!(mask & 1UL)) continue;  // identity is element 0
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1UL << i)) s.push_back(i);
    bool closed = true;
    for (int a : s) {
      for (int b : s)
        if (!(mask & (1UL << g.mul(a, b)))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

}  // namespace oracle
