#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include <gmpxx.h>

namespace slicekit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  bool is_zero() const;

  /// Columns [first, first+count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;

  /// [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;
  /// [this ; other]
  IntMatrix vconcat(const IntMatrix& other) const;

  IntVector operator*(const IntVector& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

bool is_zero(const IntVector& v);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
/// The inverses of U and V are tracked alongside.
struct SmithForm {
  IntMatrix u, u_inv;
  IntMatrix d;
  IntMatrix v, v_inv;
  std::size_t rank = 0;

  const Integer& diagonal(std::size_t i) const { return d(i, i); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis of the integer kernel {x in Z^n : A x = 0}, one vector per column.
IntMatrix integer_nullspace(const IntMatrix& a);

/// Some integer solution of A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// A sublattice of Z^n held as the row Hermite normal form of its generators:
/// echelon rows, positive pivots, entries above each pivot reduced into [0, pivot).
/// Two lattices are equal iff their bases are equal.
class IntLattice {
public:
  explicit IntLattice(std::size_t ambient_dim = 0);
  static IntLattice from_rows(std::size_t ambient_dim, const std::vector<IntVector>& gens);
  static IntLattice from_row_matrix(const IntMatrix& m);
  static IntLattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after reduction by the basis; zero iff v lies in the lattice.
  IntVector reduce(const IntVector& v) const;
  bool contains(const IntVector& v) const;
  bool contains(const IntLattice& other) const;

  /// Coordinates of v in the basis; nullopt when v is not in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  /// Adds a generator; returns true when the lattice grew.
  bool insert(const IntVector& v);

  IntLattice sum(const IntLattice& other) const;
  IntMatrix basis_matrix() const;  // rank x ambient_dim

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

private:
  void rebuild(std::vector<IntVector> gens);

  std::size_t dim_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace slicekit
