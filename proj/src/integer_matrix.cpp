#include "slicekit/integer_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace slicekit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  assert(first + count <= cols_);
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  assert(first + count <= rows_);
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& other) const {
  if (cols_ != other.cols_) throw std::invalid_argument("vconcat: column count mismatch");
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = other(i, j);
  return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

namespace {

// Applies elementary operations to A while keeping U, U^-1, V, V^-1 in sync.
struct SmithWork {
  IntMatrix a, u, u_inv, v, v_inv;

  void row_add(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    a.add_row(dst, src, f);
    u.add_row(dst, src, f);
    u_inv.add_col(src, dst, -f);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    a.add_col(dst, src, f);
    v.add_col(dst, src, f);
    v_inv.add_row(src, dst, -f);
  }
  void row_swap(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
    u_inv.swap_cols(x, y);
  }
  void col_swap(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
    v_inv.swap_rows(x, y);
  }
  void row_negate(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
              IntMatrix::identity(n)};
  IntMatrix& a = w.a;

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        w.row_add(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        w.col_add(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        w.row_swap(t, bi);
        w.col_swap(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            w.row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) w.row_negate(t);
    ++t;
  }

  SmithForm out;
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.d = std::move(w.a);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  out.rank = t;
  return out;
}

IntMatrix integer_nullspace(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  return s.v.column_block(s.rank, a.cols() - s.rank);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
  SmithForm s = smith_normal_form(a);
  IntVector c = s.u * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.diagonal(i) != 0) return std::nullopt;
      y[i] = c[i] / s.diagonal(i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

// --- IntLattice -------------------------------------------------------------

IntLattice::IntLattice(std::size_t ambient_dim) : dim_(ambient_dim) {}

IntLattice IntLattice::from_rows(std::size_t ambient_dim, const std::vector<IntVector>& gens) {
  IntLattice l(ambient_dim);
  for (const auto& g : gens)
    if (g.size() != ambient_dim) throw std::invalid_argument("lattice generator length mismatch");
  l.rebuild(gens);
  return l;
}

IntLattice IntLattice::from_row_matrix(const IntMatrix& m) {
  std::vector<IntVector> gens;
  gens.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) gens.push_back(m.row(i));
  return from_rows(m.cols(), gens);
}

IntLattice IntLattice::full(std::size_t ambient_dim) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    IntVector e(ambient_dim);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return from_rows(ambient_dim, gens);
}

void IntLattice::rebuild(std::vector<IntVector> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const IntVector& r) { return is_zero(r); }),
             rows.end());
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < dim_ && r < rows.size(); ++c) {
    // Euclid down column c over rows r..end.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < dim_; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = c; j < dim_; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      for (std::size_t j = c; j < dim_; ++j) rows[i][j] -= q * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  basis_ = std::move(rows);
  pivots_ = std::move(pivots);
}

IntVector IntLattice::reduce(const IntVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice reduce: length mismatch");
  IntVector out = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (out[p] == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), out[p].get_mpz_t(), basis_[k][p].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = p; j < dim_; ++j) out[j] -= q * basis_[k][j];
  }
  return out;
}

bool IntLattice::contains(const IntVector& v) const { return is_zero(reduce(v)); }

bool IntLattice::contains(const IntLattice& other) const {
  if (other.dim_ != dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const IntVector& b) { return contains(b); });
}

std::optional<IntVector> IntLattice::coordinates(const IntVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice coordinates: length mismatch");
  IntVector rest = v;
  IntVector coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (rest[p] % basis_[k][p] != 0) return std::nullopt;
    coords[k] = rest[p] / basis_[k][p];
    if (coords[k] == 0) continue;
    for (std::size_t j = p; j < dim_; ++j) rest[j] -= coords[k] * basis_[k][j];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool IntLattice::insert(const IntVector& v) {
  if (contains(v)) return false;
  std::vector<IntVector> rows = basis_;
  rows.push_back(v);
  rebuild(std::move(rows));
  return true;
}

IntLattice IntLattice::sum(const IntLattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("lattice sum: dimension mismatch");
  std::vector<IntVector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  IntLattice out(dim_);
  out.rebuild(std::move(rows));
  return out;
}

IntMatrix IntLattice::basis_matrix() const { return IntMatrix::from_rows(dim_, basis_); }

}  // namespace slicekit
