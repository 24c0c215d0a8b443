#pragma once

#include "toricq/integer.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toricq {

/// Integer lattice vector of fixed rank.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t rank) : coords_(rank) {}
  explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
  }

  static IntVector unit(std::size_t rank, std::size_t i) {
    IntVector v(rank);
    v[i] = 1;
    return v;
  }

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coords_) g = gcd(g, c);
    return g;
  }

  /// Divides out the content; the zero vector is returned unchanged.
  IntVector primitive() const {
    Integer g = content();
    if (g <= 1) return *this;
    IntVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = coords_[i] / g;
    return r;
  }

  IntVector operator-() const {
    IntVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = -coords_[i];
    return r;
  }
  IntVector& operator+=(const IntVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < rank(); ++i) coords_[i] += o[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < rank(); ++i) coords_[i] -= o[i];
    return *this;
  }
  IntVector& operator*=(const Integer& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& s, IntVector a) { return a *= s; }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
    if (a.rank() != b.rank()) return a.rank() <=> b.rank();
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (a[i] < b[i]) return std::strong_ordering::less;
      if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }

 private:
  void check_rank(const IntVector& o) const {
    if (o.rank() != rank()) throw RankMismatch("vector rank mismatch");
  }
  std::vector<Integer> coords_;
};

inline Integer dot(const IntVector& a, const IntVector& b) {
  if (a.rank() != b.rank()) throw RankMismatch("dot: rank mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

/// Dense integer matrix; as a lattice map it acts on column vectors, so an
/// r x c matrix is a homomorphism Z^c -> Z^r.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose rows are the given vectors, all of rank `cols`.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].rank() != cols) throw RankMismatch("from_rows: rank mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(std::span<const IntVector> cols, std::size_t rows) {
    return from_rows(cols, rows).transposed();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  IntVector column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& c) { return c == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row_a += k * row_b
  void add_row_multiple(std::size_t a, std::size_t b, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
  }
  void add_col_multiple(std::size_t a, std::size_t b, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }
  void negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
  }
  // (row_a, row_b) <- (p*row_a + q*row_b, r*row_a + s*row_b)
  void combine_rows(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Integer x = (*this)(a, j), y = (*this)(b, j);
      (*this)(a, j) = p * x + q * y;
      (*this)(b, j) = r * x + s * y;
    }
  }
  void combine_cols(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s) {
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer x = (*this)(i, a), y = (*this)(i, b);
      (*this)(i, a) = p * x + q * y;
      (*this)(i, b) = r * x + s * y;
    }
  }

  /// Horizontal concatenation [A | B].
  IntMatrix hcat(const IntMatrix& b) const {
    if (b.rows_ != rows_) throw RankMismatch("hcat: row mismatch");
    IntMatrix m(rows_, cols_ + b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, cols_ + j) = b(i, j);
    }
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw RankMismatch("matrix product: dimension mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.rank()) throw RankMismatch("matrix-vector product: dimension mismatch");
    IntVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += row(i).str();
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw RankMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

/// Dense rational matrix used for small exact solves.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b over Q for square nonsingular A; throws if A is singular.
inline std::vector<Rational> solve_rational(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw Error("solve_rational: singular system");
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Rank over Q.
inline std::size_t matrix_rank(const IntMatrix& m) {
  RationalMatrix a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace toricq
