#pragma once

// Hermite and Smith normal forms over Z with transformation matrices.

#include "toricq/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toricq {

struct HermiteForm {
  IntMatrix h;  ///< U * M, row echelon
  IntMatrix u;  ///< unimodular row transform
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  ///< pivot column of each nonzero row
};

/// Row-style Hermite normal form: U is unimodular, U*M = H, the nonzero rows
/// of H come first, pivots are positive, and entries above a pivot lie in
/// [0, pivot).
inline HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm f{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = f.h;
  IntMatrix& u = f.u;
  const std::size_t r = m.rows();
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < r; ++col) {
    for (std::size_t i = pr + 1; i < r; ++i) {
      if (h(i, col) == 0) continue;
      const Integer a = h(pr, col), b = h(i, col);
      const auto [g, x, y] = extended_gcd(a, b);
      const Integer bg = b / g, ag = a / g;
      h.combine_rows(pr, i, x, y, -bg, ag);
      u.combine_rows(pr, i, x, y, -bg, ag);
    }
    if (h(pr, col) == 0) continue;
    if (h(pr, col) < 0) {
      h.negate_row(pr);
      u.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      const Integer q = floor_div(h(i, col), h(pr, col));
      h.add_row_multiple(i, pr, -q);
      u.add_row_multiple(i, pr, -q);
    }
    f.pivot_cols.push_back(col);
    ++pr;
  }
  f.rank = pr;
  return f;
}

struct SmithForm {
  IntMatrix d;  ///< U * M * V, diagonal with d_1 | d_2 | ...
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
  }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = f.d;
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
            best = {i, j};
      if (!best) {
        f.rank = t;
        return f;
      }
      d.swap_rows(t, best->first);
      f.u.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      f.v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        f.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        f.v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < r && !offending; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      d.add_row_multiple(t, *offending, 1);
      f.u.add_row_multiple(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.u.negate_row(t);
    }
  }
  f.rank = 0;
  while (f.rank < std::min(r, c) && d(f.rank, f.rank) != 0) ++f.rank;
  return f;
}

/// Inverse of a unimodular matrix (exact, integral).
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw RankMismatch("unimodular_inverse: non-square");
  // Row-reduce [M | I]; for unimodular M the Hermite form of M is I.
  HermiteForm f = hermite_normal_form(m);
  if (f.h != IntMatrix::identity(n)) throw Error("unimodular_inverse: matrix is not unimodular");
  return f.u;
}

}  // namespace toricq
