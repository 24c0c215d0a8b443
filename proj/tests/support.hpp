#pragma once

// Random generators and brute-force oracles shared by the tests and the
// acceptance runner. Oracles use only plain integer/rational arithmetic and
// none of the library's algorithms.

#include <functional>
#include <random>
#include <set>

#include "toricq/toricq.hpp"

namespace support {

using namespace toricq;

inline std::mt19937_64& rng(std::uint64_t seed = 0) {
  static std::mt19937_64 gen(20261014);
  if (seed) gen.seed(seed);
  return gen;
}

inline long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng()); }

inline IntVector random_vector(std::size_t n, long long lo, long long hi) {
  std::vector<Integer> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform(lo, hi));
  return IntVector(std::move(v));
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, long long lo, long long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

inline Rational random_rational() {
  long long p = 0;
  while (p == 0) p = uniform(-9, 9);
  return Rational(p, uniform(1, 9));
}

inline TorusElement random_torus(std::size_t n) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational());
  return TorusElement(std::move(v));
}

inline std::vector<IntVector> random_generators(std::size_t n, std::size_t k, long long bound) {
  std::vector<IntVector> gens;
  while (gens.size() < k) {
    auto v = random_vector(n, -bound, bound);
    if (!v.is_zero()) gens.push_back(v);
  }
  return gens;
}

inline Cone random_cone(std::size_t n, std::size_t k, long long bound) {
  return Cone::from_generators(random_generators(n, k, bound), n);
}

inline Cone random_pointed_cone(std::size_t n, std::size_t k, long long bound) {
  for (;;) {
    Cone c = random_cone(n, k, bound);
    if (c.is_pointed()) return c;
  }
}

/// Fan grown from random pointed cones, keeping each that is compatible.
inline Fan random_fan(std::size_t n, std::size_t tries = 12) {
  std::vector<Cone> cones;
  for (std::size_t t = 0; t < tries; ++t) {
    auto cand = cones;
    cand.push_back(random_pointed_cone(n, static_cast<std::size_t>(uniform(1, static_cast<long long>(n))), 2));
    try {
      Fan::build(cand, n);
      cones = std::move(cand);
    } catch (const FanViolation&) {
    }
  }
  return Fan::build(cones, n);
}

/// All integer points of [lo, hi]^n.
inline std::vector<IntVector> box(std::size_t n, long long lo, long long hi) {
  std::vector<IntVector> out;
  std::vector<long long> cur(n, lo);
  for (;;) {
    std::vector<Integer> v(cur.begin(), cur.end());
    out.emplace_back(std::move(v));
    std::size_t i = 0;
    while (i < n && cur[i] == hi) cur[i++] = lo;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

inline long long dot_ll(const IntVector& a, const IntVector& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += to_int64(a[i]) * to_int64(b[i]);
  return s;
}

/// u lies in the dual of cone(gens).
inline bool brute_dual_contains(const std::vector<IntVector>& gens, const IntVector& u) {
  for (const auto& g : gens)
    if (dot_ll(g, u) < 0) return false;
  return true;
}

// ---- determinants and minors -------------------------------------------

inline Integer leibniz_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Integer total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Integer term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all k x k minors (the k-th determinantal divisor).
inline Integer minors_gcd(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  combinations(m.rows(), k, [&](const auto& rows) {
    combinations(m.cols(), k, [&](const auto& cols) {
      std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m(rows[i], cols[j]);
      Integer d = leibniz_det(a);
      if (d < 0) d = -d;
      Integer x = g, y = d;
      while (y != 0) {
        Integer r = x % y;
        x = y;
        y = r;
      }
      g = x;
    });
  });
  return g;
}

// ---- Fourier-Motzkin ---------------------------------------------------

/// Inequalities a.x >= 0 cutting out cone(gens), obtained by eliminating
/// the multipliers from x = sum l_j g_j, l >= 0.
inline std::vector<std::vector<Rational>> fourier_motzkin(const std::vector<IntVector>& gens, std::size_t n) {
  const std::size_t k = gens.size();
  // Variables: x_0..x_{n-1}, l_0..l_{k-1}; rows are coefficient vectors of "row . (x,l) >= 0".
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> r(n + k);
    r[i] = 1;
    for (std::size_t j = 0; j < k; ++j) r[n + j] = -Rational(gens[j][i]);
    rows.push_back(r);
    for (auto& x : r) x = -x;
    rows.push_back(r);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> r(n + k);
    r[n + j] = 1;
    rows.push_back(r);
  }
  auto normalize = [](std::vector<Rational> r) {
    Rational scale = 0;
    for (const auto& x : r)
      if (x != 0) {
        scale = x < 0 ? Rational(-x) : x;
        break;
      }
    if (scale != 0)
      for (auto& x : r) x /= scale;
    return r;
  };
  for (std::size_t var = n + k; var-- > n;) {
    std::vector<std::vector<Rational>> pos, neg, keep;
    for (auto& r : rows) (r[var] > 0 ? pos : r[var] < 0 ? neg : keep).push_back(r);
    std::set<std::vector<Rational>> next;
    for (auto& r : keep) next.insert(normalize(r));
    for (const auto& p : pos)
      for (const auto& q : neg) {
        std::vector<Rational> r(n + k);
        for (std::size_t i = 0; i < n + k; ++i) r[i] = p[i] * (-q[var]) + q[i] * p[var];
        next.insert(normalize(r));
      }
    rows.assign(next.begin(), next.end());
  }
  std::vector<std::vector<Rational>> out;
  for (auto& r : rows) {
    r.resize(n);
    if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != 0; })) out.push_back(r);
  }
  return out;
}

inline bool satisfies(const std::vector<std::vector<Rational>>& ineqs, const IntVector& x) {
  for (const auto& a : ineqs) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.rank(); ++i) s += a[i] * Rational(x[i]);
    if (s < 0) return false;
  }
  return true;
}

// ---- semigroup representability -----------------------------------------

/// Whether x is a nonnegative integer combination of `gens`, searching only
/// through partial sums that stay inside `cone`.
inline bool representable(const IntVector& x, const std::vector<IntVector>& gens, const Cone& cone,
                          std::set<IntVector>& yes, std::set<IntVector>& no, int depth = 0) {
  if (x.is_zero()) return true;
  if (yes.count(x)) return true;
  if (no.count(x) || depth > 400) return false;
  for (const auto& g : gens) {
    IntVector r = x - g;
    if (cone.contains(r) && representable(r, gens, cone, yes, no, depth + 1)) {
      yes.insert(x);
      return true;
    }
  }
  no.insert(x);
  return false;
}

}  // namespace support
