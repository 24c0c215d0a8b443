#pragma once

// Generators of the monoid C ∩ Z^n.

#include "toricq/cone.hpp"

#include <map>

namespace toricq {

namespace detail {

/// Pulling triangulation of a pointed cone by its rays.
inline std::vector<std::vector<IntVector>> triangulate(const Cone& c) {
  const auto& rays = c.rays();
  if (rays.size() == c.dim()) return {rays};
  const IntVector& apex = rays.front();
  std::vector<std::vector<IntVector>> out;
  for (const auto& u : c.facets()) {
    if (dot(u, apex) == 0) continue;
    std::vector<IntVector> gens;
    for (const auto& r : rays)
      if (dot(u, r) == 0) gens.push_back(r);
    for (auto simplex : triangulate(Cone::from_generators(gens, c.rank()))) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

inline constexpr std::size_t kMaxParallelepipedPoints = 1'000'000;

/// Lattice points of the half-open parallelepiped sum [0,1) r_i, for linearly
/// independent r_i, enumerated through the finite group Λ / (sum Z r_i).
inline std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& rays, std::size_t n) {
  const std::size_t d = rays.size();
  const Sublattice span = Sublattice::from_generators(n, rays).saturation();
  IntMatrix a(d, d);  // column i = coordinates of ray i in the span basis
  for (std::size_t i = 0; i < d; ++i) {
    const auto coords = span.coordinates(rays[i]);
    for (std::size_t j = 0; j < d; ++j) a(j, i) = (*coords)[j];
  }
  const SmithForm f = smith_normal_form(a);
  const IntMatrix u_inv = unimodular_inverse(f.u);
  Integer total = 1;
  for (const auto& x : f.invariant_factors()) total *= x;
  if (total > kMaxParallelepipedPoints)
    throw Error("semigroup_generators: simplicial cone of index " + total.str() + " is too large");

  RationalMatrix ar(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) ar[i][j] = Rational(a(i, j));

  std::vector<IntVector> out;
  std::vector<Integer> digit(d, 0);
  for (;;) {
    std::vector<Rational> y(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) y[i] += Rational(u_inv(i, k) * digit[k]);
    const auto lambda = solve_rational(ar, y);
    std::vector<Rational> point(n, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      const Rational frac = lambda[i] - Rational(floor_div(numerator(lambda[i]), denominator(lambda[i])));
      for (std::size_t j = 0; j < n; ++j) point[j] += frac * Rational(rays[i][j]);
    }
    IntVector p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = numerator(point[j]);
    out.push_back(std::move(p));

    std::size_t k = 0;
    while (k < d) {
      if (++digit[k] < f.d(k, k)) break;
      digit[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  return out;
}

inline std::vector<IntVector> hilbert_basis_pointed(const Cone& c) {
  if (c.is_zero()) return {};
  std::set<IntVector> candidates(c.rays().begin(), c.rays().end());
  for (const auto& simplex : triangulate(c))
    for (auto& p : parallelepiped_points(simplex, c.rank()))
      if (!p.is_zero()) candidates.insert(std::move(p));

  IntVector weight(c.rank());
  for (const auto& u : c.facets()) weight += u;
  std::vector<std::pair<Integer, IntVector>> ordered;
  for (const auto& x : candidates) ordered.emplace_back(dot(weight, x), x);
  std::sort(ordered.begin(), ordered.end());

  std::vector<IntVector> basis;
  for (const auto& [w, x] : ordered) {
    bool reducible = false;
    for (const auto& h : basis)
      if (c.contains(x - h)) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(x);
  }
  return sorted_unique(std::move(basis));
}

}  // namespace detail

/// Finite generating set of the monoid C ∩ Z^n: the Hilbert basis of the
/// pointed part (taken in Z^n / L) lifted back, plus ± a basis of the
/// lineality lattice L. Sorted.
inline std::vector<IntVector> semigroup_generators(const Cone& c) {
  const std::size_t n = c.rank();
  const Sublattice& lin = c.lineality();
  if (lin.rank() == 0) return detail::hilbert_basis_pointed(c);

  const IntMatrix q = lin.orthogonal().basis_matrix();  // Z^n -> Z^{n-l}, kernel L
  std::vector<IntVector> out;
  if (q.rows() > 0) {
    const Cone quotient = image_cone(q, c);
    // Section of q: q * (V[:, :m] * U) = id for U q V = [I | 0].
    const SmithForm f = smith_normal_form(q);
    IntMatrix v_head(n, q.rows());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < q.rows(); ++j) v_head(i, j) = f.v(i, j);
    const IntMatrix section = v_head * f.u;
    for (const auto& h : detail::hilbert_basis_pointed(quotient)) out.push_back(lin.reduce(section * h));
  }
  for (const auto& l : lin.basis()) {
    out.push_back(l);
    out.push_back(-l);
  }
  return detail::sorted_unique(std::move(out));
}

}  // namespace toricq
