#pragma once

// Points of toric (pre)varieties: orbit form (cone, torus coset) and chart
// form (values of a semigroup homomorphism on dual generators).

#include "toricq/fan.hpp"
#include "toricq/hilbert.hpp"
#include "toricq/torus.hpp"

#include <map>

namespace toricq {

/// Generators of the character monoid of the affine chart U_sigma, cached per
/// thread.
inline const std::vector<IntVector>& dual_semigroup(const Cone& chart) {
  thread_local std::map<Cone, std::vector<IntVector>> cache;
  auto it = cache.find(chart);
  if (it == cache.end()) it = cache.emplace(chart, semigroup_generators(chart.dual())).first;
  return it->second;
}

/// Whether the character u is trivial on the isotropy lattice of gamma.
inline bool is_orthogonal(const IntVector& u, const Cone& gamma) {
  for (const auto& g : gamma.generators())
    if (dot(u, g) != 0) return false;
  return true;
}

/// Canonical representative of t modulo the isotropy subtorus T_{N_gamma}.
inline TorusElement canonical_coset(const Cone& gamma, const TorusElement& t) {
  if (t.rank() != gamma.rank()) throw RankMismatch("coset rank mismatch");
  const IntMatrix& u = gamma.orthogonal().basis_matrix();
  if (u.rows() == 0) return TorusElement::identity(t.rank());
  return std::get<CosetSolution>(solve_torus_equation(u, monomial_map(u, t))).representative;
}

/// The point t · y_gamma. Two OrbitPoints are equal iff they lie on the same
/// orbit and their cosets agree modulo the isotropy subtorus.
struct OrbitPoint {
  OrbitIndex orbit;
  TorusElement coset;

  static OrbitPoint make(OrbitIndex orbit, const TorusElement& t) {
    TorusElement c = canonical_coset(orbit.cone, t);
    return {std::move(orbit), std::move(c)};
  }

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
  friend std::strong_ordering operator<=>(const OrbitPoint& a, const OrbitPoint& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    for (std::size_t i = 0; i < a.coset.rank() && i < b.coset.rank(); ++i) {
      if (a.coset[i] < b.coset[i]) return std::strong_ordering::less;
      if (b.coset[i] < a.coset[i]) return std::strong_ordering::greater;
    }
    return a.coset.rank() <=> b.coset.rank();
  }
};

class InvalidPoint : public Error {
 public:
  using Error::Error;
};

/// Point of the affine chart U_sigma as a monoid homomorphism
/// sigma^vee ∩ M -> (Q, ·), recorded on the monoid generators.
class ToricPoint {
 public:
  /// Validates multiplicative consistency: the nonvanishing generators must
  /// be exactly those in gamma^perp for a face gamma, and their values must be
  /// a character evaluation chi^u(t).
  static ToricPoint from_values(Cone chart, std::map<IntVector, Rational> values) {
    const auto& gens = dual_semigroup(chart);
    if (values.size() != gens.size()) throw InvalidPoint("toric point must assign a value to every dual generator");
    std::vector<IntVector> support;
    std::vector<Rational> targets;
    for (const auto& u : gens) {
      auto it = values.find(u);
      if (it == values.end()) throw InvalidPoint("no value for dual generator " + u.str());
      if (it->second != 0) {
        support.push_back(u);
        targets.push_back(it->second);
      }
    }
    std::vector<IntVector> face_gens;
    for (const auto& r : chart.rays()) {
      bool on = true;
      for (const auto& u : support)
        if (dot(u, r) != 0) {
          on = false;
          break;
        }
      if (on) face_gens.push_back(r);
    }
    Cone face = Cone::from_generators(face_gens, chart.rank());
    for (const auto& u : gens)
      if ((values.at(u) != 0) != is_orthogonal(u, face))
        throw InvalidPoint("vanishing set of the toric point is not the complement of a face");

    TorusElement t = TorusElement::identity(chart.rank());
    if (!support.empty()) {
      const IntMatrix a = IntMatrix::from_rows(support, chart.rank());
      auto sol = solve_torus_equation(a, targets);
      auto* coset = std::get_if<CosetSolution>(&sol);
      if (!coset) throw InvalidPoint("values of the toric point are not multiplicatively consistent");
      t = coset->representative;
    }
    ToricPoint p;
    p.chart_ = std::move(chart);
    p.values_ = std::move(values);
    p.orbit_cone_ = std::move(face);
    p.coset_ = canonical_coset(p.orbit_cone_, t);
    return p;
  }

  /// t · x_gamma viewed in the chart sigma (gamma a face of sigma).
  static ToricPoint from_orbit(Cone chart, const Cone& gamma, const TorusElement& t) {
    if (!gamma.is_face_of(chart)) throw InvalidPoint(gamma.str() + " is not a face of chart " + chart.str());
    std::map<IntVector, Rational> values;
    for (const auto& u : dual_semigroup(chart)) values.emplace(u, is_orthogonal(u, gamma) ? t.character(u) : Rational(0));
    ToricPoint p;
    p.chart_ = std::move(chart);
    p.values_ = std::move(values);
    p.orbit_cone_ = gamma;
    p.coset_ = canonical_coset(gamma, t);
    return p;
  }

  const Cone& chart() const { return chart_; }
  const std::map<IntVector, Rational>& values() const { return values_; }
  const Cone& orbit_cone() const { return orbit_cone_; }
  const TorusElement& coset() const { return coset_; }

  /// Value on a dual generator; zero allowed.
  const Rational& value(const IntVector& u) const {
    auto it = values_.find(u);
    if (it == values_.end()) throw Error(u.str() + " is not a dual generator of the chart");
    return it->second;
  }

  /// chi^u at this point, for any u in sigma^vee ∩ M. This is the
  /// multiplicative extension of the generator values.
  Rational evaluate(const IntVector& u) const {
    if (!chart_.dual().contains(u)) throw Error("character " + u.str() + " is not regular on chart " + chart_.str());
    return is_orthogonal(u, orbit_cone_) ? coset_.character(u) : Rational(0);
  }

  friend bool operator==(const ToricPoint& a, const ToricPoint& b) {
    return a.chart_ == b.chart_ && a.values_ == b.values_;
  }

 private:
  ToricPoint() = default;
  Cone chart_;
  std::map<IntVector, Rational> values_;
  Cone orbit_cone_;
  TorusElement coset_;
};

inline OrbitPoint distinguished_point(const FanSystem& space, std::size_t chart, const Cone& gamma) {
  if (chart >= space.chart_count() || !space.is_chart_face(chart, gamma))
    throw Error("unknown cone " + gamma.str() + " in chart " + std::to_string(chart));
  return OrbitPoint::make(space.canonical(chart, gamma), TorusElement::identity(space.rank()));
}

inline OrbitPoint distinguished_point(const FanSystem& space, const Cone& gamma) {
  auto orbit = space.find_orbit(gamma);
  if (!orbit) throw Error("unknown cone " + gamma.str() + " in the space");
  return OrbitPoint::make(*orbit, TorusElement::identity(space.rank()));
}

inline OrbitPoint distinguished_point(const Fan& fan, const Cone& gamma) { return distinguished_point(fan.system(), gamma); }

inline OrbitPoint act(const TorusElement& t, const OrbitPoint& p) { return OrbitPoint::make(p.orbit, p.coset * t); }

inline ToricPoint act(const TorusElement& t, const ToricPoint& p) {
  std::map<IntVector, Rational> values;
  for (const auto& [u, x] : p.values()) values.emplace(u, x * t.character(u));
  return ToricPoint::from_values(p.chart(), std::move(values));
}

inline Rational evaluate_character(const ToricPoint& p, const IntVector& u) { return p.evaluate(u); }

/// The orbit point in chart form, using the given chart of the space.
inline ToricPoint to_chart(const FanSystem& space, std::size_t chart, const OrbitPoint& p) {
  const auto charts = space.charts_containing(p.orbit);
  if (std::find(charts.begin(), charts.end(), chart) == charts.end())
    throw Error("point does not lie in chart " + std::to_string(chart));
  return ToricPoint::from_orbit(space.chart(chart), p.orbit.cone, p.coset);
}

inline OrbitPoint from_chart(const FanSystem& space, std::size_t chart, const ToricPoint& p) {
  return OrbitPoint::make(space.canonical(chart, p.orbit_cone()), p.coset());
}

}  // namespace toricq
