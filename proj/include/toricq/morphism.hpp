#pragma once

// Toric morphisms between fan systems and the orbit-level computations built
// on them: images, one-parameter limits, fibers.

#include "toricq/point.hpp"

#include <limits>

namespace toricq {

class Incompatible : public Error {
 public:
  Incompatible(Cone source_cone, std::size_t source_chart, const std::string& what)
      : Error("incompatible toric morphism at source cone " + source_cone.str() + ": " + what),
        cone(std::move(source_cone)),
        chart(source_chart) {}
  Cone cone;
  std::size_t chart;
};

class PartialCover : public Error {
 public:
  explicit PartialCover(OrbitIndex o)
      : Error("orbit of " + o.cone.str() + " maps onto a proper subvariety of its target orbit"), orbit(std::move(o)) {}
  OrbitIndex orbit;
};

/// Morphism of toric prevarieties induced by a lattice map carrying every
/// source chart into a target chart.
class ToricMorphism {
 public:
  ToricMorphism() = default;

  /// `chart_map` fixes the target chart of each source chart; by default the
  /// lowest-numbered target chart containing the image is used.
  static ToricMorphism build(IntMatrix map, FanSystem source, FanSystem target,
                             std::optional<std::vector<std::size_t>> chart_map = std::nullopt) {
    if (map.cols() != source.rank() || map.rows() != target.rank())
      throw RankMismatch("toric morphism: lattice map is " + std::to_string(map.rows()) + "x" +
                         std::to_string(map.cols()) + " but the spaces have ranks " + std::to_string(source.rank()) +
                         " -> " + std::to_string(target.rank()));
    ToricMorphism m;
    m.map_ = std::move(map);
    m.source_ = std::move(source);
    m.target_ = std::move(target);

    const std::size_t k = m.source_.chart_count();
    if (chart_map && chart_map->size() != k) throw Error("toric morphism: chart map has the wrong length");
    for (std::size_t i = 0; i < k; ++i) {
      const Cone img = image_cone(m.map_, m.source_.chart(i));
      if (chart_map) {
        const std::size_t j = (*chart_map)[i];
        if (j >= m.target_.chart_count() || !m.target_.chart(j).contains(img))
          throw Incompatible(m.source_.chart(i), i, "image is not inside the assigned target chart");
        m.chart_map_.push_back(j);
        continue;
      }
      std::optional<std::size_t> found;
      for (std::size_t j = 0; j < m.target_.chart_count() && !found; ++j)
        if (m.target_.chart(j).contains(img)) found = j;
      if (!found) throw Incompatible(m.source_.chart(i), i, "image " + img.str() + " lies in no target chart");
      m.chart_map_.push_back(*found);
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = i + 1; l < k; ++l) {
        const Cone img = image_cone(m.map_, m.source_.gluing(i, l));
        if (!m.target_.gluing(m.chart_map_[i], m.chart_map_[l]).contains(img))
          throw Incompatible(m.source_.gluing(i, l), i, "gluing of charts is not respected");
      }

    for (const auto& o : m.source_.orbits()) {
      const std::size_t j = m.chart_map_[o.chart];
      const Cone gamma = m.target_.chart(j).minimal_face_containing(image_cone(m.map_, o.cone));
      m.assignment_.emplace(o, m.target_.canonical(j, gamma));
    }
    return m;
  }

  const IntMatrix& map() const { return map_; }
  const FanSystem& source() const { return source_; }
  const FanSystem& target() const { return target_; }
  const std::vector<std::size_t>& chart_map() const { return chart_map_; }
  const std::map<OrbitIndex, OrbitIndex>& cone_assignment() const { return assignment_; }

  const OrbitIndex& assigned(const OrbitIndex& o) const {
    auto it = assignment_.find(o);
    if (it == assignment_.end()) throw Error("orbit of " + o.cone.str() + " is not in the source");
    return it->second;
  }

 private:
  IntMatrix map_;
  FanSystem source_;
  FanSystem target_;
  std::vector<std::size_t> chart_map_;
  std::map<OrbitIndex, OrbitIndex> assignment_;
};

inline ToricMorphism toric_morphism(IntMatrix map, FanSystem source, FanSystem target,
                                    std::optional<std::vector<std::size_t>> chart_map = std::nullopt) {
  return ToricMorphism::build(std::move(map), std::move(source), std::move(target), std::move(chart_map));
}

inline ToricMorphism toric_morphism(IntMatrix map, const Fan& source, const Fan& target) {
  return ToricMorphism::build(std::move(map), source.system(), target.system());
}

/// t · x_sigma  |->  (P·t) · y_gamma with gamma the assigned target orbit.
inline OrbitPoint apply_morphism(const ToricMorphism& m, const OrbitPoint& p) {
  return OrbitPoint::make(m.assigned(p.orbit), monomial_map(m.map(), p.coset));
}

/// Chart form: the image lies in the target chart assigned to `source_chart`.
inline ToricPoint apply_morphism(const ToricMorphism& m, std::size_t source_chart, const ToricPoint& p) {
  const OrbitPoint q = apply_morphism(m, from_chart(m.source(), source_chart, p));
  return ToricPoint::from_orbit(m.target().chart(m.chart_map().at(source_chart)), q.orbit.cone, q.coset);
}

struct OrbitImage {
  OrbitIndex target;
  bool covered = false;
  /// Index of the image of N/N_sigma in N'/N'_gamma; 0 when infinite.
  Integer index = 0;
};

/// The orbit of sigma maps into the orbit of gamma; it covers it iff the
/// induced lattice map N/N_sigma -> N'/N'_gamma has finite cokernel.
inline OrbitImage orbit_image(const ToricMorphism& m, const OrbitIndex& o) {
  const OrbitIndex& gamma = m.assigned(o);
  const Integer index = cokernel_index_modulo(m.map(), gamma.cone.span_lattice());
  return {gamma, index != 0, index};
}

inline OrbitImage orbit_image(const ToricMorphism& m, const Cone& sigma) {
  auto o = m.source().find_orbit(sigma);
  if (!o) throw Error("cone " + sigma.str() + " is not in the source");
  return orbit_image(m, *o);
}

/// Union of torus orbits of a fan.
struct ConstructibleOrbitSet {
  Fan ambient;
  std::vector<Cone> present;
  std::vector<Cone> absent;
};

inline ConstructibleOrbitSet image_constructible(const ToricMorphism& m) {
  if (!m.target().separated()) throw Error("image_constructible: target must be a fan");
  std::set<Cone> hit;
  for (const auto& o : m.source().orbits()) {
    const OrbitImage img = orbit_image(m, o);
    if (!img.covered) throw PartialCover(o);
    hit.insert(img.target.cone);
  }
  ConstructibleOrbitSet s{Fan::from_system(m.target()), {}, {}};
  for (const auto& c : s.ambient.all_cones()) (hit.count(c) ? s.present : s.absent).push_back(c);
  return s;
}

/// Smallest codimension of an orbit missing from the set, where the orbit of
/// gamma has dimension n - dim gamma. nullopt when nothing is missing.
inline std::optional<std::size_t> complement_codim(const ConstructibleOrbitSet& s) {
  std::optional<std::size_t> best;
  for (const auto& c : s.absent)
    if (!best || c.dim() < *best) best = c.dim();
  return best;
}

/// All limits of s -> lambda_v(s) · p as s -> 0, one candidate per chart
/// containing p; sorted and deduplicated.
inline std::vector<OrbitPoint> one_param_limits(const FanSystem& space, const IntVector& v, const OrbitPoint& p) {
  if (v.rank() != space.rank()) throw RankMismatch("one_param_limits: rank mismatch");
  std::set<OrbitPoint> out;
  for (std::size_t j : space.charts_containing(p.orbit)) {
    const ToricPoint start = to_chart(space, j, p);
    std::map<IntVector, Rational> limit;
    bool exists = true;
    for (const auto& [u, x] : start.values()) {
      const Integer pairing = dot(u, v);
      if (x != 0 && pairing < 0) {
        exists = false;
        break;
      }
      limit.emplace(u, pairing == 0 ? x : Rational(0));
    }
    if (!exists) continue;
    out.insert(from_chart(space, j, ToricPoint::from_values(space.chart(j), std::move(limit))));
  }
  return {out.begin(), out.end()};
}

inline std::vector<OrbitPoint> one_param_limits(const Fan& fan, const IntVector& v, const OrbitPoint& p) {
  return one_param_limits(fan.system(), v, p);
}

/// One orbit's share of a fiber: T_K · representative, where K is the
/// saturated preimage of the target isotropy lattice. Membership is exact:
/// a point of the orbit lies in the piece iff it solves the orbit equation.
struct FiberPiece {
  OrbitIndex orbit;
  Sublattice subtorus;
  std::variant<OrbitPoint, NoRationalPoint> representative;
  Integer components = 1;
  IntMatrix equations;
  std::vector<Rational> targets;

  bool has_rational_representative() const { return std::holds_alternative<OrbitPoint>(representative); }

  bool contains(const OrbitPoint& p) const {
    return p.orbit == orbit && monomial_map(equations, p.coset).coords() == targets;
  }
};

inline std::vector<FiberPiece> fiber_pieces(const ToricMorphism& m, const OrbitPoint& y) {
  if (!m.target().has_orbit(y.orbit)) throw Error("fiber_pieces: point is not in the target");
  const IntMatrix u = y.orbit.cone.orthogonal().basis_matrix();
  const IntMatrix a = u * m.map();
  const std::vector<Rational> targets = monomial_map(u, y.coset).coords();
  std::vector<FiberPiece> out;
  for (const auto& o : m.source().orbits()) {
    if (m.assigned(o) != y.orbit) continue;
    auto sol = solve_torus_equation(a, targets);
    if (std::holds_alternative<Inconsistent>(sol)) continue;
    FiberPiece piece;
    piece.orbit = o;
    piece.equations = a;
    piece.targets = targets;
    if (auto* c = std::get_if<CosetSolution>(&sol)) {
      piece.subtorus = c->kernel;
      piece.components = c->components;
      piece.representative = OrbitPoint::make(o, c->representative);
    } else {
      auto& np = std::get<NoRationalPoint>(sol);
      piece.subtorus = np.kernel;
      piece.components = np.components;
      piece.representative = np;
    }
    out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace toricq
