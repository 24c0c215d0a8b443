#pragma once

// Fans (separated toric varieties) and fan systems: affine charts glued
// pairwise along common faces, which model toric prevarieties.

#include "toricq/cone.hpp"

#include <map>
#include <optional>
#include <variant>

namespace toricq {

class FanViolation : public Error {
 public:
  FanViolation(std::size_t i, std::size_t j, const std::string& what)
      : Error("fan violation between cones " + std::to_string(i) + " and " + std::to_string(j) + ": " + what),
        first(i),
        second(j) {}
  std::size_t first, second;
};

class GluingViolation : public Error {
 public:
  GluingViolation(std::size_t i, std::size_t j, const std::string& what)
      : Error("gluing violation between charts " + std::to_string(i) + " and " + std::to_string(j) + ": " + what),
        first(i),
        second(j) {}
  std::size_t first, second;
};

/// Torus orbit of a fan system: the cone of the orbit together with the
/// lowest-numbered chart in which it appears.
struct OrbitIndex {
  std::size_t chart = 0;
  Cone cone;

  friend bool operator==(const OrbitIndex&, const OrbitIndex&) = default;
  friend std::strong_ordering operator<=>(const OrbitIndex& a, const OrbitIndex& b) {
    if (auto c = a.chart <=> b.chart; c != 0) return c;
    return a.cone <=> b.cone;
  }
};

using GluingTable = std::map<std::pair<std::size_t, std::size_t>, Cone>;

class FanSystem {
 public:
  FanSystem() = default;

  /// Pairs missing from `gluing` are glued along the zero cone, i.e. along
  /// the big torus.
  static FanSystem build(std::vector<Cone> charts, const GluingTable& gluing, std::size_t rank) {
    FanSystem s;
    s.rank_ = rank;
    for (std::size_t i = 0; i < charts.size(); ++i) {
      if (charts[i].rank() != rank) throw GluingViolation(i, i, "chart has the wrong rank");
      if (!charts[i].is_pointed()) throw GluingViolation(i, i, "chart " + charts[i].str() + " is not pointed");
    }
    s.charts_ = std::move(charts);
    const std::size_t k = s.charts_.size();

    for (const auto& [key, cone] : gluing) {
      auto [i, j] = key;
      if (i >= k || j >= k) throw GluingViolation(i, j, "chart index out of range");
      if (i == j) {
        if (cone != s.charts_[i]) throw GluingViolation(i, j, "a chart is glued to itself along all of it");
        continue;
      }
      const auto ordered = std::minmax(i, j);
      auto [it, inserted] = s.gluing_.emplace(ordered, cone);
      if (!inserted && it->second != cone) throw GluingViolation(i, j, "asymmetric gluing table");
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        auto [it, inserted] = s.gluing_.emplace(std::pair{i, j}, Cone::zero(rank));
        const Cone& g = it->second;
        if (g.rank() != rank) throw GluingViolation(i, j, "gluing cone has the wrong rank");
        if (!g.is_face_of(s.charts_[i]))
          throw GluingViolation(i, j, g.str() + " is not a face of " + s.charts_[i].str());
        if (!g.is_face_of(s.charts_[j]))
          throw GluingViolation(i, j, g.str() + " is not a face of " + s.charts_[j].str());
      }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          if (i == j || j == l || i == l) continue;
          if (!s.gluing(i, l).contains(intersect(s.gluing(i, j), s.gluing(j, l))))
            throw GluingViolation(i, l, "identifications through chart " + std::to_string(j) + " are not transitive");
        }

    s.separated_ = true;
    for (std::size_t i = 0; i < k && s.separated_; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const Cone meet = intersect(s.charts_[i], s.charts_[j]);
        if (meet != s.gluing(i, j) || !meet.is_face_of(s.charts_[i]) || !meet.is_face_of(s.charts_[j])) {
          s.separated_ = false;
          break;
        }
      }

    s.faces_.reserve(k);
    for (const auto& c : s.charts_) s.faces_.push_back(c.faces());
    std::set<OrbitIndex> orbits;
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& f : s.faces_[i]) orbits.insert(s.canonical(i, f));
    s.orbits_.assign(orbits.begin(), orbits.end());
    return s;
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Cone>& charts() const { return charts_; }
  const Cone& chart(std::size_t i) const { return charts_.at(i); }
  std::size_t chart_count() const { return charts_.size(); }
  bool separated() const { return separated_; }
  const std::vector<Cone>& chart_faces(std::size_t i) const { return faces_.at(i); }
  /// Canonical orbit list, ordered by (chart, dim, rays).
  const std::vector<OrbitIndex>& orbits() const { return orbits_; }

  const Cone& gluing(std::size_t i, std::size_t j) const {
    if (i == j) return charts_.at(i);
    return gluing_.at(std::minmax(i, j));
  }

  bool is_chart_face(std::size_t i, const Cone& f) const {
    const auto& fs = faces_.at(i);
    return std::binary_search(fs.begin(), fs.end(), f);
  }

  /// Orbit of face f of chart i; (i, f) and (j, f) name one orbit iff
  /// f lies in the gluing cone of charts i and j.
  OrbitIndex canonical(std::size_t i, const Cone& f) const {
    if (!is_chart_face(i, f)) throw Error(f.str() + " is not a face of chart " + std::to_string(i));
    for (std::size_t j = 0; j <= i; ++j)
      if (gluing(i, j).contains(f)) return {j, f};
    return {i, f};
  }

  /// Charts in which the orbit appears.
  std::vector<std::size_t> charts_containing(const OrbitIndex& o) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < charts_.size(); ++j)
      if (is_chart_face(j, o.cone) && canonical(j, o.cone) == o) out.push_back(j);
    return out;
  }

  bool has_orbit(const OrbitIndex& o) const { return std::binary_search(orbits_.begin(), orbits_.end(), o); }

  /// First orbit whose cone equals `c`, if c is a face of some chart.
  std::optional<OrbitIndex> find_orbit(const Cone& c) const {
    for (std::size_t i = 0; i < charts_.size(); ++i)
      if (is_chart_face(i, c)) return canonical(i, c);
    return std::nullopt;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Cone> charts_;
  GluingTable gluing_;
  bool separated_ = true;
  std::vector<std::vector<Cone>> faces_;
  std::vector<OrbitIndex> orbits_;
};

class Fan {
 public:
  Fan() = default;

  /// Validates pairwise intersections; cones that are faces of other listed
  /// cones are dropped from the maximal list. An empty list yields the fan {0}.
  static Fan build(const std::vector<Cone>& cones, std::size_t rank) {
    for (std::size_t i = 0; i < cones.size(); ++i) {
      if (cones[i].rank() != rank) throw FanViolation(i, i, "cone has the wrong rank");
      if (!cones[i].is_pointed()) throw FanViolation(i, i, "cone " + cones[i].str() + " is not pointed");
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
      for (std::size_t j = i + 1; j < cones.size(); ++j) {
        const Cone meet = intersect(cones[i], cones[j]);
        if (!meet.is_face_of(cones[i]) || !meet.is_face_of(cones[j]))
          throw FanViolation(i, j, "intersection " + meet.str() + " is not a face of both cones");
      }
    Fan f;
    f.rank_ = rank;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < cones.size() && !dominated; ++j) {
        if (i == j) continue;
        if (cones[j].contains(cones[i]) && (cones[j] != cones[i] || j < i)) dominated = true;
      }
      if (!dominated) f.maximal_.push_back(cones[i]);
    }
    if (f.maximal_.empty()) f.maximal_.push_back(Cone::zero(rank));
    std::set<Cone> all;
    for (const auto& c : f.maximal_)
      for (auto& face : c.faces()) all.insert(std::move(face));
    f.all_.assign(all.begin(), all.end());

    GluingTable gluing;
    for (std::size_t i = 0; i < f.maximal_.size(); ++i)
      for (std::size_t j = i + 1; j < f.maximal_.size(); ++j)
        gluing.emplace(std::pair{i, j}, intersect(f.maximal_[i], f.maximal_[j]));
    f.system_ = FanSystem::build(f.maximal_, gluing, rank);
    return f;
  }

  static Fan from_system(const FanSystem& s) {
    if (!s.separated()) throw Error("from_system: the fan system is not separated");
    return build(s.charts(), s.rank());
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  /// Closed face set ordered by (dim, rays).
  const std::vector<Cone>& all_cones() const { return all_; }
  const FanSystem& system() const { return system_; }

  bool has_cone(const Cone& c) const { return std::binary_search(all_.begin(), all_.end(), c); }

  bool support_contains(const IntVector& v) const {
    for (const auto& c : maximal_)
      if (c.contains(v)) return true;
    return false;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Cone> maximal_;
  std::vector<Cone> all_;
  FanSystem system_;
};

namespace detail {
inline std::optional<Cone> minimal_cone_impl(const Fan& f, auto&& contains) {
  std::vector<const Cone*> hits;
  for (const auto& c : f.all_cones())
    if (contains(c)) hits.push_back(&c);
  if (hits.empty()) return std::nullopt;
  const Cone* best = hits.front();
  for (const auto* c : hits)
    if (c->dim() < best->dim()) best = c;
  for (const auto* c : hits)
    if (!c->contains(*best)) throw Error("minimal_cone_containing: not unique; fan is invalid");
  return *best;
}
}  // namespace detail

/// Unique smallest cone of the fan containing the target, or nullopt when
/// the target is not inside the support.
inline std::optional<Cone> minimal_cone_containing(const Fan& f, const Cone& target) {
  if (target.rank() != f.rank()) throw RankMismatch("minimal_cone_containing: rank mismatch");
  return detail::minimal_cone_impl(f, [&](const Cone& c) { return c.contains(target); });
}

inline std::optional<Cone> minimal_cone_containing(const Fan& f, const IntVector& v) {
  if (v.rank() != f.rank()) throw RankMismatch("minimal_cone_containing: rank mismatch");
  return detail::minimal_cone_impl(f, [&](const Cone& c) { return c.contains(v); });
}

inline Fan build_fan(const std::vector<Cone>& max_cones, std::size_t rank) { return Fan::build(max_cones, rank); }

inline FanSystem build_fan_system(std::vector<Cone> charts, const GluingTable& gluing, std::size_t rank) {
  return FanSystem::build(std::move(charts), gluing, rank);
}

}  // namespace toricq
