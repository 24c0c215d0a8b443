#pragma once

// Scene files: named lattices, cones, fans, fan systems, lattice maps,
// morphisms, weights and points, loaded from JSON and validated on load.
//
// Integers are written as JSON strings (plain JSON integers are accepted
// too) and rationals as "p/q" strings.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toricq/example.hpp"

namespace toricq {

using json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string kind_, std::string name_, std::string reason_)
      : Error(kind_ + " '" + name_ + "': " + reason_),
        kind(std::move(kind_)),
        name(std::move(name_)),
        reason(std::move(reason_)) {}
  std::string kind, name, reason;
};

class UnknownEntity : public Error {
 public:
  UnknownEntity(std::string kind_, std::string name_)
      : Error("unknown " + kind_ + " '" + name_ + "'"), kind(std::move(kind_)), name(std::move(name_)) {}
  std::string kind, name;
};

/// Declaration-ordered name -> value table.
template <class T>
class Registry {
 public:
  explicit Registry(std::string kind = {}) : kind_(std::move(kind)) {}

  void add(const std::string& name, T value) {
    if (items_.count(name)) throw ValidationError(kind_, name, "declared twice");
    order_.push_back(name);
    items_.emplace(name, std::move(value));
  }
  bool has(const std::string& name) const { return items_.count(name) != 0; }
  const T& at(const std::string& name) const {
    auto it = items_.find(name);
    if (it == items_.end()) throw UnknownEntity(kind_, name);
    return it->second;
  }
  const std::vector<std::string>& names() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

 private:
  std::string kind_;
  std::vector<std::string> order_;
  std::map<std::string, T> items_;
};

struct SceneSpace {
  FanSystem system;
  std::optional<Fan> fan;  ///< set when declared as a fan
  std::string label;       ///< orbit label prefix, e.g. "y"
};

struct SceneMorphism {
  ToricMorphism morphism;
  std::string source, target;
};

struct ScenePoint {
  std::string space;
  OrbitPoint point;
};

struct Scene {
  Registry<std::size_t> lattices{"lattice"};
  Registry<Cone> cones{"cone"};
  Registry<IntMatrix> maps{"map"};
  Registry<SceneSpace> spaces{"space"};
  Registry<SceneMorphism> morphisms{"morphism"};
  Registry<IntVector> weights{"weight"};
  Registry<ScenePoint> points{"point"};
  json source;

  bool empty() const {
    return lattices.empty() && cones.empty() && maps.empty() && spaces.empty() && morphisms.empty() &&
           weights.empty() && points.empty();
  }

  /// First declared name of a cone, if any.
  std::optional<std::string> cone_name(const Cone& c) const {
    for (const auto& n : cones.names())
      if (cones.at(n) == c) return n;
    return std::nullopt;
  }

  std::string orbit_label(const std::string& space, const OrbitIndex& o) const {
    const SceneSpace& s = spaces.at(space);
    std::string out = s.label;
    if (o.cone.is_zero()) {
      out += "0";
    } else if (auto n = cone_name(o.cone)) {
      out += "_" + *n;
    } else {
      std::string rays;
      for (const auto& r : o.cone.rays()) rays += r.str();
      out += "[" + rays + "]";
    }
    std::size_t same = 0;
    for (const auto& other : s.system.orbits()) same += other.cone == o.cone;
    if (same > 1) out += "@" + std::to_string(o.chart);
    return out;
  }
};

namespace detail {

inline Integer json_integer(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(where + ": '" + j.get<std::string>() + "' is not an integer");
    }
  }
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw ParseError(where + ": expected an integer string");
}

inline Rational json_rational(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(where + ": '" + j.get<std::string>() + "' is not a rational");
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError(where + ": expected a \"p/q\" string");
}

inline IntVector json_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
  std::vector<Integer> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(json_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return IntVector(std::move(v));
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

inline std::string json_name(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a name");
  return j.get<std::string>();
}

inline std::size_t json_index(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a nonnegative index");
  return j.get<std::size_t>();
}

inline void each_entry(const json& root, const char* section, auto&& fn) {
  if (!root.contains(section)) return;
  const json& s = root.at(section);
  if (!s.is_object()) throw ParseError(std::string(section) + ": expected an object of named entries");
  for (const auto& [name, body] : s.items()) fn(name, body, std::string(section) + "." + name);
}

inline std::size_t declared_rank(const Scene& sc, const json& body, const std::string& where) {
  if (body.contains("rank")) return json_index(body.at("rank"), where + ".rank");
  if (body.contains("lattice")) return sc.lattices.at(json_name(body.at("lattice"), where + ".lattice"));
  throw ParseError(where + ": needs 'rank' or 'lattice'");
}

/// Runs `fn`, turning library errors into ValidationError for the entity.
template <class F>
auto validate(const std::string& kind, const std::string& name, F&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const UnknownEntity& e) {
    throw ValidationError(kind, name, e.what());
  } catch (const std::exception& e) {
    throw ValidationError(kind, name, e.what());
  }
}

inline const FanSystem& space_system(const Scene& sc, const std::string& name) { return sc.spaces.at(name).system; }

}  // namespace detail

inline Scene scene_from_json(const json& root) {
  using namespace detail;
  if (!root.is_object()) throw ParseError("scene: expected a JSON object");
  static const std::set<std::string> sections = {"lattices", "cones", "maps",   "fans",
                                                 "systems",  "morphisms", "weights", "points"};
  for (const auto& [key, _] : root.items())
    if (!sections.count(key) && key.rfind("_", 0) != 0) throw ParseError("scene: unknown section '" + key + "'");

  Scene sc;
  sc.source = root;
  each_entry(root, "lattices", [&](const std::string& name, const json& body, const std::string& where) {
    sc.lattices.add(name, json_index(body, where));
  });
  each_entry(root, "cones", [&](const std::string& name, const json& body, const std::string& where) {
    const std::size_t n = declared_rank(sc, body, where);
    std::vector<IntVector> gens;
    for (const auto& g : field(body, "generators", where)) gens.push_back(json_vector(g, where + ".generators"));
    sc.cones.add(name, validate("cone", name, [&] { return Cone::from_generators(gens, n); }));
  });
  each_entry(root, "maps", [&](const std::string& name, const json& body, const std::string& where) {
    const std::size_t r = json_index(field(body, "rows", where), where + ".rows");
    const std::size_t c = json_index(field(body, "cols", where), where + ".cols");
    const json& entries = field(body, "entries", where);
    if (!entries.is_array() || entries.size() != r) throw ParseError(where + ".entries: expected " + std::to_string(r) + " rows");
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      const IntVector row = json_vector(entries[i], where + ".entries");
      if (row.rank() != c) throw ValidationError("map", name, "row " + std::to_string(i) + " has the wrong length");
      for (std::size_t k = 0; k < c; ++k) m(i, k) = row[k];
    }
    sc.maps.add(name, std::move(m));
  });
  auto label_of = [&](const json& body, const std::string& where, const char* fallback) {
    return body.contains("label") ? json_name(body.at("label"), where + ".label") : std::string(fallback);
  };
  each_entry(root, "fans", [&](const std::string& name, const json& body, const std::string& where) {
    std::vector<Cone> cones;
    for (const auto& c : field(body, "cones", where)) cones.push_back(sc.cones.at(json_name(c, where + ".cones")));
    const std::size_t n = body.contains("rank") || body.contains("lattice") ? declared_rank(sc, body, where)
                          : cones.empty()                                   ? throw ParseError(where + ": empty fan needs a rank")
                                                                            : cones.front().rank();
    Fan f = validate("fan", name, [&] { return Fan::build(cones, n); });
    SceneSpace s{f.system(), f, label_of(body, where, "y")};
    if (sc.spaces.has(name)) throw ValidationError("fan", name, "name already used by another space");
    sc.spaces.add(name, std::move(s));
  });
  each_entry(root, "systems", [&](const std::string& name, const json& body, const std::string& where) {
    FanSystem sys = validate("system", name, [&] {
      if (body.contains("projection")) {
        const json& p = body.at("projection");
        const SceneSpace& src = sc.spaces.at(json_name(field(p, "fan", where), where + ".projection.fan"));
        if (!src.fan) throw ParseError(where + ".projection.fan: not a fan");
        return project_prevariety(*src.fan, sc.maps.at(json_name(field(p, "map", where), where))).system;
      }
      std::vector<Cone> charts;
      for (const auto& c : field(body, "charts", where)) charts.push_back(sc.cones.at(json_name(c, where + ".charts")));
      GluingTable table;
      if (body.contains("gluing")) {
        for (const auto& g : body.at("gluing")) {
          const json& ij = field(g, "charts", where + ".gluing");
          if (!ij.is_array() || ij.size() != 2) throw ParseError(where + ".gluing: 'charts' must be a pair");
          const std::size_t i = json_index(ij[0], where + ".gluing"), j = json_index(ij[1], where + ".gluing");
          const Cone& cone = sc.cones.at(json_name(field(g, "cone", where + ".gluing"), where + ".gluing"));
          table[std::minmax(i, j)] = cone;
        }
      }
      const std::size_t n = body.contains("rank") || body.contains("lattice") ? declared_rank(sc, body, where)
                            : charts.empty() ? throw ParseError(where + ": empty system needs a rank")
                                             : charts.front().rank();
      return FanSystem::build(charts, table, n);
    });
    if (sc.spaces.has(name)) throw ValidationError("system", name, "name already used by another space");
    sc.spaces.add(name, SceneSpace{std::move(sys), std::nullopt, label_of(body, where, "~y")});
  });
  each_entry(root, "morphisms", [&](const std::string& name, const json& body, const std::string& where) {
    const std::string source = json_name(field(body, "source", where), where + ".source");
    const std::string target = json_name(field(body, "target", where), where + ".target");
    sc.morphisms.add(name, validate("morphism", name, [&] {
      const IntMatrix& m = sc.maps.at(json_name(field(body, "map", where), where + ".map"));
      const FanSystem& src = space_system(sc, source);
      const FanSystem& dst = space_system(sc, target);
      std::optional<std::vector<std::size_t>> charts;
      if (body.contains("charts")) {
        charts.emplace();
        for (const auto& c : body.at("charts")) charts->push_back(json_index(c, where + ".charts"));
      }
      return SceneMorphism{ToricMorphism::build(m, src, dst, charts), source, target};
    }));
  });
  each_entry(root, "weights", [&](const std::string& name, const json& body, const std::string& where) {
    sc.weights.add(name, json_vector(body, where));
  });
  each_entry(root, "points", [&](const std::string& name, const json& body, const std::string& where) {
    const std::string space = json_name(field(body, "space", where), where + ".space");
    sc.points.add(name, validate("point", name, [&] {
      const FanSystem& sys = space_system(sc, space);
      const Cone gamma = body.contains("cone") ? sc.cones.at(json_name(body.at("cone"), where + ".cone"))
                                               : Cone::zero(sys.rank());
      std::vector<Rational> coset;
      if (body.contains("coset"))
        for (const auto& q : body.at("coset")) coset.push_back(json_rational(q, where + ".coset"));
      else
        coset.assign(sys.rank(), Rational(1));
      std::optional<OrbitIndex> o;
      if (body.contains("chart")) {
        const std::size_t i = json_index(body.at("chart"), where + ".chart");
        if (i >= sys.chart_count() || !sys.is_chart_face(i, gamma)) throw Error("cone is not a face of the chart");
        o = sys.canonical(i, gamma);
      } else {
        o = sys.find_orbit(gamma);
      }
      if (!o) throw Error("cone is not an orbit of the space");
      return ScenePoint{space, OrbitPoint::make(*o, TorusElement(std::move(coset)))};
    }));
  });
  return sc;
}

inline json parse_scene_json(const std::string& text, const std::string& origin = "scene") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

inline Scene parse_scene(const std::string& text) { return scene_from_json(parse_scene_json(text)); }

}  // namespace toricq

#include "toricq/example_scene.hpp"

namespace toricq {

inline Scene builtin_scene(const std::string& name) {
  if (name == "paper") return parse_scene(example_scene_text());
  if (name == "empty") return Scene{};
  throw UnknownEntity("built-in scene", name);
}

/// A path, or the name of a built-in scene ("paper", "empty").
inline Scene load_scene(const std::string& path) {
  if (path == "paper" || path == "empty") return builtin_scene(path);
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return scene_from_json(parse_scene_json(buf.str(), path));
}

}  // namespace toricq
