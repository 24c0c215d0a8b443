#pragma once

// Command dispatch for the command-line front end. Every command produces
// one JSON record; the text format is a rendering of that record.

#include "toricq/scene.hpp"

namespace toricq {

class UnknownCommand : public Error {
 public:
  explicit UnknownCommand(const std::string& name) : Error("unknown command '" + name + "'") {}
};

class InputError : public Error {
 public:
  using Error::Error;
};

using CommandArgs = std::map<std::string, std::string>;

struct CommandOutput {
  json record;
  int exit_code = 0;  ///< 0 success, 1 failed check, 2 input error
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"dual",   "faces",  "classify",   "fan-check",
                                                 "image",  "fibers", "limits",     "identify",
                                                 "invariance", "codim", "verify-example"};
  return names;
}

namespace detail {

inline json vector_json(const IntVector& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.rank(); ++i) a.push_back(to_string(v[i]));
  return a;
}

inline json vectors_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

inline json lattice_json(const Sublattice& l) {
  json a = json::array();
  for (const auto& b : l.basis()) a.push_back(vector_json(b));
  return a;
}

inline json cone_json(const Scene& sc, const Cone& c) {
  json j;
  if (auto n = sc.cone_name(c)) j["name"] = *n;
  j["dim"] = c.dim();
  j["rays"] = vectors_json(c.rays());
  j["lineality"] = lattice_json(c.lineality());
  return j;
}

inline json torus_json(const TorusElement& t) {
  json a = json::array();
  for (const auto& q : t.coords()) a.push_back(to_string(q));
  return a;
}

inline json point_json(const Scene& sc, const std::string& space, const OrbitPoint& p) {
  json j;
  j["orbit"] = sc.orbit_label(space, p.orbit);
  j["chart"] = p.orbit.chart;
  j["coset"] = torus_json(p.coset);
  return j;
}

inline json orbit_json(const Scene& sc, const std::string& space, const OrbitIndex& o) {
  json j;
  j["orbit"] = sc.orbit_label(space, o);
  j["chart"] = o.chart;
  j["rays"] = vectors_json(o.cone.rays());
  return j;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline IntVector parse_vector_arg(const std::string& s, const std::string& flag) {
  std::vector<Integer> v;
  try {
    for (const auto& part : split(s, ',')) v.push_back(parse_integer(part));
  } catch (const std::exception&) {
    throw InputError("--" + flag + ": '" + s + "' is not a comma-separated integer vector");
  }
  return IntVector(std::move(v));
}

inline std::vector<Rational> parse_coset_arg(const std::string& s) {
  std::vector<Rational> v;
  try {
    for (const auto& part : split(s, ',')) v.push_back(parse_rational(part));
  } catch (const std::exception&) {
    throw InputError("--point: '" + s + "' is not a comma-separated list of rationals");
  }
  return v;
}

inline const std::string& need(const CommandArgs& args, const std::string& key) {
  auto it = args.find(key);
  if (it == args.end() || it->second.empty()) throw InputError("missing --" + key);
  return it->second;
}

/// A cone by name, or inline generators "1,0,0;0,1,0".
inline Cone cone_arg(const Scene& sc, const std::string& s) {
  if (sc.cones.has(s) || s.find(',') == std::string::npos) return sc.cones.at(s);
  std::vector<IntVector> gens;
  for (const auto& g : split(s, ';'))
    if (!g.empty()) gens.push_back(parse_vector_arg(g, "cone"));
  if (gens.empty()) throw InputError("--cone: no generators");
  return Cone::from_generators(gens, gens.front().rank());
}

/// Space named by the first present flag among `keys`; if none is given and
/// the scene has exactly one matching space, that one.
inline std::string space_arg(const Scene& sc, const CommandArgs& args, std::initializer_list<const char*> keys,
                             bool fans_only = false) {
  for (const char* k : keys)
    if (auto it = args.find(k); it != args.end() && !it->second.empty()) {
      const auto& s = sc.spaces.at(it->second);
      if (fans_only && !s.fan) throw InputError("'" + it->second + "' is not a fan");
      return it->second;
    }
  std::vector<std::string> candidates;
  for (const auto& n : sc.spaces.names())
    if (!fans_only || sc.spaces.at(n).fan) candidates.push_back(n);
  if (candidates.size() == 1) return candidates.front();
  throw InputError(std::string("missing --") + *keys.begin());
}

inline std::string morphism_arg(const Scene& sc, const CommandArgs& args) {
  if (auto it = args.find("morphism"); it != args.end() && !it->second.empty()) {
    sc.morphisms.at(it->second);
    return it->second;
  }
  if (sc.morphisms.size() == 1) return sc.morphisms.names().front();
  throw InputError("missing --morphism");
}

/// Point syntax: a scene point name, "torus[:c1,...]" or
/// "CONE[@chart][:c1,...]" with the coset given as a full torus element.
inline OrbitPoint point_arg(const Scene& sc, const std::string& space, const std::string& s) {
  const FanSystem& sys = sc.spaces.at(space).system;
  if (sc.points.has(s)) {
    const ScenePoint& p = sc.points.at(s);
    if (p.space != space) throw InputError("point '" + s + "' lives on '" + p.space + "', not on '" + space + "'");
    return p.point;
  }
  const auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::vector<Rational> coset(sys.rank(), Rational(1));
  if (colon != std::string::npos) coset = parse_coset_arg(s.substr(colon + 1));
  if (coset.size() != sys.rank()) throw InputError("--point: coset has " + std::to_string(coset.size()) + " entries, expected " + std::to_string(sys.rank()));
  for (const auto& q : coset)
    if (q == 0) throw InputError("--point: coset entries must be nonzero");
  std::optional<std::size_t> chart;
  if (auto at = head.find('@'); at != std::string::npos) {
    try {
      chart = std::stoul(head.substr(at + 1));
    } catch (const std::exception&) {
      throw InputError("--point: bad chart index in '" + s + "'");
    }
    head = head.substr(0, at);
  }
  const Cone gamma = head == "torus" ? Cone::zero(sys.rank()) : sc.cones.at(head);
  std::optional<OrbitIndex> o;
  if (chart) {
    if (*chart >= sys.chart_count() || !sys.is_chart_face(*chart, gamma))
      throw InputError("--point: " + head + " is not a face of chart " + std::to_string(*chart));
    o = sys.canonical(*chart, gamma);
  } else {
    o = sys.find_orbit(gamma);
  }
  if (!o) throw InputError("--point: " + head + " is not an orbit of '" + space + "'");
  return OrbitPoint::make(*o, TorusElement(std::move(coset)));
}

inline json fan_cones_json(const Scene& sc, const std::string& space) {
  json a = json::array();
  for (const auto& o : sc.spaces.at(space).system.orbits()) a.push_back(orbit_json(sc, space, o));
  return a;
}

inline CommandOutput cmd_dual(const Scene& sc, const CommandArgs& args) {
  const Cone c = cone_arg(sc, need(args, "cone"));
  const Cone d = c.dual();
  json r;
  r["cone"] = cone_json(sc, c);
  r["dual"] = cone_json(sc, d);
  r["generators"] = vectors_json(d.generators());
  r["semigroup"] = vectors_json(semigroup_generators(d));
  return {r, 0};
}

inline CommandOutput cmd_faces(const Scene& sc, const CommandArgs& args) {
  const Cone c = cone_arg(sc, need(args, "cone"));
  auto faces = c.faces();
  std::sort(faces.begin(), faces.end());
  json r;
  r["cone"] = cone_json(sc, c);
  r["count"] = faces.size();
  r["faces"] = json::array();
  for (const auto& f : faces) r["faces"].push_back(cone_json(sc, f));
  return {r, 0};
}

inline CommandOutput cmd_classify(const Scene& sc, const CommandArgs& args) {
  const Cone c = cone_arg(sc, need(args, "cone"));
  const IntVector v = parse_vector_arg(need(args, "v"), "v");
  if (v.rank() != c.rank()) throw InputError("--v has the wrong length");
  const auto k = c.classify(v);
  json r;
  r["cone"] = cone_json(sc, c);
  r["v"] = vector_json(v);
  switch (k.kind) {
    case PointClassification::Kind::Outside: r["kind"] = "outside"; break;
    case PointClassification::Kind::OnFace: r["kind"] = "boundary"; break;
    case PointClassification::Kind::Relint: r["kind"] = "relint"; break;
  }
  r["face"] = k.kind == PointClassification::Kind::OnFace   ? cone_json(sc, k.face.front())
              : k.kind == PointClassification::Kind::Relint ? cone_json(sc, c)
                                                            : json(nullptr);
  return {r, 0};
}

inline CommandOutput cmd_fan_check(const Scene& sc, const CommandArgs& args) {
  json r;
  if (auto it = args.find("cones"); it != args.end()) {
    std::vector<Cone> cones;
    for (const auto& n : split(it->second, ','))
      if (!n.empty()) cones.push_back(sc.cones.at(n));
    if (cones.empty()) throw InputError("--cones: no cones given");
    r["cones"] = json::array();
    for (const auto& c : cones) r["cones"].push_back(cone_json(sc, c));
    try {
      const Fan f = Fan::build(cones, cones.front().rank());
      r["valid"] = true;
      r["maximal"] = json::array();
      for (const auto& c : f.maximal_cones()) r["maximal"].push_back(cone_json(sc, c));
      r["cone_count"] = f.all_cones().size();
    } catch (const FanViolation& e) {
      r["valid"] = false;
      r["reason"] = e.what();
      return {r, 1};
    }
    return {r, 0};
  }
  const std::string space = space_arg(sc, args, {"fan", "system"});
  const SceneSpace& s = sc.spaces.at(space);
  r["space"] = space;
  r["valid"] = true;
  r["separated"] = s.system.separated();
  r["charts"] = json::array();
  for (const auto& c : s.system.charts()) r["charts"].push_back(cone_json(sc, c));
  r["orbits"] = fan_cones_json(sc, space);
  return {r, 0};
}

inline CommandOutput cmd_image(const Scene& sc, const CommandArgs& args) {
  const std::string name = morphism_arg(sc, args);
  const SceneMorphism& m = sc.morphisms.at(name);
  const auto img = image_constructible(m.morphism);
  json r;
  r["morphism"] = name;
  auto list = [&](const std::vector<Cone>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(orbit_json(sc, m.target, *m.morphism.target().find_orbit(c)));
    return a;
  };
  r["present"] = list(img.present);
  r["absent"] = list(img.absent);
  const auto codim = complement_codim(img);
  r["complement_codim"] = codim ? json(*codim) : json(nullptr);
  return {r, 0};
}

inline CommandOutput cmd_codim(const Scene& sc, const CommandArgs& args) {
  const std::string name = morphism_arg(sc, args);
  const SceneMorphism& m = sc.morphisms.at(name);
  const auto img = image_constructible(m.morphism);
  const auto codim = complement_codim(img);
  json r;
  r["morphism"] = name;
  r["complement_codim"] = codim ? json(*codim) : json(nullptr);
  r["rank"] = m.morphism.target().rank();
  return {r, 0};
}

inline json fiber_json(const Scene& sc, const SceneMorphism& m, const OrbitPoint& y) {
  json f;
  f["over"] = point_json(sc, m.target, y);
  f["pieces"] = json::array();
  for (const auto& p : fiber_pieces(m.morphism, y)) {
    json pj;
    pj["orbit"] = sc.orbit_label(m.source, p.orbit);
    pj["chart"] = p.orbit.chart;
    pj["subtorus"] = lattice_json(p.subtorus);
    pj["components"] = to_string(p.components);
    pj["representative"] = p.has_rational_representative()
                               ? torus_json(std::get<OrbitPoint>(p.representative).coset)
                               : json(nullptr);
    f["pieces"].push_back(std::move(pj));
  }
  return f;
}

inline CommandOutput cmd_fibers(const Scene& sc, const CommandArgs& args) {
  const std::string name = morphism_arg(sc, args);
  const SceneMorphism& m = sc.morphisms.at(name);
  json r;
  r["morphism"] = name;
  r["fibers"] = json::array();
  if (auto it = args.find("point"); it != args.end()) {
    r["fibers"].push_back(fiber_json(sc, m, point_arg(sc, m.target, it->second)));
  } else {
    const FanSystem& t = m.morphism.target();
    for (const auto& o : t.orbits())
      r["fibers"].push_back(fiber_json(sc, m, distinguished_point(t, o.chart, o.cone)));
  }
  return {r, 0};
}

inline CommandOutput cmd_limits(const Scene& sc, const CommandArgs& args) {
  const std::string space = space_arg(sc, args, {"system", "fan"});
  const FanSystem& sys = sc.spaces.at(space).system;
  const IntVector v = parse_vector_arg(need(args, "v"), "v");
  if (v.rank() != sys.rank()) throw InputError("--v has the wrong length");
  const auto it = args.find("point");
  const OrbitPoint p = point_arg(sc, space, it == args.end() ? std::string("torus") : it->second);
  const auto lim = one_param_limits(sys, v, p);
  json r;
  r["space"] = space;
  r["v"] = vector_json(v);
  r["point"] = point_json(sc, space, p);
  r["count"] = lim.size();
  r["limits"] = json::array();
  for (const auto& q : lim) r["limits"].push_back(point_json(sc, space, q));
  return {r, 0};
}

inline CommandOutput cmd_identify(const Scene& sc, const CommandArgs& args) {
  const std::string space = space_arg(sc, args, {"system", "fan"});
  const auto part = forced_identifications(sc.spaces.at(space).system);
  json r;
  r["space"] = space;
  r["classes"] = json::array();
  for (const auto& cls : part.classes) {
    json c;
    c["orbits"] = json::array();
    for (const auto& o : cls.orbits) c["orbits"].push_back(sc.orbit_label(space, o));
    c["subtorus"] = lattice_json(cls.subtorus);
    r["classes"].push_back(std::move(c));
  }
  r["identifications"] = json::array();
  for (const auto& id : part.identifications) {
    json j;
    j["rule"] = std::string("R") + id.rule;
    j["a"] = sc.orbit_label(space, id.a);
    j["b"] = sc.orbit_label(space, id.b);
    j["curve"] = sc.orbit_label(space, id.curve_orbit);
    j["direction"] = vector_json(id.direction);
    r["identifications"].push_back(std::move(j));
  }
  int code = 0;
  if (auto it = args.find("morphism"); it != args.end()) {
    const SceneMorphism& m = sc.morphisms.at(it->second);
    if (m.source != space) throw InputError("morphism '" + it->second + "' does not start at '" + space + "'");
    const auto cmp = partition_matches_fibers(part, m.morphism);
    r["morphism"] = it->second;
    r["matches_fibers"] = cmp.matches;
    r["report"] = cmp.report;
    code = cmp.matches ? 0 : 1;
  }
  return {r, code};
}

inline CommandOutput cmd_invariance(const Scene& sc, const CommandArgs& args) {
  auto pick = [&](const char* key, const auto& reg) -> const std::string& {
    if (auto it = args.find(key); it != args.end()) return it->second;
    if (reg.size() == 1) return reg.names().front();
    throw InputError(std::string("missing --") + key);
  };
  const std::string& wname = pick("weight", sc.weights);
  const std::string& mname = pick("map", sc.maps);
  const IntVector& w = sc.weights.at(wname);
  const IntMatrix& p = sc.maps.at(mname);
  if (w.rank() != p.cols()) throw InputError("weight and map have incompatible sizes");
  const bool ok = invariance_check(w, p);
  json r;
  r["weight"] = vector_json(w);
  r["map"] = mname;
  r["image"] = vector_json(p * w);
  r["invariant"] = ok;
  r["kernel"] = lattice_json(kernel_saturated(p));
  return {r, ok ? 0 : 1};
}

inline CommandOutput cmd_verify_example(const Scene& sc, const CommandArgs& args) {
  IntMatrix p = example_lattice_map();
  json r;
  if (auto it = args.find("map"); it != args.end()) {
    p = sc.maps.at(it->second);
    r["map"] = it->second;
  }
  const auto report = verify_paper_example(p);
  r["checks"] = json::array();
  for (const auto& c : report.checks) {
    json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "PASS" : "FAIL";
    j["details"] = c.details;
    r["checks"].push_back(std::move(j));
  }
  r["passed"] = report.passed();
  return {r, report.passed() ? 0 : 1};
}

inline void render_value(std::ostringstream& os, const json& j, int indent, bool color);

inline bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

inline std::string scalar_text(const json& j, bool color) {
  if (j.is_null()) return "none";
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (color && s == "PASS") return "\x1b[32mPASS\x1b[0m";
    if (color && s == "FAIL") return "\x1b[31mFAIL\x1b[0m";
    return s;
  }
  return j.dump();
}

inline bool is_integer_tuple(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!e.is_string()) return false;
    const auto& s = e.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) return false;
  }
  return true;
}

/// Inline form for arrays of scalars and arrays of numeric tuples.
inline std::optional<std::string> inline_text(const json& j, bool color) {
  if (is_scalar(j)) return scalar_text(j, color);
  if (!j.is_array()) return std::nullopt;
  if (j.empty()) return std::string("[]");
  if (is_integer_tuple(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + j[i].get<std::string>();
    return s + ")";
  }
  std::string s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto part = is_integer_tuple(j[i]) || is_scalar(j[i]) ? inline_text(j[i], color) : std::nullopt;
    if (!part) return std::nullopt;
    s += (i ? ", " : "") + *part;
  }
  if (s.size() > 72) return std::nullopt;
  return s;
}

inline void render_value(std::ostringstream& os, const json& j, int indent, bool color) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (auto s = inline_text(v, color)) {
        os << pad << k << ": " << *s << "\n";
      } else {
        os << pad << k << ":\n";
        render_value(os, v, indent + 2, color);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (auto s = inline_text(e, color)) {
        os << pad << "- " << *s << "\n";
      } else {
        os << pad << "-\n";
        render_value(os, e, indent + 2, color);
      }
    }
  } else {
    os << pad << scalar_text(j, color) << "\n";
  }
}

}  // namespace detail

inline std::string render_text(const json& record, bool color = false) {
  std::ostringstream os;
  detail::render_value(os, record, 0, color);
  return os.str();
}

inline std::string render_json(const json& record) { return record.dump(2) + "\n"; }

inline CommandOutput run_command(const Scene& scene, const std::string& command, const CommandArgs& args = {}) {
  using namespace detail;
  static const std::map<std::string, CommandOutput (*)(const Scene&, const CommandArgs&)> table = {
      {"dual", cmd_dual},         {"faces", cmd_faces},     {"classify", cmd_classify},
      {"fan-check", cmd_fan_check}, {"image", cmd_image},   {"fibers", cmd_fibers},
      {"limits", cmd_limits},     {"identify", cmd_identify}, {"invariance", cmd_invariance},
      {"codim", cmd_codim},       {"verify-example", cmd_verify_example},
  };
  CommandOutput out;
  try {
    auto it = table.find(command);
    if (it == table.end()) throw UnknownCommand(command);
    out = it->second(scene, args);
  } catch (const std::exception& e) {
    out.record = json::object();
    out.record["error"] = e.what();
    out.exit_code = 2;
  }
  json full;
  full["command"] = command;
  for (auto& [k, v] : out.record.items()) full[k] = v;
  out.record = std::move(full);
  return out;
}

}  // namespace toricq
