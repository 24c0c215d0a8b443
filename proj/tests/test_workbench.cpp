#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "support.hpp"
#include "toricq/workbench.hpp"

using namespace toricq;

namespace {

const Scene& builtin() {
  static const Scene value = load_scene("paper");
  return value;
}

void collect_leaves(const json& j, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) collect_leaves(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_leaves(v, out);
  } else if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (!j.is_null()) {
    out.push_back(j.dump());
  }
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(TORICQ_CLI) + " " + args + " 2>&1";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Scene, BuiltinExampleScene) {
  const Scene& sc = builtin();
  const QuotientExample ex = worked_example();
  EXPECT_EQ(sc.maps.at("P"), ex.lattice_map);
  EXPECT_EQ(sc.weights.at("w"), ex.weight);
  EXPECT_EQ(sc.spaces.at("Delta").fan->all_cones(), ex.x.all_cones());
  EXPECT_EQ(sc.spaces.at("C3").fan->all_cones(), ex.affine3.all_cones());
  EXPECT_EQ(sc.spaces.at("Ytilde").system.charts(), ex.ytilde.charts());
  EXPECT_EQ(sc.spaces.at("Ytilde").system.orbits(), ex.ytilde.orbits());
  EXPECT_EQ(sc.morphisms.at("pi").morphism.cone_assignment(), ex.pi.cone_assignment());
  EXPECT_EQ(sc.morphisms.at("kappa").morphism.cone_assignment(), ex.kappa.cone_assignment());
  EXPECT_EQ(sc.morphisms.at("pitilde").morphism.cone_assignment(), ex.pitilde.cone_assignment());
  EXPECT_EQ(sc.orbit_label("Ytilde", ex.ytilde.canonical(1, ex.rho4)), "~y_rho4");
  EXPECT_EQ(sc.orbit_label("C3", *ex.affine3.system().find_orbit(ex.zero3)), "y0");
}

TEST(Scene, ShippedFileMatchesBuiltin) {
  const Scene file = load_scene(std::string(TORICQ_SOURCE_DIR) + "/scenes/paper.json");
  EXPECT_EQ(file.source, builtin().source);
}

TEST(Scene, ProjectionSystem) {
  const Scene sc = parse_scene(R"({
    "cones": {"a": {"rank": 2, "generators": [["1", "0"]]}, "b": {"rank": 2, "generators": [["0", "1"]]}},
    "maps": {"sum": {"rows": 1, "cols": 2, "entries": [["1", "1"]]}},
    "fans": {"F": {"cones": ["a", "b"]}},
    "systems": {"Y": {"projection": {"fan": "F", "map": "sum"}}}
  })");
  EXPECT_FALSE(sc.spaces.at("Y").system.separated());
  EXPECT_EQ(sc.spaces.at("Y").system.chart_count(), 2u);
}

TEST(Scene, ValidationErrors) {
  try {
    parse_scene(R"({"cones": {"q": {"rank": 2, "generators": [["1", "0"], ["0", "1"]]},
                              "d": {"rank": 2, "generators": [["1", "1"]]}},
                    "fans": {"bad": {"cones": ["q", "d"]}}})");
    FAIL() << "fan accepted";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind, "fan");
    EXPECT_EQ(e.name, "bad");
    EXPECT_NE(e.reason.find("not a face"), std::string::npos);
  }
  try {
    parse_scene(R"({"fans": {"F": {"cones": ["missing"]}}})");
    FAIL() << "dangling name accepted";
  } catch (const UnknownEntity& e) {
    EXPECT_EQ(e.name, "missing");
  }
  EXPECT_THROW(parse_scene(R"({"cones": {"c": {"rank": 2, "generators": [["1", "0", "0"]]}}})"), ValidationError);
  EXPECT_THROW(parse_scene(R"({"cones": {"c": {"rank": 2, "generators": [[1.5, 0]]}}})"), ParseError);
  EXPECT_THROW(parse_scene(R"({"cones": )"), ParseError);
  EXPECT_THROW(parse_scene(R"({"planets": {}})"), ParseError);
  EXPECT_THROW(load_scene("/nonexistent/scene.json"), ParseError);
  EXPECT_TRUE(parse_scene("{}").empty());
  EXPECT_TRUE(load_scene("empty").empty());
}

TEST(Workbench, VerifyExample) {
  const auto out = run_command(builtin(), "verify-example");
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.record["checks"].size(), 7u);
  EXPECT_TRUE(out.record["passed"].get<bool>());
  const auto variant = run_command(parse_scene(R"({"maps": {"Q": {"rows": 3, "cols": 4,
      "entries": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]]}}})"),
                                   "verify-example", {{"map", "Q"}});
  EXPECT_EQ(variant.exit_code, 1);
}

TEST(Workbench, LimitsListsTwoPoints) {
  const auto out = run_command(builtin(), "limits", {{"system", "Ytilde"}, {"v", "1,1,0"}, {"point", "torus:2,3,5"}});
  ASSERT_EQ(out.exit_code, 0) << out.record.dump();
  ASSERT_EQ(out.record["limits"].size(), 2u);
  EXPECT_EQ(out.record["limits"][0]["orbit"], "~y_tau1");
  EXPECT_EQ(out.record["limits"][1]["orbit"], "~y_rho4");
  const auto named = run_command(builtin(), "limits", {{"system", "Ytilde"}, {"v", "1,1,0"}, {"point", "t0"}});
  EXPECT_EQ(named.record["limits"], out.record["limits"]);
  const auto sep = run_command(builtin(), "limits", {{"fan", "C3"}, {"v", "1,1,0"}, {"point", "torus:2,3,5"}});
  EXPECT_EQ(sep.record["count"], 1);
}

TEST(Workbench, DualOfTau1) {
  const auto out = run_command(builtin(), "dual", {{"cone", "tau1"}});
  ASSERT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.record["generators"], json::parse(R"([["0","1","0"],["1","0","0"],["0","0","1"],["0","0","-1"]])"));
  const auto inline_cone = run_command(builtin(), "dual", {{"cone", "1,0,0;0,1,0"}});
  EXPECT_EQ(inline_cone.record["dual"], out.record["dual"]);
}

TEST(Workbench, OtherCommands) {
  const Scene& sc = builtin();
  EXPECT_EQ(run_command(sc, "faces", {{"cone", "delta"}}).record["count"], 8);
  EXPECT_EQ(run_command(sc, "classify", {{"cone", "delta"}, {"v", "1,1,0"}}).record["face"]["name"], "tau1");
  EXPECT_EQ(run_command(sc, "classify", {{"cone", "delta"}, {"v", "-1,1,0"}}).record["kind"], "outside");
  EXPECT_EQ(run_command(sc, "fan-check", {{"fan", "Delta"}}).exit_code, 0);
  EXPECT_EQ(run_command(sc, "fan-check", {{"cones", "tau1,rho3"}}).exit_code, 0);
  const auto bad = run_command(sc, "fan-check", {{"cones", "tau1,tau2"}});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_FALSE(bad.record["valid"].get<bool>());
  const auto img = run_command(sc, "image", {{"morphism", "pi"}});
  EXPECT_EQ(img.record["present"].size(), 6u);
  EXPECT_EQ(img.record["absent"].size(), 2u);
  EXPECT_EQ(run_command(sc, "codim", {{"morphism", "pi"}}).record["complement_codim"], 2);
  const auto fib = run_command(sc, "fibers", {{"morphism", "kappa"}, {"point", "tau1:2,3,5"}});
  ASSERT_EQ(fib.record["fibers"].size(), 1u);
  EXPECT_EQ(fib.record["fibers"][0]["pieces"].size(), 2u);
  EXPECT_EQ(run_command(sc, "fibers", {{"morphism", "kappa"}}).record["fibers"].size(), 8u);
  const auto id = run_command(sc, "identify", {{"system", "Ytilde"}, {"morphism", "kappa"}});
  EXPECT_EQ(id.exit_code, 0);
  EXPECT_EQ(id.record["classes"].size(), 6u);
  EXPECT_TRUE(id.record["matches_fibers"].get<bool>());
  EXPECT_EQ(run_command(sc, "invariance", {{"weight", "w"}, {"map", "P"}}).exit_code, 0);
  EXPECT_EQ(run_command(sc, "invariance", {{"weight", "w"}, {"map", "I3"}}).exit_code, 2);
}

TEST(Workbench, InputErrors) {
  const Scene& sc = builtin();
  EXPECT_EQ(run_command(sc, "frobnicate").exit_code, 2);
  EXPECT_EQ(run_command(sc, "dual", {{"cone", "nope"}}).exit_code, 2);
  EXPECT_EQ(run_command(sc, "dual").exit_code, 2);
  EXPECT_EQ(run_command(sc, "limits", {{"system", "Ytilde"}, {"v", "1,x,0"}}).exit_code, 2);
  EXPECT_EQ(run_command(sc, "limits", {{"system", "Ytilde"}, {"v", "1,1,0"}, {"point", "torus:2,3"}}).exit_code, 2);
  EXPECT_EQ(run_command(sc, "limits", {{"system", "Ytilde"}, {"v", "1,1,0"}, {"point", "x0"}}).exit_code, 2);
  const auto err = run_command(sc, "image", {{"morphism", "pitilde"}});
  EXPECT_EQ(err.exit_code, 2);
  EXPECT_TRUE(err.record.contains("error"));
}

TEST(Workbench, DeterministicAndTextAgrees) {
  const Scene& sc = builtin();
  const std::vector<std::pair<std::string, CommandArgs>> runs = {
      {"verify-example", {}},
      {"limits", {{"system", "Ytilde"}, {"v", "1,1,0"}, {"point", "torus:2,3,5"}}},
      {"identify", {{"system", "Ytilde"}, {"morphism", "kappa"}}},
      {"fibers", {{"morphism", "kappa"}}},
      {"image", {{"morphism", "pi"}}},
      {"dual", {{"cone", "tau2"}}},
      {"faces", {{"cone", "tau2"}}},
  };
  for (const auto& [cmd, args] : runs) {
    const auto a = run_command(sc, cmd, args), b = run_command(load_scene("paper"), cmd, args);
    ASSERT_EQ(render_json(a.record), render_json(b.record)) << cmd;
    const std::string text = render_text(a.record);
    std::vector<std::string> leaves;
    collect_leaves(a.record, leaves);
    std::size_t pos = 0;
    for (const auto& leaf : leaves) {
      const auto at = text.find(leaf, pos);
      ASSERT_NE(at, std::string::npos) << cmd << ": '" << leaf << "' missing from text output";
      pos = at;
    }
    ASSERT_EQ(render_text(a.record, true).find("\x1b[") != std::string::npos, text.find("PASS") != std::string::npos);
  }
}

TEST(Cli, ExitCodesAndFormats) {
  const auto ok = run_cli("verify-example --format json");
  EXPECT_EQ(ok.code, 0);
  const json j = json::parse(ok.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  const auto lim = run_cli("limits --system Ytilde --v 1,1,0 --point torus:2,3,5");
  EXPECT_EQ(lim.code, 0);
  EXPECT_NE(lim.out.find("~y_rho4"), std::string::npos);
  EXPECT_EQ(lim.out.find("\x1b["), std::string::npos);
  const auto file = run_cli(std::string("image --morphism pi --scene ") + TORICQ_SOURCE_DIR + "/scenes/paper.json");
  EXPECT_EQ(file.code, 0);
  EXPECT_EQ(run_cli("verify-example --scene /nonexistent.json").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("limits --format yaml").code, 2);
  const std::string bad = testing::TempDir() + "bad_fan.json";
  std::ofstream(bad) << R"({"cones": {"q": {"rank": 2, "generators": [["1","0"],["0","1"]]},
                                      "d": {"rank": 2, "generators": [["1","1"]]}},
                           "fans": {"bad": {"cones": ["q", "d"]}}})";
  const auto v = run_cli("fan-check --scene " + bad);
  EXPECT_EQ(v.code, 2);
  EXPECT_NE(v.out.find("fan 'bad'"), std::string::npos);
}
