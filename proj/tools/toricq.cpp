// toricq: run lattice, cone, fan and quotient computations on a scene file.

#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include <CLI11.hpp>

#include "toricq/workbench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact toric geometry workbench"};
  std::string command, scene_path = "paper", format = "text";
  toricq::CommandArgs args;
  const std::pair<const char*, const char*> keys[] = {
      {"cone", "cone name, or inline generators like 1,0,0;0,1,0"},
      {"cones", "comma-separated cone names (fan-check)"},
      {"v", "integer vector, e.g. 1,1,0"},
      {"point", "scene point, torus[:c1,...] or CONE[@chart][:c1,...]"},
      {"system", "fan system name"},
      {"fan", "fan name"},
      {"morphism", "morphism name"},
      {"weight", "weight name (invariance)"},
      {"map", "lattice map name"},
  };
  std::map<std::string, std::string> values;

  std::string commands;
  for (const auto& c : toricq::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("--scene", scene_path, "scene file, or a built-in scene: paper, empty")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  for (const auto& [k, help] : keys) app.add_option(std::string("--") + k, values[k], help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto& [k, v] : values)
    if (!v.empty()) args[k] = v;

  const bool color = format == "text" && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  toricq::CommandOutput out;
  try {
    const toricq::Scene scene = toricq::load_scene(scene_path);
    out = toricq::run_command(scene, command, args);
  } catch (const std::exception& e) {
    out.record = toricq::json::object();
    out.record["command"] = command;
    out.record["error"] = e.what();
    out.exit_code = 2;
  }
  const std::string text = format == "json" ? toricq::render_json(out.record) : toricq::render_text(out.record, color);
  (out.exit_code == 2 ? std::cerr : std::cout) << text;
  return out.exit_code;
}
