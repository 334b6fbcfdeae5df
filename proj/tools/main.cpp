// Command-line front end: validate a model, build and analyze a twist,
// produce a Krein report, and run the fixed demos.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mintwist/report.hpp"

namespace {

using namespace mintwist;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ModelDescriptor resolve_model(const std::string& builtin,
                              const std::string& path) {
  if (!builtin.empty()) return builtin_model(builtin);
  if (!path.empty()) return load_model(read_file(path));
  throw Error("no model given: pass a file path or --builtin NAME");
}

int emit(const cli::Report& report, bool json) {
  std::cout << (json ? report.to_json() + "\n" : report.to_text());
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for minimal twists of finite spectral "
               "triples and their indefinite product structure"};
  app.require_subcommand(1);

  bool json = false;
  double tol_value = 1e-10;
  app.add_flag("--json", json, "emit the report as canonical JSON");
  app.add_option("--tol", tol_value, "absolute entrywise tolerance")
      ->check(CLI::PositiveNumber);

  std::string builtin, path, by = "inline", prefer, demo_name;

  auto add_model_options = [&](CLI::App* cmd) {
    cmd->add_option("model", path, "path to a model JSON document");
    cmd->add_option("--builtin", builtin,
                    "builtin model name (see `demo --list`)");
  };

  CLI::App* validate = app.add_subcommand("validate", "run the axiom battery");
  add_model_options(validate);

  CLI::App* twist = app.add_subcommand(
      "twist", "build the minimal twist and report its properties");
  add_model_options(twist);
  twist->add_option("--by", by, "twisting operator source: grading | inline")
      ->check(CLI::IsMember({"grading", "inline"}));

  CLI::App* krein = app.add_subcommand(
      "krein", "solve for implementers and analyze the twisted product");
  add_model_options(krein);
  krein->add_option(
      "--prefer", prefer,
      "implementer preference: a model-defined name (e.g. gamma0) or an "
      "inline JSON matrix");

  CLI::App* demo = app.add_subcommand("demo", "run a fixed demonstration");
  demo->add_option("name", demo_name, "torsion | krein-manifold | traces");
  bool list = false;
  demo->add_flag("--list", list, "list builtin models and demo names");

  CLI11_PARSE(app, argc, argv);

  try {
    const Tolerance tol(tol_value);
    if (validate->parsed()) {
      return emit(cli::cmd_validate(resolve_model(builtin, path), tol), json);
    }
    if (twist->parsed()) {
      const TwistSource source =
          by == "grading" ? TwistSource::Grading : TwistSource::Inline;
      return emit(cli::cmd_twist(resolve_model(builtin, path), source, tol),
                  json);
    }
    if (krein->parsed()) {
      std::optional<std::string> preference;
      if (!prefer.empty()) preference = prefer;
      return emit(cli::cmd_krein(resolve_model(builtin, path), preference, tol),
                  json);
    }
    if (demo->parsed()) {
      if (list) {
        std::cout << "builtin models:\n";
        for (const auto& name : builtin_names()) {
          std::cout << "  " << name << "\n";
        }
        std::cout << "demos:\n  torsion\n  krein-manifold\n  traces\n";
        return 0;
      }
      return emit(cli::cmd_demo(demo_name), json);
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
