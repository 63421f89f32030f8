#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "troptoric/cli.hpp"
#include "troptoric/errors.hpp"

namespace cli = troptoric::cli;

namespace {

int emit(const cli::CommandResult& r, const std::string& json_out, bool verbose) {
  if (verbose) std::cerr << "troptoric " << r.command << ": exit " << r.exit_code << '\n';
  if (json_out.empty()) {
    std::cout << r.output;
    return r.exit_code;
  }
  std::ofstream out(json_out, std::ios::binary);
  if (!out) {
    std::cerr << "troptoric: cannot write '" << json_out << "'\n";
    return cli::kParseError;
  }
  out << r.output;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical toric surfaces: sections, h0 and the Riemann-Roch inequality"};
  app.require_subcommand(1);

  std::string json_out;
  std::uint64_t seed = cli::default_seed();
  bool verbose = false;
  app.add_option("--json-out", json_out, "Write the result to this path instead of stdout");
  app.add_option("--seed", seed, "Seed for every random choice (default: $TROPTORIC_SEED or 20240611)");
  app.add_flag("-v,--verbose", verbose, "Diagnostics on stderr");
  app.fallthrough();

  auto* fan = app.add_subcommand("fan", "Builtin fans, blow-ups and validation");
  fan->require_subcommand(1);
  std::string builtin_name;
  std::optional<int> builtin_param;
  auto* fan_builtin = fan->add_subcommand("builtin", "Print a builtin fan (p2, p1xp1, hirzebruch <a>)");
  fan_builtin->add_option("name", builtin_name)->required();
  fan_builtin->add_option("a", builtin_param, "Hirzebruch parameter");
  std::string fan_path;
  std::int64_t cone_index = 0;
  auto* fan_blowup = fan->add_subcommand("blowup", "Blow up a two-dimensional cone");
  fan_blowup->add_option("fan", fan_path, "fan.json or builtin:<name>")->required();
  fan_blowup->add_option("cone", cone_index, "Index into max_cones")->required();
  auto* fan_validate = fan->add_subcommand("validate", "Check that a fan is valid, smooth and complete");
  fan_validate->add_option("fan", fan_path)->required();

  std::string divisor_path;
  auto* h0 = app.add_subcommand("h0", "Lattice points of the divisor polytope");
  h0->add_option("fan", fan_path)->required();
  h0->add_option("divisor", divisor_path)->required();

  auto* rr = app.add_subcommand("rr", "Check the Riemann-Roch inequality for one divisor");
  rr->add_option("fan", fan_path)->required();
  rr->add_option("divisor", divisor_path)->required();

  std::string points_path;
  auto* sections = app.add_subcommand("sections", "Generators of the section module");
  sections->add_option("fan", fan_path)->required();
  sections->add_option("divisor", divisor_path)->required();
  sections->add_option("--vandermonde", points_path, "points.json with h0-1 points");

  std::string range;
  auto* sweep = app.add_subcommand("sweep", "Check the inequality over a box of divisors");
  sweep->add_option("fan", fan_path)->required();
  sweep->add_option("--range", range, "Coefficient range a..b")->required();

  std::string poly_path;
  auto* curve = app.add_subcommand("curve", "Corner locus of a bivariate tropical polynomial");
  curve->add_option("polynomial", poly_path)->required();
  curve->add_option("--fan", fan_path, "Also report the ray part of the divisor on this fan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kParseError;
  }

  try {
    cli::CommandResult result;
    if (fan_builtin->parsed()) {
      result = cli::fan_builtin(builtin_name, builtin_param);
    } else if (fan_blowup->parsed()) {
      result = cli::fan_blowup(cli::load_json_source(fan_path), cone_index);
    } else if (fan_validate->parsed()) {
      result = cli::fan_validate(cli::load_json_source(fan_path));
    } else if (h0->parsed()) {
      result = cli::h0(cli::load_json_source(fan_path), cli::load_json_source(divisor_path));
    } else if (rr->parsed()) {
      result = cli::rr(cli::load_json_source(fan_path), cli::load_json_source(divisor_path));
    } else if (sections->parsed()) {
      std::optional<troptoric::Json> points;
      if (!points_path.empty()) points = cli::load_json_source(points_path);
      result = cli::sections(cli::load_json_source(fan_path), cli::load_json_source(divisor_path), points);
    } else if (sweep->parsed()) {
      if (verbose) std::cerr << "troptoric sweep: seed " << seed << '\n';
      result = cli::sweep(cli::load_json_source(fan_path), range, seed);
    } else if (curve->parsed()) {
      std::optional<troptoric::Json> fan_json;
      if (!fan_path.empty()) fan_json = cli::load_json_source(fan_path);
      if (verbose) {
        std::cerr << "troptoric curve: balancing is checked as sum of w*v = 0, "
                     "not the '= 1' form, which is read as a typo\n";
      }
      result = cli::curve(cli::load_json_source(poly_path), fan_json);
    }
    return emit(result, json_out, verbose);
  } catch (const troptoric::ParseError& e) {
    std::cerr << "troptoric: " << e.what() << '\n';
    return cli::kParseError;
  }
}
