#include "troptoric/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "troptoric/errors.hpp"
#include "troptoric/sections.hpp"

namespace troptoric::cli {

namespace {

template <class Body>
CommandResult run(std::string command, Json input, Body&& body) {
  CommandResult r{std::move(command), std::move(input), {}, kOk};
  auto fail = [&](int code, const std::string& message) {
    r.exit_code = code;
    r.output = Json{{"error", message}}.dump(2) + "\n";
  };
  try {
    body(r);
  } catch (const ParseError& e) {
    fail(kParseError, e.what());
  } catch (const Json::exception& e) {
    fail(kParseError, e.what());
  } catch (const PreconditionError& e) {
    fail(kPreconditionViolation, e.what());
  }
  return r;
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

FanPtr load_fan(const Json& j) { return share(fan_from_json(j)); }

Json points_json(const std::vector<LatticeVector>& pts) {
  Json out = Json::array();
  for (LatticeVector p : pts) out.push_back(lattice_to_json(p));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& range) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(range, m, pattern)) throw ParseError("range must look like a..b, got '" + range + "'");
  return {std::stoll(m[1].str()), std::stoll(m[2].str())};
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TROPTORIC_SEED")) {
    std::uint64_t seed = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec == std::errc() && ptr == s.data() + s.size()) return seed;
  }
  return kFallbackSeed;
}

Json load_json_source(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return fan_to_json(builtin_fan(source.substr(prefix.size())));
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open '" + source + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + source + "': " + e.what());
  }
}

CommandResult fan_builtin(const std::string& name, std::optional<int> parameter) {
  Json input{{"name", name}};
  if (parameter) input["parameter"] = *parameter;
  return run("fan builtin", input, [&](CommandResult& r) {
    std::string key = name;
    if (name == "hirzebruch") {
      if (!parameter) throw ParseError("hirzebruch needs a parameter a >= 0");
      key += ":" + std::to_string(*parameter);
    } else if (parameter) {
      throw ParseError("builtin '" + name + "' takes no parameter");
    }
    r.output = pretty(fan_to_json(builtin_fan(key)));
  });
}

CommandResult fan_blowup(const Json& fan, std::int64_t cone_index) {
  return run("fan blowup", Json{{"fan", fan}, {"cone", cone_index}}, [&](CommandResult& r) {
    const Fan f = fan_from_json(fan);
    if (cone_index < 0) throw PreconditionError("blow_up: cone index out of range");
    r.output = pretty(fan_to_json(blow_up(f, static_cast<std::size_t>(cone_index))));
  });
}

CommandResult fan_validate(const Json& fan) {
  return run("fan validate", Json{{"fan", fan}}, [&](CommandResult& r) {
    Json report;
    try {
      const Fan f = fan_from_json(fan);
      const auto bad = first_non_smooth_cone(f);
      report = {{"valid", true},
                {"smooth", !bad.has_value()},
                {"complete", is_complete(f)},
                {"non_smooth_cone", bad ? Json(*bad) : Json(nullptr)},
                {"rays", f.ray_count()},
                {"max_cones", f.max_cones().size()}};
      r.exit_code = bad ? kPreconditionViolation : kOk;
    } catch (const PreconditionError& e) {
      report = {{"valid", false}, {"error", e.what()}};
      r.exit_code = kPreconditionViolation;
    }
    r.output = pretty(report);
  });
}

CommandResult h0(const Json& fan, const Json& divisor) {
  return run("h0", Json{{"fan", fan}, {"divisor", divisor}}, [&](CommandResult& r) {
    const ToricDivisor d = divisor_from_json(divisor, load_fan(fan));
    const H0Value value = troptoric::h0(d);
    const DivisorPolytope p = polytope(d);
    const auto pts = lattice_points(p);
    Json vertices = Json::array();
    for (const RationalPoint& v : p.vertices()) vertices.push_back(point_to_json(v));
    r.output = pretty({{"h0", h0_to_json(value)},
                       {"lattice_points", pts ? points_json(*pts) : Json(nullptr)},
                       {"polytope_vertices", vertices},
                       {"bounded", p.bounded()}});
  });
}

CommandResult rr(const Json& fan, const Json& divisor) {
  return run("rr", Json{{"fan", fan}, {"divisor", divisor}}, [&](CommandResult& r) {
    const ToricDivisor d = divisor_from_json(divisor, load_fan(fan));
    const RRReport report = rr_check(d);
    r.output = pretty(rr_report_to_json(report));
    if (!report.holds) r.exit_code = kInequalityViolation;
  });
}

CommandResult sections(const Json& fan, const Json& divisor, const std::optional<Json>& points) {
  Json input{{"fan", fan}, {"divisor", divisor}};
  if (points) input["points"] = *points;
  return run("sections", input, [&](CommandResult& r) {
    const ToricDivisor d = divisor_from_json(divisor, load_fan(fan));
    const SectionModule m = global_sections(d);
    Json out{{"generators", points_json(m.generators())},
             {"h0_a", h0_a(m)},
             {"h0_b", h0_b(m)}};
    if (points) {
      const std::vector<Point> pts = points_from_json(*points);
      const TropPolynomial s = vandermonde_section(m, pts);
      Json coefficients = Json::array();
      for (LatticeVector g : m.generators()) {
        coefficients.push_back(rational_to_json(s.terms().at({g.x, g.y})));
      }
      Json through = Json::array();
      for (const Point& p : pts) through.push_back(passes_through(s, p));
      out["vandermonde"] = {{"coefficients", coefficients}, {"passes_through", through}};
    }
    r.output = pretty(out);
  });
}

CommandResult sweep(const Json& fan, const std::string& range, std::uint64_t seed) {
  return run("sweep", Json{{"fan", fan}, {"range", range}, {"seed", seed}}, [&](CommandResult& r) {
    const auto [lo, hi] = parse_range(range);
    const FanPtr f = load_fan(fan);
    require_smooth_complete(*f, "sweep");
    const IntersectionMatrix table(*f);
    const std::size_t n = f->ray_count();

    const std::uint64_t width = hi >= lo ? static_cast<std::uint64_t>(hi - lo + 1) : 0;
    std::uint64_t total = width == 0 ? 0 : 1;
    bool exhaustive = true;
    for (std::size_t i = 0; i < n && total > 0; ++i) {
      if (total > kExhaustiveSweepLimit / width) {
        exhaustive = false;
        break;
      }
      total *= width;
    }
    if (total > kExhaustiveSweepLimit) exhaustive = false;
    const std::uint64_t count = exhaustive ? total : kSampledSweepCount;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(lo, hi);
    std::ostringstream lines;
    std::optional<Rational> min_defect;
    Json violations = Json::array();
    for (std::uint64_t index = 0; index < count; ++index) {
      std::vector<std::int64_t> coeffs(n);
      if (exhaustive) {
        std::uint64_t rest = index;
        for (std::size_t i = n; i-- > 0;) {
          coeffs[i] = lo + static_cast<std::int64_t>(rest % width);
          rest /= width;
        }
      } else {
        for (auto& c : coeffs) c = coeff(rng);
      }
      const RRReport report = rr_check(table, ToricDivisor(f, coeffs));
      Json line = rr_report_to_json(report);
      line["index"] = index;
      line["coeffs"] = coeffs;
      lines << line.dump() << '\n';
      if (!min_defect || report.defect < *min_defect) min_defect = report.defect;
      if (!report.holds) violations.push_back(index);
    }
    const Json summary{{"reports", count},
                       {"mode", exhaustive ? "exhaustive" : "sampled"},
                       {"seed", seed},
                       {"min_defect", min_defect ? rational_to_json(*min_defect) : Json(nullptr)},
                       {"violations", violations},
                       {"all_hold", violations.empty()}};
    lines << Json{{"summary", summary}}.dump() << '\n';
    r.output = lines.str();
    if (!violations.empty()) r.exit_code = kInequalityViolation;
  });
}

CommandResult curve(const Json& polynomial, const std::optional<Json>& fan) {
  Json input{{"polynomial", polynomial}};
  if (fan) input["fan"] = *fan;
  return run("curve", input, [&](CommandResult& r) {
    const TropPolynomial g = polynomial_from_json(polynomial);
    const WeightedComplex locus = corner_locus(g);
    Json out{{"corner_locus", complex_to_json(locus)},
             {"balanced", is_balanced(locus)},
             {"newton_subdivision", subdivision_to_json(newton_subdivision(g))}};
    if (fan) {
      const SectionDivisor div = divisor_of_section(load_fan(*fan), g);
      out["ray_part"] = divisor_to_json(div.ray_part);
    }
    r.output = pretty(out);
  });
}

}  // namespace troptoric::cli
