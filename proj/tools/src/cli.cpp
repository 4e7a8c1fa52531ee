#include "diskdiam/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "diskdiam/families.hpp"
#include "diskdiam/io.hpp"

namespace diskdiam::cli {

namespace {

// A failure to read or parse user input; maps to the usage exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError(what + ": not a number: '" + s + "'");
  }
}

Complex parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_double(s, "point"), 0.0};
  return {parse_double(s.substr(0, comma), "point"), parse_double(s.substr(comma + 1), "point")};
}

std::vector<Complex> parse_points(const std::vector<std::string>& v) {
  std::vector<Complex> out;
  for (const auto& s : v) out.push_back(parse_point(s));
  return out;
}

// "a:b:n" (n equispaced values, endpoints included) or "x,y,z".
std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw ArgumentError("grid: expected a:b:n");
    const double a = parse_double(parts[0], "grid");
    const double b = parse_double(parts[1], "grid");
    const double nd = parse_double(parts[2], "grid");
    if (!(nd >= 1.0) || nd != std::floor(nd)) throw ArgumentError("grid: n must be a positive integer");
    const auto n = static_cast<std::size_t>(nd);
    if (n == 1) return {a};
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
  }
  std::stringstream ss(s);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_double(p, "grid"));
  if (out.empty()) throw ArgumentError("grid: empty");
  return out;
}

std::string read_input(const RunConfig& c) {
  if (!c.inline_spec.empty()) return c.inline_spec;
  if (c.input.empty()) throw InputError("no input: pass --input <path|->");
  if (c.input == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(c.input, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + c.input + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Input {
  Json spec;
  AnalyticFunction f;
};

std::vector<Input> load_functions(const RunConfig& c) {
  const Json doc = parse_json_text(read_input(c));
  std::vector<Input> out;
  if (doc.is_array()) {
    if (doc.empty()) throw SpecError("$: empty list of functions");
    for (std::size_t i = 0; i < doc.size(); ++i) {
      try {
        out.push_back({doc[i], function_from_spec(doc[i])});
      } catch (const SpecError& e) {
        std::string msg = e.what();
        if (msg.starts_with("$")) msg = "$[" + std::to_string(i) + "]" + msg.substr(1);
        throw SpecError(msg);
      }
    }
  } else {
    out.push_back({doc, function_from_spec(doc)});
  }
  return out;
}

Json describe(const AnalyticFunction& f) {
  Json j;
  j["provenance"] = std::string(to_string(f.provenance()));
  j["order"] = f.order();
  j["eval_radius"] = f.eval_radius();
  j["tail_bound"] = f.tail_bound();
  j["closed_form"] = f.closed_form() != nullptr;
  return j;
}

void stamp(Json& j, const RunConfig& c) {
  if (c.timestamp) j["timestamp"] = now_utc();
}

// Diam-normalized copy 2 f / Diam, with the enclosure scaled alongside.
struct Normalized {
  AnalyticFunction f;
  DiskDiameter diam;
  Complex scale;
};

Normalized normalize(const AnalyticFunction& f, const DiskDiameter& d) {
  if (!(d.lower > 0.0)) throw DegenerateInput("Diam f(D) is zero");
  const double s = 2.0 / d.lower;
  DiskDiameter nd = d;
  nd.lower *= s;
  nd.upper *= s;
  nd.allowance *= s;
  nd.boundary.lower *= s;
  nd.boundary.upper *= s;
  for (auto& e : nd.approach) {
    e.lower *= s;
    e.upper *= s;
  }
  return {f.affine(s), nd, s};
}

double inner_radius(const AnalyticFunction& f, double preferred) {
  return std::min(preferred, f.eval_radius());
}

std::vector<Complex> usable_points(const std::vector<Complex>& pts, const AnalyticFunction& f) {
  std::vector<Complex> out;
  for (Complex z : pts)
    if (std::abs(z) < 1.0 && std::abs(z) <= f.eval_radius()) out.push_back(z);
  return out;
}

BoundReport skipped(std::string name, std::string why) {
  BoundReport r;
  r.name = std::move(name);
  r.verdict = Verdict::Skipped;
  r.detail = std::move(why);
  return r;
}

// Ratio-curve derived checks: nondecrease and D_r / r >= 2 |f'(0)|.
std::vector<BoundReport> ratio_reports(const AnalyticFunction& f, const RatioCurve& curve,
                                       const Settings& s) {
  std::vector<BoundReport> out;
  BoundReport mono = make_report("ratio_monotonicity", static_cast<double>(curve.violations.size()),
                                 0.0, 0.0, 0.0);
  mono.equality = false;
  mono.tolerances["near_ties"] = static_cast<double>(curve.near_ties.size());
  if (!curve.near_ties.empty()) mono.detail = "decreasing steps within enclosure widths";
  out.push_back(std::move(mono));

  double min_upper = std::numeric_limits<double>::infinity();
  double at = 0.0;
  for (const auto& p : curve.ratios)
    if (p.upper < min_upper) {
      min_upper = p.upper;
      at = p.r;
    }
  BoundReport lowr = make_report("ratio_lower_bound", 2.0 * std::abs(f.coefficient(1)), min_upper,
                                 s.tol.diameter_width, s.tol.equality);
  lowr.tolerances["r"] = at;
  out.push_back(std::move(lowr));
  out.push_back(linearity_probe(curve, f, s.tol.diameter_width));
  return out;
}

std::vector<double> scaled_ratio_grid(const AnalyticFunction& f) {
  std::vector<double> g = default_ratio_grid();
  const double cap = f.eval_radius();
  if (g.back() > cap)
    for (double& r : g) r *= cap / g.back();
  return g;
}

std::vector<BoundReport> bounds_suite(const AnalyticFunction& f, const Settings& s,
                                      const std::vector<std::string>& checks,
                                      std::vector<Complex> zs, std::vector<Complex> ws,
                                      std::vector<std::size_t> ns, std::uint64_t seed) {
  auto want = [&](const char* name) {
    return checks.empty() || std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  static const std::vector<std::string> kKnown = {
      "schwarz", "boundary", "ratio", "landau-toeplitz", "growth", "growth-symmetric",
      "poukka", "schur", "lemma", "density"};
  for (const auto& c : checks)
    if (std::find(kKnown.begin(), kKnown.end(), c) == kKnown.end())
      throw ArgumentError("unknown check '" + c + "'");

  const DiskDiameter diam = certified_disk_diameter(f, s.tol.diameter_width);
  const Normalized nf = normalize(f, diam);
  const Classification cls = equality_classifier(nf.f, 1e-8);

  if (zs.empty()) {
    zs = {0.5, {0.3, 0.4}, {0.0, -0.6}};
    if (cls.kind == ExtremalKind::Moebius) zs.push_back(2.0 * cls.b / (1.0 + std::norm(cls.b)));
  }
  zs = usable_points(zs, f);
  if (ws.empty()) ws = {-0.3, {0.0, -0.4}, {0.1, 0.2}};
  ws = usable_points(ws, f);
  if (ns.empty())
    for (std::size_t n = 1; n <= std::min<std::size_t>(8, f.order()); ++n) ns.push_back(n);

  std::vector<BoundReport> out;
  const double r_inner = inner_radius(f, 0.9);

  if (want("schwarz")) {
    const SupDeviation sup = sup_deviation(nf.f, s.tol.scan_points);
    Tolerances t = s.tol;
    t.numeric = std::max(t.numeric, sup.upper - sup.best);
    out.push_back(schwarz_derivative(nf.f, sup.best, t));
    for (Complex z : zs) out.push_back(schwarz_growth(nf.f, z, sup.best, t));
  }
  if (want("boundary")) out.push_back(boundary_attainment_check(f, r_inner, s.interior_samples, seed));
  if (want("ratio")) {
    const RatioCurve curve = ratio_curve(f, scaled_ratio_grid(f), s.tol.diameter_width);
    for (auto& r : ratio_reports(f, curve, s)) out.push_back(std::move(r));
    BoundReport approach = make_report("diameter_approach", diam.monotone ? 0.0 : 1.0, 0.0, 0.0, 0.0);
    approach.equality = false;
    approach.tolerances["diam_lower"] = diam.lower;
    approach.tolerances["diam_upper"] = diam.upper;
    out.push_back(std::move(approach));
  }
  if (want("landau-toeplitz")) out.push_back(landau_toeplitz(f, diam, s.tol));
  if (want("growth"))
    for (Complex z : zs)
      if (z != Complex{}) out.push_back(growth_bound(nf.f, z, nf.diam, s.tol));
  if (want("growth-symmetric"))
    for (Complex z : zs)
      for (Complex w : ws)
        if (z != w) out.push_back(growth_bound_symmetric(f, z, w, diam, s.tol));
  if (want("poukka"))
    for (std::size_t n : ns) out.push_back(poukka(f, n, r_inner, diam, s.tol).report);
  if (want("schur")) {
    const SupDeviation sup = sup_deviation(f, s.tol.scan_points);
    const AnalyticFunction scaled = f.affine(1.0 / sup.best);
    std::vector<double> radii;
    for (double r : {0.3, 0.5, 0.7})
      if (r <= f.eval_radius()) radii.push_back(r);
    SchurDecomposition sd = schur_decompose(scaled, radii, s.tol);
    for (auto& r : sd.residuals) {
      r.tolerances["sup_scale"] = sup.best;
      r.tolerances["reconstruction_error"] = sd.reconstruction_error;
      out.push_back(std::move(r));
    }
  }
  if (want("lemma")) {
    const Complex w = 0.5;
    if (f.coefficient(1) == Complex{}) {
      out.push_back(skipped("fixed_point_lemma", "f'(0) = 0; witness g_w undefined"));
    } else {
      out.push_back(fixed_point_lemma_check(make_fixed_point_witness(f, w), w, 1e-9));
    }
  }
  if (want("density")) {
    try {
      const DomainMap dom(nf.f, "input", seed);
      out.push_back(min_density(dom, s.grid_resolution).corollary);
    } catch (const UnivalenceViolation& e) {
      out.push_back(skipped("hyperbolic_density", e.what()));
    }
  }
  return out;
}

Json reports_json(const std::vector<BoundReport>& reps) {
  Json a = Json::array();
  for (const auto& r : reps) a.push_back(to_json(r));
  return a;
}

bool any_failed(const std::vector<BoundReport>& reps) {
  return std::any_of(reps.begin(), reps.end(), [](const BoundReport& r) { return r.failed(); });
}

RunResult cmd_eval(const RunConfig& c, const Settings&) {
  RunResult res;
  const auto pts = parse_points(c.z.empty() ? std::vector<std::string>{"0"} : c.z);
  std::ostringstream out;
  for (const Input& in : load_functions(c)) {
    if (c.format == "csv") {
      out << "z_re,z_im,f_re,f_im,df_re,df_im\n";
      for (Complex z : pts) {
        const Complex v = evaluate(in.f, z), d = derivative_at(in.f, z);
        out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
            << format_double(v.real()) << ',' << format_double(v.imag()) << ','
            << format_double(d.real()) << ',' << format_double(d.imag()) << '\n';
      }
      continue;
    }
    Json j;
    j["function"] = in.spec;
    j["model"] = describe(in.f);
    Json vals = Json::array();
    for (Complex z : pts)
      vals.push_back({{"z", to_json(z)},
                      {"f", to_json(evaluate(in.f, z))},
                      {"df", to_json(derivative_at(in.f, z))},
                      {"d2f", to_json(second_derivative_at(in.f, z))}});
    j["values"] = std::move(vals);
    stamp(j, c);
    out << j.dump(2) << '\n';
  }
  res.output = out.str();
  return res;
}

RunResult cmd_diameter(const RunConfig& c, const Settings& s) {
  RunResult res;
  std::ostringstream out;
  for (const Input& in : load_functions(c)) {
    const std::vector<double> grid = c.r_grid.empty() ? scaled_ratio_grid(in.f) : parse_grid(c.r_grid);
    const RatioCurve curve = ratio_curve(in.f, grid, s.tol.diameter_width);
    const auto reps = ratio_reports(in.f, curve, s);
    if (any_failed(reps)) res.exit_code = kExitCheckFailed;
    if (c.format == "csv") {
      out << ratio_curve_csv(curve);
      continue;
    }
    Json j;
    j["function"] = in.spec;
    j["disk_diameter"] = to_json(certified_disk_diameter(in.f, s.tol.diameter_width));
    j["ratio_curve"] = to_json(curve);
    j["reports"] = reports_json(reps);
    stamp(j, c);
    out << j.dump(2) << '\n';
  }
  res.output = out.str();
  return res;
}

RunResult cmd_bounds(const RunConfig& c, const Settings& s) {
  if (c.format == "csv") throw ArgumentError("bounds: only json output is supported");
  RunResult res;
  std::ostringstream out;
  for (const Input& in : load_functions(c)) {
    const auto reps = bounds_suite(in.f, s, c.checks, parse_points(c.z), parse_points(c.w), c.n, c.seed);
    if (any_failed(reps)) res.exit_code = kExitCheckFailed;
    out << reports_json(reps).dump(2) << '\n';
  }
  res.output = out.str();
  return res;
}

RunResult cmd_density(const RunConfig& c, const Settings& s) {
  RunResult res;
  std::ostringstream out;
  for (const Input& in : load_functions(c)) {
    const DomainMap dom(in.f, "input", c.seed);
    const DensityProfile p = min_density(dom, s.grid_resolution);
    if (p.corollary.failed()) res.exit_code = kExitCheckFailed;
    if (c.format == "csv") {
      out << density_csv(p);
      continue;
    }
    Json j = to_json(p);
    j["function"] = in.spec;
    stamp(j, c);
    out << j.dump(2) << '\n';
  }
  res.output = out.str();
  return res;
}

RunResult cmd_explore(const RunConfig& c, const Settings& s) {
  RunResult res;
  const std::string problem = c.problem.empty() ? "phi" : c.problem;
  SweepResult sweep;
  if (problem == "2") {
    sweep = problem2_sweep(parse_grid(c.grid.empty() ? "0:0.25:6" : c.grid), s.grid_resolution);
  } else if (problem == "phi" || problem == "1" || problem == "3") {
    FamilySpec spec;
    spec.kind = family_kind_from_string(c.family.empty() ? "lft-extremal" : c.family);
    spec.seed = c.seed;
    spec.count = c.count;
    if (spec.kind != FamilyKind::RandomPolynomial)
      spec.grid = parse_grid(c.grid.empty() ? "0.1:0.9:5" : c.grid);
    if (problem == "3") {
      sweep = problem3_sweep(spec, s.w_grid_resolution);
    } else {
      sweep = phi_profile(spec, parse_grid(c.r_grid.empty() ? "0:0.9:10" : c.r_grid));
    }
  } else {
    throw ArgumentError("explore: --problem must be phi, 2 or 3");
  }
  if (c.format == "csv") {
    res.output = sweep_csv(sweep);
  } else {
    Json j = to_json(sweep);
    stamp(j, c);
    res.output = j.dump(2) + "\n";
  }
  return res;
}

RunResult cmd_verify_all(const RunConfig& c, const Settings& s) {
  if (c.format == "csv") throw ArgumentError("verify-all: only json output is supported");
  RunResult res;
  std::ostringstream out;
  for (const Input& in : load_functions(c)) {
    const auto reps = bounds_suite(in.f, s, {}, {}, {}, {}, c.seed);
    Json j;
    j["function"] = in.spec;
    j["model"] = describe(in.f);
    j["classification"] = to_json(equality_classifier(in.f, 1e-8));
    if (c.timestamp) j["timestamp"] = now_utc();
    j["reports"] = reports_json(reps);
    Json failing = Json::array();
    for (const auto& r : reps)
      if (r.failed()) failing.push_back(r.name);
    j["verdict"] = failing.empty() ? "pass" : "fail";
    j["failing"] = failing;
    if (!failing.empty()) res.exit_code = kExitCheckFailed;
    out << j.dump(2) << '\n';
  }
  res.output = out.str();
  return res;
}

}  // namespace

Settings resolve_settings(const std::vector<std::string>& tol) {
  Settings s;
  for (const auto& item : tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError("--tol expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const double v = parse_double(item.substr(eq + 1), "--tol " + name);
    if (!(v > 0.0)) throw ArgumentError("--tol " + name + " must be strictly positive");
    auto count = [&](const char* what) {
      if (v != std::floor(v)) throw ArgumentError(std::string("--tol ") + what + " must be an integer");
      return static_cast<std::size_t>(v);
    };
    if (name == "numeric_tol") s.tol.numeric = v;
    else if (name == "equality_tol") s.tol.equality = v;
    else if (name == "rigidity_tol") s.tol.rigidity = v;
    else if (name == "diam_tol") s.tol.diam_excess = v;
    else if (name == "diameter_width") s.tol.diameter_width = v;
    else if (name == "quadrature_tol") s.tol.quadrature = v;
    else if (name == "quadrature_n") {
      s.tol.quadrature_points = count("quadrature_n");
      if (!std::has_single_bit(s.tol.quadrature_points))
        throw ArgumentError("--tol quadrature_n must be a power of two");
    } else if (name == "scan_n") {
      s.tol.scan_points = count("scan_n");
      if (s.tol.scan_points < 8) throw ArgumentError("--tol scan_n must be at least 8");
    } else if (name == "grid_resolution") {
      s.grid_resolution = count("grid_resolution");
      if (s.grid_resolution < 8) throw ArgumentError("--tol grid_resolution must be at least 8");
    } else if (name == "w_grid_resolution") {
      s.w_grid_resolution = count("w_grid_resolution");
      if (s.w_grid_resolution < 2) throw ArgumentError("--tol w_grid_resolution must be at least 2");
    } else if (name == "interior_samples") {
      s.interior_samples = count("interior_samples");
    } else {
      throw ArgumentError("unknown tolerance '" + name + "'");
    }
  }
  return s;
}

RunResult run(const RunConfig& config) {
  RunResult res;
  try {
    if (config.format != "json" && config.format != "csv")
      throw ArgumentError("--format must be json or csv");
    const Settings s = resolve_settings(config.tol);
    const std::string& sub = config.subcommand;
    if (sub == "eval") res = cmd_eval(config, s);
    else if (sub == "diameter") res = cmd_diameter(config, s);
    else if (sub == "bounds") res = cmd_bounds(config, s);
    else if (sub == "density") res = cmd_density(config, s);
    else if (sub == "explore") res = cmd_explore(config, s);
    else if (sub == "verify-all") res = cmd_verify_all(config, s);
    else throw ArgumentError("unknown subcommand '" + sub + "'");
  } catch (const SpecError& e) {
    return {kExitUsage, "", std::string("input error: ") + e.what()};
  } catch (const InputError& e) {
    return {kExitUsage, "", std::string("input error: ") + e.what()};
  } catch (const ArgumentError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what()};
  } catch (const DegenerateInput& e) {
    return {kExitUsage, "", std::string("input error: ") + e.what()};
  } catch (const std::exception& e) {
    // Precondition, domain, budget and univalence errors: the check could not run.
    return {kExitCheckFailed, "", std::string("check error: ") + e.what()};
  }
  return res;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified diameters and Schwarz-type bounds for analytic maps of the unit disk"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Function spec path, or - for stdin");
    sub->add_option("--spec", cfg.inline_spec, "Inline function spec JSON");
    sub->add_option("--tol", cfg.tol, "Tolerance override name=value (repeatable)");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
    sub->add_flag("!--no-timestamp", cfg.timestamp, "Omit timestamps from JSON output");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate f, f', f'' at points");
  common(eval);
  eval->add_option("--z", cfg.z, "Point re,im (repeatable)");

  auto* diam = app.add_subcommand("diameter", "Ratio curve D_r / r");
  common(diam);
  diam->add_option("--r-grid", cfg.r_grid, "Radii a:b:n");

  auto* bounds = app.add_subcommand("bounds", "Run bound verifiers");
  common(bounds);
  bounds->add_option("--check", cfg.checks,
                     "schwarz|boundary|ratio|landau-toeplitz|growth|growth-symmetric|poukka|schur|lemma|density");
  bounds->add_option("--z", cfg.z, "Point re,im (repeatable)");
  bounds->add_option("--w", cfg.w, "Second point for the symmetric growth bound (repeatable)");
  bounds->add_option("--n", cfg.n, "Coefficient index (repeatable)");

  auto* density = app.add_subcommand("density", "Minimum hyperbolic density of f(D)");
  common(density);

  auto* explore = app.add_subcommand("explore", "Sweeps over parametric families");
  common(explore);
  explore->add_option("--problem", cfg.problem, "phi, 2 or 3");
  explore->add_option("--family", cfg.family,
                      "lft-extremal|schur-extremal|random-polynomial|univalent-quadratic");
  explore->add_option("--grid", cfg.grid, "Family parameters a:b:n or comma list");
  explore->add_option("--r-grid", cfg.r_grid, "Radii for phi, a:b:n");
  explore->add_option("--count", cfg.count, "Members of a random family");

  auto* verify = app.add_subcommand("verify-all", "Run every verifier and emit one verdict");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  const RunResult res = run(cfg);
  if (!res.diagnostics.empty()) err << res.diagnostics << '\n';
  if (cfg.out.empty() || cfg.out == "-") {
    out << res.output;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "cannot write '" << cfg.out << "'\n";
      return kExitUsage;
    }
    f << res.output;
  }
  return res.exit_code;
}

}  // namespace diskdiam::cli
