#include "diskdiam/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace diskdiam {

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream o;
  o << "line " << line << ", column " << col;
  return o.str();
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SpecError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(where + ": missing field '" + key + "'");
  return *it;
}

Complex optional_complex(const Json& obj, const char* key, Complex fallback,
                         const std::string& where) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : complex_from_json(*it, where + "." + key);
}

std::vector<Complex> complex_list(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SpecError(where + ": expected a nonempty array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(complex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

MoebiusMap moebius_from(const Json& p, const std::string& where) {
  const Complex xi = complex_from_json(require(p, "xi", where), where + ".xi");
  const Complex eta = optional_complex(p, "eta", 1.0, where);
  const Complex scale = optional_complex(p, "scale", 1.0, where);
  const Complex shift = optional_complex(p, "shift", 0.0, where);
  try {
    return MoebiusMap(xi, eta, scale, shift);
  } catch (const std::exception& e) {
    throw SpecError(where + ": " + e.what());
  }
}

// Schur extremal Taylor coefficients: b, a, then u (-t)^{k-2} (1 - t^2).
std::vector<Complex> schur_taylor(Complex a, Complex b, std::size_t order) {
  const double t = std::abs(a);
  const Complex u = a / t;
  std::vector<Complex> c(order + 1);
  c[0] = b;
  if (order >= 1) c[1] = a;
  double p = 1.0;
  for (std::size_t k = 2; k <= order; ++k) {
    c[k] = u * p * (1.0 - t * t);
    p *= -t;
  }
  return c;
}

AnalyticFunction build(const Json& spec, const std::string& where) {
  if (!spec.is_object()) throw SpecError(where + ": expected an object");
  const Json& kind_j = require(spec, "kind", where);
  if (!kind_j.is_string()) throw SpecError(where + ".kind: expected a string");
  const std::string kind = kind_j.get<std::string>();
  static const Json kEmpty = Json::object();
  const auto pit = spec.find("params");
  const Json& params = pit == spec.end() ? kEmpty : *pit;
  if (!params.is_object()) throw SpecError(where + ".params: expected an object");
  const std::string pw = where + ".params";

  std::size_t truncation = 0;
  if (auto t = spec.find("truncation"); t != spec.end()) {
    if (!t->is_number_integer() || t->get<long long>() < 1)
      throw SpecError(where + ".truncation: expected a positive integer");
    truncation = t->get<std::size_t>();
  }
  if (truncation > kMaxOrder) throw SpecError(where + ".truncation: exceeds the order ceiling");

  try {
    if (kind == "polynomial") {
      std::vector<Complex> c = complex_list(require(params, "coefficients", pw), pw + ".coefficients");
      if (truncation + 1 > c.size()) c.resize(truncation + 1);
      return AnalyticFunction::polynomial(std::move(c));
    }

    AnalyticFunction f = AnalyticFunction::identity();
    std::function<std::vector<Complex>(std::size_t)> taylor;
    if (kind == "moebius") {
      const MoebiusMap T = moebius_from(params, pw);
      f = make_moebius(T);
      taylor = [T](std::size_t K) { return T.taylor(K); };
    } else if (kind == "extremal-lft") {
      const Complex a = complex_from_json(require(params, "a", pw), pw + ".a");
      const Complex b = complex_from_json(require(params, "b", pw), pw + ".b");
      const Complex c = complex_from_json(require(params, "c", pw), pw + ".c");
      f = make_extremal_lft(a, b, c);
      const MoebiusMap T(b, c, 1.0, a);
      taylor = [T](std::size_t K) { return T.taylor(K); };
    } else if (kind == "schur-extremal") {
      const Complex a = complex_from_json(require(params, "a", pw), pw + ".a");
      const Complex b = optional_complex(params, "b", 0.0, pw);
      f = make_schur_extremal(a, b);
      taylor = [a, b](std::size_t K) { return schur_taylor(a, b, K); };
    } else if (kind == "composition") {
      const AnalyticFunction outer = build(require(params, "outer", pw), pw + ".outer");
      const MoebiusMap T = moebius_from(require(params, "moebius", pw), pw + ".moebius");
      return compose_moebius(outer, T, std::max<std::size_t>(truncation, kDefaultOrder));
    } else {
      throw SpecError(where + ".kind: unknown kind '" + kind + "'");
    }

    if (truncation > f.order() && f.eval_radius() >= 1.0)
      f = f.with_coefficients(taylor(truncation));
    if (auto ov = params.find("coefficients"); ov != params.end())
      f = f.with_coefficients(complex_list(*ov, pw + ".coefficients"));
    return f;
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(where + ": " + e.what());
  }
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json number_map(const std::map<std::string, double>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[k] = number(v);
  return o;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw SpecError("parse error at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + msg);
  }
}

AnalyticFunction function_from_spec(const Json& spec) { return build(spec, "$"); }

AnalyticFunction parse_function_spec(std::string_view text) {
  return function_from_spec(parse_json_text(text));
}

Json to_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw SpecError(where + ": expected a number or [re, im]");
}

Json to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["slack"] = number(r.slack);
  j["equality"] = r.equality;
  j["witness"] = r.witness.empty() ? Json(nullptr) : to_json(r.witness.front());
  Json all = Json::array();
  for (Complex z : r.witness) all.push_back(to_json(z));
  j["witness_all"] = std::move(all);
  j["tolerances"] = number_map(r.tolerances);
  j["verdict"] = std::string(to_string(r.verdict));
  j["detail"] = r.detail;
  return j;
}

Json to_json(const DiameterEstimate& e) {
  Json j;
  j["r"] = number(e.r);
  j["lower"] = number(e.lower);
  j["upper"] = number(e.upper);
  j["witness_pair"] = Json::array({to_json(e.witness[0]), to_json(e.witness[1])});
  j["samples_used"] = e.samples_used;
  return j;
}

Json to_json(const DiskDiameter& d) {
  Json j;
  j["lower"] = number(d.lower);
  j["upper"] = number(d.upper);
  j["allowance"] = number(d.allowance);
  j["source"] = d.source;
  j["monotone"] = d.monotone;
  Json a = Json::array();
  for (const auto& e : d.approach) a.push_back(to_json(e));
  j["approach"] = std::move(a);
  j["boundary"] = to_json(d.boundary);
  return j;
}

Json to_json(const RatioCurve& c) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : c.ratios)
    pts.push_back({{"r", number(p.r)}, {"ratio_lower", number(p.lower)}, {"ratio_upper", number(p.upper)}});
  j["ratios"] = std::move(pts);
  j["violations"] = c.violations;
  j["near_ties"] = c.near_ties;
  j["nondecreasing"] = c.nondecreasing();
  return j;
}

Json to_json(const PoukkaReport& p) {
  Json j;
  j["n"] = p.n;
  j["c_n"] = to_json(p.c_n);
  j["diam"] = number(p.diam);
  j["parseval_lhs"] = number(p.parseval_lhs);
  j["integral_rhs"] = number(p.integral_rhs);
  j["report"] = to_json(p.report);
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["kind"] = std::string(to_string(c.kind));
  j["a"] = to_json(c.a);
  j["b"] = to_json(c.b);
  j["c"] = to_json(c.c);
  j["degree"] = c.degree;
  j["residual"] = number(c.residual);
  j["detail"] = c.detail;
  return j;
}

Json to_json(const SweepResult& s) {
  Json j;
  j["name"] = s.name;
  j["seed"] = s.seed;
  j["grid"] = s.grid;
  j["tolerances"] = number_map(s.tolerances);
  Json recs = Json::array();
  for (const auto& r : s.records)
    recs.push_back({{"member_id", r.member_id},
                    {"params", number_map(r.params)},
                    {"abscissa", number(r.abscissa)},
                    {"value", number(r.value)}});
  j["records"] = std::move(recs);
  Json env = Json::array();
  for (const auto& e : s.envelope) env.push_back({{"abscissa", number(e.abscissa)}, {"value", number(e.value)}});
  j["envelope"] = std::move(env);
  j["diagnostics"] = s.diagnostics;
  return j;
}

Json to_json(const DensityProfile& p) {
  Json j;
  j["Lambda"] = number(p.Lambda);
  j["tau"] = to_json(p.tau);
  j["R_h"] = number(p.R_h);
  j["argmin"] = to_json(p.argmin);
  j["proxy_radius"] = number(p.proxy_radius);
  j["report"] = to_json(p.corollary);
  return j;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string ratio_curve_csv(const RatioCurve& c) {
  std::string out = "r,ratio_lower,ratio_upper\n";
  for (const auto& p : c.ratios)
    out += format_double(p.r) + "," + format_double(p.lower) + "," + format_double(p.upper) + "\n";
  return out;
}

std::string density_csv(const DensityProfile& p) {
  std::string out = "z_re,z_im,w_re,w_im,rho\n";
  for (const auto& s : p.points)
    out += format_double(s.z.real()) + "," + format_double(s.z.imag()) + "," +
           format_double(s.w.real()) + "," + format_double(s.w.imag()) + "," +
           format_double(s.rho) + "\n";
  return out;
}

std::string sweep_csv(const SweepResult& s) {
  std::string out = "member_id,params,abscissa,value\n";
  for (const auto& r : s.records) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ";";
      params += k + "=" + format_double(v);
    }
    out += std::to_string(r.member_id) + "," + params + "," + format_double(r.abscissa) + "," +
           format_double(r.value) + "\n";
  }
  return out;
}

}  // namespace diskdiam
