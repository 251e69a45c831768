// Copyright 2026 The zmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "suites.hpp"
#include "zmf/analysis.hpp"
#include "zmf/densities.hpp"
#include "zmf/oracle.hpp"
#include "zmf/parallel.hpp"
#include "zmf/zmf.hpp"

namespace zmf::cli {
namespace {

using Json = nlohmann::ordered_json;
using Params = std::map<std::string, std::string>;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double get_double(const Params& p, const std::string& key, std::optional<double> fallback = {}) {
  const auto it = p.find(key);
  if (it == p.end()) {
    if (fallback) return *fallback;
    throw ValidationError("--" + key + " is required");
  }
  const char* s = it->second.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw ValidationError("--" + key + " expects a finite number, got '" + it->second + "'");
  return v;
}

long get_int(const Params& p, const std::string& key, std::optional<long> fallback = {}) {
  const double v = get_double(p, key, fallback ? std::optional<double>(static_cast<double>(*fallback))
                                               : std::nullopt);
  if (v != std::floor(v) || std::abs(v) > 1e15) throw ValidationError("--" + key + " expects an integer");
  return static_cast<long>(v);
}

std::string get_string(const Params& p, const std::string& key, const std::string& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

bool get_flag(const Params& p, const std::string& key) { return p.count(key) > 0; }

Json complex_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json point_record(int r, double k, Complex s, const EvalResult& res) {
  Json j;
  j["r"] = r;
  j["k"] = k;
  j["s"] = complex_json(s);
  j["value"] = complex_json(res.value);
  j["abs_err"] = res.abs_err;
  j["method"] = std::string(to_string(res.method));
  j["regime"] = to_string(regime(r, k));
  return j;
}

oracle::QuadratureConfig config_from(const Params& p) {
  oracle::QuadratureConfig cfg;
  cfg.tol = get_double(p, "tol", cfg.tol);
  cfg.max_subdivisions = static_cast<int>(get_int(p, "max-subdivisions", cfg.max_subdivisions));
  const long seed = get_int(p, "seed", 0);
  const long samples = get_int(p, "samples", static_cast<long>(cfg.samples));
  if (seed < 0) throw ValidationError("--seed must be non-negative");
  if (samples < 1) throw ValidationError("--samples must be positive");
  cfg.seed = static_cast<std::uint64_t>(seed);
  cfg.samples = static_cast<std::uint64_t>(samples);
  oracle::validate(cfg);
  return cfg;
}

int order_from(const Params& p) {
  const long r = get_int(p, "r", 1);
  if (r < 1 || r > 30) throw ValidationError("--r must lie in [1, 30]");
  return static_cast<int>(r);
}

Complex s_from(const Params& p) { return {get_double(p, "s-re"), get_double(p, "s-im", 0.0)}; }

EvalResult quadrature_route(int r, double k, Complex s, const oracle::QuadratureConfig& cfg) {
  if (r <= 3) return oracle::torus_quadrature(r, k, s, cfg);
  return oracle::density_quadrature(r, k, s, cfg);
}

Output cmd_eval(const Params& p, std::ostream& err) {
  const int r = order_from(p);
  const double k = get_double(p, "k");
  const Complex s = s_from(p);
  const std::string method = get_string(p, "method", "auto");
  const auto cfg = config_from(p);
  EvalResult res;
  if (method == "closed-form") {
    res = w(r, k, s);
  } else if (method == "quadrature") {
    res = quadrature_route(r, k, s, cfg);
  } else if (method == "mc") {
    res = oracle::monte_carlo(r, k, s, cfg);
  } else {
    bool closed = true;
    try {
      res = w(r, k, s);
    } catch (const zmf::Error& e) {
      if (e.kind() != ErrorKind::unsupported) throw;
      closed = false;
    }
    if (!closed) {
      err << "note: no closed form for this point; using quadrature\n";
      res = quadrature_route(r, k, s, cfg);
    } else if (r <= 4) {
      try {
        oracle::QuadratureConfig check = cfg;
        check.tol = std::max(cfg.tol, 1e-8);
        const EvalResult o = quadrature_route(r, k, s, check);
        const double diff = std::abs(o.value - res.value);
        const double combined = o.abs_err + res.abs_err;
        if (diff > 10.0 * combined)
          err << "warning: closed form and oracle differ by " << format_double(diff)
              << " (combined error " << format_double(combined) << ")\n";
      } catch (const zmf::Error& e) {
        err << "note: oracle check skipped: " << e.what() << "\n";
      }
    }
  }
  Output out;
  out.doc = point_record(r, k, s, res);
  out.rows = {out.doc};
  return out;
}

Output cmd_oracle(const Params& p) {
  const int r = order_from(p);
  const double k = get_double(p, "k");
  const Complex s = s_from(p);
  const std::string kind = get_string(p, "kind", "torus");
  const auto cfg = config_from(p);
  EvalResult res;
  if (kind == "torus") res = oracle::torus_quadrature(r, k, s, cfg);
  else if (kind == "density") res = oracle::density_quadrature(r, k, s, cfg);
  else res = oracle::monte_carlo(r, k, s, cfg);
  Output out;
  out.doc = point_record(r, k, s, res);
  out.rows = {out.doc};
  return out;
}

Output cmd_density(const Params& p) {
  const int r = order_from(p);
  const double x = get_double(p, "x");
  Json j;
  j["r"] = r;
  if (get_flag(p, "hat")) {
    const double e = std::ldexp(1.0, r);
    j["k"] = 0.0;
    j["x"] = x;
    j["value"] = density::p_hat(r, x);
    j["support"] = Json{{"lo", -e}, {"hi", e}};
  } else {
    const auto d = density::sample_p_r(r, get_double(p, "k", 0.0), x);
    j["k"] = d.k;
    j["x"] = d.x;
    j["value"] = d.value;
    j["support"] = Json{{"lo", d.support_lo}, {"hi", d.support_hi}};
  }
  Output out;
  out.doc = j;
  out.rows = {j};
  return out;
}

Output cmd_moment(const Params& p) {
  const int r = order_from(p);
  const Complex v{get_double(p, "v-re"), get_double(p, "v-im", 0.0)};
  const bool two = get_flag(p, "two-sided");
  Json j;
  j["r"] = r;
  j["v"] = complex_json(v);
  j["two_sided"] = two;
  j["value"] = complex_json(density::moment(r, v, two));
  Output out;
  out.doc = j;
  out.rows = {j};
  return out;
}

Json zero_json(const analysis::ZeroRecord& z) {
  Json j;
  j["k"] = z.k;
  j["t"] = z.t;
  j["s"] = complex_json({-0.5, z.t});
  j["residual"] = z.residual;
  j["method"] = analysis::to_string(z.method);
  return j;
}

Output cmd_zeros(const Params& p) {
  const double k = get_double(p, "k");
  const double t_max = get_double(p, "t-max", 20.0);
  const double step = get_double(p, "step", 0.01);
  Output out;
  if (!get_flag(p, "boxes")) {
    for (const auto& z : analysis::find_zeros_w1(k, t_max, step)) out.rows.push_back(zero_json(z));
    out.doc = out.rows;
    return out;
  }
  const auto rep = analysis::critical_line_report(k, t_max);
  for (const auto& z : rep.zeros) out.rows.push_back(zero_json(z));
  Json j;
  j["k"] = k;
  j["zeros"] = out.rows;
  j["off_line_total"] = rep.off_line_total;
  j["strip_total"] = rep.strip_total;
  j["boxes"] = rep.off_line.size() + rep.strip.size();
  j["worst_residual"] = rep.worst_residual;
  Json trivial = Json::array();
  for (const auto& tp : analysis::prefactor_points(k, -2.0, 1.0))
    trivial.push_back(Json{{"s", tp.s}, {"kind", tp.pole ? "pole" : "zero"}});
  j["prefactor"] = trivial;
  out.doc = j;
  return out;
}

Output cmd_mahler(const Params& p) {
  const long r = get_int(p, "r", 2);
  if (r != 2 && r != 3) throw ValidationError("mahler supports --r 2 or 3");
  const double k = get_double(p, "k");
  const auto m = r == 2 ? analysis::mahler_w2(k) : analysis::mahler_w3(k);
  Output out;
  auto route = [&](const char* name, const EvalResult& e) {
    Json j;
    j["r"] = r;
    j["k"] = k;
    j["route"] = name;
    j["value"] = e.value.real();
    j["abs_err"] = e.abs_err;
    j["method"] = std::string(to_string(e.method));
    out.rows.push_back(j);
  };
  route(r == 2 ? "hypergeometric" : "meijer", m.value);
  route("integral", m.integral);
  route("derivative", m.derivative);
  out.doc["r"] = r;
  out.doc["k"] = k;
  out.doc["value"] = m.value.value.real();
  out.doc["routes"] = out.rows;
  out.doc["spread"] = m.spread;
  return out;
}

void print(const Output& o, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::json: out << dump_json(o.doc) << '\n'; break;
    case OutputFormat::csv: out << dump_csv(o.rows); break;
    case OutputFormat::plain: out << dump_plain(o.rows); break;
  }
}

void apply_threads(const Params& p) {
  const long n = get_int(p, "threads", 0);
  if (n < 0) throw ValidationError("--threads must be non-negative");
  set_max_threads(static_cast<unsigned>(n));
}

std::string read_source(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

std::string number_text(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) throw ValidationError("--from-json field '" + key + "' must be a number");
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  return format_double(j.get<double>());
}

// Fills parameters not given on the command line from a JSON record of the
// eval schema.
void merge_json(Params& params, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_source(path));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("--from-json: ") + e.what());
  }
  if (j.is_array() && j.size() == 1) j = j[0];
  if (!j.is_object()) throw ValidationError("--from-json expects an object");
  auto put = [&](const std::string& key, const std::string& value) { params.emplace(key, value); };
  if (j.contains("r")) put("r", number_text(j["r"], "r"));
  if (j.contains("k")) put("k", number_text(j["k"], "k"));
  if (j.contains("s")) {
    const auto& s = j["s"];
    if (s.is_object()) {
      if (s.contains("re")) put("s-re", number_text(s["re"], "s.re"));
      if (s.contains("im")) put("s-im", number_text(s["im"], "s.im"));
    } else {
      put("s-re", number_text(s, "s"));
    }
  }
  if (j.contains("method") && j["method"].is_string()) {
    const std::string m = j["method"];
    put("method", m == "monte-carlo" ? "mc" : m == "quadrature" ? "quadrature" : "closed-form");
  }
}

}  // namespace

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::eval: return "eval";
    case Subcommand::density: return "density";
    case Subcommand::moment: return "moment";
    case Subcommand::zeros: return "zeros";
    case Subcommand::mahler: return "mahler";
    case Subcommand::verify: return "verify";
    case Subcommand::oracle: return "oracle";
  }
  return "eval";
}

ParseOutcome parse_request(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta Mahler functions W_r(k; s): evaluation, densities, zeros and checks", "zmf"};
  app.require_subcommand(1);
  app.fallthrough();
  Params params;
  std::string format = "json";
  std::string from_json;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option_function<std::string>(
         "--threads", [&](const std::string& v) { params["threads"] = v; },
         "Worker thread cap (0 = hardware default)")
      ->envname("ZMF_THREADS")
      ->check(CLI::NonNegativeNumber);

  auto option = [&](CLI::App* sub, const std::string& flag, const std::string& desc) {
    const std::string key = flag.substr(2);
    return sub->add_option_function<std::string>(
        flag, [&params, key](const std::string& v) { params[key] = v; }, desc);
  };
  auto number = [&](CLI::App* sub, const std::string& flag, const std::string& desc) {
    return option(sub, flag, desc)->check(CLI::Number);
  };
  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& desc) {
    const std::string key = name.substr(2);
    sub->add_flag_callback(name, [&params, key] { params[key] = "1"; }, desc);
  };
  auto point = [&](CLI::App* sub) {
    number(sub, "--r", "Number of factors r (default 1)");
    number(sub, "--k", "Constant term k");
    number(sub, "--s-re", "Real part of s");
    number(sub, "--s-im", "Imaginary part of s (default 0)");
    sub->add_option("--from-json", from_json, "Read r, k, s and method from an eval record ('-' for stdin)");
  };
  auto quad = [&](CLI::App* sub) {
    number(sub, "--tol", "Relative tolerance of the quadrature (default 1e-10)");
    number(sub, "--max-subdivisions", "Bisection depth limit (default 12)");
    number(sub, "--seed", "Monte Carlo seed (default 0)");
    number(sub, "--samples", "Monte Carlo sample count (default 1000000)");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate W_r(k; s)");
  point(eval);
  option(eval, "--method", "auto, closed-form, quadrature or mc")
      ->check(CLI::IsMember({"auto", "closed-form", "quadrature", "mc"}));
  quad(eval);

  auto* orc = app.add_subcommand("oracle", "Evaluate W_r(k; s) with an independent oracle");
  point(orc);
  option(orc, "--kind", "torus, density or mc")->check(CLI::IsMember({"torus", "density", "mc"}));
  quad(orc);

  auto* dens = app.add_subcommand("density", "Density of |k + prod (X_i + 1/X_i)|");
  number(dens, "--r", "Number of factors r (default 1)");
  number(dens, "--k", "Constant term k (default 0)");
  number(dens, "--x", "Abscissa")->required();
  flag(dens, "--hat", "Density of the signed product instead (r <= 3)");

  auto* mom = app.add_subcommand("moment", "v-th moment of the product density");
  number(mom, "--r", "Number of factors r (default 1)");
  number(mom, "--v-re", "Real part of v")->required();
  number(mom, "--v-im", "Imaginary part of v (default 0)");
  flag(mom, "--two-sided", "Integrate over the whole line");

  auto* zer = app.add_subcommand("zeros", "Zeros of W_1(k; s) on Re s = -1/2");
  number(zer, "--k", "Constant term k, |k| != 2")->required();
  number(zer, "--t-max", "Largest ordinate (default 20, at most 50)");
  number(zer, "--step", "Sampling step in t (default 0.01)");
  flag(zer, "--boxes", "Also count zeros off the line by the argument principle");

  auto* mah = app.add_subcommand("mahler", "Mahler measure of k + prod (x_i + 1/x_i), three routes");
  number(mah, "--r", "2 or 3 (default 2)");
  number(mah, "--k", "Constant term k")->required();

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  option(ver, "--suite", "Suite name")->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitValidation};
  }

  CommandRequest req;
  req.output = format == "csv" ? OutputFormat::csv : format == "plain" ? OutputFormat::plain : OutputFormat::json;
  const std::pair<CLI::App*, Subcommand> subs[] = {
      {eval, Subcommand::eval},       {orc, Subcommand::oracle}, {dens, Subcommand::density},
      {mom, Subcommand::moment},      {zer, Subcommand::zeros},  {mah, Subcommand::mahler},
      {ver, Subcommand::verify}};
  for (const auto& [sub, kind] : subs)
    if (sub->parsed()) req.subcommand = kind;
  if (!from_json.empty()) {
    try {
      merge_json(params, from_json);
    } catch (const ValidationError& e) {
      err << "error: " << e.what() << '\n';
      return {std::nullopt, kExitValidation};
    }
  }
  req.params = std::move(params);
  return {req, kExitOk};
}

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const Params& p = request.params;
    apply_threads(p);
    Output o;
    switch (request.subcommand) {
      case Subcommand::eval: o = cmd_eval(p, err); break;
      case Subcommand::oracle: o = cmd_oracle(p); break;
      case Subcommand::density: o = cmd_density(p); break;
      case Subcommand::moment: o = cmd_moment(p); break;
      case Subcommand::zeros: o = cmd_zeros(p); break;
      case Subcommand::mahler: o = cmd_mahler(p); break;
      case Subcommand::verify: o = run_suite(get_string(p, "suite", "functional-equations")); break;
    }
    print(o, request.output, out);
    if (!o.passed) {
      err << "verification failed\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const zmf::Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::precondition:
      case ErrorKind::domain:
      case ErrorKind::unsupported: return kExitValidation;
      default: return kExitNumerical;
    }
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse_request(argc, argv, out, err);
  if (!parsed.request) return parsed.exit_code;
  return run(*parsed.request, out, err);
}

}  // namespace zmf::cli
