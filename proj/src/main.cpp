// wilton-lab: evaluation, cotangent scans, moment tables, and invariant
// verification from one binary. Every run echoes its full configuration
// (defaults included) so artifacts are self-describing and replayable.
//
// Exit codes: 0 success, 1 invariant failure, 2 usage/parse error,
// 3 domain error, 4 calibration failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "wiltonlab/constants.hpp"
#include "wiltonlab/gfun.hpp"
#include "wiltonlab/io.hpp"
#include "wiltonlab/measure.hpp"
#include "wiltonlab/moments.hpp"
#include "wiltonlab/parallel.hpp"
#include "wiltonlab/phi.hpp"
#include "wiltonlab/realspec.hpp"
#include "wiltonlab/special.hpp"
#include "wiltonlab/verify.hpp"
#include "wiltonlab/wilton.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace wiltonlab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invariant = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;
constexpr int exit_calibration = 4;

struct run_config {
  std::string command;
  std::string target;
  std::string x_text;
  double tol = 1e-10;
  bool tol_defaulted = true;
  int partial_depth = 8;
  std::int64_t r = 0;
  std::int64_t b = 0;
  double a0 = 0.5;
  double a1 = 1.0;
  std::vector<int> k_list;
  double budget_value = 1e6;  // accepts scientific notation ("1e7")
  bool budget_defaulted = true;
  std::uint64_t seed = 0;
  bool seed_defaulted = true;
  std::string format = "text";
  bool format_defaulted = true;
  std::string output;  // empty -> stdout
  int threads = 0;     // 0 -> WILTON_LAB_THREADS or the OpenMP default
  std::string suite;
};

std::string maybe_default(bool defaulted) {
  return defaulted ? " (default)" : "";
}

// Deliver an artifact: file (atomic) when a path was given, stdout otherwise.
// Returns true when stdout carried the artifact, so the human summary must
// move to stderr to keep the artifact bytes clean.
bool emit_artifact(const run_config& cfg, const std::string& content) {
  if (!cfg.output.empty()) {
    io::write_atomic(cfg.output, content);
    return false;
  }
  std::fputs(content.c_str(), stdout);
  return true;
}

// The echoed RunConfig: every field that determines the results, defaults
// included. Volatile execution context (thread count, wall time) stays in
// the human summary only — identical configs must reproduce identical
// artifact bytes whatever the parallelism.
ordered_json common_config_json(const run_config& cfg) {
  ordered_json j;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["format"] = cfg.format;
  j["output"] = cfg.output.empty() ? "stdout" : cfg.output;
  return j;
}

void print_common_config_text(std::ostream& os, const run_config& cfg) {
  os << "  format   " << cfg.format << maybe_default(cfg.format_defaulted)
     << "\n";
  os << "  output   " << (cfg.output.empty() ? "stdout" : cfg.output) << "\n";
  os << "  threads  " << configured_threads() << "\n";
}

// ------------------------------------------------------------------- eval

struct eval_outcome {
  double value = 0.0;
  double bound = 0.0;
  std::int64_t terms = 0;
  bool terminated = false;
  std::string route;
};

eval_outcome dispatch_eval(const std::string& target, const real_spec& x,
                           double tol, int partial_depth) {
  const bool lambda_target =
      target == "A" || target == "F" || target == "phi2";
  if (!lambda_target && x.is_one()) {
    throw domain_error("x = 1 is outside (0,1) for target '" + target + "'");
  }
  eval_outcome out;
  if (target == "wilton") {
    const wilton_eval w = wilton(x, tol);
    out = {w.value, w.abs_error_bound, w.depth, w.terminated,
           "alternating gamma sum over the continued-fraction orbit"};
  } else if (target == "g") {
    const eval_result r = g_fast(x, tol);
    out = {r.value, r.abs_error_bound, r.terms_used, r.terminated,
           "W + H from one shared orbit (fast route)"};
  } else if (target == "G") {
    const eval_result r = g_big(x, tol);
    out = {r.value, r.abs_error_bound, r.terms_used, r.terminated,
           "alternating F-series over the orbit, each F certified"};
  } else if (target == "H") {
    const eval_result r = h_func(x, tol);
    out = {r.value, r.abs_error_bound, r.terms_used, r.terminated,
           "-2 G, bound doubled"};
  } else if (target == "A") {
    const eval_result r = a_lambda(x, tol);
    out = {r.value, r.abs_error_bound, r.terms_used, r.terminated,
           "log/linear terms + phi2 curvature + certified tail integral"};
  } else if (target == "F") {
    const eval_result r = f_certified(x, tol);
    out = {r.value, r.abs_error_bound, r.terms_used, r.terminated,
           "(A(1) - x)/2 - (x^2/2) phi2({1/x}) + certified tail integral"};
  } else if (target == "phi2") {
    if (x.is_rational_value() && x.den <= 200000) {
      const eval_result r =
          phi2_rational(static_cast<std::int64_t>(x.num),
                        static_cast<std::int64_t>(x.den));
      out = {r.value, r.abs_error_bound, r.terms_used, r.terminated,
             "exact rational route (Hurwitz zeta per residue)"};
    } else {
      const eval_result r = phi2_certified(approx_double(x), tol);
      out = {r.value, r.abs_error_bound, r.terms_used, r.terminated,
             "certified termwise Bernoulli series"};
    }
  } else if (target == "L-partial") {
    out.value = partial_sum_l(x, partial_depth);
    out.bound = 0.0;  // finite double sum; rounding is not certified
    out.terms = partial_depth + 1;
    out.terminated = true;
    out.route = "finite alternating partial sum L(x, n), uncertified rounding";
  } else {
    throw std::invalid_argument("unknown eval target '" + target + "'");
  }
  return out;
}

int cmd_eval(const run_config& cfg) {
  const real_spec x = parse_real(cfg.x_text);
  const eval_outcome r =
      dispatch_eval(cfg.target, x, cfg.tol, cfg.partial_depth);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "eval";
    ordered_json config = common_config_json(cfg);
    config["target"] = cfg.target;
    config["x"] = cfg.x_text;
    if (cfg.target == "L-partial") config["n"] = cfg.partial_depth;
    j["config"] = config;
    ordered_json result;
    result["value"] = r.value;
    result["abs_error_bound"] = r.bound;
    result["terms"] = r.terms;
    result["terminated"] = r.terminated;
    result["route"] = r.route;
    j["result"] = result;
    emit_artifact(cfg, j.dump(2) + "\n");
    return exit_ok;
  }
  std::ostringstream os;
  os << "run config\n";
  os << "  command  eval\n";
  os << "  target   " << cfg.target << "\n";
  os << "  x        " << cfg.x_text << "\n";
  os << "  tol      " << io::format_double(cfg.tol)
     << maybe_default(cfg.tol_defaulted) << "\n";
  if (cfg.target == "L-partial") os << "  n        " << cfg.partial_depth << "\n";
  print_common_config_text(os, cfg);
  os << "\n" << cfg.target << "(" << format_real(x) << ")\n";
  os << "  value        " << io::format_double(r.value) << "\n";
  os << "  error bound  " << io::format_double(r.bound) << "\n";
  os << "  terms        " << r.terms << "\n";
  os << "  terminated   " << (r.terminated ? "yes" : "no") << "\n";
  os << "  route        " << r.route << "\n";
  emit_artifact(cfg, os.str());
  return exit_ok;
}

// -------------------------------------------------------- cotangent / scan

int cmd_cotangent(const run_config& cfg) {
  const double value = cotangent_sum(cfg.r, cfg.b);
  const scan_record rec{cfg.r, cfg.b, value,
                        value / static_cast<double>(cfg.b)};
  if (cfg.format == "json" || cfg.format == "csv") {
    ordered_json config = common_config_json(cfg);
    config["r"] = cfg.r;
    config["b"] = cfg.b;
    const std::string content = cfg.format == "json"
                                    ? io::scan_json(config, {rec})
                                    : io::scan_csv({rec});
    emit_artifact(cfg, content);
    return exit_ok;
  }
  std::ostringstream os;
  os << "run config\n";
  os << "  command  cotangent\n";
  os << "  r        " << cfg.r << "\n";
  os << "  b        " << cfg.b << "\n";
  print_common_config_text(os, cfg);
  os << "\nc0(" << cfg.r << "/" << cfg.b << ")\n";
  os << "  value       " << io::format_double(rec.value) << "\n";
  os << "  value / b   " << io::format_double(rec.normalized) << "\n";
  emit_artifact(cfg, os.str());
  return exit_ok;
}

int cmd_scan(const run_config& cfg) {
  const std::vector<scan_record> rows = scan_cotangent(cfg.b, cfg.a0, cfg.a1);
  if (cfg.format == "json" || cfg.format == "csv") {
    ordered_json config = common_config_json(cfg);
    config["b"] = cfg.b;
    config["a0"] = cfg.a0;
    config["a1"] = cfg.a1;
    const std::string content = cfg.format == "json"
                                    ? io::scan_json(config, rows)
                                    : io::scan_csv(rows);
    emit_artifact(cfg, content);
    return exit_ok;
  }
  std::ostringstream os;
  os << "run config\n";
  os << "  command  scan\n";
  os << "  b        " << cfg.b << "\n";
  os << "  a0       " << io::format_double(cfg.a0) << "\n";
  os << "  a1       " << io::format_double(cfg.a1) << "\n";
  print_common_config_text(os, cfg);
  os << "\n  r      c0(r/b)                 c0(r/b)/b\n";
  for (const auto& rec : rows) {
    std::string head = "  " + std::to_string(rec.r);
    head.resize(std::max<std::size_t>(head.size() + 1, 9), ' ');
    os << head;
    const std::string v = io::format_double(rec.value);
    os << v;
    for (std::size_t i = v.size(); i < 24; ++i) os << ' ';
    os << io::format_double(rec.normalized) << "\n";
  }
  os << "  (" << rows.size() << " coprime residues)\n";
  emit_artifact(cfg, os.str());
  return exit_ok;
}

// ---------------------------------------------------------------- moments

int cmd_moments(const run_config& cfg) {
  if (!(cfg.budget_value >= 1.0 && cfg.budget_value <= 9e18) ||
      !std::isfinite(cfg.budget_value)) {
    throw std::invalid_argument("budget must be a finite count >= 1");
  }
  const auto budget = static_cast<std::int64_t>(std::llround(cfg.budget_value));

  // Calibration pre-flight: the importance engine must reproduce the exact
  // factorial moment before any estimate is trusted.
  const double calib = calib_moment_l(5);
  const double calib_rel = std::abs(calib / 120.0 - 1.0);
  if (!(calib_rel <= 1e-3)) {
    std::fprintf(stderr,
                 "calibration failure: calib_moment_l(5) = %s is %s relative "
                 "from 5! = 120 (tolerance 1e-3)\n",
                 io::format_double(calib).c_str(),
                 io::format_double(calib_rel).c_str());
    return exit_calibration;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<moment_estimate> rows =
      moment_table(cfg.k_list, budget, cfg.seed);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  ordered_json config = common_config_json(cfg);
  config["K"] = cfg.k_list;
  config["budget"] = budget;

  bool artifact_on_stdout = false;
  if (cfg.format == "json") {
    artifact_on_stdout = emit_artifact(cfg, io::moments_json(config, rows));
  } else if (cfg.format == "csv") {
    artifact_on_stdout = emit_artifact(cfg, io::moments_csv(rows));
  }

  // Human summary; stderr when the artifact owns stdout.
  std::ostringstream os;
  os << "moments run: budget " << budget << maybe_default(cfg.budget_defaulted)
     << ", seed " << cfg.seed << maybe_default(cfg.seed_defaulted)
     << ", threads " << configured_threads() << ", format " << cfg.format
     << maybe_default(cfg.format_defaulted) << ", output "
     << (cfg.output.empty() ? "stdout" : cfg.output) << "\n";
  os << "calibration pre-flight: |calib(5)/5! - 1| = "
     << io::format_double(calib_rel) << " (tolerance 0.001)\n";
  os << "  K   value                   std_error               "
        "value / K!\n";
  for (const auto& e : rows) {
    std::ostringstream kf;
    kf << "  " << e.k;
    std::string line = kf.str();
    line.resize(6, ' ');
    os << line;
    const std::string v = io::format_double(e.value);
    os << v;
    for (std::size_t i = v.size(); i < 24; ++i) os << ' ';
    const std::string se = io::format_double(e.std_error);
    os << se;
    for (std::size_t i = se.size(); i < 24; ++i) os << ' ';
    os << io::format_double(e.ratio_to_prediction) << "\n";
  }
  os << "reference: value / K! should approach 2 exp(-A(1)) = "
     << io::format_double(prediction(1)) << " ~ 0.56693 as K grows\n";
  os << "wall " << io::format_double(wall) << " s\n";
  if (cfg.format == "text") {
    emit_artifact(cfg, os.str());
  } else {
    std::fputs(os.str().c_str(), artifact_on_stdout ? stderr : stdout);
  }
  return exit_ok;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const run_config& cfg) {
  const verify_report rep = run_verify_suite(cfg.suite);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "verify";
    ordered_json config = common_config_json(cfg);
    config["suite"] = cfg.suite;
    j["config"] = config;
    ordered_json lines = ordered_json::array();
    for (const auto& l : rep.lines) {
      ordered_json e;
      e["name"] = l.name;
      e["pass"] = l.pass;
      e["informational"] = l.informational;
      e["detail"] = l.detail;
      lines.push_back(e);
    }
    j["checks"] = lines;
    j["hard_failures"] = rep.hard_failures();
    emit_artifact(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "verify suite '" << cfg.suite << "', threads "
       << configured_threads() << "\n";
    for (const auto& l : rep.lines) {
      const char* mark = l.informational ? (l.pass ? "info" : "INFO")
                                         : (l.pass ? "PASS" : "FAIL");
      os << "[" << mark << "] " << l.name << "\n        " << l.detail << "\n";
    }
    os << rep.hard_failures() << " hard failures ("
       << "informational checks never fail the run)\n";
    emit_artifact(cfg, os.str());
  }
  return rep.hard_failures() == 0 ? exit_ok : exit_invariant;
}

}  // namespace

int main(int argc, char** argv) {
  run_config cfg;

  CLI::App app{"wilton-lab: continued-fraction orbits, Wilton's function, "
               "cotangent sums, and moment experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads_flag = 0;
  app.add_option("--threads", threads_flag,
                 "worker cap (overrides WILTON_LAB_THREADS)");

  const std::vector<std::string> formats{"text", "json", "csv"};
  const auto add_io_options = [&](CLI::App* cmd, bool allow_csv) {
    std::vector<std::string> allowed = formats;
    if (!allow_csv) allowed.pop_back();
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(allowed));
    cmd->add_option("--output", cfg.output,
                    "artifact path (atomic write); default stdout");
  };

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "evaluate one function at one point");
  eval_cmd
      ->add_option("target", cfg.target,
                   "one of g, wilton, H, G, A, F, phi2, L-partial")
      ->required()
      ->check(CLI::IsMember(
          {"g", "wilton", "H", "G", "A", "F", "phi2", "L-partial"}));
  eval_cmd
      ->add_option("--x", cfg.x_text,
                   "point: fraction, decimal, bits/2^w, dyadic:seed, or "
                   "[0;a1,(cycle)]; A/F/phi2 also accept 1")
      ->required();
  eval_cmd->add_option("--tol", cfg.tol, "absolute error tolerance");
  eval_cmd->add_option("--n", cfg.partial_depth,
                       "partial-sum depth for L-partial (default 8)");
  add_io_options(eval_cmd, false);

  CLI::App* cot_cmd =
      app.add_subcommand("cotangent", "one cotangent sum c0(r/b)");
  cot_cmd->add_option("--r", cfg.r, "numerator, coprime to b")->required();
  cot_cmd->add_option("--b", cfg.b, "denominator >= 2")->required();
  add_io_options(cot_cmd, true);

  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "cotangent sums over all coprime r in [a0*b, a1*b]");
  scan_cmd->add_option("--b", cfg.b, "denominator >= 3")->required();
  scan_cmd->add_option("--a0", cfg.a0, "window start in (0,1)");
  scan_cmd->add_option("--a1", cfg.a1, "window end in (a0,1]");
  add_io_options(scan_cmd, true);

  CLI::App* mom_cmd = app.add_subcommand(
      "moments", "importance-sampled moments of |g| vs 2 exp(-A) K!");
  mom_cmd
      ->add_option("--K", cfg.k_list,
                   "comma-separated moment orders, each in 1..14")
      ->required()
      ->delimiter(',');
  mom_cmd->add_option("--budget", cfg.budget_value,
                      "samples per moment (scientific notation ok)");
  mom_cmd->add_option("--seed", cfg.seed, "stream seed");
  add_io_options(mom_cmd, true);

  CLI::App* ver_cmd = app.add_subcommand(
      "verify", "run a module invariant suite and report margins");
  ver_cmd
      ->add_option("suite", cfg.suite,
                   "cf, special, wilton, gfun, measure, or all")
      ->required();
  add_io_options(ver_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  cfg.tol_defaulted = eval_cmd->count("--tol") == 0;
  cfg.budget_defaulted = mom_cmd->count("--budget") == 0;
  cfg.seed_defaulted = mom_cmd->count("--seed") == 0;
  CLI::App* active = app.get_subcommands().front();
  cfg.format_defaulted = active->count("--format") == 0;
  if (threads_flag > 0) set_thread_override(threads_flag);

  try {
    if (*eval_cmd) {
      cfg.command = "eval";
      return cmd_eval(cfg);
    }
    if (*cot_cmd) {
      cfg.command = "cotangent";
      return cmd_cotangent(cfg);
    }
    if (*scan_cmd) {
      cfg.command = "scan";
      return cmd_scan(cfg);
    }
    if (*mom_cmd) {
      cfg.command = "moments";
      return cmd_moments(cfg);
    }
    cfg.command = "verify";
    return cmd_verify(cfg);
  } catch (const parse_error& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return exit_usage;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return exit_usage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return exit_invariant;
  }
}
