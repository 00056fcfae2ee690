// revlab command line front end.
//
// Subcommands:
//   evolve   - run one quasi-periodic evolution and write profile + manifest
//   weights  - print the translation weights of a revival operator
//   verify   - run the identity suites and emit a JSON report (CI gate)
//   fracdim  - box-counting dimension of an evolved profile (or calibration)
//   figures  - reproduce the reference figure panels as CSV files
//   nls      - split-step cubic Schroedinger run with the Galilean wrapper

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "revlab/io.hpp"
#include "revlab/nls.hpp"
#include "revlab/revlab.hpp"
#include "revlab/scenario.hpp"
#include "revlab/verify.hpp"

namespace {

using namespace revlab;
namespace fs = std::filesystem;

bool g_quiet = false;

void progress(const std::string& line) {
  if (!g_quiet) std::cerr << line << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// --time takes p/q or a decimal, both in units of 2*pi; --time-raw overrides
// with plain seconds.
TimeValue parse_time(const std::string& time_text, std::optional<double> raw_seconds) {
  if (raw_seconds) return TimeValue::raw(*raw_seconds);
  if (time_text.find('/') != std::string::npos) {
    Rational r = Rational::parse(time_text);
    if (r.num() < 0) throw CLI::ValidationError("--time", "negative times are not supported");
    if (r.is_zero()) return TimeValue::raw(0.0);
    return TimeValue::rational(
        RationalTime(static_cast<std::int64_t>(r.num()), static_cast<std::int64_t>(r.den())));
  }
  size_t pos = 0;
  double turns = std::stod(time_text, &pos);
  if (pos != time_text.size()) throw CLI::ValidationError("--time", "expected p/q or a decimal");
  return TimeValue::raw(turns * kTwoPi);
}

DispersionPolynomial parse_polynomial(const std::string& coeff_list, int monomial_order) {
  if (monomial_order > 0) return DispersionPolynomial::monomial(monomial_order);
  std::vector<std::int64_t> alpha;
  std::string token;
  std::istringstream in(coeff_list);
  while (std::getline(in, token, ',')) alpha.push_back(std::stoll(token));
  return DispersionPolynomial(std::move(alpha));
}

SpectralState load_initial(const std::string& initial, const ThetaValue& theta, int J) {
  if (initial == "box") return make_initial_box(theta, J);
  if (initial == "gaussian") return make_initial_gaussian(theta, J);
  GridProfile profile = io::read_profile_csv(initial);
  return analyze(profile, J, Basis::quasi, theta);
}

json theta_json(const ThetaValue& theta) {
  json j;
  j["text"] = theta.describe();
  j["kind"] = theta.is_rational() ? "rational"
              : theta.kind() == ThetaValue::Kind::sqrt_form ? "sqrt-form"
                                                            : "decimal";
  j["value"] = theta.value();
  return j;
}

json time_json(const TimeValue& t) {
  json j;
  if (t.is_rational()) {
    j["turns"] = t.as_turns().to_string();
  }
  j["seconds"] = t.seconds();
  j["rational"] = t.is_rational();
  return j;
}

json alpha_json(const DispersionPolynomial& P) {
  json j = json::array();
  for (auto a : P.alpha()) j.push_back(a);
  return j;
}

json boxcount_json(const BoxCountReport& rep) {
  json j;
  j["scales"] = rep.scales;
  j["counts"] = rep.counts;
  j["dimension"] = rep.dimension;
  j["fit_window"] = {rep.fit_begin, rep.fit_end};
  j["r_squared"] = rep.r_squared;
  return j;
}

json verify_json(const VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["params"] = c.params;
    j["max_error"] = c.max_error;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    checks.push_back(std::move(j));
  }
  json j;
  j["suite"] = rep.suite;
  j["checks"] = std::move(checks);
  j["pass"] = rep.pass;
  return j;
}

struct EvolveCliOpts {
  std::string coeffs = "0,0,0,1";
  int monomial = 0;
  std::string theta = "1/4";
  std::string time = "1/3";
  std::optional<double> time_raw;
  int J = 1024;
  size_t N = 0;
  std::string initial = "box";
  std::string method = "direct";
  bool revival = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--P", coeffs, "dispersion coefficients a0,a1,...,an");
    cmd->add_option("--monomial", monomial, "use P = x^n")->check(CLI::Range(2, 16));
    cmd->add_option("--theta", theta, "boundary parameter: p/q, decimal, or sqrt(k)/m");
    cmd->add_option("--time", time, "evolution time in units of 2*pi (p/q or decimal)");
    auto* raw = cmd->add_option("--time-raw", time_raw, "evolution time in raw seconds");
    raw->excludes(cmd->get_option("--time"));
    cmd->add_option("--modes,--J", J, "truncation order J")->check(CLI::PositiveNumber);
    cmd->add_option("--grid,--N", N, "grid size N (default 4J)");
    cmd->add_option("--initial", initial, "initial data: box, gaussian, or a profile CSV path");
    cmd->add_option("--method", method, "evolution route")
        ->check(CLI::IsMember({"direct", "correspondence", "composition"}));
    cmd->add_flag("--revival", revival, "apply rational composition factors as revival sums");
  }

  EvolveRequest request() const {
    EvolveRequest req;
    req.P = parse_polynomial(coeffs, monomial);
    req.theta = ThetaValue::parse(theta);
    req.time = parse_time(time, time_raw);
    req.J = J;
    req.N = N;
    req.method = method == "direct"           ? EvolveMethod::direct
                 : method == "correspondence" ? EvolveMethod::correspondence
                                              : EvolveMethod::composition;
    req.composition_mode =
        revival ? CompositionMode::revival_where_rational : CompositionMode::diagonal;
    return req;
  }
};

int cmd_evolve(const EvolveCliOpts& opts, const std::string& out_prefix) {
  Timer timer;
  EvolveRequest req = opts.request();
  SpectralState u0 = load_initial(opts.initial, req.theta, req.J);
  progress("evolve: J=" + std::to_string(req.J) + " N=" + std::to_string(req.grid()) +
           " method=" + std::string(to_string(req.method)));
  EvolveOutcome outcome = run_evolve(req, u0);

  fs::path csv = out_prefix + ".csv";
  io::write_profile_csv(csv, outcome.profile);

  json doc = io::manifest_root("evolve");
  doc["parameters"]["P"] = alpha_json(req.P);
  doc["parameters"]["theta"] = theta_json(req.theta);
  doc["parameters"]["time"] = time_json(req.time);
  doc["parameters"]["J"] = req.J;
  doc["parameters"]["N"] = req.grid();
  doc["parameters"]["initial"] = opts.initial;
  doc["parameters"]["method"] = to_string(req.method);
  doc["outputs"]["csv"] = csv.string();
  doc["norms"]["initial"] = outcome.initial_norm;
  doc["norms"]["final"] = outcome.final_norm;
  doc["norms"]["relative_drift"] = std::abs(outcome.final_norm / outcome.initial_norm - 1.0);
  if (req.method != EvolveMethod::direct)
    doc["residuals"]["method_vs_direct"] = outcome.method_residual;
  doc["residuals"]["boundary_twist"] = boundary_twist_residual(outcome.state);
  doc["duration_seconds"] = timer.seconds();
  io::write_json(out_prefix + ".json", doc);
  progress("evolve: wrote " + csv.string());
  return 0;
}

int cmd_weights(int order, const std::string& time_text, const std::string& out_path) {
  Rational turns = Rational::parse(time_text).mod_one();
  RevivalWeights rw;
  if (turns.is_zero()) {
    rw.order = order;
    rw.p = 0;
    rw.q = 1;
    rw.w = {cplx{1.0, 0.0}};
  } else {
    rw = revival_weights(order, static_cast<std::int64_t>(turns.num()),
                         static_cast<std::int64_t>(turns.den()));
  }
  double residue = revival_residue_error(rw);
  for (std::int64_t k = 0; k < rw.q; ++k) {
    const cplx w = rw.w[static_cast<size_t>(k)];
    std::printf("w[%lld] = %+.17g %+.17g i  (|w| = %.17g)\n", static_cast<long long>(k), w.real(),
                w.imag(), std::abs(w));
  }
  std::printf("residue identity max error = %.3e\n", residue);
  if (!out_path.empty()) {
    json doc = io::manifest_root("weights");
    doc["parameters"]["order"] = order;
    doc["parameters"]["time"] = time_text;
    doc["parameters"]["q"] = rw.q;
    json w = json::array();
    for (const auto& v : rw.w) w.push_back({{"re", v.real()}, {"im", v.imag()}});
    doc["weights"] = std::move(w);
    doc["residue_max_error"] = residue;
    io::write_json(out_path, doc);
  }
  return 0;
}

int cmd_verify(const std::string& suite, int n_max, int q_max, int J, const std::string& out_path) {
  Timer timer;
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    reports = verify_all(n_max, q_max, J);
  } else if (suite == "modes") {
    reports = {verify_modes(J)};
  } else if (suite == "revival") {
    reports = {verify_revival(n_max, q_max)};
  } else if (suite == "composition") {
    reports = {verify_composition(n_max, J)};
  } else {
    reports = {verify_correspondence(n_max, J)};
  }

  bool pass = true;
  json doc = io::manifest_root("verify");
  doc["parameters"]["suite"] = suite;
  doc["parameters"]["n_max"] = n_max;
  doc["parameters"]["q_max"] = q_max;
  doc["parameters"]["J"] = J;
  json suites = json::array();
  for (const auto& rep : reports) {
    suites.push_back(verify_json(rep));
    pass = pass && rep.pass;
    for (const auto& c : rep.checks)
      progress((c.pass ? "pass: " : "FAIL: ") + rep.suite + " / " + c.name + " [" + c.params +
               "] max_error=" + io::format_g17(c.max_error));
  }
  doc["suites"] = std::move(suites);
  doc["pass"] = pass;
  doc["duration_seconds"] = timer.seconds();
  std::cout << doc.dump(2) << "\n";
  if (!out_path.empty()) io::write_json(out_path, doc);
  return pass ? 0 : 1;
}

GridProfile calibration_profile(const std::string& which, size_t N) {
  return which == "line" ? line_profile(N) : weierstrass_profile(N);
}

int cmd_fracdim(const EvolveCliOpts& opts, const std::string& part_name,
                const std::string& calibration, const std::string& out_prefix) {
  Timer timer;
  Part part = part_name == "im" ? Part::im : Part::re;
  json doc = io::manifest_root("fracdim");
  std::optional<GridProfile> profile;
  if (!calibration.empty()) {
    size_t N = opts.N == 0 ? (1u << 16) : opts.N;
    profile = calibration_profile(calibration, N);
    doc["parameters"]["calibration"] = calibration;
    doc["parameters"]["N"] = N;
  } else {
    EvolveRequest req = opts.request();
    SpectralState u0 = load_initial(opts.initial, req.theta, req.J);
    EvolveOutcome outcome = run_evolve(req, u0);
    profile = std::move(outcome.profile);
    doc["parameters"]["P"] = alpha_json(req.P);
    doc["parameters"]["theta"] = theta_json(req.theta);
    doc["parameters"]["time"] = time_json(req.time);
    doc["parameters"]["J"] = req.J;
    doc["parameters"]["N"] = req.grid();
    doc["parameters"]["method"] = to_string(req.method);
  }
  doc["parameters"]["part"] = part_name;
  BoxCountReport rep = box_dimension(*profile, part);
  doc["report"] = boxcount_json(rep);
  doc["duration_seconds"] = timer.seconds();
  io::write_profile_csv(out_prefix + ".csv", *profile);
  io::write_json(out_prefix + ".json", doc);
  std::printf("dimension = %.4f  (r^2 = %.5f)\n", rep.dimension, rep.r_squared);
  return 0;
}

int cmd_figures(const std::string& which, const std::string& outdir, int J, size_t N) {
  Timer timer;
  fs::create_directories(outdir);
  json doc = io::manifest_root("figures");
  doc["parameters"]["which"] = which;
  doc["parameters"]["J"] = J;
  json panels = json::array();

  auto want = [&](int figure) { return which == "all" || which == std::to_string(figure); };

  if (want(1)) {
    size_t grid = N == 0 ? 4096 : N;
    ProfileMeta meta;
    meta.method = "initial";
    GridProfile initial = box_profile(grid, meta);
    fs::path csv = fs::path(outdir) / "fig1_initial.csv";
    io::write_profile_csv(csv, initial);
    json p;
    p["figure"] = 1;
    p["name"] = "fig1_initial";
    p["csv"] = csv.string();
    p["N"] = grid;
    panels.push_back(std::move(p));
    progress("figures: wrote " + csv.string());
  }

  for (const auto& panel : figure_panels(J, N)) {
    if (!want(panel.figure)) continue;
    SpectralState u0 = make_initial_box(panel.request.theta, panel.request.J);
    EvolveOutcome outcome = run_evolve(panel.request, u0);
    fs::path csv = fs::path(outdir) / (panel.name + ".csv");
    io::write_profile_csv(csv, outcome.profile);
    json p;
    p["figure"] = panel.figure;
    p["name"] = panel.name;
    p["csv"] = csv.string();
    p["P"] = alpha_json(panel.request.P);
    p["theta"] = theta_json(panel.request.theta);
    p["time"] = time_json(panel.request.time);
    p["J"] = panel.request.J;
    p["N"] = panel.request.grid();
    p["norm_drift"] = std::abs(outcome.final_norm / outcome.initial_norm - 1.0);
    panels.push_back(std::move(p));
    progress("figures: wrote " + csv.string());
  }
  doc["panels"] = std::move(panels);
  doc["duration_seconds"] = timer.seconds();
  io::write_json(fs::path(outdir) / "figures_manifest.json", doc);
  return 0;
}

int cmd_nls(const std::string& theta_text, double T, double dt, int J, size_t N,
            const std::string& initial, double amplitude, bool order_study,
            const std::string& out_prefix) {
  Timer timer;
  NlsConfig cfg;
  cfg.theta = ThetaValue::parse(theta_text);
  cfg.T = T;
  cfg.dt = dt;
  cfg.J = J;
  cfg.N = N == 0 ? static_cast<size_t>(4 * J) : N;
  cfg.validate();

  SpectralState u0 = load_initial(initial, cfg.theta, cfg.J);
  if (amplitude != 1.0)
    for (auto& c : u0.coeffs()) c *= amplitude;

  progress("nls: steps=" + std::to_string(static_cast<long>(cfg.T / cfg.dt)));
  SpectralState u = nls_evolve_quasi(u0, cfg);
  GridProfile profile = synthesize(u, cfg.N);
  io::write_profile_csv(out_prefix + ".csv", profile);

  json doc = io::manifest_root("nls");
  doc["parameters"]["theta"] = theta_json(cfg.theta);
  doc["parameters"]["T"] = cfg.T;
  doc["parameters"]["dt"] = cfg.dt;
  doc["parameters"]["J"] = cfg.J;
  doc["parameters"]["N"] = cfg.N;
  doc["parameters"]["initial"] = initial;
  doc["parameters"]["amplitude"] = amplitude;
  doc["conservation"]["initial_mass"] = u0.norm();
  doc["conservation"]["final_mass"] = u.norm();
  doc["conservation"]["relative_drift"] = std::abs(u.norm() / u0.norm() - 1.0);
  doc["residuals"]["boundary_twist"] = boundary_twist_residual(u);

  if (order_study) {
    NlsConfig ref_cfg = cfg;
    ref_cfg.dt = dt / 16.0;
    SpectralState ref = nls_evolve_quasi(u0, ref_cfg);
    json study = json::array();
    std::vector<double> dts = {4.0 * dt, 2.0 * dt, dt};
    std::vector<double> errs;
    for (double step : dts) {
      NlsConfig c = cfg;
      c.dt = step;
      SpectralState out = nls_evolve_quasi(u0, c);
      double err = 0.0;
      for (size_t i = 0; i < out.size(); ++i) err += std::norm(out.coeffs()[i] - ref.coeffs()[i]);
      errs.push_back(std::sqrt(err));
      study.push_back({{"dt", step}, {"error", errs.back()}});
    }
    double slope = std::log(errs.front() / errs.back()) / std::log(dts.front() / dts.back());
    doc["convergence"]["samples"] = std::move(study);
    doc["convergence"]["order"] = slope;
    progress("nls: observed order " + io::format_g17(slope));
  }
  doc["duration_seconds"] = timer.seconds();
  io::write_json(out_prefix + ".json", doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for quasi-periodic dispersive evolution"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "suppress progress output");

  auto* evolve = app.add_subcommand("evolve", "evolve an initial profile and write CSV + manifest");
  EvolveCliOpts evolve_opts;
  evolve_opts.attach(evolve);
  std::string evolve_out = "evolve_out";
  evolve->add_option("--out", evolve_out, "output prefix");

  auto* weights = app.add_subcommand("weights", "revival operator translation weights");
  int w_order = 2;
  std::string w_time = "1/2";
  std::string w_out;
  weights->add_option("--order", w_order, "group order n")->required()->check(CLI::Range(2, 64));
  weights->add_option("--time", w_time, "rational time p/q in units of 2*pi")->required();
  weights->add_option("--out", w_out, "optional JSON output path");

  auto* verify = app.add_subcommand("verify", "run identity suites, exit nonzero on failure");
  std::string v_suite = "all";
  int v_nmax = 6, v_qmax = 64, v_J = 1024;
  std::string v_out;
  verify->add_option("--suite", v_suite, "modes|revival|composition|correspondence|all")
      ->check(CLI::IsMember({"modes", "revival", "composition", "correspondence", "all"}));
  verify->add_option("--n-max", v_nmax, "largest polynomial order")->check(CLI::Range(3, 8));
  verify->add_option("--q-max", v_qmax, "largest revival denominator")->check(CLI::PositiveNumber);
  verify->add_option("--J", v_J, "truncation order for coefficient suites")->check(CLI::PositiveNumber);
  verify->add_option("--out", v_out, "optional JSON output path");

  auto* fracdim = app.add_subcommand("fracdim", "box-counting dimension of an evolved profile");
  EvolveCliOpts frac_opts;
  frac_opts.J = 1 << 14;
  frac_opts.attach(fracdim);
  std::string f_part = "re";
  std::string f_calibration;
  std::string f_out = "fracdim_out";
  fracdim->add_option("--part", f_part, "re or im")->check(CLI::IsMember({"re", "im"}));
  fracdim->add_option("--calibration", f_calibration, "skip evolution, use a calibration profile")
      ->check(CLI::IsMember({"line", "weierstrass"}));
  fracdim->add_option("--out", f_out, "output prefix");

  auto* figures = app.add_subcommand("figures", "write the reference figure panels");
  std::string g_which = "all";
  std::string g_outdir = "figures";
  int g_J = 1024;
  size_t g_N = 0;
  figures->add_option("--which", g_which, "1|2|3|4|all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
  figures->add_option("--outdir", g_outdir, "output directory");
  figures->add_option("--modes,--J", g_J, "truncation order")->check(CLI::PositiveNumber);
  figures->add_option("--grid,--N", g_N, "grid size (default 4J)");

  auto* nls = app.add_subcommand("nls", "quasi-periodic cubic NLS split-step run");
  std::string n_theta = "1/4";
  double n_T = 1.0, n_dt = 1e-3, n_amplitude = 1.0;
  int n_J = 256;
  size_t n_N = 0;
  std::string n_initial = "box";
  std::string n_out = "nls_out";
  bool n_order_study = false;
  nls->add_option("--theta", n_theta, "boundary parameter");
  nls->add_option("--T", n_T, "final time in seconds")->check(CLI::NonNegativeNumber);
  nls->add_option("--dt", n_dt, "time step")->check(CLI::PositiveNumber);
  nls->add_option("--modes,--J", n_J, "truncation order")->check(CLI::PositiveNumber);
  nls->add_option("--grid,--N", n_N, "grid size (default 4J)");
  nls->add_option("--initial", n_initial, "box, gaussian, or a profile CSV path");
  nls->add_option("--amplitude", n_amplitude, "scale factor applied to the initial data");
  nls->add_flag("--order-study", n_order_study, "also run the dt-refinement study");
  nls->add_option("--out", n_out, "output prefix");

  for (auto* sub : {evolve, weights, verify, fracdim, figures, nls}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*evolve) return cmd_evolve(evolve_opts, evolve_out);
    if (*weights) return cmd_weights(w_order, w_time, w_out);
    if (*verify) return cmd_verify(v_suite, v_nmax, v_qmax, v_J, v_out);
    if (*fracdim) return cmd_fracdim(frac_opts, f_part, f_calibration, f_out);
    if (*figures) return cmd_figures(g_which, g_outdir, g_J, g_N);
    if (*nls) return cmd_nls(n_theta, n_T, n_dt, n_J, n_N, n_initial, n_amplitude, n_order_study, n_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
