// sgardner: build tau pairs of the supersymmetric Gardner equation and check them.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgardner/io.hpp"

namespace {

using namespace sgardner;
using io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string config;
  std::string tau;
  std::string out;
  std::string frame;
  std::string regime;
  std::string kind;
  std::string form = "superfield";
  std::optional<double> sigma;
  std::vector<double> ks;
  double tol = 0.0;
  std::uint64_t seed = 1;
  std::size_t points = 16;
  std::size_t trials = 20;
  Grid grid;
  double fd_step = 1e-3;
  double k0 = 1.0;
  std::vector<double> eps;
  std::vector<double> times;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

TauPair load_tau(const std::string& path) { return io::tau_from_json(io::read_json_file(path)); }

void write_report(const Options& o, const Json& report) {
  if (!o.out.empty()) io::write_text_file(o.out, report.dump(2) + "\n");
}

double tol_or(const Options& o, double fallback) {
  if (o.tol < 0.0) throw ParameterError("--tol must be positive");
  return o.tol > 0.0 ? o.tol : fallback;
}

int run_build(const Options& o) {
  SolitonSpec spec = io::spec_from_json(io::read_json_file(o.config));
  if (o.sigma) spec.sigma = *o.sigma;
  if (!o.regime.empty()) spec.regime = parse_regime(o.regime);
  if (!o.kind.empty()) spec.kind = parse_kind(o.kind);
  if (!o.ks.empty()) {
    spec.entries.resize(o.ks.size());
    for (std::size_t i = 0; i < o.ks.size(); ++i) spec.entries[i].k = o.ks[i];
  }
  TauPair tau = build(spec);
  if (!o.frame.empty()) tau = to_frame(tau, parse_frame(o.frame));
  io::write_text_file(o.out, io::to_json(tau).dump(2) + "\n");
  std::cout << "built " << to_string(spec.kind) << " (" << to_string(spec.regime) << ", sigma " << spec.sigma << ", "
            << spec.entries.size() << " entries, " << tau.g.num_generators() << " generators, frame "
            << to_string(tau.frame) << ") -> " << o.out << "\n";
  return kPass;
}

int run_verify_bilinear(const Options& o) {
  TauPair tau = load_tau(o.tau);
  if (!o.frame.empty()) tau = to_frame(tau, parse_frame(o.frame));
  const auto [first, second] = bilinear_residual(tau, tol_or(o, kExactTolerance));
  for (const auto* r : {&first, &second}) {
    std::cout << r->equation << ": max_abs " << fmt(r->max_abs);
    if (r->max_abs > 0.0) std::cout << " at " << describe(*r->term);
    std::cout << " (" << (r->pass ? "pass" : "FAIL") << ", tol " << fmt(r->tol) << ")\n";
  }
  write_report(o, Json::array({io::to_json(first), io::to_json(second)}));
  return first.pass && second.pass ? kPass : kFail;
}

int run_verify_pde(const Options& o) {
  const TauPair tau = load_tau(o.tau);
  if (o.points == 0) throw ParameterError("--points must be positive");
  const auto points = random_points(o.seed, o.points);
  const ResidualReport r = pde_residual(tau, parse_pde_form(o.form), points, tol_or(o, kJetTolerance));
  std::cout << r.equation << " (seed " << o.seed << "): max_abs " << fmt(r.max_abs) << " over " << r.points_checked
            << " points";
  if (r.point) std::cout << ", worst at (" << r.point->x << ", " << r.point->t << ") " << monomial_name(r.mask);
  std::cout << ", " << r.skipped.size() << " singular skipped (" << (r.pass ? "pass" : "FAIL") << ", tol "
            << fmt(r.tol) << ")\n";
  Json report = io::to_json(r);
  report["seed"] = o.seed;
  write_report(o, report);
  return r.pass ? kPass : kFail;
}

int run_verify_identities(const Options& o) {
  const IdentityReport r = identity_suite(o.seed, o.trials, tol_or(o, kExactTolerance));
  const bool pass = r.passed == r.trials.size();
  std::cout << "identities (seed " << o.seed << "): " << r.passed << "/" << r.trials.size() << " pass, max residual "
            << fmt(r.max_residual) << "\n";
  write_report(o, io::to_json(r));
  return pass ? kPass : kFail;
}

int run_sample(const Options& o) {
  const TauPair tau = load_tau(o.tau);
  const FieldSample sample = components(tau, o.grid, o.fd_step);
  std::ostringstream csv;
  io::write_csv(csv, sample);
  io::write_text_file(o.out, csv.str());
  std::cout << "sampled " << sample.monomials.size() << " monomials on " << o.grid.nx << "x" << o.grid.nt
            << " grid -> " << o.out << "; Gardner FD residual of the xi-free reduction " << fmt(sample.gardner_fd_residual)
            << " (h = " << sample.fd_step << ")\n";
  return kPass;
}

int run_limit(const Options& o) {
  const LongwaveTable t = longwave_convergence(o.sigma.value_or(1.0), o.k0, o.eps);
  for (const auto& row : t.rows) {
    std::cout << "eps " << row.eps << ": max deviation " << fmt(row.max_deviation);
    if (row.ratio > 0.0) std::cout << ", ratio " << row.ratio << ", order " << row.order;
    std::cout << "\n";
  }
  const bool pass = t.rows.size() >= 2 && t.min_order >= 1.0;
  std::cout << "observed order " << t.min_order << " (" << (pass ? "pass" : "FAIL") << ", need >= 1)\n";
  write_report(o, io::to_json(t));
  return pass ? kPass : kFail;
}

int run_asymptotics(const Options& o) {
  const TauPair tau = load_tau(o.tau);
  const AsymptoticReport r = asymptotic_shift_check(tau, o.times, tol_or(o, 1e-6));
  std::cout << "expected shift " << to_string(r.expected_shift) << "\n";
  for (const auto& row : r.rows) {
    std::cout << "T " << row.t << ": soliton frame " << fmt(row.soliton_frame_deviation) << ", rational frame "
              << fmt(row.rational_frame_deviation);
    if (row.recovered_shift) std::cout << ", shift deviation " << fmt(row.shift_deviation);
    std::cout << "\n";
  }
  std::cout << "soliton frame " << (r.soliton_frame_pass ? "pass" : "FAIL") << ", rational frame "
            << (r.rational_frame_pass ? "pass" : "FAIL") << " (tol " << fmt(r.tol) << ")\n";
  write_report(o, io::to_json(r));
  return r.soliton_frame_pass && r.rational_frame_pass ? kPass : kFail;
}

void add_grid(CLI::App* app, Options& o) {
  app->add_option("--xmin", o.grid.xmin)->required();
  app->add_option("--xmax", o.grid.xmax)->required();
  app->add_option("--nx", o.grid.nx)->required();
  app->add_option("--tmin", o.grid.tmin)->required();
  app->add_option("--tmax", o.grid.tmax)->required();
  app->add_option("--nt", o.grid.nt)->required();
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Tau functions and solution checks for the supersymmetric Gardner equation"};
  app.require_subcommand(1);
  int (*command)(const Options&) = nullptr;

  auto* build = app.add_subcommand("build", "Build a tau pair from a JSON soliton spec");
  build->add_option("--config", o.config, "Soliton spec JSON")->required();
  build->add_option("--out", o.out, "Tau pair JSON to write")->required();
  build->add_option("--sigma", o.sigma, "Override sigma");
  build->add_option("--regime", o.regime, "Override regime (focusing|defocusing)");
  build->add_option("--kind", o.kind, "Override kind");
  build->add_option("--k", o.ks, "Override wave numbers")->delimiter(',');
  build->add_option("--frame", o.frame, "Frame of the written pair (XT|xt)");
  build->callback([&] { command = run_build; });

  auto* verify = app.add_subcommand("verify", "Check a tau pair or the algebraic identities");
  verify->require_subcommand(1);

  auto* bilinear = verify->add_subcommand("bilinear", "Exact bilinear residuals");
  bilinear->add_option("--tau", o.tau)->required();
  bilinear->add_option("--frame", o.frame, "Shift to this frame first (XT|xt)");
  bilinear->add_option("--tol", o.tol, "Tolerance (default 1e-10)");
  bilinear->add_option("--out", o.out, "JSON report");
  bilinear->callback([&] { command = run_verify_bilinear; });

  auto* pde = verify->add_subcommand("pde", "Nonlinear equation residual at random points");
  pde->add_option("--tau", o.tau)->required();
  pde->add_option("--form", o.form, "superfield|potential");
  pde->add_option("--points", o.points, "Number of points (default 16)");
  pde->add_option("--seed", o.seed, "Random seed (default 1)");
  pde->add_option("--tol", o.tol, "Tolerance (default 1e-8)");
  pde->add_option("--out", o.out, "JSON report");
  pde->callback([&] { command = run_verify_pde; });

  auto* identities = verify->add_subcommand("identities", "Randomized super-Hirota identities");
  identities->add_option("--seed", o.seed, "Random seed (default 1)");
  identities->add_option("--trials", o.trials, "Number of random trials (default 20)");
  identities->add_option("--tol", o.tol, "Tolerance (default 1e-10)");
  identities->add_option("--out", o.out, "JSON report");
  identities->callback([&] { command = run_verify_identities; });

  auto* sample = app.add_subcommand("sample", "Sample the superfield components on a grid");
  sample->add_option("--tau", o.tau)->required();
  add_grid(sample, o);
  sample->add_option("--fd-step", o.fd_step, "Finite-difference step (default 1e-3)");
  sample->add_option("--out", o.out, "CSV to write")->required();
  sample->callback([&] { command = run_sample; });

  auto* limit = app.add_subcommand("limit", "Long-wave limit of the one-soliton");
  limit->add_option("--sigma", o.sigma)->required();
  limit->add_option("--k0", o.k0)->required();
  limit->add_option("--eps", o.eps, "Decreasing eps values, comma separated")->required()->delimiter(',');
  limit->add_option("--out", o.out, "JSON report");
  limit->callback([&] { command = run_limit; });

  auto* asymptotics = app.add_subcommand("asymptotics", "Rational-soliton interaction limits");
  asymptotics->add_option("--tau", o.tau)->required();
  asymptotics->add_option("--times", o.times, "Times, comma separated")->required()->delimiter(',');
  asymptotics->add_option("--tol", o.tol, "Tolerance (default 1e-6)");
  asymptotics->add_option("--out", o.out, "JSON report");
  asymptotics->callback([&] { command = run_asymptotics; });

  if (argc > 1 && argv[1][0] != '-' && !app.get_subcommand_no_throw(argv[1])) {
    std::cerr << "error: unknown command '" << argv[1] << "' (expected build, verify, sample, limit or asymptotics)\n";
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << " (see --help)\n";
    return kUsage;
  }

  try {
    if (!o.out.empty() && (o.out == o.tau || o.out == o.config)) {
      throw ParameterError("--out must differ from the input file");
    }
    return command(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
