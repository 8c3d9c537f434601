#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgardner/hirota.hpp"
#include "sgardner/solitons.hpp"

namespace sgardner {

// Default tolerances.
inline constexpr double kExactTolerance = 1e-10;
inline constexpr double kJetTolerance = 1e-8;
inline constexpr double kFiniteDifferenceTolerance = 1e-5;
// |body| of g or f below this marks a singular point.
inline constexpr double kSingularBody = 1e-8;

struct Point {
  double x = 0.0;
  double t = 0.0;
};

struct ResidualReport {
  std::string equation;
  Frame frame = Frame::XT;
  double max_abs = 0.0;
  double tol = 0.0;
  bool pass = true;
  // Location of the maximum: a SuperPoly term for exact residuals, a sample
  // point and monomial for pointwise ones.
  std::optional<TermLocation> term;
  std::optional<Point> point;
  Mask mask = 0;
  std::size_t points_checked = 0;
  std::vector<Point> skipped;
};

// ------------------------------------------------------------ bilinear

std::pair<ResidualReport, ResidualReport> bilinear_residual(const TauPair& tau, double tol = kExactTolerance);

// -------------------------------------------------------------- fields

/// Evaluates the superfield Phi = prefactor * D log(g/f) and its potential
/// phi = prefactor * log(g/f) as jets at arbitrary points of the pair's
/// frame. Phi is formed as prefactor * [(Dg) g^-1 - (Df) f^-1], with Dg and
/// Df taken exactly on the SuperPoly side before jetting.
///
/// Each of g and f is first divided by its own term that dominates at the
/// point, Grassmann coefficient included, and log of that term is added back
/// exactly. The bodies become O(1) and the nilpotent parts stop swamping the
/// series for log and inverse in interaction regions.
class Superfield {
public:
  explicit Superfield(TauPair tau);

  const TauPair& tau() const { return tau_; }

  // Throws SingularPointError when the body of g or f, divided by the sum of
  // its terms' magnitudes, is below kSingularBody.
  SuperJet field(double x, double t, unsigned mx = 3, unsigned mt = 1) const;
  SuperJet potential(double x, double t, unsigned mx = 3, unsigned mt = 1) const;

private:
  // a / (c e^{kX + wT}) and its D, for one candidate dominant term.
  struct Scaled {
    Complex k;
    Complex w;
    Grassmann log_c;
    double log_body = 0.0;
    SuperPoly poly;
    SuperPoly dpoly;
  };
  struct Local {
    const Scaled* sc;
    double log_scale;
    SuperJet value;
  };

  static std::vector<Scaled> prepare(const SuperPoly& a);
  static Local localize(const std::vector<Scaled>& options, double x, double t, unsigned mx, unsigned mt);
  // D log a and log a from a localized a.
  static SuperJet dlog(const Local& l, unsigned mx, unsigned mt);
  static SuperJet log_of(const Local& l);
  void check_regular(const Local& g, const Local& f) const;

  TauPair tau_;
  std::vector<Scaled> g_;
  std::vector<Scaled> f_;
};

// ----------------------------------------------------------------- PDE

enum class PdeForm { superfield, potential };

PdeForm parse_pde_form(std::string_view s);
std::string_view to_string(PdeForm form);

// Value of the nonlinear equation's left side at one point. `tau` must be in
// the xt frame.
Grassmann pde_residual_at(const Superfield& field, PdeForm form, double x, double t);

// Shifts tau to xt when needed; singular points are listed in `skipped`.
ResidualReport pde_residual(const TauPair& tau, PdeForm form, std::span<const Point> points,
                            double tol = kJetTolerance);

struct Box {
  double xmin = -10.0;
  double xmax = 10.0;
  double tmin = -10.0;
  double tmax = 10.0;
};

std::vector<Point> random_points(std::uint64_t seed, std::size_t count, const Box& box = {});

// ---------------------------------------------------------- components

struct Grid {
  double xmin = -5.0;
  double xmax = 5.0;
  std::size_t nx = 11;
  double tmin = -5.0;
  double tmax = 5.0;
  std::size_t nt = 11;

  double x(std::size_t i) const;
  double t(std::size_t j) const;
};

void validate(const Grid& grid);

/// Per-monomial samples of Phi on a grid of the pair's frame. values[m] is
/// T-major: values[m][j * nx + i] is at (x(i), t(j)).
struct FieldSample {
  Grid grid;
  Frame frame = Frame::XT;
  std::vector<Mask> monomials;
  std::vector<std::vector<Complex>> values;
  // Finite-difference residual of the classical Gardner equation for the
  // theta-component of the xi-free reduction, sampled at the grid points.
  double gardner_fd_residual = 0.0;
  double fd_step = 1e-3;
};

FieldSample components(const TauPair& tau, const Grid& grid, double fd_step = 1e-3);

// Drops every xi-carrying monomial from g and f.
TauPair xi_free(const TauPair& tau);

// ----------------------------------------------------------- long wave

struct LongwaveRow {
  double eps = 0.0;
  double max_deviation = 0.0;
  // deviation(previous eps) / deviation(this eps); 0 for the first row.
  double ratio = 0.0;
  // log(ratio) / log(previous eps / this eps); 0 for the first row.
  double order = 0.0;
};

struct LongwaveTable {
  double sigma = 1.0;
  double k0 = 1.0;
  Grid grid;
  std::vector<LongwaveRow> rows;
  double min_order = 0.0;
};

// Builds the one-soliton with k = eps k0, xi scaled by eps and exp(eta0) = -1
// and measures the largest per-monomial distance of its Phi from the
// rational solution's Phi on `grid`.
LongwaveTable longwave_convergence(double sigma, double k0, std::span<const double> eps_list,
                                   const Grid& grid = {-5.0, 5.0, 11, -5.0, 5.0, 11});

// ---------------------------------------------------------- asymptotics

struct AsymptoticRow {
  double t = 0.0;
  // Soliton frame (eta_2 fixed): max |Phi_mixed - Phi_soliton|.
  double soliton_frame_deviation = 0.0;
  // Rational frame (Q fixed): max |Phi_mixed - Phi_limit| with the shifted
  // limit for t < 0 and the unshifted one for t > 0.
  double rational_frame_deviation = 0.0;
  // Shift recovered from f at t < 0, by monomial: 1, theta*xi1, theta*xi2, xi1*xi2.
  std::optional<Grassmann> recovered_shift;
  double shift_deviation = 0.0;
};

struct AsymptoticReport {
  double sigma = 0.0;
  double k10 = 0.0;
  double k2 = 0.0;
  Grassmann expected_shift;
  std::vector<AsymptoticRow> rows;
  double tol = 1e-6;
  bool soliton_frame_pass = false;
  bool rational_frame_pass = false;
};

// 4k10/k2 + 2 theta (k2 xi1 - k10 xi2)/k2 - 2 xi1 xi2/k2 in the 3-generator algebra.
Grassmann rational_shift(double k10, double k2);

// `tau` must be a mixed rational-soliton pair carrying its spec.
AsymptoticReport asymptotic_shift_check(const TauPair& tau, std::span<const double> times, double tol = 1e-6,
                                        double soliton_eta = 0.0, double rational_offset = 0.5);

// ---------------------------------------------------------- identities

struct IdentityTrial {
  double cross_identity = 0.0;   // gf(D g.f) D(S g.f) - D(gf)(S g.f)(D g.f) - gf(D g.f)^2
  double pair_forms = 0.0;       // S^{2N+1} e1.e2 closed form, N = 0,1,2
  double unit_forms = 0.0;       // S^{2N+1} 1.e closed form and the e.1 relation
  double even_powers = 0.0;      // S^{2N} = D^N
  bool pass = false;
};

struct IdentityReport {
  std::uint64_t seed = 0;
  double tol = kExactTolerance;
  std::vector<IdentityTrial> trials;
  std::size_t passed = 0;
  double max_residual = 0.0;
};

// Random even SuperPoly with a few terms over `num_generators` generators.
SuperPoly random_even_superpoly(std::uint64_t seed, unsigned num_generators, unsigned terms = 3);

double cross_identity_residual(const SuperPoly& g, const SuperPoly& f);

IdentityReport identity_suite(std::uint64_t seed, std::size_t trials = 20, double tol = kExactTolerance);

} // namespace sgardner
