#include "sgardner/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

namespace sgardner {

namespace {

// Portable uniform draw: the standard distributions are not specified
// bit-for-bit across library implementations.
class Uniform {
public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::uint64_t next() { return rng_(); }

private:
  std::mt19937_64 rng_;
};

Grassmann theta(unsigned n) { return Grassmann::generator(n, kTheta); }

double sign_of(Regime r) { return r == Regime::focusing ? 1.0 : -1.0; }

// Largest per-monomial difference between two Grassmann values.
double distance(const Grassmann& a, const Grassmann& b, Mask* where = nullptr) {
  const Grassmann d = a - b;
  double best = 0.0;
  for (const auto& t : d.terms()) {
    if (std::abs(t.coeff) > best) {
      best = std::abs(t.coeff);
      if (where) *where = t.mask;
    }
  }
  return best;
}

} // namespace

// ------------------------------------------------------------ bilinear

std::pair<ResidualReport, ResidualReport> bilinear_residual(const TauPair& tau, double tol) {
  const auto system = gardner_bilinear_system(tau.regime, tau.frame, tau.sigma);
  std::vector<ResidualReport> reports;
  for (const auto& eq : system) {
    const ZeroReport z = is_zero(apply_bilinear(eq, tau), tol);
    ResidualReport r;
    r.equation = eq.id;
    r.frame = tau.frame;
    r.max_abs = z.max_abs;
    r.tol = tol;
    r.pass = z.zero;
    r.term = z.at;
    r.mask = z.at.mask;
    reports.push_back(std::move(r));
  }
  return {reports[0], reports[1]};
}

// -------------------------------------------------------------- fields

Superfield::Superfield(TauPair tau) : tau_(std::move(tau)), g_(prepare(tau_.g)), f_(prepare(tau_.f)) {}

std::vector<Superfield::Scaled> Superfield::prepare(const SuperPoly& a) {
  const unsigned n = a.num_generators();
  auto same = [](Complex k1, Complex w1, Complex k2, Complex w2) {
    return std::abs(k1 - k2) <= kRateMergeTolerance && std::abs(w1 - w2) <= kRateMergeTolerance;
  };
  std::vector<Scaled> out;
  for (const auto& term : a.terms()) {
    if (std::any_of(out.begin(), out.end(), [&](const Scaled& sc) { return same(sc.k, sc.w, term.k, term.w); })) {
      continue;
    }
    // Pure-exponential coefficient at this rate; polynomial-only rates are
    // divided by the exponential alone.
    Grassmann c = Grassmann::scalar(n, 1.0);
    for (const auto& other : a.terms()) {
      if (other.xpow == 0 && other.tpow == 0 && same(other.k, other.w, term.k, term.w) &&
          other.coeff.body() != Complex{}) {
        c = other.coeff;
      }
    }
    Scaled sc;
    sc.k = term.k;
    sc.w = term.w;
    sc.log_c = log(c);
    sc.log_body = std::log(std::abs(c.body()));
    sc.poly = SuperPoly::exponential(inverse(c), -term.k, -term.w) * a;
    sc.dpoly = superD(sc.poly);
    out.push_back(std::move(sc));
  }
  if (out.empty()) throw DomainError("superfield: tau function is identically zero");
  return out;
}

Superfield::Local Superfield::localize(const std::vector<Scaled>& options, double x, double t, unsigned mx,
                                       unsigned mt) {
  const Scaled* best = &options.front();
  double best_size = -std::numeric_limits<double>::infinity();
  for (const auto& sc : options) {
    const double size = (sc.k * x + sc.w * t).real() + sc.log_body;
    if (size > best_size) {
      best_size = size;
      best = &sc;
    }
  }
  // Leftover growth from terms whose nilpotent or polynomial parts outrun
  // the dominant body.
  const double s = std::max(0.0, max_exponent(best->poly, x, t));
  return {best, s, jet(best->poly, x, t, mx, mt, s)};
}

// D log a = D(a/c) (a/c)^-1 + D log c, with D log c = d(log c0)/dtheta + theta k.
SuperJet Superfield::dlog(const Local& l, unsigned mx, unsigned mt) {
  const double x = l.value.x0();
  const double t = l.value.t0();
  const unsigned n = l.value.num_generators();
  SuperJet out = jet(l.sc->dpoly, x, t, mx, mt, l.log_scale) * inverse(l.value);
  out.coeff(0, 0) += dtheta(l.sc->log_c, kTheta) + Grassmann::generator(n, kTheta) * l.sc->k;
  return out;
}

// log a = log(a/c) + log c0 + kX + wT, plus the factor removed by log_scale.
SuperJet Superfield::log_of(const Local& l) {
  const double x = l.value.x0();
  const double t = l.value.t0();
  const unsigned n = l.value.num_generators();
  SuperJet out = log(l.value);
  out.coeff(0, 0) += l.sc->log_c + Grassmann::scalar(n, l.sc->k * x + l.sc->w * t + l.log_scale);
  if (out.mx() >= 1) out.coeff(1, 0) += Grassmann::scalar(n, l.sc->k);
  if (out.mt() >= 1) out.coeff(0, 1) += Grassmann::scalar(n, l.sc->w);
  return out;
}

namespace {

// Sum of the magnitudes of the terms' bodies at (x, t), in the units of
// eval(..., log_scale).
double body_scale(const SuperPoly& a, double x, double t, double log_scale) {
  double sum = 0.0;
  for (const auto& term : a.terms()) {
    const double b = std::abs(term.coeff.body());
    if (b == 0.0) continue;
    sum += b * std::pow(std::abs(x), term.xpow) * std::pow(std::abs(t), term.tpow) *
           std::exp((term.k * x + term.w * t).real() - log_scale);
  }
  return sum;
}

} // namespace

void Superfield::check_regular(const Local& g, const Local& f) const {
  const double x = g.value.x0();
  const double t = g.value.t0();
  const double bg = std::abs(g.value.value().body()) / body_scale(g.sc->poly, x, t, g.log_scale);
  const double bf = std::abs(f.value.value().body()) / body_scale(f.sc->poly, x, t, f.log_scale);
  if (!(bg >= kSingularBody) || !(bf >= kSingularBody)) {
    throw SingularPointError("singular point (" + std::to_string(x) + ", " + std::to_string(t) +
                             "): relative |body g| = " + std::to_string(bg) + ", |body f| = " + std::to_string(bf));
  }
}

SuperJet Superfield::field(double x, double t, unsigned mx, unsigned mt) const {
  const Local g = localize(g_, x, t, mx, mt);
  const Local f = localize(f_, x, t, mx, mt);
  check_regular(g, f);
  return (dlog(g, mx, mt) - dlog(f, mx, mt)) * tau_.prefactor;
}

SuperJet Superfield::potential(double x, double t, unsigned mx, unsigned mt) const {
  const Local g = localize(g_, x, t, mx, mt);
  const Local f = localize(f_, x, t, mx, mt);
  check_regular(g, f);
  return (log_of(g) - log_of(f)) * tau_.prefactor;
}

// ----------------------------------------------------------------- PDE

PdeForm parse_pde_form(std::string_view s) {
  if (s == "superfield") return PdeForm::superfield;
  if (s == "potential") return PdeForm::potential;
  throw FormatError("unknown PDE form '" + std::string(s) + "' (expected superfield|potential)");
}

std::string_view to_string(PdeForm form) { return form == PdeForm::superfield ? "superfield" : "potential"; }

Grassmann pde_residual_at(const Superfield& field, PdeForm form, double x, double t) {
  const TauPair& tau = field.tau();
  if (tau.frame != Frame::xt) throw FrameError("PDE residuals are evaluated in the xt frame");
  const double s = sign_of(tau.regime);
  const double sigma = tau.sigma;

  if (form == PdeForm::superfield) {
    // Phi_t + Phi_xxx + s [3 (D Phi)(Phi D Phi)_x + 3 sigma (Phi D Phi)_x]
    const SuperJet phi = field.field(x, t);
    const SuperJet dphi = superD(phi);
    const SuperJet flux_x = dx(phi * dphi);
    const SuperJet nonlinear = (dphi * flux_x) * 3.0 + flux_x * (3.0 * sigma);
    return dt(phi).value() + dx(dx(dx(phi))).value() + nonlinear.value() * s;
  }

  // phi_t + phi_xxx + s [2 phi_x^3 - 3 (D phi)(D phi_x) phi_x + 3 sigma phi_x^2
  //                     - 3 sigma (D phi)(D phi_x)]
  const SuperJet phi = field.potential(x, t);
  const SuperJet phi_x = dx(phi);
  const SuperJet dphi = superD(phi);
  const SuperJet dphi_x = superD(phi_x);
  const SuperJet nonlinear = phi_x * phi_x * phi_x * 2.0 - dphi * dphi_x * phi_x * 3.0 +
                             phi_x * phi_x * (3.0 * sigma) - dphi * dphi_x * (3.0 * sigma);
  return dt(phi).value() + dx(dx(dx(phi))).value() + nonlinear.value() * s;
}

ResidualReport pde_residual(const TauPair& tau, PdeForm form, std::span<const Point> points, double tol) {
  const Superfield field(to_frame(tau, Frame::xt));
  ResidualReport r;
  r.equation = std::string(to_string(tau.regime)) + "/" + std::string(to_string(form));
  r.frame = Frame::xt;
  r.tol = tol;
  for (const auto& p : points) {
    Grassmann value;
    try {
      value = pde_residual_at(field, form, p.x, p.t);
    } catch (const SingularPointError&) {
      r.skipped.push_back(p);
      continue;
    }
    ++r.points_checked;
    if (!r.point) r.point = p;
    for (const auto& term : value.terms()) {
      if (std::abs(term.coeff) > r.max_abs) {
        r.max_abs = std::abs(term.coeff);
        r.point = p;
        r.mask = term.mask;
      }
    }
  }
  r.pass = r.max_abs <= tol && r.points_checked > 0;
  return r;
}

std::vector<Point> random_points(std::uint64_t seed, std::size_t count, const Box& box) {
  Uniform u(seed);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = u(box.xmin, box.xmax);
    const double t = u(box.tmin, box.tmax);
    out.push_back({x, t});
  }
  return out;
}

// ---------------------------------------------------------- components

double Grid::x(std::size_t i) const {
  return nx == 1 ? xmin : xmin + (xmax - xmin) * static_cast<double>(i) / static_cast<double>(nx - 1);
}

double Grid::t(std::size_t j) const {
  return nt == 1 ? tmin : tmin + (tmax - tmin) * static_cast<double>(j) / static_cast<double>(nt - 1);
}

void validate(const Grid& grid) {
  if (grid.nx < 2 || grid.nt < 2) throw ParameterError("grid counts must be at least 2");
  if (!(grid.xmax > grid.xmin) || !(grid.tmax > grid.tmin)) throw ParameterError("grid ranges must be increasing");
}

TauPair xi_free(const TauPair& tau) {
  const Mask xi_bits = ((Mask{1} << tau.g.num_generators()) - 1) & ~Mask{1};
  TauPair out = tau;
  out.g = map_coeffs(tau.g, [&](const Grassmann& c) { return drop_generators(c, xi_bits); });
  out.f = map_coeffs(tau.f, [&](const Grassmann& c) { return drop_generators(c, xi_bits); });
  return out;
}

namespace {

// Classical Gardner residual u_t + u_xxx + s (6 u^2 u_x + 6 sigma u u_x) of the
// theta-component by central differences.
double gardner_fd_residual(const Superfield& field, double x, double t, double h) {
  const TauPair& tau_xt = field.tau();
  auto u = [&](double xx, double tt) { return field.field(xx, tt, 0, 0).value().coeff(Mask{1} << kTheta); };
  const Complex u0 = u(x, t);
  const Complex up1 = u(x + h, t), um1 = u(x - h, t);
  const Complex up2 = u(x + 2 * h, t), um2 = u(x - 2 * h, t);
  const Complex ut = (u(x, t + h) - u(x, t - h)) / (2 * h);
  const Complex ux = (up1 - um1) / (2 * h);
  const Complex uxxx = (up2 - 2.0 * up1 + 2.0 * um1 - um2) / (2 * h * h * h);
  const double s = sign_of(tau_xt.regime);
  return std::abs(ut + uxxx + s * (6.0 * u0 * u0 * ux + 6.0 * tau_xt.sigma * u0 * ux));
}

} // namespace

FieldSample components(const TauPair& tau, const Grid& grid, double fd_step) {
  validate(grid);
  const Superfield field(tau);
  FieldSample out;
  out.grid = grid;
  out.frame = tau.frame;
  out.fd_step = fd_step;

  std::vector<Grassmann> values;
  values.reserve(grid.nx * grid.nt);
  std::set<Mask> masks;
  for (std::size_t j = 0; j < grid.nt; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      values.push_back(field.field(grid.x(i), grid.t(j), 0, 0).value());
      for (const auto& term : values.back().terms()) masks.insert(term.mask);
    }
  }
  out.monomials.assign(masks.begin(), masks.end());
  for (Mask m : out.monomials) {
    std::vector<Complex> column;
    column.reserve(values.size());
    for (const auto& v : values) column.push_back(v.coeff(m));
    out.values.push_back(std::move(column));
  }

  const Superfield reduced(to_frame(xi_free(tau), Frame::xt));
  const double speed = (tau.frame == Frame::XT) ? frame_speed(tau.regime, tau.sigma) : 0.0;
  for (std::size_t j = 0; j < grid.nt; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      // (X, T) -> (x, t) = (X - s T, T)
      const double t = grid.t(j);
      const double x = grid.x(i) - speed * t;
      out.gardner_fd_residual = std::max(out.gardner_fd_residual, gardner_fd_residual(reduced, x, t, fd_step));
    }
  }
  return out;
}

// ----------------------------------------------------------- long wave

LongwaveTable longwave_convergence(double sigma, double k0, std::span<const double> eps_list, const Grid& grid) {
  validate(grid);
  if (eps_list.empty()) throw ParameterError("eps list is empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0)) throw ParameterError("eps values must be positive");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw ParameterError("eps values must be decreasing");
  }
  const Superfield rational(build_rational_tau(sigma, k0));

  LongwaveTable table;
  table.sigma = sigma;
  table.k0 = k0;
  table.grid = grid;
  for (double eps : eps_list) {
    const std::vector<ModeParams> mode{{eps * k0, -1.0, eps}};
    const Superfield soliton(build_multisoliton(Regime::focusing, sigma, mode));
    LongwaveRow row;
    row.eps = eps;
    for (std::size_t j = 0; j < grid.nt; ++j)
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const double x = grid.x(i), t = grid.t(j);
        row.max_deviation = std::max(
            row.max_deviation, distance(soliton.field(x, t, 0, 0).value(), rational.field(x, t, 0, 0).value()));
      }
    if (!table.rows.empty()) {
      const LongwaveRow& prev = table.rows.back();
      row.ratio = prev.max_deviation / row.max_deviation;
      row.order = std::log(row.ratio) / std::log(prev.eps / eps);
    }
    table.rows.push_back(row);
  }
  if (table.rows.size() > 1) {
    table.min_order = table.rows[1].order;
    for (std::size_t i = 2; i < table.rows.size(); ++i) table.min_order = std::min(table.min_order, table.rows[i].order);
  }
  return table;
}

// ---------------------------------------------------------- asymptotics

namespace {

Grassmann shift_term(double k10, double k2, const Grassmann& xi1, const Grassmann& xi2) {
  const unsigned n = xi1.num_generators();
  return Grassmann::scalar(n, 4.0 * k10 / k2) + theta(n) * (xi1 * k2 - xi2 * k10) * (2.0 / k2) -
         xi1 * xi2 * (2.0 / k2);
}

} // namespace

Grassmann rational_shift(double k10, double k2) {
  return shift_term(k10, k2, Grassmann::generator(3, 1), Grassmann::generator(3, 2));
}

AsymptoticReport asymptotic_shift_check(const TauPair& tau, std::span<const double> times, double tol,
                                        double soliton_eta, double rational_offset) {
  if (!tau.spec || tau.spec->kind != Kind::mixed_rational_soliton || tau.spec->entries.size() != 2) {
    throw ParameterError("asymptotic check needs a mixed rational-soliton tau pair with its parameters");
  }
  const TauPair mixed = to_frame(tau, Frame::XT);
  const double sigma = mixed.sigma;
  const double k10 = tau.spec->entries[0].k;
  const double k2 = tau.spec->entries[1].k;
  const double phase2 = tau.spec->entries[1].phase;
  const double xi1_scale = tau.spec->entries[0].fermion ? 1.0 : 0.0;
  const double xi2_scale = tau.spec->entries[1].fermion ? 1.0 : 0.0;
  const double w2 = dispersion(k2, sigma, Regime::focusing).real();
  constexpr unsigned n = 3;
  const Grassmann th = theta(n);
  const Grassmann xi1 = Grassmann::generator(n, 1) * xi1_scale;
  const Grassmann xi2 = Grassmann::generator(n, 2) * xi2_scale;

  // Pure supersoliton carried by xi_2.
  const Complex a2 = Complex(1.0, k2 / sigma) * std::exp(phase2);
  TauPair soliton = mixed;
  soliton.f = SuperPoly::constant(n, 1.0) +
              SuperPoly::exponential(Grassmann::scalar(n, a2) + th * xi2 * a2, k2, w2);
  soliton.g = conj(soliton.f);
  const Superfield soliton_field(soliton);

  // Rational limits (Q - theta xi_1 [+ shift]) and conjugate.
  const Grassmann shift = shift_term(k10, k2, xi1, xi2);
  const SuperPoly q = SuperPoly::from_terms(n, {{0, 0, 0.0, 0.0, Grassmann::scalar(n, Complex(0.0, -k10 / sigma))},
                                                {1, 0, 0.0, 0.0, Grassmann::scalar(n, -k10)},
                                                {0, 1, 0.0, 0.0, Grassmann::scalar(n, 3.0 * k10 * sigma * sigma)}});
  const SuperPoly lead = q - SuperPoly::constant(th * xi1);
  auto limit_pair = [&](const Grassmann& extra) {
    TauPair p = mixed;
    p.f = lead + SuperPoly::constant(extra);
    p.g = conj(p.f);
    return p;
  };
  const Superfield forward(limit_pair(Grassmann(n)));
  const Superfield backward(limit_pair(shift));
  const Superfield mixed_field(mixed);

  AsymptoticReport report;
  report.sigma = sigma;
  report.k10 = k10;
  report.k2 = k2;
  report.expected_shift = shift;
  report.tol = tol;
  report.soliton_frame_pass = true;
  report.rational_frame_pass = true;

  for (double t : times) {
    if (std::abs(k2 * k2 * k2 * t) < 20.0) {
      throw ParameterError("asymptotic check: |k2^3 T| must be at least 20 (T = " + std::to_string(t) + ")");
    }
    AsymptoticRow row;
    row.t = t;

    // eta_2 = k2 X + w2 T + phase2 held at soliton_eta.
    const double xs = (soliton_eta - phase2 - w2 * t) / k2;
    row.soliton_frame_deviation =
        distance(mixed_field.field(xs, t, 0, 0).value(), soliton_field.field(xs, t, 0, 0).value());

    // X - 3 sigma^2 T held at rational_offset, so Q is constant.
    const double xr = rational_offset + 3.0 * sigma * sigma * t;
    const double eta2 = k2 * xr + w2 * t + phase2;
    const bool backward_side = eta2 > 0.0;
    const Superfield& limit = backward_side ? backward : forward;
    row.rational_frame_deviation =
        distance(mixed_field.field(xr, t, 0, 0).value(), limit.field(xr, t, 0, 0).value());

    if (backward_side) {
      // f ~ a2 e^{eta2} (1 + theta xi2)(Q - theta xi1 + shift)
      const Grassmann fv = eval(mixed.f, xr, t, eta2 - phase2);
      const Grassmann lead_v = eval(lead, xr, t);
      const Grassmann recovered = (Grassmann::scalar(n, 1.0) - th * xi2) * fv * (1.0 / a2) - lead_v;
      row.recovered_shift = recovered;
      row.shift_deviation = distance(recovered, shift);
    }

    report.soliton_frame_pass = report.soliton_frame_pass && row.soliton_frame_deviation <= tol;
    report.rational_frame_pass = report.rational_frame_pass && row.rational_frame_deviation <= tol &&
                                 row.shift_deviation <= tol;
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------- identities

SuperPoly random_even_superpoly(std::uint64_t seed, unsigned num_generators, unsigned terms) {
  Uniform u(seed);
  std::vector<SuperPolyTerm> out;
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<Grassmann::Term> coeff;
    for (Mask m = 0; m < (Mask{1} << num_generators); ++m) {
      if (std::popcount(m) % 2 != 0) continue;
      coeff.push_back({m, Complex(u(-1.0, 1.0), u(-1.0, 1.0))});
    }
    SuperPolyTerm term;
    term.xpow = static_cast<unsigned>(u.next() % 2);
    term.tpow = static_cast<unsigned>(u.next() % 2);
    term.k = u(-1.0, 1.0);
    term.w = u(-1.0, 1.0);
    term.coeff = Grassmann::from_terms(num_generators, std::move(coeff));
    out.push_back(std::move(term));
  }
  return SuperPoly::from_terms(num_generators, std::move(out));
}

double cross_identity_residual(const SuperPoly& g, const SuperPoly& f) {
  const SuperPoly gf = g * f;
  const SuperPoly hx = hirota_D(g, f, 1, 0);
  const SuperPoly s = super_S(g, f, 1);
  const SuperPoly lhs = gf * hx * superD(s) - superD(gf) * s * hx;
  const SuperPoly rhs = gf * hx * hx;
  return is_zero(lhs - rhs, 0.0).max_abs;
}

namespace {

Grassmann random_odd_constant(Uniform& u, unsigned n) {
  std::vector<Grassmann::Term> terms;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if ((m & 1) != 0 || std::popcount(m) % 2 == 0) continue; // theta-free, odd
    terms.push_back({m, Complex(u(-1.0, 1.0), u(-1.0, 1.0))});
  }
  return Grassmann::from_terms(n, std::move(terms));
}

// e^{k X + theta zeta} = e^{k X} (1 + theta zeta)
SuperPoly super_exponential(double k, const Grassmann& zeta) {
  const unsigned n = zeta.num_generators();
  return SuperPoly::exponential(Grassmann::scalar(n, 1.0) + theta(n) * zeta, k, 0.0);
}

} // namespace

IdentityReport identity_suite(std::uint64_t seed, std::size_t trials, double tol) {
  constexpr unsigned n = 4;
  Uniform u(seed);
  IdentityReport report;
  report.seed = seed;
  report.tol = tol;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    IdentityTrial r;
    const SuperPoly g = random_even_superpoly(u.next(), n);
    const SuperPoly f = random_even_superpoly(u.next(), n);
    r.cross_identity = cross_identity_residual(g, f);

    const double k1 = u(-2.0, 2.0);
    const double k2 = u(-2.0, 2.0);
    const Grassmann z1 = random_odd_constant(u, n);
    const Grassmann z2 = random_odd_constant(u, n);
    const SuperPoly e1 = super_exponential(k1, z1);
    const SuperPoly e2 = super_exponential(k2, z2);
    const SuperPoly one = SuperPoly::constant(n, 1.0);
    const Grassmann th = theta(n);

    for (unsigned N = 0; N <= 2; ++N) {
      const double kn = std::pow(k1 - k2, static_cast<int>(N));
      const SuperPoly pair_expected = (z1 - z2 + th * (k1 - k2)) * (e1 * e2) * kn;
      r.pair_forms = std::max(r.pair_forms, is_zero(super_S(e1, e2, 2 * N + 1) - pair_expected, 0.0).max_abs);

      const double sgn = (N % 2 == 0) ? -1.0 : 1.0; // (-1)^{N+1}
      const SuperPoly unit_expected = (z1 + th * k1) * e1 * (sgn * std::pow(k1, static_cast<int>(N)));
      const SuperPoly s_one_e = super_S(one, e1, 2 * N + 1);
      const SuperPoly s_e_one = super_S(e1, one, 2 * N + 1);
      r.unit_forms = std::max({r.unit_forms, is_zero(s_one_e - unit_expected, 0.0).max_abs,
                                  is_zero(s_one_e - s_e_one * sgn, 0.0).max_abs});

      r.even_powers = std::max(r.even_powers, is_zero(super_S(e1, e2, 2 * N) - hirota_D(e1, e2, N, 0), 0.0).max_abs);
    }
    r.pass = std::max({r.cross_identity, r.pair_forms, r.unit_forms, r.even_powers}) <= tol;
    report.max_residual = std::max({report.max_residual, r.cross_identity, r.pair_forms, r.unit_forms,
                                    r.even_powers});
    if (r.pass) ++report.passed;
    report.trials.push_back(r);
  }
  return report;
}

} // namespace sgardner
