#include "sgardner/solitons.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace sgardner {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

void require_sigma(double sigma) {
  require(std::isfinite(sigma) && sigma != 0.0, "sigma must be a nonzero finite number");
}

void require_distinct(std::span<const double> k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    require(std::isfinite(k[i]) && k[i] != 0.0, "soliton wavenumbers must be nonzero and finite");
    for (std::size_t j = 0; j < i; ++j) {
      if (k[i] == k[j] || k[i] == -k[j]) {
        std::ostringstream os;
        os << "wavenumbers k" << j + 1 << "=" << k[j] << " and k" << i + 1 << "=" << k[i]
           << " must satisfy k_i != +-k_j";
        throw ParameterError(os.str());
      }
    }
  }
}

Grassmann theta(unsigned n) { return Grassmann::generator(n, kTheta); }
Grassmann xi(unsigned n, unsigned i) { return Grassmann::generator(n, i); }

// c0 + cx X + ct T as a polynomial with scalar coefficients.
SuperPoly linear_poly(unsigned n, Complex c0, Complex cx, Complex ct) {
  return SuperPoly::from_terms(n, {
                                      {0, 0, 0.0, 0.0, Grassmann::scalar(n, c0)},
                                      {1, 0, 0.0, 0.0, Grassmann::scalar(n, cx)},
                                      {0, 1, 0.0, 0.0, Grassmann::scalar(n, ct)},
                                  });
}

} // namespace

Complex dispersion(double k, double sigma, Regime regime) {
  const double cubic = -k * k * k;
  const double linear = 3.0 * k * sigma * sigma;
  return regime == Regime::focusing ? cubic - linear : cubic + linear;
}

InteractionData interaction_data(std::span<const double> k, double sigma, Regime regime) {
  require_sigma(sigma);
  require_distinct(k);
  const std::size_t n = k.size();
  InteractionData d;
  d.A.assign(n, std::vector<double>(n, 0.0));
  d.beta = d.A;
  d.alpha = d.A;
  for (std::size_t i = 0; i < n; ++i) {
    if (regime == Regime::focusing) {
      d.a.emplace_back(1.0, k[i] / sigma);
      d.b.push_back(std::conj(d.a.back()));
    } else {
      d.a.emplace_back(1.0 + k[i] / sigma, 0.0);
      d.b.emplace_back(1.0 - k[i] / sigma, 0.0);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double ratio = (k[i] - k[j]) / (k[i] + k[j]);
      d.A[i][j] = ratio * ratio;
      d.beta[i][j] = -2.0 / (k[i] - k[j]);
      d.alpha[i][j] = (k[i] + k[j]) / (k[i] - k[j]);
    }
  }
  return d;
}

TauPair build_multisoliton(Regime regime, double sigma, std::span<const ModeParams> modes) {
  const std::size_t count = modes.size();
  require(count + 1 <= kMaxGenerators, "too many solitons for the Grassmann generator limit");
  std::vector<double> k;
  for (const auto& m : modes) k.push_back(m.k);
  const InteractionData d = interaction_data(k, sigma, regime);
  const unsigned n = static_cast<unsigned>(count + 1);

  std::vector<SuperPolyTerm> f_terms;
  std::vector<SuperPolyTerm> g_terms;
  for (Mask mu = 0; mu < (Mask{1} << count); ++mu) {
    Complex amp_f = 1.0;
    Complex amp_g = 1.0;
    Complex rate_k = 0.0;
    Complex rate_w = 0.0;
    Grassmann dressing(n);
    for (std::size_t i = 0; i < count; ++i) {
      if (!(mu >> i & 1)) continue;
      amp_f *= d.a[i] * modes[i].phase_factor;
      amp_g *= d.b[i] * modes[i].phase_factor;
      rate_k += k[i];
      rate_w += dispersion(k[i], sigma, regime);

      double alpha_prod = 1.0;
      for (std::size_t m = 0; m < count; ++m)
        if (m != i && (mu >> m & 1)) alpha_prod *= d.alpha[i][m];
      dressing += theta(n) * xi(n, static_cast<unsigned>(i + 1)) * (modes[i].xi_scale * alpha_prod);

      for (std::size_t j = i + 1; j < count; ++j) {
        if (!(mu >> j & 1)) continue;
        amp_f *= d.A[i][j];
        amp_g *= d.A[i][j];
        double pair_prod = d.beta[i][j];
        for (std::size_t m = 0; m < count; ++m)
          if (m != i && m != j && (mu >> m & 1)) pair_prod *= d.alpha[i][m] * d.alpha[j][m];
        dressing += xi(n, static_cast<unsigned>(i + 1)) * xi(n, static_cast<unsigned>(j + 1)) *
                    (modes[i].xi_scale * modes[j].xi_scale * pair_prod);
      }
    }
    const Grassmann nil = exp(dressing);
    f_terms.push_back({0, 0, rate_k, rate_w, nil * amp_f});
    g_terms.push_back({0, 0, rate_k, rate_w, nil * amp_g});
  }

  TauPair tau;
  tau.f = SuperPoly::from_terms(n, std::move(f_terms));
  tau.g = SuperPoly::from_terms(n, std::move(g_terms));
  tau.regime = regime;
  tau.frame = Frame::XT;
  tau.sigma = sigma;
  tau.prefactor = superfield_prefactor(regime);
  return tau;
}

TauPair build_soliton_tau(const SolitonSpec& spec) {
  require_sigma(spec.sigma);
  require(!spec.entries.empty(), "soliton spec needs at least one entry");
  std::vector<ModeParams> modes;
  for (const auto& e : spec.entries) {
    require(std::isfinite(e.phase), "phase must be finite");
    modes.push_back({e.k, std::exp(Complex(e.phase)), e.fermion ? 1.0 : 0.0});
  }
  TauPair tau = build_multisoliton(spec.regime, spec.sigma, modes);
  tau.spec = spec;
  return tau;
}

TauPair build_shock_tau(double sigma, double phase, bool fermion) {
  require_sigma(sigma);
  SolitonSpec spec{Regime::defocusing, sigma, Kind::shock, {{-sigma, phase, fermion}}};
  std::vector<ModeParams> modes{{-sigma, std::exp(Complex(phase)), fermion ? 1.0 : 0.0}};
  TauPair tau = build_multisoliton(Regime::defocusing, sigma, modes);
  tau.spec = spec;
  return tau;
}

TauPair build_rational_tau(double sigma, double k0, double xi_scale) {
  require_sigma(sigma);
  require(std::isfinite(k0) && k0 != 0.0, "k0 must be nonzero");
  constexpr unsigned n = 2;
  const SuperPoly base = linear_poly(n, Complex(0.0, k0 / sigma), k0, -3.0 * k0 * sigma * sigma);
  TauPair tau;
  tau.f = base + SuperPoly::constant(theta(n) * xi(n, 1) * xi_scale);
  tau.g = conj(tau.f);
  tau.regime = Regime::focusing;
  tau.sigma = sigma;
  tau.prefactor = superfield_prefactor(Regime::focusing);
  tau.spec = SolitonSpec{Regime::focusing, sigma, Kind::rational, {{k0, 0.0, xi_scale != 0.0}}};
  return tau;
}

TauPair build_mixed_rational_soliton_tau(double sigma, double k10, double k2, double phase2, double xi1_scale,
                                         double xi2_scale) {
  require_sigma(sigma);
  require(std::isfinite(k10) && k10 != 0.0, "k10 must be nonzero");
  require(std::isfinite(k2) && k2 != 0.0, "k2 must be nonzero");
  require(std::isfinite(phase2), "phase must be finite");
  constexpr unsigned n = 3;
  const Grassmann th = theta(n);
  const Grassmann xi1 = xi(n, 1) * xi1_scale;
  const Grassmann xi2 = xi(n, 2) * xi2_scale;

  const SuperPoly q = linear_poly(n, Complex(0.0, -k10 / sigma), -k10, 3.0 * k10 * sigma * sigma);
  const Complex a2 = Complex(1.0, k2 / sigma) * std::exp(phase2);
  const SuperPoly e2 = SuperPoly::exponential(Grassmann::scalar(n, a2), k2, dispersion(k2, sigma, Regime::focusing));

  const SuperPoly bracket = q + SuperPoly::constant(Grassmann::scalar(n, 4.0 * k10 / k2)) +
                            SuperPoly::constant(xi1 * xi2 * (-2.0 / k2)) + SuperPoly::constant(th * xi1) +
                            (th * xi2) * (q + SuperPoly::constant(n, 2.0 * k10 / k2));

  TauPair tau;
  tau.f = q - SuperPoly::constant(th * xi1) + e2 * bracket;
  tau.g = conj(tau.f);
  tau.regime = Regime::focusing;
  tau.sigma = sigma;
  tau.prefactor = superfield_prefactor(Regime::focusing);
  tau.spec = SolitonSpec{Regime::focusing,
                         sigma,
                         Kind::mixed_rational_soliton,
                         {{k10, 0.0, xi1_scale != 0.0}, {k2, phase2, xi2_scale != 0.0}}};
  return tau;
}

TauPair build_mixed_shock_soliton_tau(double sigma, double k1, double phase1, bool fermion1, bool fermion2) {
  require_sigma(sigma);
  require(k1 != sigma && k1 != -sigma, "mixed shock-soliton needs k1 != +-sigma");
  require(std::isfinite(phase1), "phase must be finite");
  std::vector<ModeParams> modes{{k1, std::exp(Complex(phase1)), fermion1 ? 1.0 : 0.0},
                                {-sigma, 1.0, fermion2 ? 1.0 : 0.0}};
  TauPair tau = build_multisoliton(Regime::defocusing, sigma, modes);
  tau.spec = SolitonSpec{Regime::defocusing,
                         sigma,
                         Kind::mixed_shock_soliton,
                         {{k1, phase1, fermion1}, {-sigma, 0.0, fermion2}}};
  return tau;
}

void validate(const SolitonSpec& spec) {
  require_sigma(spec.sigma);
  const auto& e = spec.entries;
  for (const auto& entry : e) require(std::isfinite(entry.k) && std::isfinite(entry.phase), "non-finite entry");
  switch (spec.kind) {
    case Kind::soliton: {
      require(!e.empty(), "soliton kind needs at least one entry");
      std::vector<double> k;
      for (const auto& entry : e) k.push_back(entry.k);
      require_distinct(k);
      break;
    }
    case Kind::shock:
      require(spec.regime == Regime::defocusing, "shock solutions exist only in the defocusing regime");
      require(e.size() <= 1, "shock kind takes at most one entry");
      require(e.empty() || e[0].k == -spec.sigma, "shock kind requires k = -sigma");
      break;
    case Kind::rational:
      require(spec.regime == Regime::focusing, "rational solutions are built in the focusing regime");
      require(e.size() == 1, "rational kind takes exactly one entry (k0)");
      require(e[0].k != 0.0, "k0 must be nonzero");
      break;
    case Kind::mixed_rational_soliton:
      require(spec.regime == Regime::focusing, "mixed rational-soliton is built in the focusing regime");
      require(e.size() == 2, "mixed-rational-soliton takes two entries (k10, k2)");
      require(e[0].k != 0.0 && e[1].k != 0.0, "k10 and k2 must be nonzero");
      break;
    case Kind::mixed_shock_soliton:
      require(spec.regime == Regime::defocusing, "mixed shock-soliton exists only in the defocusing regime");
      require(e.size() == 1 || e.size() == 2, "mixed-shock-soliton takes one entry (k1) or two (k1, -sigma)");
      require(e.size() == 1 || e[1].k == -spec.sigma, "second mixed-shock entry must have k = -sigma");
      require(e[0].k != spec.sigma && e[0].k != -spec.sigma, "mixed shock-soliton needs k1 != +-sigma");
      break;
  }
}

TauPair build(const SolitonSpec& spec) {
  validate(spec);
  const auto& e = spec.entries;
  switch (spec.kind) {
    case Kind::soliton:
      return build_soliton_tau(spec);
    case Kind::shock: {
      TauPair tau = build_shock_tau(spec.sigma, e.empty() ? 0.0 : e[0].phase, e.empty() || e[0].fermion);
      tau.spec = spec;
      return tau;
    }
    case Kind::rational: {
      TauPair tau = build_rational_tau(spec.sigma, e[0].k, e[0].fermion ? 1.0 : 0.0);
      tau.spec = spec;
      return tau;
    }
    case Kind::mixed_rational_soliton: {
      TauPair tau = build_mixed_rational_soliton_tau(spec.sigma, e[0].k, e[1].k, e[1].phase,
                                                     e[0].fermion ? 1.0 : 0.0, e[1].fermion ? 1.0 : 0.0);
      tau.spec = spec;
      return tau;
    }
    case Kind::mixed_shock_soliton: {
      TauPair tau = build_mixed_shock_soliton_tau(spec.sigma, e[0].k, e[0].phase, e[0].fermion,
                                                  e.size() < 2 || e[1].fermion);
      tau.spec = spec;
      return tau;
    }
  }
  throw ParameterError("unknown solution kind");
}

} // namespace sgardner
