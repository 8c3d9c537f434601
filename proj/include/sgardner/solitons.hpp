#pragma once

#include <span>
#include <vector>

#include "sgardner/tau.hpp"

namespace sgardner {

// omega(k) = -k^3 - 3 k sigma^2 (focusing) or -k^3 + 3 k sigma^2 (defocusing),
// the temporal rate of a mode in the XT frame.
Complex dispersion(double k, double sigma, Regime regime);

/// Pairwise dressing data of an N-soliton:
///   A_ij = ((k_i - k_j)/(k_i + k_j))^2,  beta_ij = 2/(k_j - k_i),
///   alpha_ij = -alpha_ji = (k_i + k_j)/(k_i - k_j),
/// with f-side amplitudes a_i and g-side amplitudes b_i. Focusing:
/// a_i = 1 + i k_i/sigma, b_i = conj(a_i). Defocusing: a_i = 1 + k_i/sigma,
/// b_i = 1 - k_i/sigma. Diagonal entries are unused and left at zero.
struct InteractionData {
  std::vector<Complex> a;
  std::vector<Complex> b;
  std::vector<std::vector<double>> A;
  std::vector<std::vector<double>> beta;
  std::vector<std::vector<double>> alpha;
};

InteractionData interaction_data(std::span<const double> k, double sigma, Regime regime);

// One mode of a multi-soliton: exp(eta0) and the multiplier of its odd
// parameter (0 switches the fermion off).
struct ModeParams {
  double k = 0.0;
  Complex phase_factor{1.0, 0.0};
  Complex xi_scale{1.0, 0.0};
};

/// Sum over subsets mu of {1..N} of
///   prod_{i in mu} a_i e^{eta_i}(phase) * prod_{i<j in mu} A_ij
///   * exp( sum_{i in mu} theta xi_i prod_{m in mu, m != i} alpha_im
///        + sum_{i<j in mu} beta_ij xi_i xi_j prod_{k in mu \ {i,j}} alpha_ik alpha_jk ),
/// with the dressing products taken over the modes present in each term.
/// Generator 0 is theta and generator i is xi_i. The result lives in the
/// XT frame.
TauPair build_multisoliton(Regime regime, double sigma, std::span<const ModeParams> modes);

TauPair build_soliton_tau(const SolitonSpec& spec);

// Defocusing one-soliton at k = -sigma: f = 1, g = 1 + 2 e^{eta + theta xi}.
TauPair build_shock_tau(double sigma, double phase = 0.0, bool fermion = true);

// f = i k0/sigma + k0 X - 3 k0 sigma^2 T + xi_scale theta xi_1, g = conj(f).
TauPair build_rational_tau(double sigma, double k0, double xi_scale = 1.0);

// Long-wave limit of the first soliton of a focusing two-soliton, with
// Q = -k10 X + 3 k10 sigma^2 T - i k10/sigma:
//   f = Q - theta xi_1 + a_2 e^{eta_2} [ Q + 4k10/k2 - (2/k2) xi_1 xi_2
//                                        + theta (xi_1 + (Q + 2k10/k2) xi_2) ],
//   g = conj(f).
// xi_1 plays the role of xi_10; the scales multiply xi_1 and xi_2.
TauPair build_mixed_rational_soliton_tau(double sigma, double k10, double k2, double phase2 = 0.0,
                                         double xi1_scale = 1.0, double xi2_scale = 1.0);

// Defocusing two-soliton with the second mode pinned to the shock, k2 = -sigma.
TauPair build_mixed_shock_soliton_tau(double sigma, double k1, double phase1 = 0.0, bool fermion1 = true,
                                      bool fermion2 = true);

// Dispatches on spec.kind after validating the spec.
TauPair build(const SolitonSpec& spec);

void validate(const SolitonSpec& spec);

} // namespace sgardner
