#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sgardner/io.hpp"

namespace testing {

using namespace sgardner;

inline Complex I{0.0, 1.0};

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  Complex complex() { return {uniform(-1, 1), uniform(-1, 1)}; }
  unsigned below(unsigned n) { return static_cast<unsigned>(gen_() % n); }

private:
  std::mt19937_64 gen_;
};

inline Grassmann random_element(Rng& rng, unsigned n, int parity = -1) {
  std::vector<Grassmann::Term> terms;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    const int p = __builtin_popcount(m) % 2;
    if (parity >= 0 && p != parity) continue;
    if (rng.below(3) == 0) continue;
    terms.push_back({m, rng.complex()});
  }
  return Grassmann::from_terms(n, std::move(terms));
}

inline Grassmann random_even(Rng& rng, unsigned n, Complex body) {
  Grassmann a = random_element(rng, n, 0);
  return a - Grassmann::scalar(n, a.body()) + Grassmann::scalar(n, body);
}

// Largest coefficient magnitude of a - b.
inline double diff(const Grassmann& a, const Grassmann& b) { return (a - b).max_abs(); }

inline double diff(const SuperPoly& a, const SuperPoly& b) { return is_zero(a - b, 0.0).max_abs; }

inline Grassmann theta(unsigned n) { return Grassmann::generator(n, kTheta); }
inline Grassmann xi(unsigned n, unsigned i) { return Grassmann::generator(n, i); }
inline Grassmann one(unsigned n) { return Grassmann::scalar(n, 1.0); }

inline SuperPoly constant(const Grassmann& c) { return SuperPoly::constant(c); }
inline SuperPoly expo(const Grassmann& c, Complex k, Complex w) { return SuperPoly::exponential(c, k, w); }

inline SolitonSpec soliton_spec(Regime r, double sigma, std::vector<double> ks, bool fermions = true) {
  SolitonSpec s{r, sigma, Kind::soliton, {}};
  for (double k : ks) s.entries.push_back({k, 0.0, fermions});
  return s;
}

} // namespace testing
