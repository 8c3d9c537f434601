#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgardner/superpoly.hpp"

namespace sgardner {

enum class Regime { focusing, defocusing };

// XT: the co-moving frame in which the bilinear system loses its D_X term.
// xt: the laboratory frame of the nonlinear equation.
enum class Frame { XT, xt };

enum class Kind { soliton, shock, rational, mixed_rational_soliton, mixed_shock_soliton };

struct SolitonEntry {
  double k = 0.0;
  double phase = 0.0;
  bool fermion = true;
  bool operator==(const SolitonEntry&) const = default;
};

struct SolitonSpec {
  Regime regime = Regime::focusing;
  double sigma = 1.0;
  Kind kind = Kind::soliton;
  std::vector<SolitonEntry> entries;
  bool operator==(const SolitonSpec&) const = default;
};

struct TauPair {
  SuperPoly g;
  SuperPoly f;
  Regime regime = Regime::focusing;
  Frame frame = Frame::XT;
  double sigma = 1.0;
  // Phi = prefactor * D log(g/f): i when focusing, 1 when defocusing.
  Complex prefactor{0.0, 1.0};
  // Parameters the pair was built from, when known.
  std::optional<SolitonSpec> spec;
};

// Speed s of the substitution X = x + s t taking XT objects to the xt frame.
double frame_speed(Regime regime, double sigma);

// Re-expresses the pair in `target` (no-op when already there).
TauPair to_frame(const TauPair& tau, Frame target);

Complex superfield_prefactor(Regime regime);

std::string_view to_string(Regime r);
std::string_view to_string(Frame f);
std::string_view to_string(Kind k);
Regime parse_regime(std::string_view s);
Frame parse_frame(std::string_view s);
Kind parse_kind(std::string_view s);

} // namespace sgardner
