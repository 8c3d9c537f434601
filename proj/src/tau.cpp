#include "sgardner/tau.hpp"

#include <array>
#include <utility>

namespace sgardner {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 5> kKindNames{{
    {Kind::soliton, "soliton"},
    {Kind::shock, "shock"},
    {Kind::rational, "rational"},
    {Kind::mixed_rational_soliton, "mixed-rational-soliton"},
    {Kind::mixed_shock_soliton, "mixed-shock-soliton"},
}};

} // namespace

double frame_speed(Regime regime, double sigma) {
  const double s = 3.0 * sigma * sigma;
  return regime == Regime::focusing ? s : -s;
}

TauPair to_frame(const TauPair& tau, Frame target) {
  if (tau.frame == target) return tau;
  const double s = frame_speed(tau.regime, tau.sigma);
  const double shift = (target == Frame::xt) ? s : -s;
  TauPair out = tau;
  out.g = frame_shift(tau.g, shift);
  out.f = frame_shift(tau.f, shift);
  out.frame = target;
  return out;
}

Complex superfield_prefactor(Regime regime) {
  return regime == Regime::focusing ? Complex{0.0, 1.0} : Complex{1.0, 0.0};
}

std::string_view to_string(Regime r) { return r == Regime::focusing ? "focusing" : "defocusing"; }

std::string_view to_string(Frame f) { return f == Frame::XT ? "XT" : "xt"; }

std::string_view to_string(Kind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

Regime parse_regime(std::string_view s) {
  if (s == "focusing") return Regime::focusing;
  if (s == "defocusing") return Regime::defocusing;
  throw FormatError("unknown regime '" + std::string(s) + "' (expected focusing|defocusing)");
}

Frame parse_frame(std::string_view s) {
  if (s == "XT") return Frame::XT;
  if (s == "xt") return Frame::xt;
  throw FormatError("unknown frame '" + std::string(s) + "' (expected XT|xt)");
}

Kind parse_kind(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  throw FormatError("unknown kind '" + std::string(s) + "'");
}

} // namespace sgardner
