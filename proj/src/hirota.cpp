#include "sgardner/hirota.hpp"

#include <vector>

namespace sgardner {

namespace {

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// table[i][j] = d_X^i d_T^j a
std::vector<std::vector<SuperPoly>> derivative_table(const SuperPoly& a, unsigned m, unsigned n) {
  std::vector<std::vector<SuperPoly>> table(m + 1, std::vector<SuperPoly>(n + 1));
  for (unsigned i = 0; i <= m; ++i) {
    table[i][0] = (i == 0) ? a : deriv(table[i - 1][0], Axis::X);
    for (unsigned j = 1; j <= n; ++j) table[i][j] = deriv(table[i][j - 1], Axis::T);
  }
  return table;
}

// Binomial expansion of D_X^m D_T^n with `pair` combining each derivative pair.
template <class Pair>
SuperPoly bilinear_expand(const SuperPoly& a, const SuperPoly& b, unsigned m, unsigned n, Pair&& pair) {
  if (a.num_generators() != b.num_generators()) {
    throw DimensionError("bilinear operator: generator count mismatch");
  }
  const auto da = derivative_table(a, m, n);
  const auto db = derivative_table(b, m, n);
  SuperPoly sum(a.num_generators());
  for (unsigned i = 0; i <= m; ++i) {
    for (unsigned j = 0; j <= n; ++j) {
      const double sign = ((m - i) + (n - j)) % 2 == 0 ? 1.0 : -1.0;
      const double weight = sign * binomial(m, i) * binomial(n, j);
      sum += pair(da[i][j], db[m - i][n - j]) * weight;
    }
  }
  return sum;
}

} // namespace

SuperPoly hirota_D(const SuperPoly& a, const SuperPoly& b, unsigned m, unsigned n) {
  return bilinear_expand(a, b, m, n, [](const SuperPoly& x, const SuperPoly& y) { return x * y; });
}

SuperPoly super_S1(const SuperPoly& a, const SuperPoly& b) {
  if (a.num_generators() != b.num_generators()) {
    throw DimensionError("super_S: generator count mismatch");
  }
  const SuperPoly db = superD(b);
  // (-1)^{|a|} is +1 on the even part and -1 on the odd part.
  return superD(a) * b - a.even_part() * db + a.odd_part() * db;
}

SuperPoly super_S(const SuperPoly& a, const SuperPoly& b, unsigned power) {
  if (power % 2 == 0) return hirota_D(a, b, power / 2, 0);
  return bilinear_expand(a, b, power / 2, 0, super_S1);
}

SuperPoly apply_bilinear(const BilinearEquation& eq, const SuperPoly& g, const SuperPoly& f) {
  SuperPoly sum(g.num_generators());
  for (const auto& op : eq.ops) {
    SuperPoly term;
    if (op.s % 2 == 0) {
      term = hirota_D(g, f, op.dx + op.s / 2, op.dt);
    } else {
      term = bilinear_expand(g, f, op.dx + op.s / 2, op.dt, super_S1);
    }
    sum += term * op.weight;
  }
  return sum;
}

SuperPoly apply_bilinear(const BilinearEquation& eq, const TauPair& tau) {
  if (eq.frame != tau.frame) {
    throw FrameError("equation " + eq.id + " is posed in the " + std::string(to_string(eq.frame)) +
                     " frame but the tau pair is in " + std::string(to_string(tau.frame)));
  }
  return apply_bilinear(eq, tau.g, tau.f);
}

std::vector<BilinearEquation> gardner_bilinear_system(Regime regime, Frame frame, double sigma) {
  const bool focusing = regime == Regime::focusing;
  const std::string prefix = std::string(focusing ? "focusing" : "defocusing") + "/" +
                             std::string(to_string(frame));

  // Weight of D_X^2 in the first equation and of S_X in the second.
  const Complex quad = focusing ? Complex(0.0, -3.0 * sigma) : Complex(3.0 * sigma, 0.0);
  const Complex lin = focusing ? Complex(0.0, -sigma) : Complex(sigma, 0.0);

  BilinearEquation dispersion{prefix + "/D", frame, {{0, 1, 0, 1.0}, {3, 0, 0, 1.0}, {2, 0, 0, quad}}};
  if (frame == Frame::xt) {
    dispersion.ops.push_back({1, 0, 0, -frame_speed(regime, sigma)});
  }
  BilinearEquation odd{prefix + "/S", frame, {{0, 0, 3, 1.0}, {0, 0, 1, lin}}};
  return {dispersion, odd};
}

} // namespace sgardner
