#pragma once

#include <string>
#include <vector>

#include "sgardner/tau.hpp"

namespace sgardner {

// D_X^m D_T^n a.b =
//   sum_{i,j} (-1)^{(m-i)+(n-j)} C(m,i) C(n,j) (d_X^i d_T^j a)(d_X^{m-i} d_T^{n-j} b)
SuperPoly hirota_D(const SuperPoly& a, const SuperPoly& b, unsigned m, unsigned n = 0);

// S_X a.b = (Da) b - (-1)^{|a|} a (Db); a of mixed parity is split into its
// even and odd parts.
SuperPoly super_S1(const SuperPoly& a, const SuperPoly& b);

// S_X^{2N} = D_X^N and S_X^{2N+1} = S_X D_X^N, the latter expanded over the
// binomial sum of D_X^N with S_X acting on each derivative pair.
SuperPoly super_S(const SuperPoly& a, const SuperPoly& b, unsigned power);

// One monomial of a bilinear operator: weight * S_X^s D_X^dx D_T^dt.
struct BilinearOp {
  unsigned dx = 0;
  unsigned dt = 0;
  unsigned s = 0;
  Complex weight{1.0, 0.0};
};

struct BilinearEquation {
  std::string id;
  Frame frame = Frame::XT;
  std::vector<BilinearOp> ops;
};

SuperPoly apply_bilinear(const BilinearEquation& eq, const SuperPoly& g, const SuperPoly& f);

// Throws FrameError when the pair's frame differs from the equation's.
SuperPoly apply_bilinear(const BilinearEquation& eq, const TauPair& tau);

// The two-equation bilinear system of the focusing or defocusing equation
// in the requested frame. In XT:
//   focusing:   (D_T + D_X^3 - 3i sigma D_X^2) g.f = 0, (S_X^3 - i sigma S_X) g.f = 0
//   defocusing: (D_T + D_X^3 + 3 sigma D_X^2) g.f = 0,  (S_X^3 + sigma S_X) g.f = 0
// In xt, D_T becomes D_t - s D_x with s = frame_speed().
std::vector<BilinearEquation> gardner_bilinear_system(Regime regime, Frame frame, double sigma);

} // namespace sgardner
