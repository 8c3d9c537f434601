#pragma once

#include <span>
#include <string>
#include <vector>

#include "sgardner/grassmann.hpp"

namespace sgardner {

// Rates (k, w) closer than this on every real component are merged.
inline constexpr double kRateMergeTolerance = 1e-12;

// exp() of a real part above this would overflow a double.
inline constexpr double kMaxExponent = 700.0;

enum class Axis { X, T };

// c * X^xpow * T^tpow * exp(k X + w T)
struct SuperPolyTerm {
  unsigned xpow = 0;
  unsigned tpow = 0;
  Complex k{};
  Complex w{};
  Grassmann coeff;
};

// Where sp_is_zero found its largest coefficient.
struct TermLocation {
  Mask mask = 0;
  unsigned xpow = 0;
  unsigned tpow = 0;
  Complex k{};
  Complex w{};
};

struct ZeroReport {
  bool zero = true;
  double max_abs = 0.0;
  TermLocation at;
};

class SuperJet;

/// Finite sum of Grassmann-coefficient exponential-polynomial terms in two
/// variables. The first variable is the spatial axis of whatever frame the
/// owner works in, so the super-derivative always differentiates along it.
/// Terms are kept merged, pruned and sorted; the zero polynomial has no
/// terms.
class SuperPoly {
public:
  SuperPoly() = default;
  explicit SuperPoly(unsigned num_generators);

  static SuperPoly constant(const Grassmann& c);
  static SuperPoly constant(unsigned num_generators, Complex c);
  static SuperPoly exponential(const Grassmann& c, Complex k, Complex w);
  static SuperPoly from_terms(unsigned num_generators, std::vector<SuperPolyTerm> terms);

  unsigned num_generators() const { return n_; }
  std::span<const SuperPolyTerm> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Parity parity() const;
  SuperPoly even_part() const;
  SuperPoly odd_part() const;

  SuperPoly& operator+=(const SuperPoly& other);
  SuperPoly& operator-=(const SuperPoly& other);
  SuperPoly& operator*=(Complex s);

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(Complex s, SuperPoly a) { return a *= s; }
  friend SuperPoly operator*(SuperPoly a, Complex s) { return a *= s; }
  friend SuperPoly operator-(SuperPoly a) { return a *= -1.0; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  // Left multiplication by a constant Grassmann element.
  friend SuperPoly operator*(const Grassmann& c, const SuperPoly& a);

  bool operator==(const SuperPoly& other) const;

private:
  void normalize();

  unsigned n_ = 0;
  std::vector<SuperPolyTerm> terms_;
};

SuperPoly deriv(const SuperPoly& a, Axis axis, unsigned order = 1);

// D = d/dtheta + theta d/dX.
SuperPoly superD(const SuperPoly& a);

// Applies a coefficient map term by term and renormalizes.
template <class F>
SuperPoly map_coeffs(const SuperPoly& a, F&& f) {
  std::vector<SuperPolyTerm> out(a.terms().begin(), a.terms().end());
  for (auto& t : out) t.coeff = f(t.coeff);
  return SuperPoly::from_terms(a.num_generators(), std::move(out));
}

// Complex-conjugates coefficients and rates.
SuperPoly conj(const SuperPoly& a);

// Every exponential is evaluated as exp(kx + wt - log_scale). Throws
// RangeError naming the offending term when exp() would overflow.
Grassmann eval(const SuperPoly& a, double x, double t, double log_scale = 0.0);

// Largest Re(kx + wt) over the terms of `a` (-inf for zero).
double max_exponent(const SuperPoly& a, double x, double t);

// Substitutes X = x + s t. Inverse is shift by -s.
SuperPoly frame_shift(const SuperPoly& a, double s);

ZeroReport is_zero(const SuperPoly& a, double tol);

std::string describe(const TermLocation& loc);

/// Truncated Taylor expansion in (X - X0, T - T0) with Grassmann
/// coefficients, kept modulo dX^(mx+1) and dT^(mt+1). Products truncate to
/// the smaller of the two orders; differentiation lowers the order by one.
class SuperJet {
public:
  SuperJet() = default;
  SuperJet(unsigned num_generators, double x0, double t0, unsigned mx = 3, unsigned mt = 1);

  static SuperJet constant(const Grassmann& c, double x0, double t0, unsigned mx = 3,
                           unsigned mt = 1);

  unsigned num_generators() const { return n_; }
  double x0() const { return x0_; }
  double t0() const { return t0_; }
  unsigned mx() const { return mx_; }
  unsigned mt() const { return mt_; }

  const Grassmann& coeff(unsigned i, unsigned j) const { return c_[index(i, j)]; }
  Grassmann& coeff(unsigned i, unsigned j) { return c_[index(i, j)]; }
  const Grassmann& value() const { return c_.front(); }

  // d^i/dX^i d^j/dT^j at the base point (i <= mx, j <= mt).
  Grassmann derivative(unsigned i, unsigned j) const;

  SuperJet& operator+=(const SuperJet& other);
  SuperJet& operator-=(const SuperJet& other);
  SuperJet& operator*=(Complex s);

  friend SuperJet operator+(SuperJet a, const SuperJet& b) { return a += b; }
  friend SuperJet operator-(SuperJet a, const SuperJet& b) { return a -= b; }
  friend SuperJet operator*(Complex s, SuperJet a) { return a *= s; }
  friend SuperJet operator*(SuperJet a, Complex s) { return a *= s; }
  friend SuperJet operator*(const SuperJet& a, const SuperJet& b);
  friend SuperJet operator*(const Grassmann& c, const SuperJet& a);

  double max_abs() const;

private:
  std::size_t index(unsigned i, unsigned j) const { return i * (mt_ + 1) + j; }
  SuperJet truncated(unsigned mx, unsigned mt) const;

  friend SuperJet dx(const SuperJet&);
  friend SuperJet dt(const SuperJet&);

  unsigned n_ = 0;
  double x0_ = 0.0;
  double t0_ = 0.0;
  unsigned mx_ = 0;
  unsigned mt_ = 0;
  std::vector<Grassmann> c_;
};

SuperJet dx(const SuperJet& a);
SuperJet dt(const SuperJet& a);
SuperJet dtheta(const SuperJet& a, unsigned gen);
SuperJet superD(const SuperJet& a);
SuperJet inverse(const SuperJet& a);
// Even jets only.
SuperJet log(const SuperJet& a);

SuperJet jet(const SuperPoly& a, double x0, double t0, unsigned mx = 3, unsigned mt = 1, double log_scale = 0.0);

} // namespace sgardner
