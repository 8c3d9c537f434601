#include "sgardner/superpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

namespace sgardner {

namespace {

void require_same_dimension(unsigned a, unsigned b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": generator count mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

bool rate_close(Complex a, Complex b) {
  return std::abs(a.real() - b.real()) <= kRateMergeTolerance &&
         std::abs(a.imag() - b.imag()) <= kRateMergeTolerance;
}

auto sort_key(const SuperPolyTerm& t) {
  return std::make_tuple(t.xpow, t.tpow, t.k.real(), t.k.imag(), t.w.real(), t.w.imag());
}

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double factorial(unsigned n) {
  double r = 1.0;
  for (unsigned i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

std::string format_complex(Complex c) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << c.real() << ',' << c.imag() << ')';
  return os.str();
}

} // namespace

// ---------------------------------------------------------------- SuperPoly

SuperPoly::SuperPoly(unsigned num_generators) : n_(num_generators) {}

SuperPoly SuperPoly::constant(const Grassmann& c) {
  return exponential(c, 0.0, 0.0);
}

SuperPoly SuperPoly::constant(unsigned num_generators, Complex c) {
  return constant(Grassmann::scalar(num_generators, c));
}

SuperPoly SuperPoly::exponential(const Grassmann& c, Complex k, Complex w) {
  return from_terms(c.num_generators(), {SuperPolyTerm{0, 0, k, w, c}});
}

SuperPoly SuperPoly::from_terms(unsigned num_generators, std::vector<SuperPolyTerm> terms) {
  SuperPoly p(num_generators);
  for (const auto& t : terms) require_same_dimension(num_generators, t.coeff.num_generators(), "superpoly");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void SuperPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const SuperPolyTerm& a, const SuperPolyTerm& b) { return sort_key(a) < sort_key(b); });
  std::vector<SuperPolyTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    bool absorbed = false;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
      if (it->xpow != t.xpow || it->tpow != t.tpow ||
          t.k.real() - it->k.real() > kRateMergeTolerance) {
        break;
      }
      if (rate_close(it->k, t.k) && rate_close(it->w, t.w)) {
        it->coeff += t.coeff;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const SuperPolyTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

Parity SuperPoly::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& t : terms_) {
    switch (t.coeff.parity()) {
      case Parity::even: has_even = true; break;
      case Parity::odd: has_odd = true; break;
      case Parity::mixed: return Parity::mixed;
    }
  }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

SuperPoly SuperPoly::even_part() const {
  return map_coeffs(*this, [](const Grassmann& c) { return c.even_part(); });
}

SuperPoly SuperPoly::odd_part() const {
  return map_coeffs(*this, [](const Grassmann& c) { return c.odd_part(); });
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& other) {
  require_same_dimension(n_, other.n_, "superpoly add");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& other) {
  require_same_dimension(n_, other.n_, "superpoly sub");
  for (const auto& t : other.terms_) {
    terms_.push_back(t);
    terms_.back().coeff *= -1.0;
  }
  normalize();
  return *this;
}

SuperPoly& SuperPoly::operator*=(Complex s) {
  for (auto& t : terms_) t.coeff *= s;
  normalize();
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  require_same_dimension(a.n_, b.n_, "superpoly mul");
  std::vector<SuperPolyTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Grassmann c = ta.coeff * tb.coeff;
      if (c.is_zero()) continue;
      out.push_back({ta.xpow + tb.xpow, ta.tpow + tb.tpow, ta.k + tb.k, ta.w + tb.w, std::move(c)});
    }
  }
  return SuperPoly::from_terms(a.n_, std::move(out));
}

SuperPoly operator*(const Grassmann& c, const SuperPoly& a) {
  require_same_dimension(c.num_generators(), a.n_, "superpoly scale");
  return map_coeffs(a, [&](const Grassmann& x) { return c * x; });
}

bool SuperPoly::operator==(const SuperPoly& other) const {
  if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = other.terms_[i];
    if (a.xpow != b.xpow || a.tpow != b.tpow || a.k != b.k || a.w != b.w || !(a.coeff == b.coeff)) {
      return false;
    }
  }
  return true;
}

SuperPoly deriv(const SuperPoly& a, Axis axis, unsigned order) {
  SuperPoly cur = a;
  for (unsigned n = 0; n < order; ++n) {
    std::vector<SuperPolyTerm> out;
    out.reserve(2 * cur.terms().size());
    for (const auto& t : cur.terms()) {
      const Complex rate = (axis == Axis::X) ? t.k : t.w;
      const unsigned power = (axis == Axis::X) ? t.xpow : t.tpow;
      if (rate != Complex{}) out.push_back({t.xpow, t.tpow, t.k, t.w, t.coeff * rate});
      if (power > 0) {
        SuperPolyTerm lowered{t.xpow, t.tpow, t.k, t.w, t.coeff * static_cast<double>(power)};
        (axis == Axis::X ? lowered.xpow : lowered.tpow) -= 1;
        out.push_back(std::move(lowered));
      }
    }
    cur = SuperPoly::from_terms(a.num_generators(), std::move(out));
  }
  return cur;
}

SuperPoly superD(const SuperPoly& a) {
  const unsigned n = a.num_generators();
  SuperPoly odd_part = map_coeffs(a, [](const Grassmann& c) { return dtheta(c, kTheta); });
  return odd_part + Grassmann::generator(n, kTheta) * deriv(a, Axis::X);
}

SuperPoly conj(const SuperPoly& a) {
  std::vector<SuperPolyTerm> out(a.terms().begin(), a.terms().end());
  for (auto& t : out) {
    t.coeff = conj(t.coeff);
    t.k = std::conj(t.k);
    t.w = std::conj(t.w);
  }
  return SuperPoly::from_terms(a.num_generators(), std::move(out));
}

double max_exponent(const SuperPoly& a, double x, double t) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& term : a.terms()) m = std::max(m, (term.k * x + term.w * t).real());
  return m;
}

Grassmann eval(const SuperPoly& a, double x, double t, double log_scale) {
  Grassmann sum(a.num_generators());
  for (const auto& term : a.terms()) {
    const Complex exponent = term.k * x + term.w * t - log_scale;
    if (exponent.real() > kMaxExponent) {
      throw RangeError("eval: exponent " + format_complex(exponent) + " overflows at (" +
                       std::to_string(x) + ", " + std::to_string(t) + ") for term " +
                       describe({0, term.xpow, term.tpow, term.k, term.w}));
    }
    const Complex scale =
        std::pow(x, static_cast<int>(term.xpow)) * std::pow(t, static_cast<int>(term.tpow)) * std::exp(exponent);
    sum += term.coeff * scale;
  }
  return sum;
}

SuperPoly frame_shift(const SuperPoly& a, double s) {
  std::vector<SuperPolyTerm> out;
  for (const auto& term : a.terms()) {
    for (unsigned j = 0; j <= term.xpow; ++j) {
      const double c = binomial(term.xpow, j) * std::pow(s, static_cast<int>(term.xpow - j));
      if (c == 0.0) continue;
      out.push_back({j, term.tpow + term.xpow - j, term.k, term.w + s * term.k, term.coeff * c});
    }
  }
  return SuperPoly::from_terms(a.num_generators(), std::move(out));
}

ZeroReport is_zero(const SuperPoly& a, double tol) {
  ZeroReport r;
  for (const auto& term : a.terms()) {
    for (const auto& gt : term.coeff.terms()) {
      const double m = std::abs(gt.coeff);
      if (m > r.max_abs) {
        r.max_abs = m;
        r.at = {gt.mask, term.xpow, term.tpow, term.k, term.w};
      }
    }
  }
  r.zero = r.max_abs <= tol;
  return r;
}

std::string describe(const TermLocation& loc) {
  std::ostringstream os;
  os << monomial_name(loc.mask) << " X^" << loc.xpow << " T^" << loc.tpow << " exp(" << format_complex(loc.k)
     << " X + " << format_complex(loc.w) << " T)";
  return os.str();
}

// ----------------------------------------------------------------- SuperJet

SuperJet::SuperJet(unsigned num_generators, double x0, double t0, unsigned mx, unsigned mt)
    : n_(num_generators), x0_(x0), t0_(t0), mx_(mx), mt_(mt),
      c_((mx + 1) * (mt + 1), Grassmann(num_generators)) {}

SuperJet SuperJet::constant(const Grassmann& c, double x0, double t0, unsigned mx, unsigned mt) {
  SuperJet j(c.num_generators(), x0, t0, mx, mt);
  j.coeff(0, 0) = c;
  return j;
}

Grassmann SuperJet::derivative(unsigned i, unsigned j) const {
  if (i > mx_ || j > mt_) throw std::out_of_range("jet derivative beyond truncation order");
  return coeff(i, j) * (factorial(i) * factorial(j));
}

SuperJet SuperJet::truncated(unsigned mx, unsigned mt) const {
  if (mx == mx_ && mt == mt_) return *this;
  SuperJet out(n_, x0_, t0_, mx, mt);
  for (unsigned i = 0; i <= mx; ++i)
    for (unsigned j = 0; j <= mt; ++j) out.coeff(i, j) = coeff(i, j);
  return out;
}

namespace {

void require_same_point(const SuperJet& a, const SuperJet& b) {
  require_same_dimension(a.num_generators(), b.num_generators(), "jet");
  if (a.x0() != b.x0() || a.t0() != b.t0()) throw std::invalid_argument("jets at different base points");
}

} // namespace

SuperJet& SuperJet::operator+=(const SuperJet& other) {
  require_same_point(*this, other);
  *this = truncated(std::min(mx_, other.mx_), std::min(mt_, other.mt_));
  for (unsigned i = 0; i <= mx_; ++i)
    for (unsigned j = 0; j <= mt_; ++j) coeff(i, j) += other.coeff(i, j);
  return *this;
}

SuperJet& SuperJet::operator-=(const SuperJet& other) {
  require_same_point(*this, other);
  *this = truncated(std::min(mx_, other.mx_), std::min(mt_, other.mt_));
  for (unsigned i = 0; i <= mx_; ++i)
    for (unsigned j = 0; j <= mt_; ++j) coeff(i, j) -= other.coeff(i, j);
  return *this;
}

SuperJet& SuperJet::operator*=(Complex s) {
  for (auto& c : c_) c *= s;
  return *this;
}

SuperJet operator*(const SuperJet& a, const SuperJet& b) {
  require_same_point(a, b);
  const unsigned mx = std::min(a.mx_, b.mx_);
  const unsigned mt = std::min(a.mt_, b.mt_);
  SuperJet out(a.n_, a.x0_, a.t0_, mx, mt);
  for (unsigned i1 = 0; i1 <= mx; ++i1)
    for (unsigned j1 = 0; j1 <= mt; ++j1) {
      const Grassmann& ca = a.coeff(i1, j1);
      if (ca.is_zero()) continue;
      for (unsigned i2 = 0; i1 + i2 <= mx; ++i2)
        for (unsigned j2 = 0; j1 + j2 <= mt; ++j2) {
          const Grassmann& cb = b.coeff(i2, j2);
          if (cb.is_zero()) continue;
          out.coeff(i1 + i2, j1 + j2) += ca * cb;
        }
    }
  return out;
}

SuperJet operator*(const Grassmann& c, const SuperJet& a) {
  SuperJet out = a;
  for (auto& x : out.c_) x = c * x;
  return out;
}

double SuperJet::max_abs() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, c.max_abs());
  return m;
}

SuperJet dx(const SuperJet& a) {
  if (a.mx_ == 0) throw std::logic_error("dx: jet has no X order left");
  SuperJet out(a.n_, a.x0_, a.t0_, a.mx_ - 1, a.mt_);
  for (unsigned i = 0; i < a.mx_; ++i)
    for (unsigned j = 0; j <= a.mt_; ++j) out.coeff(i, j) = a.coeff(i + 1, j) * static_cast<double>(i + 1);
  return out;
}

SuperJet dt(const SuperJet& a) {
  if (a.mt_ == 0) throw std::logic_error("dt: jet has no T order left");
  SuperJet out(a.n_, a.x0_, a.t0_, a.mx_, a.mt_ - 1);
  for (unsigned i = 0; i <= a.mx_; ++i)
    for (unsigned j = 0; j < a.mt_; ++j) out.coeff(i, j) = a.coeff(i, j + 1) * static_cast<double>(j + 1);
  return out;
}

SuperJet dtheta(const SuperJet& a, unsigned gen) {
  SuperJet out(a.num_generators(), a.x0(), a.t0(), a.mx(), a.mt());
  for (unsigned i = 0; i <= a.mx(); ++i)
    for (unsigned j = 0; j <= a.mt(); ++j) out.coeff(i, j) = dtheta(a.coeff(i, j), gen);
  return out;
}

SuperJet superD(const SuperJet& a) {
  return dtheta(a, kTheta) + Grassmann::generator(a.num_generators(), kTheta) * dx(a);
}

namespace {

// Sum over m >= 1 of weight(m) * s^m for a jet s with nilpotent value.
template <class W>
SuperJet nilpotent_series(const SuperJet& s, W&& weight) {
  SuperJet sum(s.num_generators(), s.x0(), s.t0(), s.mx(), s.mt());
  SuperJet power = SuperJet::constant(Grassmann::scalar(s.num_generators(), 1.0), s.x0(), s.t0(),
                                      s.mx(), s.mt());
  const unsigned limit = s.mx() + s.mt() + s.num_generators() + 2;
  for (unsigned m = 1; m <= limit; ++m) {
    power = power * s;
    if (power.max_abs() == 0.0) break;
    sum += weight(m) * power;
  }
  return sum;
}

} // namespace

SuperJet inverse(const SuperJet& a) {
  const Complex body = a.value().body();
  if (body == Complex{}) throw DomainError("jet inverse: zero body");
  SuperJet s = a;
  s.coeff(0, 0) -= Grassmann::scalar(a.num_generators(), body);
  s *= 1.0 / body;
  SuperJet sum = nilpotent_series(s, [](unsigned m) { return Complex(m % 2 == 0 ? 1.0 : -1.0); });
  sum.coeff(0, 0) += Grassmann::scalar(a.num_generators(), 1.0);
  return sum * (1.0 / body);
}

SuperJet log(const SuperJet& a) {
  for (unsigned i = 0; i <= a.mx(); ++i)
    for (unsigned j = 0; j <= a.mt(); ++j)
      if (a.coeff(i, j).parity() != Parity::even) throw ParityError("jet log: argument must be even");
  const Complex body = a.value().body();
  if (body == Complex{}) throw DomainError("jet log: zero body");
  SuperJet s = a;
  s.coeff(0, 0) -= Grassmann::scalar(a.num_generators(), body);
  s *= 1.0 / body;
  SuperJet sum = nilpotent_series(
      s, [](unsigned m) { return Complex((m % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(m)); });
  sum.coeff(0, 0) += Grassmann::scalar(a.num_generators(), std::log(body));
  return sum;
}

SuperJet jet(const SuperPoly& a, double x0, double t0, unsigned mx, unsigned mt, double log_scale) {
  SuperJet out(a.num_generators(), x0, t0, mx, mt);
  SuperPoly dxi = a;
  for (unsigned i = 0; i <= mx; ++i) {
    SuperPoly dij = dxi;
    for (unsigned j = 0; j <= mt; ++j) {
      out.coeff(i, j) = eval(dij, x0, t0, log_scale) * (1.0 / (factorial(i) * factorial(j)));
      if (j < mt) dij = deriv(dij, Axis::T);
    }
    if (i < mx) dxi = deriv(dxi, Axis::X);
  }
  return out;
}

} // namespace sgardner
