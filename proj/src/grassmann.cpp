#include "sgardner/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace sgardner {

namespace {

void require_same_dimension(const Grassmann& a, const Grassmann& b, const char* op) {
  if (a.num_generators() != b.num_generators()) {
    throw DimensionError(std::string(op) + ": generator count mismatch (" +
                         std::to_string(a.num_generators()) + " vs " +
                         std::to_string(b.num_generators()) + ")");
  }
}

void require_even(const Grassmann& a, const char* op) {
  if (a.parity() != Parity::even) {
    throw ParityError(std::string(op) + ": argument must be even");
  }
}

// Powers of a nilpotent element vanish after at most n+1 factors.
template <class F>
void for_each_power(const Grassmann& s, unsigned limit, F&& f) {
  Grassmann power = Grassmann::scalar(s.num_generators(), 1.0);
  for (unsigned m = 1; m <= limit; ++m) {
    power = power * s;
    if (power.is_zero()) return;
    f(m, power);
  }
}

} // namespace

Grassmann::Grassmann(unsigned num_generators) : n_(num_generators) {
  if (n_ > kMaxGenerators) {
    throw DimensionError("too many Grassmann generators: " + std::to_string(n_));
  }
}

Grassmann Grassmann::scalar(unsigned num_generators, Complex value) {
  return monomial(num_generators, 0, value);
}

Grassmann Grassmann::monomial(unsigned num_generators, Mask mask, Complex value) {
  return from_terms(num_generators, {Term{mask, value}});
}

Grassmann Grassmann::generator(unsigned num_generators, unsigned index, Complex value) {
  if (index >= num_generators) {
    throw DimensionError("generator index " + std::to_string(index) + " out of range");
  }
  return monomial(num_generators, Mask{1} << index, value);
}

Grassmann Grassmann::from_terms(unsigned num_generators, std::vector<Term> terms) {
  Grassmann g(num_generators);
  const Mask limit = Mask{1} << num_generators;
  for (const auto& t : terms) {
    if (t.mask >= limit) {
      throw DimensionError("monomial mask " + std::to_string(t.mask) + " exceeds " +
                           std::to_string(num_generators) + " generators");
    }
  }
  g.terms_ = std::move(terms);
  g.normalize();
  return g;
}

void Grassmann::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mask < b.mask; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().mask == t.mask) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return std::abs(t.coeff) < kPruneThreshold; });
  terms_ = std::move(merged);
}

Complex Grassmann::body() const { return coeff(0); }

Complex Grassmann::coeff(Mask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, Mask m) { return t.mask < m; });
  return (it != terms_.end() && it->mask == mask) ? it->coeff : Complex{};
}

Grassmann Grassmann::soul() const {
  Grassmann out = *this;
  std::erase_if(out.terms_, [](const Term& t) { return t.mask == 0; });
  return out;
}

Parity Grassmann::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& t : terms_) {
    (std::popcount(t.mask) % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

Grassmann Grassmann::even_part() const {
  Grassmann out = *this;
  std::erase_if(out.terms_, [](const Term& t) { return std::popcount(t.mask) % 2 != 0; });
  return out;
}

Grassmann Grassmann::odd_part() const {
  Grassmann out = *this;
  std::erase_if(out.terms_, [](const Term& t) { return std::popcount(t.mask) % 2 == 0; });
  return out;
}

double Grassmann::max_abs() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

Grassmann& Grassmann::operator+=(const Grassmann& other) {
  require_same_dimension(*this, other, "add");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

Grassmann& Grassmann::operator-=(const Grassmann& other) {
  require_same_dimension(*this, other, "sub");
  for (const auto& t : other.terms_) terms_.push_back({t.mask, -t.coeff});
  normalize();
  return *this;
}

Grassmann& Grassmann::operator*=(Complex s) {
  for (auto& t : terms_) t.coeff *= s;
  normalize();
  return *this;
}

int monomial_product_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  unsigned swaps = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    // generators of a with index above j must move past generator j
    swaps += static_cast<unsigned>(std::popcount(a >> (j + 1)));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

Grassmann operator*(const Grassmann& a, const Grassmann& b) {
  require_same_dimension(a, b, "mul");
  std::vector<Grassmann::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      const int sign = monomial_product_sign(ta.mask, tb.mask);
      if (sign == 0) continue;
      out.push_back({ta.mask | tb.mask, static_cast<double>(sign) * ta.coeff * tb.coeff});
    }
  }
  Grassmann r(a.n_);
  r.terms_ = std::move(out);
  r.normalize();
  return r;
}

Grassmann dtheta(const Grassmann& a, unsigned gen) {
  if (gen >= a.num_generators()) {
    throw DimensionError("derivative generator index " + std::to_string(gen) + " out of range");
  }
  const Mask bit = Mask{1} << gen;
  const Mask lower = bit - 1;
  std::vector<Grassmann::Term> out;
  for (const auto& t : a.terms()) {
    if ((t.mask & bit) == 0) continue;
    const bool flip = std::popcount(t.mask & lower) % 2 != 0;
    out.push_back({t.mask & ~bit, flip ? -t.coeff : t.coeff});
  }
  return Grassmann::from_terms(a.num_generators(), std::move(out));
}

Grassmann inverse(const Grassmann& a) {
  const Complex body = a.body();
  if (body == Complex{}) throw DomainError("inverse: element has zero body");
  const Grassmann s = a.soul() * (1.0 / body);
  Grassmann sum = Grassmann::scalar(a.num_generators(), 1.0);
  for_each_power(s, a.num_generators() + 1, [&](unsigned m, const Grassmann& p) {
    sum += (m % 2 == 0 ? 1.0 : -1.0) * p;
  });
  return sum * (1.0 / body);
}

Grassmann log(const Grassmann& a) {
  require_even(a, "log");
  const Complex body = a.body();
  if (body == Complex{}) throw DomainError("log: element has zero body");
  const Grassmann s = a.soul() * (1.0 / body);
  Grassmann sum = Grassmann::scalar(a.num_generators(), std::log(body));
  for_each_power(s, a.num_generators() + 1, [&](unsigned m, const Grassmann& p) {
    sum += ((m % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(m)) * p;
  });
  return sum;
}

Grassmann exp(const Grassmann& a) {
  require_even(a, "exp");
  const Grassmann s = a.soul();
  Grassmann sum = Grassmann::scalar(a.num_generators(), 1.0);
  double factorial = 1.0;
  for_each_power(s, a.num_generators() + 1, [&](unsigned m, const Grassmann& p) {
    factorial *= static_cast<double>(m);
    sum += (1.0 / factorial) * p;
  });
  return sum * std::exp(a.body());
}

Grassmann conj(const Grassmann& a) {
  std::vector<Grassmann::Term> out(a.terms().begin(), a.terms().end());
  for (auto& t : out) t.coeff = std::conj(t.coeff);
  return Grassmann::from_terms(a.num_generators(), std::move(out));
}

Grassmann drop_generators(const Grassmann& a, Mask mask) {
  std::vector<Grassmann::Term> out;
  for (const auto& t : a.terms()) {
    if ((t.mask & mask) == 0) out.push_back(t);
  }
  return Grassmann::from_terms(a.num_generators(), std::move(out));
}

std::string monomial_name(Mask mask) {
  if (mask == 0) return "1";
  std::string out;
  for (Mask rest = mask; rest != 0; rest &= rest - 1) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(rest));
    if (!out.empty()) out += '*';
    out += (i == kTheta) ? std::string("theta") : "xi" + std::to_string(i);
  }
  return out;
}

std::string to_string(const Grassmann& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << t.coeff.real() << (t.coeff.imag() < 0 ? "-" : "+") << std::abs(t.coeff.imag())
       << "i)";
    if (t.mask != 0) os << '*' << monomial_name(t.mask);
  }
  return os.str();
}

} // namespace sgardner
