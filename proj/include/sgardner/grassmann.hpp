#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sgardner/errors.hpp"

namespace sgardner {

using Complex = std::complex<double>;
using Mask = std::uint32_t;

// Coefficients with smaller magnitude are dropped during normalization.
inline constexpr double kPruneThreshold = 1e-14;
inline constexpr unsigned kMaxGenerators = 16;

// Generator 0 is theta; generators 1..N are xi_1..xi_N.
inline constexpr unsigned kTheta = 0;

enum class Parity { even, odd, mixed };

/// Element of the exterior algebra over C on `num_generators` ordered
/// generators. Stored sparsely as (mask, coefficient) pairs sorted by mask;
/// bit i of a mask marks generator i, and a monomial is always written with
/// its generators in ascending index order.
///
/// Values are immutable after construction apart from the compound
/// assignment operators, which renormalize before returning.
class Grassmann {
public:
  struct Term {
    Mask mask;
    Complex coeff;
    bool operator==(const Term&) const = default;
  };

  Grassmann() = default;
  explicit Grassmann(unsigned num_generators);

  static Grassmann scalar(unsigned num_generators, Complex value);
  static Grassmann monomial(unsigned num_generators, Mask mask, Complex value = 1.0);
  static Grassmann generator(unsigned num_generators, unsigned index, Complex value = 1.0);
  static Grassmann from_terms(unsigned num_generators, std::vector<Term> terms);

  unsigned num_generators() const { return n_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Scalar part.
  Complex body() const;
  Complex coeff(Mask mask) const;
  Grassmann soul() const;
  Parity parity() const;
  Grassmann even_part() const;
  Grassmann odd_part() const;
  double max_abs() const;

  Grassmann& operator+=(const Grassmann& other);
  Grassmann& operator-=(const Grassmann& other);
  Grassmann& operator*=(Complex s);

  friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
  friend Grassmann operator-(Grassmann a, const Grassmann& b) { return a -= b; }
  friend Grassmann operator*(Complex s, Grassmann a) { return a *= s; }
  friend Grassmann operator*(Grassmann a, Complex s) { return a *= s; }
  friend Grassmann operator-(Grassmann a) { return a *= -1.0; }
  friend Grassmann operator*(const Grassmann& a, const Grassmann& b);

  bool operator==(const Grassmann&) const = default;

private:
  void normalize();

  unsigned n_ = 0;
  std::vector<Term> terms_;
};

// Sign of the product of two disjoint basis monomials: (-1)^(number of
// pairs (i in a, j in b) with i > j). Returns 0 when the masks overlap.
int monomial_product_sign(Mask a, Mask b);

// Left derivative with respect to generator `gen`.
Grassmann dtheta(const Grassmann& a, unsigned gen);

// Finite Neumann series; throws DomainError when the body is zero.
Grassmann inverse(const Grassmann& a);

// Principal logarithm and exponential of even elements, via the
// terminating series in the nilpotent part.
Grassmann log(const Grassmann& a);
Grassmann exp(const Grassmann& a);

Grassmann conj(const Grassmann& a);

// Drops every monomial that contains a generator flagged in `mask`.
Grassmann drop_generators(const Grassmann& a, Mask mask);

// "1", "theta", "xi1", "theta*xi1*xi2", ...
std::string monomial_name(Mask mask);
std::string to_string(const Grassmann& a);

} // namespace sgardner
