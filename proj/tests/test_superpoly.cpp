#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

SuperPoly random_poly(Rng& rng, unsigned n, unsigned terms) {
  std::vector<SuperPolyTerm> out;
  for (unsigned i = 0; i < terms; ++i) {
    out.push_back({rng.below(3), rng.below(2), Complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5)),
                   Complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5)), random_element(rng, n)});
  }
  return SuperPoly::from_terms(n, std::move(out));
}

// Value of a at (x, t) by direct summation of c x^p t^q e^{kx + wt}.
Grassmann direct_eval(const SuperPoly& a, double x, double t) {
  Grassmann sum(a.num_generators());
  for (const auto& term : a.terms())
    sum += term.coeff * (std::pow(x, term.xpow) * std::pow(t, term.tpow) * std::exp(term.k * x + term.w * t));
  return sum;
}

} // namespace

TEST_CASE("normalization merges equal rates and drops cancelled terms") {
  const unsigned n = 2;
  const SuperPoly a = expo(one(n), 1.0, 2.0) + expo(one(n), 1.0 + 1e-13, 2.0);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0].coeff.body() == Complex(2.0));
  CHECK((a - a).empty());
  const SuperPoly b = expo(one(n), 1.0, 2.0) + expo(one(n), 1.0 + 1e-9, 2.0);
  CHECK(b.terms().size() == 2);
  CHECK(SuperPoly::from_terms(n, {{0, 0, 0.0, 0.0, Grassmann(n)}}).empty());
}

TEST_CASE("product multiplies coefficients, adds rates and powers") {
  const unsigned n = 2;
  const SuperPoly a = SuperPoly::from_terms(n, {{1, 0, 1.0, 0.5, theta(n)}});
  const SuperPoly b = SuperPoly::from_terms(n, {{0, 2, -2.0, 1.0, xi(n, 1) * 3.0}});
  const SuperPoly ab = a * b;
  REQUIRE(ab.terms().size() == 1);
  const auto& t = ab.terms()[0];
  CHECK(t.xpow == 1);
  CHECK(t.tpow == 2);
  CHECK(t.k == Complex(-1.0));
  CHECK(t.w == Complex(1.5));
  CHECK(t.coeff == theta(n) * xi(n, 1) * 3.0);
  CHECK(diff(b * a, -ab) == 0.0);
}

TEST_CASE("evaluation and derivatives against finite differences") {
  Rng rng(21);
  const unsigned n = 3;
  const double h = 1e-4;
  for (int trial = 0; trial < 10; ++trial) {
    const SuperPoly a = random_poly(rng, n, 4);
    const double x = rng.uniform(-2, 2), t = rng.uniform(-2, 2);
    CHECK(diff(eval(a, x, t), direct_eval(a, x, t)) <= 1e-12);
    const Grassmann fx = (direct_eval(a, x + h, t) - direct_eval(a, x - h, t)) * (1.0 / (2 * h));
    const Grassmann ft = (direct_eval(a, x, t + h) - direct_eval(a, x, t - h)) * (1.0 / (2 * h));
    const Grassmann ex = eval(deriv(a, Axis::X), x, t), et = eval(deriv(a, Axis::T), x, t);
    CHECK(diff(ex, fx) <= 1e-5 * std::max(1.0, ex.max_abs()));
    CHECK(diff(et, ft) <= 1e-5 * std::max(1.0, et.max_abs()));
    CHECK(diff(deriv(a, Axis::X, 3), deriv(deriv(deriv(a, Axis::X), Axis::X), Axis::X)) == 0.0);
  }
}

TEST_CASE("superderivative squares to d/dX and is an odd derivation") {
  Rng rng(8);
  const unsigned n = 3;
  for (int trial = 0; trial < 10; ++trial) {
    const SuperPoly a = random_poly(rng, n, 3);
    const SuperPoly e = random_poly(rng, n, 2).even_part();
    CHECK(diff(superD(superD(a)), deriv(a, Axis::X)) <= 1e-13);
    CHECK(diff(superD(e * a), superD(e) * a + e * superD(a)) <= 1e-12);
  }
  const SuperPoly th = constant(theta(n));
  CHECK(diff(superD(th), constant(one(n))) == 0.0);
  const SuperPoly ex = SuperPoly::from_terms(n, {{1, 0, 0.0, 0.0, one(n)}});
  CHECK(diff(superD(ex), th) == 0.0);
}

TEST_CASE("frame shift substitutes X = x + s t") {
  Rng rng(4);
  const unsigned n = 2;
  const SuperPoly a = random_poly(rng, n, 4);
  const double s = 3.0;
  const SuperPoly b = frame_shift(a, s);
  for (int i = 0; i < 5; ++i) {
    const double x = rng.uniform(-1, 1), t = rng.uniform(-1, 1);
    CHECK(diff(eval(b, x, t), eval(a, x + s * t, t)) <= 1e-11);
  }
  CHECK(diff(frame_shift(b, -s), a) <= 1e-12);
}

TEST_CASE("conjugation and parity parts") {
  const unsigned n = 2;
  const SuperPoly a = expo(theta(n) * xi(n, 1) * Complex(1, 1) + one(n), Complex(1, 2), Complex(0, -1));
  const SuperPoly c = conj(a);
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].k == Complex(1, -2));
  CHECK(c.terms()[0].w == Complex(0, 1));
  CHECK(c.terms()[0].coeff.coeff(0b11) == Complex(1, -1));
  CHECK(a.parity() == Parity::even);
  CHECK((a + constant(theta(n))).parity() == Parity::mixed);
  CHECK(diff((a + constant(theta(n))).odd_part(), constant(theta(n))) == 0.0);
}

TEST_CASE("is_zero reports the largest coefficient and where it sits") {
  const unsigned n = 2;
  const SuperPoly a = expo(theta(n) * 1e-3, 2.0, 1.0) + SuperPoly::from_terms(n, {{1, 0, 0.0, 0.0, xi(n, 1) * 1e-9}});
  const ZeroReport r = is_zero(a, 1e-6);
  CHECK_FALSE(r.zero);
  CHECK(r.max_abs == doctest::Approx(1e-3));
  CHECK(r.at.mask == 1);
  CHECK(r.at.k == Complex(2.0));
  CHECK(is_zero(a, 1e-2).zero);
  CHECK(describe(r.at).find("theta") != std::string::npos);
}

TEST_CASE("evaluation refuses overflowing exponentials") {
  const unsigned n = 1;
  const SuperPoly a = expo(one(n), 10.0, 0.0);
  CHECK_THROWS_AS(eval(a, 100.0, 0.0), RangeError);
  CHECK(eval(a, 100.0, 0.0, 990.0).body().real() == doctest::Approx(std::exp(10.0)));
  CHECK_THROWS_AS(a + constant(one(2)), DimensionError);
}

TEST_CASE("jets carry Taylor coefficients") {
  Rng rng(2);
  const unsigned n = 3;
  const SuperPoly a = random_poly(rng, n, 3);
  const double x = 0.3, t = -0.2;
  const SuperJet j = jet(a, x, t, 3, 1);
  CHECK(diff(j.value(), eval(a, x, t)) <= 1e-13);
  CHECK(diff(j.derivative(2, 1), eval(deriv(deriv(a, Axis::X, 2), Axis::T), x, t)) <= 1e-12);
  CHECK(diff(dx(j).value(), eval(deriv(a, Axis::X), x, t)) <= 1e-12);
  CHECK(diff(dt(j).value(), eval(deriv(a, Axis::T), x, t)) <= 1e-12);
  CHECK(diff(superD(j).value(), eval(superD(a), x, t)) <= 1e-12);
  CHECK(dx(j).mx() == 2);
  CHECK_THROWS_AS(dt(dt(j)), std::logic_error);
}

TEST_CASE("jet arithmetic matches SuperPoly arithmetic") {
  Rng rng(9);
  const unsigned n = 3;
  const SuperPoly a = random_poly(rng, n, 3), b = random_poly(rng, n, 3);
  const double x = -0.4, t = 0.7;
  const SuperJet ja = jet(a, x, t), jb = jet(b, x, t);
  const SuperJet jab = jet(a * b, x, t);
  const SuperJet prod = ja * jb;
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned k = 0; k <= 1; ++k) CHECK(diff(prod.coeff(i, k), jab.coeff(i, k)) <= 1e-11);
}

TEST_CASE("jet inverse and log") {
  Rng rng(12);
  const unsigned n = 3;
  const SuperPoly e = constant(Grassmann::scalar(n, 3.0)) + random_poly(rng, n, 3).even_part();
  const SuperJet j = jet(e, 0.1, 0.2);
  const SuperJet unit = j * inverse(j);
  CHECK(diff(unit.value(), one(n)) <= 1e-12);
  CHECK((unit - SuperJet::constant(one(n), 0.1, 0.2)).max_abs() <= 1e-12);
  // d/dX log e = e_X / e
  const SuperJet lhs = dx(log(j));
  const SuperJet rhs = dx(j) * inverse(j);
  CHECK((lhs - rhs).max_abs() <= 1e-11);
  CHECK_THROWS_AS(log(jet(constant(theta(n)) + constant(one(n)), 0, 0)), ParityError);
  CHECK_THROWS_AS(inverse(jet(constant(theta(n) * xi(n, 1)), 0, 0)), DomainError);
}
