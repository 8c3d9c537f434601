#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "explicit.hpp"

using namespace testing;

namespace {

bool bilinear_ok(const TauPair& tau, double tol = 1e-10) {
  const auto [a, b] = bilinear_residual(tau, tol);
  return a.pass && b.pass;
}

bool all_even(const TauPair& tau) { return tau.g.parity() == Parity::even && tau.f.parity() == Parity::even; }

} // namespace

TEST_CASE("dispersion relations") {
  CHECK(dispersion(1.0, 1.0, Regime::focusing) == Complex(-4.0));
  CHECK(dispersion(2.0, 1.0, Regime::focusing) == Complex(-14.0));
  CHECK(dispersion(1.0, 4.0, Regime::defocusing) == Complex(47.0));
}

TEST_CASE("interaction data") {
  const std::vector<double> k{1.0, 2.0};
  const auto d = interaction_data(k, 1.0, Regime::focusing);
  CHECK(d.A[0][1] == doctest::Approx(1.0 / 9.0));
  CHECK(d.alpha[0][1] == doctest::Approx(-3.0));
  CHECK(d.alpha[1][0] == doctest::Approx(3.0));
  CHECK(d.beta[0][1] == doctest::Approx(2.0));
  CHECK(d.a[0] == Complex(1.0, 1.0));
  CHECK(d.b[1] == Complex(1.0, -2.0));
  const auto dd = interaction_data(k, 4.0, Regime::defocusing);
  CHECK(dd.a[1] == Complex(1.5));
  CHECK(dd.b[1] == Complex(0.5));
  CHECK_THROWS_AS(interaction_data(std::vector<double>{1.0, -1.0}, 1.0, Regime::focusing), ParameterError);
  CHECK_THROWS_AS(interaction_data(std::vector<double>{1.0, 1.0}, 1.0, Regime::focusing), ParameterError);
  CHECK_THROWS_AS(interaction_data(std::vector<double>{0.0}, 1.0, Regime::focusing), ParameterError);
  CHECK_THROWS_AS(interaction_data(k, 0.0, Regime::focusing), ParameterError);
}

TEST_CASE("one-soliton tau") {
  const TauPair tau = build(soliton_spec(Regime::focusing, 1.0, {1.0}));
  const unsigned n = 2;
  const SuperPoly f = constant(one(n)) + term(n, Complex(1, 1), {1.0}, 1.0, one(n) + theta(n) * xi(n, 1));
  CHECK(diff(tau.f, f) == 0.0);
  CHECK(diff(tau.g, conj(f)) == 0.0);
  CHECK(tau.prefactor == I);
  CHECK(tau.frame == Frame::XT);
  CHECK(bilinear_ok(tau, 1e-12));
}

TEST_CASE("generic builder reproduces the explicit two-soliton formula") {
  const double sigma = 1.0;
  const TauPair tau = build(soliton_spec(Regime::focusing, sigma, {1.0, 2.0}));
  const Complex a1(1.0, 1.0), a2(1.0, 2.0);
  CHECK(diff(tau.f, two_soliton_f(1.0, 2.0, sigma, a1, a2)) <= 1e-15);
  CHECK(diff(tau.g, two_soliton_f(1.0, 2.0, sigma, std::conj(a1), std::conj(a2))) <= 1e-15);
  CHECK(bilinear_ok(tau));
}

TEST_CASE("generic builder reproduces the explicit three-soliton formula") {
  const double sigma = 1.0;
  const double k[3] = {1.0, 2.0, 3.0};
  const Complex a[3] = {{1, 1}, {1, 2}, {1, 3}};
  const Complex b[3] = {std::conj(a[0]), std::conj(a[1]), std::conj(a[2])};
  const TauPair tau = build(soliton_spec(Regime::focusing, sigma, {1.0, 2.0, 3.0}));
  CHECK(diff(tau.f, three_soliton_f(k, sigma, a)) <= 1e-14);
  CHECK(diff(tau.g, three_soliton_f(k, sigma, b)) <= 1e-14);
  CHECK(bilinear_ok(tau));
}

TEST_CASE("the other sign of beta breaks the second bilinear equation") {
  const double sigma = 1.0, k1 = 1.0, k2 = 2.0;
  const Complex a1(1.0, 1.0), a2(1.0, 2.0);
  const unsigned n = 3;
  const Grassmann th = theta(n), x1 = xi(n, 1), x2 = xi(n, 2);
  auto f_with = [&](Complex c1, Complex c2) {
    return constant(one(n)) + term(n, c1, {k1}, sigma, one(n) + th * x1) + term(n, c2, {k2}, sigma, one(n) + th * x2) +
           term(n, A(k1, k2) * c1 * c2, {k1, k2}, sigma,
                (one(n) - x1 * x2 * beta(k1, k2)) * exp(th * (x1 * alpha(k1, k2) + x2 * alpha(k2, k1))));
  };
  TauPair tau = build(soliton_spec(Regime::focusing, sigma, {k1, k2}));
  tau.f = f_with(a1, a2);
  tau.g = f_with(std::conj(a1), std::conj(a2));
  const auto [d, s] = bilinear_residual(tau);
  CHECK(d.pass);
  CHECK_FALSE(s.pass);
  CHECK(s.max_abs == doctest::Approx(16.0));
}

TEST_CASE("focusing solitons: g is the conjugate of f, both even") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const double sigma = rng.uniform(0.5, 2.0);
    std::vector<double> ks;
    for (int i = 0; i < 3; ++i) ks.push_back(rng.uniform(0.3, 1.0) + i);
    const TauPair tau = build(soliton_spec(Regime::focusing, sigma, ks));
    CHECK(diff(tau.g, conj(tau.f)) == 0.0);
    CHECK(all_even(tau));
    // every monomial of both equations vanishes for random parameters
    CHECK(bilinear_ok(tau));
    CHECK(bilinear_ok(to_frame(tau, Frame::xt)));
  }
}

TEST_CASE("defocusing solitons") {
  for (const auto& ks : std::vector<std::vector<double>>{{1.0}, {1.0, 2.0}, {1.0, 2.0, 3.0}}) {
    const TauPair tau = build(soliton_spec(Regime::defocusing, 4.0, ks));
    CHECK(tau.prefactor == Complex(1.0));
    CHECK(all_even(tau));
    CHECK(bilinear_ok(tau));
    CHECK(bilinear_ok(to_frame(tau, Frame::xt)));
  }
}

TEST_CASE("switching fermions off gives the classical tau functions") {
  const TauPair tau = build(soliton_spec(Regime::focusing, 1.0, {1.0, 2.0, 3.0}, false));
  for (const SuperPoly* p : {&tau.g, &tau.f})
    for (const auto& t : p->terms()) CHECK(t.coeff.soul().is_zero());
  CHECK(bilinear_ok(tau));
  const TauPair xt = to_frame(tau, Frame::xt);
  CHECK(bilinear_ok(xt));
  // xi-free reduction of a fermionic pair is the classical pair
  const TauPair reduced = xi_free(build(soliton_spec(Regime::focusing, 1.0, {1.0, 2.0, 3.0})));
  CHECK(diff(reduced.f, tau.f) <= 1e-15);
  CHECK(diff(reduced.g, tau.g) <= 1e-15);
}

TEST_CASE("shock and mixed shock-soliton") {
  const TauPair shock = build_shock_tau(-2.0);
  const unsigned n = 2;
  CHECK(diff(shock.f, constant(one(n))) == 0.0);
  CHECK(diff(shock.g, constant(one(n)) + expo((one(n) + theta(n) * xi(n, 1)) * 2.0, 2.0, -8.0 + 24.0)) == 0.0);
  CHECK(bilinear_ok(shock));

  const auto d = interaction_data(std::vector<double>{1.0, 2.0}, -2.0, Regime::defocusing);
  CHECK(d.a[0] == Complex(0.5));
  CHECK(d.b[0] == Complex(1.5));
  const TauPair mixed = build_mixed_shock_soliton_tau(-2.0, 1.0);
  CHECK(all_even(mixed));
  CHECK(bilinear_ok(mixed));
  CHECK(bilinear_ok(to_frame(mixed, Frame::xt)));
  CHECK_THROWS_AS(build_mixed_shock_soliton_tau(-2.0, 2.0), ParameterError);
  CHECK_THROWS_AS(build_mixed_shock_soliton_tau(-2.0, -2.0), ParameterError);
  const TauPair classical = xi_free(mixed);
  CHECK(bilinear_ok(classical));
}

TEST_CASE("rational tau") {
  const double sigma = 1.0, k0 = 2.0;
  const TauPair tau = build_rational_tau(sigma, k0);
  const unsigned n = 2;
  const SuperPoly f = SuperPoly::from_terms(n, {{0, 0, 0.0, 0.0, one(n) * Complex(0.0, k0 / sigma) + theta(n) * xi(n, 1)},
                                                {1, 0, 0.0, 0.0, one(n) * k0},
                                                {0, 1, 0.0, 0.0, one(n) * (-3.0 * k0 * sigma * sigma)}});
  CHECK(diff(tau.f, f) == 0.0);
  CHECK(diff(tau.g, conj(f)) == 0.0);
  CHECK(bilinear_ok(tau));
  CHECK(bilinear_ok(to_frame(tau, Frame::xt)));
}

TEST_CASE("mixed rational-soliton") {
  const double sigma = 1.0, k10 = 0.3, k2 = 1.0;
  const TauPair tau = build_mixed_rational_soliton_tau(sigma, k10, k2);
  CHECK(tau.g.num_generators() == 3);
  CHECK(diff(tau.g, conj(tau.f)) == 0.0);
  CHECK(all_even(tau));
  CHECK(bilinear_ok(tau));
  CHECK(bilinear_ok(to_frame(tau, Frame::xt)));

  // Transcribing g with Q (not its conjugate) in the theta xi_2 part breaks
  // the first equation.
  const unsigned n = 3;
  const Grassmann th = theta(n), x1 = xi(n, 1), x2 = xi(n, 2);
  const SuperPoly q = SuperPoly::from_terms(n, {{0, 0, 0.0, 0.0, one(n) * Complex(0.0, -k10 / sigma)},
                                                {1, 0, 0.0, 0.0, one(n) * -k10},
                                                {0, 1, 0.0, 0.0, one(n) * (3.0 * k10 * sigma * sigma)}});
  const SuperPoly qs = conj(q);
  const Complex a2s = Complex(1.0, -k2 / sigma);
  const SuperPoly e2 = expo(one(n) * a2s, k2, omega(k2, sigma));
  const SuperPoly literal_g =
      qs - constant(th * x1) +
      e2 * (qs + constant(one(n) * (4.0 * k10 / k2) - x1 * x2 * (2.0 / k2) + th * x1) +
            constant(th * x2) * (q + constant(one(n) * (2.0 * k10 / k2))));
  TauPair literal = tau;
  literal.g = literal_g;
  CHECK_FALSE(bilinear_ok(literal));
  // with the conjugate it is the builder's g
  const SuperPoly fixed_g =
      qs - constant(th * x1) +
      e2 * (qs + constant(one(n) * (4.0 * k10 / k2) - x1 * x2 * (2.0 / k2) + th * x1) +
            constant(th * x2) * (qs + constant(one(n) * (2.0 * k10 / k2))));
  CHECK(diff(fixed_g, tau.g) <= 1e-15);
}

TEST_CASE("four-soliton tau is reported") {
  const TauPair tau = build(soliton_spec(Regime::focusing, 1.0, {1.0, 2.0, 3.0, 4.0}));
  CHECK(tau.g.num_generators() == 5);
  CHECK(all_even(tau));
  const auto [d, s] = bilinear_residual(tau);
  MESSAGE("N=4 residuals: " << d.max_abs << ", " << s.max_abs);
}

TEST_CASE("spec validation") {
  SolitonSpec s = soliton_spec(Regime::focusing, 1.0, {});
  CHECK_THROWS_AS(build(s), ParameterError);
  s.entries = {{1.0, 0.0, true}, {-1.0, 0.0, true}};
  CHECK_THROWS_AS(build(s), ParameterError);
  s.sigma = 0.0;
  CHECK_THROWS_AS(validate(s), ParameterError);
  CHECK_THROWS_AS(build({Regime::focusing, -2.0, Kind::shock, {{2.0, 0.0, true}}}), ParameterError);
  CHECK_THROWS_AS(build({Regime::defocusing, -2.0, Kind::shock, {{1.0, 0.0, true}}}), ParameterError);
  CHECK_NOTHROW(build({Regime::defocusing, -2.0, Kind::shock, {{2.0, 0.0, true}}}));
  CHECK_THROWS_AS(build({Regime::defocusing, 1.0, Kind::rational, {{1.0, 0.0, true}}}), ParameterError);
  CHECK_THROWS_AS(build({Regime::focusing, 1.0, Kind::mixed_rational_soliton, {{1.0, 0.0, true}}}), ParameterError);
  const TauPair t = build({Regime::focusing, 1.0, Kind::mixed_rational_soliton, {{0.3, 0.0, true}, {1.0, 0.5, true}}});
  REQUIRE(t.spec);
  CHECK(t.spec->kind == Kind::mixed_rational_soliton);
  CHECK(parse_kind("mixed-shock-soliton") == Kind::mixed_shock_soliton);
  CHECK_THROWS_AS(parse_kind("breather"), FormatError);
  CHECK_THROWS_AS(parse_regime("weird"), FormatError);
}

TEST_CASE("phase constants shift the solution") {
  SolitonSpec s = soliton_spec(Regime::defocusing, 4.0, {1.0, 2.0});
  s.entries[0].phase = 0.7;
  const TauPair tau = build(s);
  CHECK(bilinear_ok(tau));
  const TauPair base = build(soliton_spec(Regime::defocusing, 4.0, {1.0, 2.0}));
  // eta_1 + 0.7 at X is eta_1 at X + 0.7/k1 when only soliton 1 is present
  CHECK(std::abs(eval(tau.f, 0.0, 0.0).coeff(0) - eval(base.f, 0.0, 0.0).coeff(0)) > 0.1);
}
