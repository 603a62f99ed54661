#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sigma3/rng.hpp"
#include "sigma3/series.hpp"
#include "sigma3/sigmalimit.hpp"

using namespace sigma3;

namespace {

Series2 random_series(int order, TrialRng& rng, int terms) {
  Series2 s(order);
  for (int k = 0; k < terms; ++k) {
    int i = static_cast<int>(rng.below(static_cast<uint64_t>(order + 1)));
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(order + 1 - i)));
    long num = static_cast<long>(rng.below(19)) - 9;
    long den = static_cast<long>(rng.below(4)) + 1;
    s.set_coeff(i, j, s.coeff(i, j) + Scalar(Rational(num, den)));
  }
  return s;
}

// independent oracle for the p = 0 root: the naive rewriting
// phi <- t^2 - tau*phi + (1/3) t phi^3 - (1/45) phi^6 contracts for this
// seed, so iterating it to a fixed point gives the solution
Series2 phi_oracle_p0(int order) {
  Series2 phi(order);
  Series2 t = Series2::var_t(order);
  Series2 tau = Series2::var_tau(order);
  Scalar third{Rational(1, 3)};
  Scalar c45{Rational(-1, 45)};
  for (int it = 0; it <= order + 2; ++it)
    phi = t * t - tau * phi + t * phi.pow(3) * third + phi.pow(6) * c45;
  return phi;
}

}  // namespace

TEST_CASE("series ring laws under truncation") {
  TrialRng rng(77, 0);
  for (int rep = 0; rep < 15; ++rep) {
    Series2 a = random_series(6, rng, 5);
    Series2 b = random_series(6, rng, 5);
    Series2 c = random_series(6, rng, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("reciprocal of a unit series") {
  int N = 8;
  Series2 one = Series2::constant(N, Scalar(Rational(1)));
  Series2 a = one + Series2::var_t(N);
  Series2 r = a.reciprocal();
  CHECK(a * r == one);
  // geometric series of 1/(1 - t)
  Series2 b = one - Series2::var_t(N);
  Series2 g = b.reciprocal();
  for (int k = 0; k <= N; ++k) CHECK(g.coeff(k, 0) == Scalar(Rational(1)));
  CHECK_THROWS_AS(Series2::var_t(N).reciprocal(), std::domain_error);

  TrialRng rng(11, 0);
  for (int rep = 0; rep < 10; ++rep) {
    Series2 u = random_series(7, rng, 6) + Series2::constant(7, Scalar(Rational(3, 2)));
    CHECK(u * u.reciprocal() == Series2::constant(7, Scalar(Rational(1))));
  }
}

TEST_CASE("derivatives and slices") {
  int N = 6;
  // s = t^2 tau + 3 t
  Series2 s(N);
  s.set_coeff(2, 1, Scalar(Rational(1)));
  s.set_coeff(1, 0, Scalar(Rational(3)));
  Series2 dt = s.derivative_t();
  CHECK(dt.coeff(1, 1) == Scalar(Rational(2)));
  CHECK(dt.coeff(0, 0) == Scalar(Rational(3)));
  Series2 dtau = s.derivative_tau();
  CHECK(dtau.coeff(2, 0) == Scalar(Rational(1)));
  CHECK(s.slice_tau0().coeff(2, 1).is_zero());
  CHECK(s.slice_tau0().coeff(1, 0) == Scalar(Rational(3)));
}

TEST_CASE("newton root of the sigma surface, p = 0 seed") {
  SeedSpec seed = make_seed(SeedKind::p_zero);
  int N = 12;
  Series2 phi = solve_phi(seed, N);

  // frozen low-order values, hand-derived from the defining relation
  CHECK(phi.coeff(2, 0) == Scalar(Rational(1)));
  CHECK(phi.coeff(7, 0) == Scalar(Rational(1, 3)));
  CHECK(phi.coeff(12, 0) == Scalar(Rational(14, 45)));
  CHECK(phi.coeff(2, 1) == Scalar(Rational(-1)));
  CHECK(phi.coeff(2, 2) == Scalar(Rational(1)));
  CHECK(phi.coeff(7, 1) == Scalar(Rational(-4, 3)));
  CHECK(phi.coeff(0, 0).is_zero());
  CHECK(phi.coeff(1, 0).is_zero());

  // independent fixed-point oracle agrees to full order
  CHECK(phi == phi_oracle_p0(N));

  // residual is identically zero through order N
  std::map<std::string, Series2> bind = {
      {"w1", phi},
      {"w3", Series2::var_t(N)},
      {"w5", Series2::constant(N, Scalar(Rational(1))) + Series2::var_tau(N)}};
  CHECK(substitute_series(sigma_sw().sigma, bind).is_zero());
}

TEST_CASE("newton root, p^5 = -45 seed") {
  SeedSpec seed = make_seed(SeedKind::p_root5);
  int N = 8;
  Series2 phi = solve_phi(seed, N);
  Scalar p = seed.seed_value;
  CHECK(phi.coeff(0, 0) == p);
  // t = 0 slice is the binomial series of p (1 + tau)^{1/5}
  Series2 slice = phi.slice_t0();
  Series2 bin = binomial_series(Rational(1, 5), N);
  for (int j = 0; j <= N; ++j) {
    Scalar expect = p * bin.coeff(j, 0);
    CHECK(slice.coeff(0, j) == expect);
  }
  // implicit-function derivative at the base point: -sigma3/sigma1 = -p^3/15
  CHECK(phi.coeff(1, 0) == p.pow(3) * Scalar(Rational(-1, 15)));
  // residual zero
  std::map<std::string, Series2> bind = {
      {"w1", phi},
      {"w3", Series2::var_t(N)},
      {"w5", Series2::constant(N, Scalar(Rational(1))) + Series2::var_tau(N)}};
  CHECK(substitute_series(sigma_sw().sigma, bind).is_zero());
}

TEST_CASE("newton root: order 0 returns the seed") {
  SeedSpec seed = make_seed(SeedKind::p_zero);
  Series2 phi = solve_phi(seed, 0);
  CHECK(phi.order() == 0);
  CHECK(phi.is_zero());  // seed is 0
  SeedSpec ps = make_seed(SeedKind::p_root5);
  Series2 phip = solve_phi(ps, 0);
  CHECK(phip.coeff(0, 0) == ps.seed_value);
}

TEST_CASE("newton root error paths") {
  const auto& wv = w_universe();
  // F = w1^2 - w3: seed 0 works but F'(0) = 0
  Poly F = Poly::variable(wv, "w1").pow(2) - Poly::variable(wv, "w3");
  std::map<std::string, Series2> bind = {{"w3", Series2::var_t(6)},
                                         {"w5", Series2::constant(6, Scalar(Rational(0)))}};
  CHECK_THROWS_AS(series_newton_root(F, "w1", bind, Scalar(Rational(0)), 6), std::domain_error);
  // seed that is not a root of the constant part
  CHECK_THROWS_AS(
      series_newton_root(sigma_sw().sigma, "w1", bind, Scalar(Rational(1)), 6),
      std::domain_error);
}

TEST_CASE("binomial series matches hand values") {
  Series2 b = binomial_series(Rational(1, 3), 4);
  CHECK(b.coeff(0, 0) == Scalar(Rational(1)));
  CHECK(b.coeff(1, 0) == Scalar(Rational(1, 3)));
  CHECK(b.coeff(2, 0) == Scalar(Rational(-1, 9)));
  CHECK(b.coeff(3, 0) == Scalar(Rational(5, 81)));
  Series2 c = binomial_series(Rational(-2, 3), 3);
  CHECK(c.coeff(1, 0) == Scalar(Rational(-2, 3)));
  CHECK(c.coeff(2, 0) == Scalar(Rational(5, 9)));
  CHECK(c.coeff(3, 0) == Scalar(Rational(-40, 81)));
  // (1+t)^a * (1+t)^{-a} = 1
  Series2 prod = binomial_series(Rational(2, 5), 7) * binomial_series(Rational(-2, 5), 7);
  CHECK(prod == Series2::constant(7, Scalar(Rational(1))));
}
