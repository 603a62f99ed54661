#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sigma3/curvering.hpp"
#include "sigma3/expr.hpp"
#include "sigma3/poly.hpp"
#include "sigma3/rng.hpp"
#include "sigma3/sigmalimit.hpp"

using namespace sigma3;

namespace {

Poly random_poly(const VarTablePtr& vars, TrialRng& rng, int max_terms, int max_exp) {
  Poly p(vars);
  int n = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_terms)));
  for (int t = 0; t < n; ++t) {
    Monomial m(vars->size(), 0);
    for (auto& e : m) e = static_cast<int>(rng.below(static_cast<uint64_t>(max_exp + 1)));
    long num = static_cast<long>(rng.below(19)) - 9;
    long den = static_cast<long>(rng.below(4)) + 1;
    p.add_term(m, Scalar(Rational(num, den)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring identities on fixed polynomials") {
  const auto& uv = u_universe();
  Poly u2 = Poly::variable(uv, "u2");
  Poly u4 = Poly::variable(uv, "u4");
  CHECK((u2 + u4) * (u2 - u4) == u2 * u2 - u4 * u4);

  const auto& xv = x_universe();
  Poly d = parse_poly("X1 - X2", xv);
  CHECK(d * d == parse_poly("X1^2 - 2*X1*X2 + X2^2", xv));
}

TEST_CASE("randomized ring laws") {
  TrialRng rng(2024, 0);
  const auto& uv = u_universe();
  for (int i = 0; i < 25; ++i) {
    Poly a = random_poly(uv, rng, 5, 3);
    Poly b = random_poly(uv, rng, 5, 3);
    Poly c = random_poly(uv, rng, 5, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("universe mismatch is an error") {
  Poly a = Poly::variable(u_universe(), "u2");
  Poly b = Poly::variable(x_universe(), "X1");
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("weighted degree") {
  const SigmaSW& s = sigma_sw();
  auto h = s.sigma.weighted_degree();
  CHECK(h.homogeneous);
  CHECK(h.degree == -6);

  auto [H12, H14] = build_H();
  auto h12 = H12.weighted_degree();
  CHECK(h12.homogeneous);
  CHECK(h12.degree == 12);
  auto h14 = H14.weighted_degree();
  CHECK(h14.homogeneous);
  CHECK(h14.degree == 14);

  Poly mix = parse_poly("u2 + u4", u_universe());
  CHECK(!mix.weighted_degree().homogeneous);
  CHECK_THROWS_AS(Poly(u_universe()).weighted_degree(), std::domain_error);
}

TEST_CASE("weighted degree is additive on random homogeneous polynomials") {
  TrialRng rng(99, 1);
  const auto& uv = u_universe();
  auto random_homog = [&](long target) {
    // build monomials in u2, u4 with u2-weight 2 and u4-weight 4
    Poly p(uv);
    for (int tries = 0; tries < 20 && p.term_count() < 3; ++tries) {
      long a = static_cast<long>(rng.below(static_cast<uint64_t>(target / 2 + 1)));
      long rem = target - 2 * a;
      if (rem < 0 || rem % 4 != 0) continue;
      Monomial m(uv->size(), 0);
      m[0] = static_cast<int>(a);
      m[1] = static_cast<int>(rem / 4);
      p.add_term(m, Scalar(Rational(static_cast<long>(rng.below(9)) + 1)));
    }
    return p;
  };
  for (int i = 0; i < 10; ++i) {
    Poly p = random_homog(8);
    Poly q = random_homog(12);
    if (p.is_zero() || q.is_zero()) continue;
    auto hp = p.weighted_degree();
    auto hq = q.weighted_degree();
    auto hpq = (p * q).weighted_degree();
    REQUIRE(hp.homogeneous);
    REQUIRE(hq.homogeneous);
    CHECK(hpq.homogeneous);
    CHECK(hpq.degree == hp.degree + hq.degree);
  }
}

TEST_CASE("substitution: numeric evaluation of the displayed generators") {
  auto [H12, H14] = build_H();
  std::map<std::string, std::complex<double>> zeros;
  for (const char* v : {"u2", "u4", "u5", "u7", "y4", "y6", "y8", "y10", "y12", "y14"})
    zeros[v] = 0.0;
  CHECK(std::abs(H12.eval_complex(zeros)) == 0.0);
  auto one_u2 = zeros;
  one_u2["u2"] = 1.0;
  CHECK(H12.eval_complex(one_u2).real() == doctest::Approx(-7.0));

  const SigmaSW& s = sigma_sw();
  std::map<std::string, std::complex<double>> w = {{"w1", 0.0}, {"w3", 0.0}, {"w5", 1.0}};
  CHECK(std::abs(s.sigma.eval_complex(w)) == 0.0);
}

TEST_CASE("exact scalar evaluation") {
  auto [H12, H14] = build_H();
  std::map<std::string, Scalar> bind;
  for (const char* v : {"u2", "u4", "u5", "u7", "y4", "y6", "y8", "y10", "y14"})
    bind[v] = Scalar(Rational(0));
  bind["y12"] = Scalar(Rational(3));
  CHECK(H12.eval_scalar(bind) == Scalar(Rational(-3)));  // only the -y12 term survives
  bind["y12"] = Scalar(Rational(0));
  bind["u2"] = Scalar(Rational(1, 2));
  // -7 u2^6 at u2 = 1/2
  CHECK(H12.eval_scalar(bind) == Scalar(Rational(-7, 64)));
}

TEST_CASE("substitute composes polynomials and carries unbound variables") {
  const auto& uv = u_universe();
  Poly f = parse_poly("u2^2 + y4*u5", uv);
  std::map<std::string, Poly> bind = {{"u2", parse_poly("u4 + 1", uv)},
                                      {"u5", parse_poly("u7^2", uv)}};
  Poly g = substitute(f, uv, bind);
  CHECK(g == parse_poly("u4^2 + 2*u4 + 1 + y4*u7^2", uv));
  // unbound variable not in target: error
  std::map<std::string, Poly> none;
  CHECK_THROWS_AS(substitute(parse_poly("u2", uv), w_universe(), none), std::invalid_argument);
}

TEST_CASE("derivative") {
  const auto& wv = w_universe();
  Poly s = parse_poly("w1*w5 - w3^2 - 1/3*w1^3*w3 + 1/45*w1^6", wv);
  CHECK(s.derivative("w1") == parse_poly("w5 - w1^2*w3 + 2/15*w1^5", wv));
  CHECK(s.derivative("w3") == parse_poly("-2*w3 - 1/3*w1^3", wv));
  CHECK(s.derivative("w5") == parse_poly("w1", wv));
}

TEST_CASE("division by a variable difference") {
  const auto& xv = x_universe();
  auto q = divide_by_var_difference(parse_poly("X1^2 - X2^2", xv), "X1", "X2");
  REQUIRE(q.has_value());
  CHECK(*q == parse_poly("X1 + X2", xv));
  auto no = divide_by_var_difference(parse_poly("X1^2 + X2^2", xv), "X1", "X2");
  CHECK(!no.has_value());
  // Q(X1) - Q(X2) is always divisible
  auto qq = divide_by_var_difference(curve_Q(1) - curve_Q(2), "X1", "X2");
  CHECK(qq.has_value());
}

TEST_CASE("expression parser round trips on canonical prints") {
  TrialRng rng(5150, 2);
  const auto& uv = u_universe();
  for (int i = 0; i < 40; ++i) {
    Poly p = random_poly(uv, rng, 6, 4);
    if (p.is_zero()) continue;
    Poly q = parse_poly(p.str(), uv);
    CHECK(p == q);
  }
  CHECK(Poly(uv).str() == "0");
  CHECK(parse_poly("0", uv).is_zero());
}

TEST_CASE("parser grammar corners") {
  const auto& uv = u_universe();
  CHECK(parse_poly("-u2^2*u4 + 1/3", uv) ==
        parse_poly("1/3", uv) - parse_poly("u2*u2*u4", uv));
  CHECK(parse_poly("2*(u2 + u4)^2", uv) == parse_poly("2*u2^2 + 4*u2*u4 + 2*u4^2", uv));
  CHECK(parse_poly("-(u2 - u4)", uv) == parse_poly("u4 - u2", uv));
  // positioned errors, not crashes
  CHECK_THROWS_AS(parse_poly("u2 +", uv), ParseError);
  CHECK_THROWS_AS(parse_poly("(u2", uv), ParseError);
  CHECK_THROWS_AS(parse_poly("u2 ** u4", uv), ParseError);
  CHECK_THROWS_AS(parse_poly("bogus + 1", uv), ParseError);
  CHECK_THROWS_AS(parse_poly("u2 / u4", uv), ParseError);
  CHECK_THROWS_AS(parse_poly("", uv), ParseError);
  try {
    parse_poly("u2 + bogus", uv);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("parser fuzz: well-formed inputs never crash") {
  TrialRng rng(31337, 4);
  const auto& uv = u_universe();
  const char* atoms[] = {"u2", "u4", "u5", "u7", "1", "2", "1/3", "45"};
  for (int i = 0; i < 200; ++i) {
    std::string e = atoms[rng.below(8)];
    int n = static_cast<int>(rng.below(6));
    for (int k = 0; k < n; ++k) {
      const char* op = (rng.below(3) == 0) ? " + " : (rng.below(2) == 0 ? " - " : "*");
      e = "(" + e + op + atoms[rng.below(8)] + ")";
    }
    if (rng.coin()) e += "^2";
    Poly p = parse_poly(e, uv);
    Poly q = parse_poly(p.str(), uv);
    CHECK(p == q);
  }
}

TEST_CASE("canonical print order: graded by weight, ties by exponents") {
  const auto& uv = u_universe();
  CHECK(parse_poly("u4*u5^2 + u7^2", uv).str() == "u7^2 + u4*u5^2");
  CHECK(parse_poly("u2 + u2", uv).str() == "2*u2");
  CHECK(parse_poly("u7^2 - u4*u5^2 - u7^2", uv).str() == "-u4*u5^2");
}
