#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "sigma3/curvering.hpp"
#include "sigma3/expr.hpp"
#include "sigma3/rng.hpp"

using namespace sigma3;

namespace {

QuotElem xy(const std::string& e) { return QuotElem::from_xy_poly(parse_poly(e, xy_universe())); }

Poly random_xy_poly(TrialRng& rng, int max_terms, int xdeg, int ydeg, bool with_y_params) {
  const auto& v = xy_universe();
  Poly p(v);
  int n = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_terms)));
  for (int t = 0; t < n; ++t) {
    Monomial m(v->size(), 0);
    m[0] = static_cast<int>(rng.below(static_cast<uint64_t>(xdeg + 1)));   // X1
    m[1] = static_cast<int>(rng.below(static_cast<uint64_t>(ydeg + 1)));   // Y1
    m[2] = static_cast<int>(rng.below(static_cast<uint64_t>(xdeg + 1)));   // X2
    m[3] = static_cast<int>(rng.below(static_cast<uint64_t>(ydeg + 1)));   // Y2
    if (with_y_params) m[4] = static_cast<int>(rng.below(2));              // y4
    long c = static_cast<long>(rng.below(9)) - 4;
    if (c == 0) c = 1;
    p.add_term(m, Scalar(Rational(c)));
  }
  return p;
}

Poly swap_pair(const Poly& p) {
  const auto& v = p.vars();
  int iX1 = v->index_of("X1"), iY1 = v->index_of("Y1");
  int iX2 = v->index_of("X2"), iY2 = v->index_of("Y2");
  Poly r(v);
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    std::swap(s[static_cast<size_t>(iX1)], s[static_cast<size_t>(iX2)]);
    std::swap(s[static_cast<size_t>(iY1)], s[static_cast<size_t>(iY2)]);
    r.add_term(s, c);
  }
  return r;
}

QuotElem random_quot(TrialRng& rng) {
  const auto& xv = x_universe();
  auto rand_x = [&]() {
    Poly p(xv);
    int n = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < n; ++t) {
      Monomial m(xv->size(), 0);
      m[0] = static_cast<int>(rng.below(3));
      m[1] = static_cast<int>(rng.below(3));
      long c = static_cast<long>(rng.below(7)) - 3;
      p.add_term(m, Scalar(Rational(c)));
    }
    return p;
  };
  return QuotElem(rand_x(), rand_x(), rand_x(), rand_x(), static_cast<int>(rng.below(2)));
}

}  // namespace

TEST_CASE("quotient multiplication reduces the curve relations") {
  // Y1 * Y1 -> Q(X1) on the 1-component
  QuotElem y1 = xy("Y1");
  QuotElem sq = y1 * y1;
  CHECK(sq == QuotElem::from_x_poly(curve_Q(1)));
  CHECK(sq.c10().is_zero());
  CHECK(sq.denom_exp() == 0);

  // u5^2 equals the reduction of (Y1 - Y2)^2 / (X1 - X2)^2
  const UQuad& u = make_uquad();
  QuotElem lhs = u.u5 * u.u5;
  Poly num = parse_poly("(Y1 - Y2)^2", xy_universe());
  QuotElem direct = QuotElem::from_xy_poly(num);
  QuotElem rhs(direct.c00(), direct.c10(), direct.c01(), direct.c11(), 2);
  CHECK(lhs == rhs);

  // Y1 Y2 == u7^2 - u4 u5^2 in the quotient ring
  CHECK(xy("Y1*Y2") == eval_poly_quot(parse_poly("u7^2 - u4*u5^2", u_universe()), u));
  // X1 X2 == u2^2 - u4
  CHECK(xy("X1*X2") == eval_poly_quot(parse_poly("u2^2 - u4", u_universe()), u));
}

TEST_CASE("uquad invariants") {
  const UQuad& u = make_uquad();
  CHECK(u.u2.denom_exp() == 0);
  CHECK(u.u4.denom_exp() == 0);
  CHECK(u.u7.denom_exp() == 0);
  CHECK(u.u5.denom_exp() == 1);
}

TEST_CASE("derivations on generators") {
  QuotElem X1 = xy("X1"), Y1 = xy("Y1"), X2 = xy("X2"), Y2 = xy("Y2");
  CHECK(apply_D(1, X1) == xy("2*Y1"));
  CHECK(apply_D(1, Y1) == QuotElem::from_x_poly(curve_Qprime(1)));
  CHECK(apply_D(1, X2).is_zero());
  CHECK(apply_D(2, Y2) == QuotElem::from_x_poly(curve_Qprime(2)));

  // L3(X1) = -2 Y1 / (X1 - X2)
  Poly zero{x_universe()};
  QuotElem expect{zero, Poly::constant(x_universe(), Scalar(Rational(-2))), zero, zero, 1};
  CHECK(apply_L(3, X1) == expect);

  // L5(Y2) = -X1 Q'(X2) / (X1 - X2), a Y-free element
  QuotElem expect5{-(Poly::variable(x_universe(), "X1") * curve_Qprime(2)), zero, zero, zero, 1};
  CHECK(apply_L(5, Y2) == expect5);

  // L3(u2) = -u5
  const UQuad& u = make_uquad();
  CHECK(apply_L(3, u.u2) == -u.u5);
}

TEST_CASE("derivation laws on random elements") {
  TrialRng rng(404, 0);
  for (int rep = 0; rep < 6; ++rep) {
    QuotElem a = random_quot(rng);
    QuotElem b = random_quot(rng);
    for (int op : {3, 5}) {
      CHECK(apply_L(op, a * b) == apply_L(op, a) * b + a * apply_L(op, b));
    }
    // commuting derivations
    CHECK(apply_L(3, apply_L(5, a)) == apply_L(5, apply_L(3, a)));
  }
  // well-definedness across the relation: d(Y1^2) = d(Q(X1))
  QuotElem y1 = xy("Y1");
  for (int k : {1, 2}) {
    CHECK(apply_D(k, y1 * y1) == apply_D(k, QuotElem::from_x_poly(curve_Q(1))));
  }
}

TEST_CASE("symmetrize on the generating-series base cases") {
  const auto& uv = u_universe();
  CHECK(symmetrize(parse_poly("X1 + X2", xy_universe())) == parse_poly("2*u2", uv));
  CHECK(symmetrize(parse_poly("X1*Y1 + X2*Y2", xy_universe())) ==
        parse_poly("2*(u2*u7 + u4*u5)", uv));
  CHECK(symmetrize(parse_poly("X1*Y2 + X2*Y1", xy_universe())) ==
        parse_poly("2*(u2*u7 - u4*u5)", uv));
  CHECK(symmetrize(parse_poly("X1^2 + X2^2", xy_universe())) == parse_poly("2*(u4 + u2^2)", uv));
  CHECK(symmetrize(parse_poly("Y1*Y2", xy_universe())) == parse_poly("u7^2 - u4*u5^2", uv));
  CHECK(symmetrize(parse_poly("X1^3*X2 + X1*X2^3", xy_universe())) ==
        parse_poly("(u2^2 - u4)*(2*(u4 + u2^2))", uv));
}

TEST_CASE("symmetrize rejects asymmetric input with a witness") {
  CHECK_THROWS_AS(symmetrize(parse_poly("X1*Y1 - X2*Y2", xy_universe())), AsymmetricInputError);
  CHECK_THROWS_AS(symmetrize(parse_poly("X1", xy_universe())), AsymmetricInputError);
}

TEST_CASE("symmetrize round trip on random symmetric polynomials") {
  TrialRng rng(1234, 9);
  const UQuad& u = make_uquad();
  int integer_checked = 0;
  for (int rep = 0; rep < 30; ++rep) {
    Poly g = random_xy_poly(rng, 4, 2, 2, rep % 2 == 0);
    Poly f = g + swap_pair(g);
    Poly s = symmetrize(f);
    // substitution back into the quotient ring reproduces the input
    CHECK(eval_poly_quot(s, u) == QuotElem::from_xy_poly(f));
    // integer inputs produce integer outputs
    bool all_int = true;
    for (const auto& [m, c] : s.terms()) all_int = all_int && c.is_rational() && c.rat().is_integer();
    CHECK(all_int);
    integer_checked++;
  }
  CHECK(integer_checked == 30);
}

TEST_CASE("displayed generators evaluate as printed") {
  auto [H12, H14] = build_H();
  std::map<std::string, Scalar> bind;
  for (const char* v : {"u2", "u4", "u5", "u7", "y4", "y6", "y8", "y10", "y12", "y14"})
    bind[v] = Scalar(Rational(0));
  auto with = [&](const char* var, long val, const Poly& p) {
    auto b = bind;
    b[var] = Scalar(Rational(val));
    return p.eval_scalar(b);
  };
  CHECK(with("y12", 1, H12) == Scalar(Rational(-1)));
  CHECK(with("y14", 1, H14) == Scalar(Rational(-1)));
}

TEST_CASE("xi-map hypersurface identity") {
  const auto& uv = u_universe();
  Poly v4 = parse_poly("4*u4", uv);
  Poly v9 = parse_poly("4*u4*u5", uv);
  Poly v14 = parse_poly("4*u4*u5^2", uv);
  CHECK((v4 * v14 - v9 * v9).is_zero());
}

TEST_CASE("flow identities in the quotient ring") {
  UFlowReport rep = verify_uflow_identities();
  REQUIRE(rep.entries.size() == 8);
  for (const auto& e : rep.entries) {
    INFO(e.name);
    CHECK(e.residual.is_zero());
  }
  // negative control: perturbing one right-hand side must show up
  const UQuad& u = make_uquad();
  QuotElem lhs = apply_L(3, u.u2);
  QuotElem wrong = eval_poly_quot(parse_poly("-u5 + 1", u_universe()), u);
  CHECK(!(lhs - wrong).is_zero());
}

TEST_CASE("numeric u map at exact points") {
  auto u = u_point({1, 0}, {1, 0}, {4, 0}, {128, 0});
  CHECK(u[0].real() == doctest::Approx(2.5));
  CHECK(u[1].real() == doctest::Approx(2.25));
  CHECK(u[2].real() == doctest::Approx(127.0 / 3));
  CHECK(u[3].real() == doctest::Approx(64.5));

  // either branch of Y1 keeps the point on the symmetric square
  auto [H12, H14] = build_H();
  for (double sign : {1.0, -1.0}) {
    auto ub = u_point({1, 0}, {sign, 0}, {4, 0}, {128, 0});
    std::map<std::string, std::complex<double>> bind = {
        {"u2", ub[0]}, {"u4", ub[1]}, {"u5", ub[2]}, {"u7", ub[3]},
        {"y4", 0.0},   {"y6", 0.0},   {"y8", 0.0},   {"y10", 0.0},
        {"y12", 0.0},  {"y14", 0.0}};
    CHECK(std::abs(H12.eval_complex(bind)) < 1e-6);
    CHECK(std::abs(H14.eval_complex(bind)) < 1e-6);
  }
}

TEST_CASE("sampler respects the separation floor and stays on the curve") {
  CurveParams params;
  params.y = {0.3, -0.1, 0.2, 0.05, -0.4, 0.25};
  for (uint64_t i = 0; i < 50; ++i) {
    TrialRng rng(99, i);
    auto s = sample_sym_square(params, rng, 1e-2);
    CHECK(std::abs(s.X1 - s.X2) >= 1e-2);
    CHECK(std::abs(s.Y1 * s.Y1 - params.Q(s.X1)) < 1e-9 * std::max(1.0, std::abs(params.Q(s.X1))));
    CHECK(std::abs(s.Y2 * s.Y2 - params.Q(s.X2)) < 1e-9 * std::max(1.0, std::abs(params.Q(s.X2))));
  }
  // determinism
  TrialRng r1(5, 0), r2(5, 0);
  auto a = sample_sym_square(params, r1);
  auto b = sample_sym_square(params, r2);
  CHECK(a.X1 == b.X1);
  CHECK(a.Y2 == b.Y2);
}

TEST_CASE("ideal membership verdicts") {
  auto [H12, H14] = build_H();
  CurveParams params;
  params.y = {std::complex<double>(0.2, 0.1),  std::complex<double>(-0.3, 0.0),
              std::complex<double>(0.15, -0.2), std::complex<double>(0.4, 0.0),
              std::complex<double>(-0.1, 0.3),  std::complex<double>(0.05, 0.0)};

  auto rep = ideal_T_member(H12, params, 50, 7);
  CHECK(rep.member);
  CHECK(rep.max_residual < 1e-9);
  auto rep14 = ideal_T_member(H14, params, 50, 7);
  CHECK(rep14.member);

  auto off = ideal_T_member(H12 + Poly::constant(u_universe(), Scalar(Rational(1))), params, 50, 7);
  CHECK(!off.member);

  // the ideal is closed under multiplication
  Poly u5 = Poly::variable(u_universe(), "u5");
  Poly u7 = Poly::variable(u_universe(), "u7");
  auto comb = ideal_T_member(u5 * H14 - u7 * H12, params, 50, 7);
  CHECK(comb.member);

  // a generic polynomial is not in the ideal
  auto generic = ideal_T_member(parse_poly("u2^3 + u5 - 2", u_universe()), params, 20, 7);
  CHECK(!generic.member);
}

TEST_CASE("nonsingularity check") {
  CurveParams singular;  // Q = X^7 has a multiple root
  CHECK(!singular.nonsingular());
  CurveParams generic;
  generic.y = {0.3, -0.1, 0.2, 0.05, -0.4, 0.25};
  CHECK(generic.nonsingular());
}
