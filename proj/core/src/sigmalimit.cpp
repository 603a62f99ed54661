#include "sigma3/sigmalimit.hpp"

#include <cmath>
#include <stdexcept>

#include "sigma3/expr.hpp"

namespace sigma3 {

const VarTablePtr& w_universe() {
  static VarTablePtr t = VarTable::make({{"w1", -1}, {"w3", -3}, {"w5", -5}});
  return t;
}

const VarTablePtr& phi_universe() {
  static VarTablePtr t = VarTable::make({{"phi", -1}, {"w3", -3}, {"w5", -5}});
  return t;
}

const SigmaSW& sigma_sw() {
  static SigmaSW s = [] {
    SigmaSW sw;
    sw.sigma = parse_poly("w1*w5 - w3^2 - 1/3*w1^3*w3 + 1/45*w1^6", w_universe());
    sw.s1 = sw.sigma.derivative("w1");
    sw.s3 = sw.sigma.derivative("w3");
    sw.s5 = sw.sigma.derivative("w5");
    sw.s11 = sw.s1.derivative("w1");
    sw.s13 = sw.s1.derivative("w3");
    sw.s15 = sw.s1.derivative("w5");
    sw.s33 = sw.s3.derivative("w3");
    sw.s35 = sw.s3.derivative("w5");
    return sw;
  }();
  return s;
}

// ---------------- rational functions ----------------

RatFun3 RatFun3::from_poly(const Poly& p) {
  return {p, Poly::constant(p.vars(), Scalar(Rational(1)))};
}

bool RatFun3::equals(const RatFun3& o) const { return (num * o.den) == (o.num * den); }

RatFun3 RatFun3::operator+(const RatFun3& o) const {
  return {num * o.den + o.num * den, den * o.den};
}

RatFun3 RatFun3::operator-(const RatFun3& o) const {
  return {num * o.den - o.num * den, den * o.den};
}

RatFun3 RatFun3::operator*(const RatFun3& o) const { return {num * o.num, den * o.den}; }

RatFun3 RatFun3::operator-() const { return {-num, den}; }

RatFun3 RatFun3::operator*(const Scalar& c) const { return {num * c, den}; }

RatFun3 RatFun3::derivative(std::string_view var) const {
  return {num.derivative(var) * den - num * den.derivative(var), den * den};
}

Scalar RatFun3::eval_scalar(const std::map<std::string, Scalar>& bind) const {
  return num.eval_scalar(bind) / den.eval_scalar(bind);
}

Series2 RatFun3::eval_series(const std::map<std::string, Series2>& bind) const {
  return substitute_series(num, bind) * substitute_series(den, bind).reciprocal();
}

std::complex<double> RatFun3::eval_complex(
    const std::map<std::string, std::complex<double>>& bind) const {
  return num.eval_complex(bind) / den.eval_complex(bind);
}

std::array<RatFun3, 7> f_ratios() {
  const SigmaSW& s = sigma_sw();
  auto ratio = [&](const Poly& n) { return RatFun3{n, s.s1}; };
  return {ratio(s.s11), ratio(s.s3), ratio(s.s13), ratio(s.s5),
          ratio(s.s33), ratio(s.s15), ratio(s.s35)};
}

std::array<RatFun3, 4> F_defs() {
  auto f = f_ratios();
  const RatFun3& f1 = f[0];
  const RatFun3& f2 = f[1];
  const RatFun3& f3 = f[2];
  const RatFun3& f4 = f[3];
  const RatFun3& f5 = f[4];
  const RatFun3& g5 = f[5];
  const RatFun3& f7 = f[6];
  Scalar half{Rational(1, 2)};
  Scalar quarter{Rational(1, 4)};
  RatFun3 F2 = -(f2 * half);
  RatFun3 F4 = f2 * f2 * quarter - f4;
  RatFun3 F5 = (f1 * f2 * f2 + f5 - f2 * f3 * Scalar(Rational(2))) * half;
  RatFun3 F7 = (f2 * f2 * f3 * Scalar(Rational(2)) - f3 * f4 * Scalar(Rational(2)) -
                f1 * f2 * f2 * f2 + f1 * f2 * f4 * Scalar(Rational(2)) - f2 * f5 +
                f7 * Scalar(Rational(2)) - f2 * g5 * Scalar(Rational(2))) *
               quarter;
  return {F2, F4, F5, F7};
}

// ---------------- closed forms ----------------

const ClosedForms& closed_forms() {
  static ClosedForms cf = [] {
    const auto& pv = phi_universe();
    ClosedForms c;
    c.prefactor = {Rational(5), Rational(15), Rational(1), Rational(15, 2)};
    c.num = {
        parse_poly("phi^3 + 6*w3", pv),
        parse_poly("-phi^3*w3 + 15*phi*w5 - 15*w3^2", pv),
        parse_poly("8*phi^5*w5 + 63*phi^4*w3^2 - 195*phi^2*w3*w5 + 135*phi*w3^3 - 15*w5^2", pv),
        parse_poly("15*phi^5*w3*w5 - 18*phi^4*w3^3 - 25*phi^3*w5^2 + 45*phi^2*w3^2*w5"
                   " - 27*phi*w3^4",
                   pv),
    };
    c.K = {
        parse_poly("2*(2*phi^5 - 15*phi^2*w3 + 15*w5)", pv),
        parse_poly("4*(-8*phi^5*w5 + 27*phi^4*w3^2 - 30*phi^2*w3*w5 + 15*w5^2)", pv),
        parse_poly("3*(14*phi^5*w5^2 - 111*phi^4*w3^2*w5 + 189*phi^3*w3^4 + 165*phi^2*w3*w5^2"
                   " - 585*phi*w3^3*w5 + 405*w3^5 + 5*w5^3)",
                   pv),
        parse_poly("729*phi^5*w3^5 - 208*phi^5*w5^3 + 3042*phi^4*w3^2*w5^2 - 11583*phi^3*w3^4*w5"
                   " + 2187*phi^2*w3^6 - 4380*phi^2*w3*w5^3 + 28620*phi*w3^3*w5^2"
                   " - 24300*w3^5*w5 + 15*w5^4",
                   pv),
    };
    return c;
  }();
  return cf;
}

std::array<Series2, 4> F_closed_series(const Series2& phi, const Series2& w3, const Series2& w5) {
  const ClosedForms& cf = closed_forms();
  std::map<std::string, Series2> bind = {{"phi", phi}, {"w3", w3}, {"w5", w5}};
  std::array<Series2, 4> out{Series2(phi.order()), Series2(phi.order()), Series2(phi.order()),
                             Series2(phi.order())};
  for (size_t i = 0; i < 4; ++i) {
    Series2 K = substitute_series(cf.K[i], bind);
    if (K.coeff(0, 0).is_zero())
      throw std::domain_error("F_closed_series: K" + std::to_string(i) +
                              " has a vanishing constant term at this seed");
    out[i] = substitute_series(cf.num[i], bind) * K.reciprocal() * Scalar(cf.prefactor[i]);
  }
  return out;
}

std::array<Scalar, 4> F_closed_scalar(const Scalar& phi, const Scalar& w3, const Scalar& w5) {
  const ClosedForms& cf = closed_forms();
  std::map<std::string, Scalar> bind = {{"phi", phi}, {"w3", w3}, {"w5", w5}};
  std::array<Scalar, 4> out;
  for (size_t i = 0; i < 4; ++i) {
    Scalar K = cf.K[i].eval_scalar(bind);
    if (K.is_zero())
      throw std::domain_error("F_closed_scalar: K" + std::to_string(i) + " vanishes at this point");
    out[i] = Scalar(cf.prefactor[i]) * cf.num[i].eval_scalar(bind) / K;
  }
  return out;
}

// ---------------- seeds ----------------

namespace {

int real_root_index(const std::vector<std::complex<double>>& roots, bool want_positive) {
  int found = -1;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (std::abs(roots[i].imag()) > 1e-9) continue;
    if (want_positive && roots[i].real() <= 0.0) continue;
    if (found >= 0 && !want_positive)
      throw std::logic_error("real_root_index: ambiguous real root");
    found = static_cast<int>(i);
    if (want_positive) break;
  }
  if (found < 0) throw std::logic_error("real_root_index: no real root found");
  return found;
}

}  // namespace

FieldPtr p_field() {
  static FieldPtr f = [] {
    // p^5 + 45 = 0, unique real root -45^{1/5}
    std::vector<Rational> m = {Rational(45), Rational(0), Rational(0),
                               Rational(0),  Rational(0), Rational(1)};
    auto roots = polynomial_roots(m);
    return NumberField::make("p", m, real_root_index(roots, false));
  }();
  return f;
}

FieldPtr q_field() {
  static FieldPtr f = [] {
    // q^6 - 15 q^3 - 45 = 0, embedded at the positive real root
    // (q^3 = (15 + sqrt(405))/2)
    std::vector<Rational> m = {Rational(-45), Rational(0), Rational(0), Rational(-15),
                               Rational(0),   Rational(0), Rational(1)};
    auto roots = polynomial_roots(m);
    return NumberField::make("q", m, real_root_index(roots, true));
  }();
  return f;
}

SeedSpec make_seed(SeedKind kind) {
  switch (kind) {
    case SeedKind::p_zero:
      return {kind, nullptr, Scalar(Rational(0))};
    case SeedKind::p_root5:
      return {kind, p_field(), Scalar(alg_generator(p_field()))};
    case SeedKind::q_root:
      return {kind, q_field(), Scalar(alg_generator(q_field()))};
  }
  throw std::logic_error("make_seed: bad kind");
}

Series2 solve_phi(const SeedSpec& seed, int order) {
  if (seed.kind == SeedKind::q_root)
    throw std::invalid_argument("solve_phi: the q seed parameterizes by a path, not by (t, tau)");
  std::map<std::string, Series2> bind = {
      {"w3", Series2::var_t(order)},
      {"w5", Series2::constant(order, Scalar(Rational(1))) + Series2::var_tau(order)}};
  return series_newton_root(sigma_sw().sigma, "w1", bind, seed.seed_value, order);
}

std::array<Series2, 4> G_series(const SeedSpec& seed, int order) {
  Series2 phi = solve_phi(seed, order);
  Series2 t = Series2::var_t(order);
  Series2 w5 = Series2::constant(order, Scalar(Rational(1))) + Series2::var_tau(order);
  std::array<Series2, 4> closed = F_closed_series(phi, t, w5);
  // independent route: compose the defining rational functions
  std::map<std::string, Series2> bind = {{"w1", phi}, {"w3", t}, {"w5", w5}};
  auto defs = F_defs();
  for (size_t i = 0; i < 4; ++i) {
    Series2 direct = defs[i].eval_series(bind);
    if (!(direct == closed[i]))
      throw std::logic_error("G_series: closed-form route disagrees with the defining route for G" +
                             std::to_string(i));
  }
  return closed;
}

SeriesResidualReport verify_series_solution(const SeedSpec& seed, int order) {
  if (order < 1) throw std::invalid_argument("verify_series_solution: order must be >= 1");
  auto G = G_series(seed, order);
  VectorField v1 = make_system(SystemId::I);
  VectorField v2 = make_system(SystemId::II);
  std::map<std::string, Series2> bind = {
      {"G2", G[0]},  {"G4", G[1]},  {"G5", G[2]},  {"G7", G[3]},
      {"y4", Series2(order)}, {"y6", Series2(order)}, {"y8", Series2(order)},
      {"y10", Series2(order)}};
  SeriesResidualReport rep{{Series2(0), Series2(0), Series2(0), Series2(0)},
                           {Series2(0), Series2(0), Series2(0), Series2(0)}};
  for (size_t i = 0; i < 4; ++i) {
    rep.d_t[i] = G[i].derivative_t() - substitute_series(v1.comp[i], bind).truncated(order - 1);
    rep.d_tau[i] = G[i].derivative_tau() - substitute_series(v2.comp[i], bind).truncated(order - 1);
  }
  return rep;
}

bool SeriesResidualReport::all_zero() const {
  for (const auto& s : d_t)
    if (!s.is_zero()) return false;
  for (const auto& s : d_tau)
    if (!s.is_zero()) return false;
  return true;
}

std::optional<std::string> audit_denominators_3_5(const Series2& s) {
  auto ok_rational = [](const Rational& r) {
    mpz_class d = r.denominator();
    for (int f : {3, 5}) {
      while (d % f == 0) d /= f;
    }
    return d == 1;
  };
  for (const auto& [k, c] : s.coefficients()) {
    bool ok = true;
    if (c.is_rational()) {
      ok = ok_rational(c.rat());
    } else {
      for (const auto& r : c.alg().coords) ok = ok && ok_rational(r);
    }
    if (!ok)
      return "coefficient of t^" + std::to_string(k.first) + " tau^" + std::to_string(k.second) +
             " = " + c.str();
  }
  return std::nullopt;
}

Series2 binomial_series(const Rational& alpha, int order) {
  // (1+t)^alpha via c_{n+1} = c_n (alpha - n) / (n + 1), the recurrence of
  // the defining relation (1+t) y' = alpha y
  Series2 s(order);
  Rational c(1);
  s.set_coeff(0, 0, Scalar(c));
  for (int n = 0; n < order; ++n) {
    c = c * (alpha - Rational(n)) / Rational(n + 1);
    s.set_coeff(n + 1, 0, Scalar(c));
  }
  return s;
}

// ---------------- L_{k,l} operators ----------------

namespace {

const Poly& sigma_partial(int k) {
  const SigmaSW& s = sigma_sw();
  switch (k) {
    case 1: return s.s1;
    case 3: return s.s3;
    case 5: return s.s5;
  }
  throw std::invalid_argument("sigma_partial: index must be 1, 3 or 5");
}

int w_slot(int k) { return k == 1 ? 0 : (k == 3 ? 1 : 2); }

// apply a field (RatFun3 coefficients) to a rational function
RatFun3 apply_field(const LklField& f, const RatFun3& g) {
  static const std::array<const char*, 3> names{"w1", "w3", "w5"};
  RatFun3 acc = RatFun3::from_poly(Poly(w_universe()));
  for (size_t i = 0; i < 3; ++i) {
    if (f.coef[i].is_zero()) continue;
    acc = acc + f.coef[i] * g.derivative(names[i]);
  }
  return acc;
}

}  // namespace

LklField make_Lkl(int k, int l) {
  if (k == l || (k != 1 && k != 3 && k != 5) || (l != 1 && l != 3 && l != 5))
    throw std::invalid_argument("make_Lkl: indices must be distinct members of {1,3,5}");
  LklField f;
  f.k = k;
  f.l = l;
  Poly one = Poly::constant(w_universe(), Scalar(Rational(1)));
  for (auto& c : f.coef) c = RatFun3::from_poly(Poly(w_universe()));
  f.coef[static_cast<size_t>(w_slot(k))] = RatFun3::from_poly(one);
  f.coef[static_cast<size_t>(w_slot(l))] = RatFun3{-sigma_partial(k), sigma_partial(l)};
  return f;
}

BracketReport bracket_Lkl(const LklField& a, const LklField& b) {
  BracketReport rep;
  rep.name = "[L" + std::to_string(a.k) + std::to_string(a.l) + ",L" + std::to_string(b.k) +
             std::to_string(b.l) + "]";
  for (size_t i = 0; i < 3; ++i)
    rep.components[i] = apply_field(a, b.coef[i]) - apply_field(b, a.coef[i]);
  return rep;
}

std::array<BracketReport, 3> check_Lkl_commutators() {
  return {bracket_Lkl(make_Lkl(1, 3), make_Lkl(5, 3)),
          bracket_Lkl(make_Lkl(1, 5), make_Lkl(3, 5)),
          bracket_Lkl(make_Lkl(3, 1), make_Lkl(5, 1))};
}

BracketReport extra_bracket_L13_L15() { return bracket_Lkl(make_Lkl(1, 3), make_Lkl(1, 5)); }

// ---------------- the q-root path ----------------

std::array<Series2, 4> example3_path_series(int order) {
  auto f = q_field();
  Scalar q{alg_generator(f)};
  Series2 cube_root = binomial_series(Rational(1, 3), order);  // (1+t)^{1/3}
  Series2 w1 = cube_root * q;
  Series2 w3 = Series2::constant(order, Scalar(Rational(1))) + Series2::var_t(order);
  Series2 w5(order);  // zero
  std::map<std::string, Series2> bind = {{"w1", w1}, {"w3", w3}, {"w5", w5}};
  auto defs = F_defs();
  std::array<Series2, 4> out{Series2(order), Series2(order), Series2(order), Series2(order)};
  for (size_t i = 0; i < 4; ++i) out[i] = defs[i].eval_series(bind);
  return out;
}

std::array<Scalar, 4> example3_t0_displayed() {
  auto f = q_field();
  Scalar q{alg_generator(f)};
  Scalar q2 = q.pow(2), q3 = q.pow(3);
  Scalar F2 = q * Scalar(Rational(1, 6));
  Scalar F4 = -(q2 * (q3 + Scalar(Rational(15)))) / (Scalar(Rational(108)) * (q3 + Scalar(Rational(3))));
  Scalar F5 = q / (Scalar(Rational(9)) * (Scalar(Rational(8)) * q3 + Scalar(Rational(21))));
  Scalar F7 = -(q2 * (Scalar(Rational(287)) * q3 + Scalar(Rational(750)))) /
              (Scalar(Rational(1458)) * (Scalar(Rational(7)) * q3 + Scalar(Rational(18))));
  return {F2, F4, F5, F7};
}

std::array<Scalar, 4> example3_t0_derived() {
  auto f = q_field();
  Scalar q{alg_generator(f)};
  Scalar q2 = q.pow(2), q3 = q.pow(3);
  Scalar F2 = q * Scalar(Rational(1, 6));
  Scalar F4 = -(q2 * (q3 + Scalar(Rational(15)))) / (Scalar(Rational(108)) * (q3 + Scalar(Rational(3))));
  // forced by the system itself: dG2/dt = -G5 and dG4/dt = -2 G7 along the
  // pure-power solution
  Scalar F5 = q * Scalar(Rational(1, 9));
  Scalar F7 = -(q2 * (q3 + Scalar(Rational(15)))) / (Scalar(Rational(162)) * (q3 + Scalar(Rational(3))));
  return {F2, F4, F5, F7};
}

Example2Slice example2_slice() {
  auto f = p_field();
  Scalar p{alg_generator(f)};
  Scalar p3 = p.pow(3);
  Example2Slice s;
  s.coef = {p3 * Scalar(Rational(-1, 30)), p * Scalar(Rational(3, 20)), Scalar(Rational(1, 5)),
            p3 * Scalar(Rational(-1, 50))};
  s.expo = {Rational(-2, 5), Rational(-4, 5), Rational(-1), Rational(-7, 5)};
  return s;
}

}  // namespace sigma3
