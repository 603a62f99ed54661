#pragma once

// The rational limit of the sigma function: the degree -6 polynomial
// sigma = w1 w5 - w3^2 - (1/3) w1^3 w3 + (1/45) w1^6 on C^3, its partials,
// the meromorphic F functions built from them, exact power-series solutions
// of the two dynamical systems seeded on the zero surface, and the tangent
// operators L_{k,l} = d_k - (sigma_k / sigma_l) d_l.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "sigma3/dynsys.hpp"
#include "sigma3/poly.hpp"
#include "sigma3/series.hpp"

namespace sigma3 {

const VarTablePtr& w_universe();    // w1, w3, w5 with weights -1, -3, -5
const VarTablePtr& phi_universe();  // phi, w3, w5 with weights -1, -3, -5

struct SigmaSW {
  Poly sigma;
  Poly s1, s3, s5;          // first partials
  Poly s11, s13, s15, s33, s35;  // second partials
};
const SigmaSW& sigma_sw();

// rational functions on C^3 (no gcd canonicalization; equality by
// cross-multiplication)
struct RatFun3 {
  Poly num, den;

  static RatFun3 from_poly(const Poly& p);
  bool is_zero() const { return num.is_zero(); }
  bool equals(const RatFun3& o) const;

  RatFun3 operator+(const RatFun3& o) const;
  RatFun3 operator-(const RatFun3& o) const;
  RatFun3 operator*(const RatFun3& o) const;
  RatFun3 operator-() const;
  RatFun3 operator*(const Scalar& c) const;
  RatFun3 derivative(std::string_view var) const;

  Scalar eval_scalar(const std::map<std::string, Scalar>& bind) const;
  Series2 eval_series(const std::map<std::string, Series2>& bind) const;
  std::complex<double> eval_complex(const std::map<std::string, std::complex<double>>& bind) const;
};

// f1, f2, f3, f4, f5, g5, f7 = sigma_{11}/sigma_1, sigma_3/sigma_1, ...
std::array<RatFun3, 7> f_ratios();
// F2, F4, F5, F7 as rational functions of (w1, w3, w5)
std::array<RatFun3, 4> F_defs();

// closed forms of the F functions along the surface, as (prefactor,
// numerator, denominator) over (phi, w3, w5); valid modulo the surface
// relation, i.e. for arguments with sigma(phi, w3, w5) = 0
struct ClosedForms {
  std::array<Rational, 4> prefactor;
  std::array<Poly, 4> num;
  std::array<Poly, 4> K;
};
const ClosedForms& closed_forms();

std::array<Series2, 4> F_closed_series(const Series2& phi, const Series2& w3, const Series2& w5);
std::array<Scalar, 4> F_closed_scalar(const Scalar& phi, const Scalar& w3, const Scalar& w5);

// algebraic seeds on the surface
FieldPtr p_field();  // p^5 = -45, embedded at the real root
FieldPtr q_field();  // q^6 = 15 q^3 + 45, embedded at the positive real root

enum class SeedKind { p_zero, p_root5, q_root };
struct SeedSpec {
  SeedKind kind = SeedKind::p_zero;
  FieldPtr field;     // null for p_zero
  Scalar seed_value;  // 0, p, or q
};
SeedSpec make_seed(SeedKind kind);

// series solution of sigma(phi, t, 1 + tau) = 0 with phi(0,0) = seed
// (p_zero and p_root5 kinds only)
Series2 solve_phi(const SeedSpec& seed, int order);

// the four series G_i(t, tau) = F_i(phi, t, 1 + tau), computed through the
// closed forms and cross-checked coefficient-exactly against the
// composition of F_defs with (phi, t, 1 + tau)
std::array<Series2, 4> G_series(const SeedSpec& seed, int order);

struct SeriesResidualReport {
  std::array<Series2, 4> d_t;    // dG_i/dt   - system I RHS(G), y = 0
  std::array<Series2, 4> d_tau;  // dG_i/dtau - system II RHS(G), y = 0
  bool all_zero() const;
};
SeriesResidualReport verify_series_solution(const SeedSpec& seed, int order);

// coefficient-ring audit: every denominator divides a product of powers of
// 3 and 5; returns the first offending coefficient if any
std::optional<std::string> audit_denominators_3_5(const Series2& s);

// (1 + t)^alpha as a univariate series in t, exact rational coefficients
Series2 binomial_series(const Rational& alpha, int order);

// tangent operators for R = sigma_SW, on coordinates (w1, w3, w5)
struct LklField {
  int k = 1, l = 3;
  std::array<RatFun3, 3> coef;  // coefficients of d/dw1, d/dw3, d/dw5
};
LklField make_Lkl(int k, int l);

struct BracketReport {
  std::string name;
  std::array<RatFun3, 3> components;
  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }
};
BracketReport bracket_Lkl(const LklField& a, const LklField& b);
// the three commutators stated for the L operators: [L13,L53], [L15,L35], [L31,L51]
std::array<BracketReport, 3> check_Lkl_commutators();
// a pair outside the stated list, computed and reported only
BracketReport extra_bracket_L13_L15();

// the series of the four F functions along the path (q (1+t)^{1/3}, 1+t, 0),
// univariate in t over Q[q]/(q^6 - 15 q^3 - 45)
std::array<Series2, 4> example3_path_series(int order);
// path value constants at t = 0: as displayed, and as forced by the
// definitions (the two differ in the last two entries)
std::array<Scalar, 4> example3_t0_displayed();
std::array<Scalar, 4> example3_t0_derived();

// Example-2 closed-form slice data: G_i(0, tau) = coef_i * (1+tau)^{expo_i}
struct Example2Slice {
  std::array<Scalar, 4> coef;     // in Q[p]/(p^5 + 45)
  std::array<Rational, 4> expo;   // -2/5, -4/5, -1, -7/5
};
Example2Slice example2_slice();

}  // namespace sigma3
