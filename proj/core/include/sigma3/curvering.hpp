#pragma once

// Coordinate ring of the curve square modulo the curve relations
// Y_k^2 = Q(X_k), localized at (X1 - X2). Elements are written on the
// basis {1, Y1, Y2, Y1*Y2} with polynomial components in X1, X2 and the
// (symbolic) curve parameters, over a single power of (X1 - X2).
//
// Q(X) = X^7 + y4*X^5 - y6*X^4 + y8*X^3 - y10*X^2 + y12*X - y14.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sigma3/poly.hpp"
#include "sigma3/rng.hpp"

namespace sigma3 {

// shared variable universes (weights: X = 2, Y = 7, u_i = i, y_{2i} = 2i)
const VarTablePtr& xy_universe();  // X1, Y1, X2, Y2, y4..y14
const VarTablePtr& x_universe();   // X1, X2, y4..y14
const VarTablePtr& u_universe();   // u2, u4, u5, u7, y4..y14

// Q(X_k) and Q'(X_k) over x_universe(), k = 1 or 2
const Poly& curve_Q(int k);
const Poly& curve_Qprime(int k);

class QuotElem {
 public:
  QuotElem();  // zero
  // components over x_universe(); meaning (c00 + c10 Y1 + c01 Y2 + c11 Y1Y2) / (X1-X2)^d
  QuotElem(Poly c00, Poly c10, Poly c01, Poly c11, int denom_exp);

  // Y-reduce a polynomial over xy_universe()
  static QuotElem from_xy_poly(const Poly& f);
  static QuotElem from_x_poly(const Poly& f);  // component c00 only
  static QuotElem constant(const Scalar& c);

  const Poly& c00() const { return c_[0]; }
  const Poly& c10() const { return c_[1]; }
  const Poly& c01() const { return c_[2]; }
  const Poly& c11() const { return c_[3]; }
  int denom_exp() const { return denom_; }

  bool is_zero() const;
  bool operator==(const QuotElem& o) const;
  QuotElem operator-() const;
  QuotElem operator+(const QuotElem& o) const;
  QuotElem operator-(const QuotElem& o) const;
  QuotElem operator*(const QuotElem& o) const;
  QuotElem operator*(const Scalar& c) const;
  QuotElem mul_poly(const Poly& xpoly) const;  // multiply by an X-polynomial
  QuotElem mul_y(int k) const;                 // multiply by Y1 (k=1) or Y2 (k=2)

  // raise the denominator exponent by `extra` without normalizing away
  QuotElem shifted_denominator(int extra) const;

  std::string str() const;  // canonical dump used in failure witnesses

 private:
  void normalize();
  std::array<Poly, 4> c_;  // 1, Y1, Y2, Y1Y2 components
  int denom_ = 0;
};

inline QuotElem quot_mul(const QuotElem& a, const QuotElem& b) { return a * b; }

// derivations D_k = 2 Y_k d/dX_k + Q'(X_k) d/dY_k (k = 1, 2)
QuotElem apply_D(int k, const QuotElem& a);
// L3 = (D2 - D1)/(X1 - X2), L5 = (X2 D1 - X1 D2)/(X1 - X2)
QuotElem apply_L(int which, const QuotElem& a);

struct UQuad {
  QuotElem u2, u4, u5, u7;
};
const UQuad& make_uquad();

// evaluate a u-polynomial (u_universe) at the UQuad; y-variables carry through
QuotElem eval_poly_quot(const Poly& upoly, const UQuad& uq);

struct AsymmetricInputError : std::invalid_argument {
  explicit AsymmetricInputError(const std::string& witness)
      : std::invalid_argument("symmetrize: input is not symmetric under the pair swap; witness monomial: " +
                              witness),
        witness_monomial(witness) {}
  std::string witness_monomial;
};

// Rewrite a swap-symmetric polynomial in X1,Y1,X2,Y2 (y-parameters carried
// through) as a polynomial in u2,u4,u5,u7. Throws AsymmetricInputError.
Poly symmetrize(const Poly& f_xy);

// the two ideal generators in u-coordinates, exactly as displayed;
// construction is cross-checked against the defining (X,Y) expressions
std::pair<Poly, Poly> build_H();

// right-hand sides of the eight flow identities L3(u_i), L5(u_i) in
// u-coordinates, order: L3:u2,u4,u5,u7 then L5:u2,u4,u5,u7
const std::array<Poly, 8>& uflow_rhs();

struct UFlowReport {
  struct Entry {
    std::string name;
    QuotElem residual;
  };
  std::vector<Entry> entries;
  bool all_zero() const {
    for (const auto& e : entries)
      if (!e.residual.is_zero()) return false;
    return true;
  }
};
// verifies L*(u_i) == RHS_i in the localized quotient ring, symbolic y
UFlowReport verify_uflow_identities();

// ---- numeric side ----

struct CurveParams {
  // y4, y6, y8, y10, y12, y14
  std::array<std::complex<double>, 6> y{};

  static CurveParams zero() { return {}; }
  std::complex<double> Q(std::complex<double> X) const;
  std::complex<double> Qprime(std::complex<double> X) const;
  // no repeated roots of Q (min pairwise root distance above tol)
  bool nonsingular(double tol = 1e-9) const;
};

struct SymSquareSample {
  std::complex<double> X1, Y1, X2, Y2;
  std::array<std::complex<double>, 4> u;  // u2, u4, u5, u7
};

// draw X uniformly from the complex box [-half, half]^2, rejecting
// |X1 - X2| < sep_floor; Y branches chosen by the rng
SymSquareSample sample_sym_square(const CurveParams& params, TrialRng& rng,
                                  double sep_floor = 1e-2, double box_half = 2.0);

std::array<std::complex<double>, 4> u_point(std::complex<double> X1, std::complex<double> Y1,
                                            std::complex<double> X2, std::complex<double> Y2);

struct MembershipReport {
  bool member = false;
  double max_residual = 0.0;
  int trials = 0;
};

// probabilistic membership test for the ideal generated by H12, H14:
// evaluates f at random symmetric-square points; "member" when every
// relative residual stays below tol
MembershipReport ideal_T_member(const Poly& f_u, const CurveParams& params, int trials,
                                uint64_t seed, double tol = 1e-9);

}  // namespace sigma3
