#pragma once

// Truncated bivariate power series in (t, tau) over Scalar, all operations
// consistent with truncation at total order i + j <= N.

#include <map>
#include <string>
#include <utility>

#include "sigma3/poly.hpp"

namespace sigma3 {

class Series2 {
 public:
  explicit Series2(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("Series2: negative order");
  }
  static Series2 constant(int order, Scalar c);
  static Series2 var_t(int order);    // the series t
  static Series2 var_tau(int order);  // the series tau

  int order() const { return order_; }
  const std::map<std::pair<int, int>, Scalar>& coefficients() const { return c_; }
  Scalar coeff(int i, int j) const;
  void set_coeff(int i, int j, Scalar c);
  bool is_zero() const { return c_.empty(); }

  Series2 operator-() const;
  Series2 operator+(const Series2& o) const;
  Series2 operator-(const Series2& o) const;
  Series2 operator*(const Series2& o) const;
  Series2 operator*(const Scalar& s) const;
  Series2 pow(unsigned k) const;
  bool operator==(const Series2& o) const;

  Series2 truncated(int new_order) const;
  // requires an invertible constant term
  Series2 reciprocal() const;
  // d/dt and d/dtau; the result is reliable only to order N-1 and is
  // truncated accordingly
  Series2 derivative_t() const;
  Series2 derivative_tau() const;
  // restriction tau = 0 (resp. t = 0), same order
  Series2 slice_tau0() const;
  Series2 slice_t0() const;

  std::string str() const;

 private:
  int order_;
  std::map<std::pair<int, int>, Scalar> c_;  // only i + j <= order_, no zeros
};

inline Series2 operator*(const Scalar& s, const Series2& a) { return a * s; }

// Evaluate a polynomial at series values; every variable must be bound.
// The result order is the minimum order among the bindings.
Series2 substitute_series(const Poly& p, const std::map<std::string, Series2>& bindings);

// Solve F(x, others) = 0 for x as a power series with constant term `seed`,
// where F is a polynomial with `unknown` distinguished and all remaining
// variables bound to series. Requirements: F(seed) has zero constant term
// and dF/dx(seed) has an invertible constant term. Newton iteration doubles
// the verified order each step; the result satisfies F(x) == 0 through the
// requested total order (checked, throws std::logic_error otherwise).
Series2 series_newton_root(const Poly& F, const std::string& unknown,
                           const std::map<std::string, Series2>& bindings, const Scalar& seed,
                           int order);

}  // namespace sigma3
