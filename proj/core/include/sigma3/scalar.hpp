#pragma once

// The coefficient domain used everywhere: either a Rational or an element
// of one algebraic extension. Mixed arithmetic promotes the Rational side
// into the extension; two distinct extensions never mix.

#include <complex>
#include <string>
#include <variant>

#include "sigma3/algext.hpp"
#include "sigma3/rational.hpp"

namespace sigma3 {

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT: implicit by design
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(AlgElem e) : v_(std::move(e)) {}

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rat() const { return std::get<Rational>(v_); }
  const AlgElem& alg() const { return std::get<AlgElem>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  Scalar inv() const;
  Scalar pow(unsigned k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  std::variant<Rational, AlgElem> v_;
};

inline Scalar operator*(const Rational& a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace sigma3
