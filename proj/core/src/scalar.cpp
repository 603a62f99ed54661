#include "sigma3/scalar.hpp"

namespace sigma3 {

namespace {

// promote both operands into a common domain, then apply
template <typename RatOp, typename AlgOp>
Scalar combine(const Scalar& a, const Scalar& b, RatOp rop, AlgOp aop) {
  if (a.is_rational() && b.is_rational()) return Scalar(rop(a.rat(), b.rat()));
  if (!a.is_rational() && !b.is_rational()) return Scalar(aop(a.alg(), b.alg()));
  if (a.is_rational()) {
    AlgElem lifted = alg_from_rational(b.alg().field, a.rat());
    return Scalar(aop(lifted, b.alg()));
  }
  AlgElem lifted = alg_from_rational(a.alg().field, b.rat());
  return Scalar(aop(a.alg(), lifted));
}

}  // namespace

bool Scalar::is_zero() const {
  return is_rational() ? rat().is_zero() : alg().is_zero();
}

bool Scalar::is_one() const {
  if (is_rational()) return rat().is_one();
  const AlgElem& e = alg();
  if (!e.coords[0].is_one()) return false;
  for (size_t i = 1; i < e.coords.size(); ++i)
    if (!e.coords[i].is_zero()) return false;
  return true;
}

Scalar Scalar::operator-() const {
  return is_rational() ? Scalar(-rat()) : Scalar(alg_neg(alg()));
}

Scalar Scalar::operator+(const Scalar& o) const {
  return combine(*this, o,
                 [](const Rational& x, const Rational& y) { return x + y; },
                 [](const AlgElem& x, const AlgElem& y) { return alg_add(x, y); });
}

Scalar Scalar::operator-(const Scalar& o) const {
  return combine(*this, o,
                 [](const Rational& x, const Rational& y) { return x - y; },
                 [](const AlgElem& x, const AlgElem& y) { return alg_sub(x, y); });
}

Scalar Scalar::operator*(const Scalar& o) const {
  return combine(*this, o,
                 [](const Rational& x, const Rational& y) { return x * y; },
                 [](const AlgElem& x, const AlgElem& y) { return alg_mul(x, y); });
}

Scalar Scalar::inv() const {
  return is_rational() ? Scalar(rat().inv()) : Scalar(alg_inv(alg()));
}

Scalar Scalar::pow(unsigned k) const {
  Scalar r(Rational(1));
  Scalar base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return rat() == o.rat();
  return (*this - o).is_zero();
}

std::complex<double> Scalar::to_complex() const {
  return is_rational() ? rat().to_complex() : alg().to_complex();
}

std::string Scalar::str() const {
  return is_rational() ? rat().str() : alg().str();
}

}  // namespace sigma3
