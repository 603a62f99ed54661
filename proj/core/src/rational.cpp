#include "sigma3/rational.hpp"

namespace sigma3 {

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational::from_string: empty string");
  std::string buf(s);
  mpq_class v;
  if (v.set_str(buf, 10) != 0)
    throw std::invalid_argument("Rational::from_string: bad literal '" + buf + "'");
  if (v.get_den() == 0) throw std::domain_error("Rational::from_string: zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::pow(unsigned k) const {
  mpq_class r(1);
  mpq_class base = v_;
  unsigned e = k;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return Rational(std::move(r));
}

std::string Rational::str() const {
  return v_.get_str();
}

std::string Rational::str_slash() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

}  // namespace sigma3
