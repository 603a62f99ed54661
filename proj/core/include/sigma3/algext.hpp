#pragma once

// Simple algebraic extensions Q[a]/(m(a)) with m monic and irreducible,
// plus a fixed numeric embedding used when elements are evaluated as
// complex doubles. Elements are coordinate vectors on 1, a, ..., a^(d-1).

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "sigma3/rational.hpp"

namespace sigma3 {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  // monic_coeffs is c0..cd with cd == 1; embedding_root_index selects one of
  // the d complex roots of m after sorting them by (real, imaginary).
  static FieldPtr make(std::string generator_name, std::vector<Rational> monic_coeffs,
                       int embedding_root_index);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::string& gen_name() const { return gen_name_; }
  const std::vector<Rational>& min_poly() const { return min_poly_; }
  std::complex<double> embedded_root() const { return root_; }
  const std::vector<std::complex<double>>& all_roots() const { return roots_; }
  int embedding_index() const { return root_index_; }

  bool same_as(const NumberField& o) const;

 private:
  NumberField() = default;
  std::string gen_name_;
  std::vector<Rational> min_poly_;
  std::vector<std::complex<double>> roots_;  // sorted by (re, im)
  std::complex<double> root_{};
  int root_index_ = 0;
};

struct AlgElem {
  FieldPtr field;
  std::vector<Rational> coords;  // size == field->degree()

  bool is_zero() const;
  bool operator==(const AlgElem& o) const;
  std::complex<double> to_complex() const;
  std::string str() const;  // polynomial in the generator, e.g. "(1/3 - 2*p^2)"
};

AlgElem alg_from_rational(const FieldPtr& f, const Rational& r);
AlgElem alg_generator(const FieldPtr& f);  // the class of a itself
AlgElem alg_add(const AlgElem& x, const AlgElem& y);
AlgElem alg_sub(const AlgElem& x, const AlgElem& y);
AlgElem alg_neg(const AlgElem& x);
AlgElem alg_mul(const AlgElem& x, const AlgElem& y);
AlgElem alg_inv(const AlgElem& x);  // extended Euclid; throws on zero

// Roots of a monic rational polynomial to double precision (Durand-Kerner),
// sorted by (real, imaginary). Deterministic starting configuration.
std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& monic_coeffs);
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& monic_coeffs);

}  // namespace sigma3
