#pragma once

// Sparse multivariate polynomials over Scalar with per-variable signed
// grading weights. Canonical form: no zero coefficients, exponent vectors
// sized to the variable table. Values are immutable once built.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigma3/scalar.hpp"

namespace sigma3 {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;
using Monomial = std::vector<int32_t>;

class VarTable {
 public:
  static VarTablePtr make(std::vector<std::pair<std::string, int>> vars);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  int weight(size_t i) const { return weights_[i]; }
  // -1 when absent
  int index_of(std::string_view name) const;
  bool same_as(const VarTable& o) const {
    return this == &o || (names_ == o.names_ && weights_ == o.weights_);
  }

 private:
  VarTable() = default;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

class Poly {
 public:
  Poly() = default;  // usable only as a placeholder
  explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarTablePtr vars, Scalar c);
  static Poly variable(const VarTablePtr& vars, std::string_view name, int exp = 1);
  static Poly monomial(VarTablePtr vars, Monomial m, Scalar c);

  const VarTablePtr& vars() const { return vars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  Scalar coeff(const Monomial& m) const;
  Scalar constant_term() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& c) const;
  Poly pow(unsigned k) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(std::string_view var) const;

  struct Homogeneity {
    bool homogeneous = false;
    long degree = 0;
  };
  // throws std::domain_error on the zero polynomial
  Homogeneity weighted_degree() const;

  // exact evaluation; every variable must be bound
  Scalar eval_scalar(const std::map<std::string, Scalar>& bindings) const;
  // IEEE double-complex evaluation; every variable must be bound
  std::complex<double> eval_complex(const std::map<std::string, std::complex<double>>& bindings) const;

  // canonical text in the CLI expression grammar: terms ordered by
  // descending weighted degree, ties by ascending exponent vector
  std::string str() const;

  // builder-side access (keeps canonical form)
  void add_term(const Monomial& m, const Scalar& c);

 private:
  void check_universe(const Poly& o) const;
  VarTablePtr vars_;
  std::map<Monomial, Scalar> terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

// Composition: every variable of p is either bound to a polynomial over
// `target` or carried through (the name must then exist in `target`).
Poly substitute(const Poly& p, const VarTablePtr& target,
                const std::map<std::string, Poly>& bindings);

// Rename variables (a special case of substitute): mapping by name.
Poly rename_vars(const Poly& p, const VarTablePtr& target,
                 const std::map<std::string, std::string>& mapping);

// Exact division by (x_i - x_j); nullopt when not divisible.
std::optional<Poly> divide_by_var_difference(const Poly& p, std::string_view xi,
                                             std::string_view xj);

}  // namespace sigma3
