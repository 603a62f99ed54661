#include "sigma3/algext.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigma3 {

namespace {

// dense univariate polynomials over Rational, coefficient order c0..cn
using UPoly = std::vector<Rational>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  utrim(r);
  return r;
}

UPoly uscale(const UPoly& a, const Rational& c) {
  UPoly r = a;
  for (auto& x : r) x = x * c;
  utrim(r);
  return r;
}

// divide a by b, returning (quotient, remainder); exact rational arithmetic,
// so each round cancels the leading term and strictly shrinks the dividend
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("algext: division by zero polynomial");
  UPoly q;
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    utrim(a);
  }
  utrim(q);
  return {q, a};
}

}  // namespace

FieldPtr NumberField::make(std::string generator_name, std::vector<Rational> monic_coeffs,
                           int embedding_root_index) {
  if (monic_coeffs.size() < 2 || !monic_coeffs.back().is_one())
    throw std::invalid_argument("NumberField: minimal polynomial must be monic of degree >= 1");
  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->gen_name_ = std::move(generator_name);
  f->min_poly_ = std::move(monic_coeffs);
  f->roots_ = polynomial_roots(f->min_poly_);
  if (embedding_root_index < 0 || embedding_root_index >= static_cast<int>(f->roots_.size()))
    throw std::invalid_argument("NumberField: embedding root index out of range");
  f->root_index_ = embedding_root_index;
  f->root_ = f->roots_[static_cast<size_t>(embedding_root_index)];
  return f;
}

bool NumberField::same_as(const NumberField& o) const {
  return this == &o ||
         (gen_name_ == o.gen_name_ && min_poly_ == o.min_poly_ && root_index_ == o.root_index_);
}

bool AlgElem::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

bool AlgElem::operator==(const AlgElem& o) const {
  if (!field->same_as(*o.field)) return false;
  return coords == o.coords;
}

std::complex<double> AlgElem::to_complex() const {
  std::complex<double> a = field->embedded_root();
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = coords.size(); i-- > 0;) acc = acc * a + coords[i].to_complex();
  return acc;
}

std::string AlgElem::str() const {
  std::string out = "(";
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    std::string c = coords[i].str();
    if (!first) {
      if (c[0] == '-') {
        out += " - ";
        c = c.substr(1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += c;
    } else {
      if (c == "1")
        ;
      else if (c == "-1")
        out += "-";
      else
        out += c + "*";
      out += field->gen_name();
      if (i > 1) out += "^" + std::to_string(i);
    }
    first = false;
  }
  if (first) out += "0";
  out += ")";
  return out;
}

AlgElem alg_from_rational(const FieldPtr& f, const Rational& r) {
  AlgElem e{f, std::vector<Rational>(static_cast<size_t>(f->degree()))};
  e.coords[0] = r;
  return e;
}

AlgElem alg_generator(const FieldPtr& f) {
  AlgElem e{f, std::vector<Rational>(static_cast<size_t>(f->degree()))};
  if (f->degree() < 2) throw std::invalid_argument("alg_generator: degree-1 field");
  e.coords[1] = Rational(1);
  return e;
}

static void check_same_field(const AlgElem& x, const AlgElem& y) {
  if (!x.field->same_as(*y.field))
    throw std::invalid_argument("AlgElem: mixed extension fields");
}

AlgElem alg_add(const AlgElem& x, const AlgElem& y) {
  check_same_field(x, y);
  AlgElem r = x;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

AlgElem alg_sub(const AlgElem& x, const AlgElem& y) {
  check_same_field(x, y);
  AlgElem r = x;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
  return r;
}

AlgElem alg_neg(const AlgElem& x) {
  AlgElem r = x;
  for (auto& c : r.coords) c = -c;
  return r;
}

AlgElem alg_mul(const AlgElem& x, const AlgElem& y) {
  check_same_field(x, y);
  const int d = x.field->degree();
  std::vector<Rational> prod(static_cast<size_t>(2 * d - 1));
  for (int i = 0; i < d; ++i) {
    if (x.coords[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      prod[static_cast<size_t>(i + j)] += x.coords[static_cast<size_t>(i)] * y.coords[static_cast<size_t>(j)];
  }
  // reduce modulo the minimal polynomial: a^d = -(c0 + ... + c_{d-1} a^{d-1})
  const auto& m = x.field->min_poly();
  for (int k = 2 * d - 2; k >= d; --k) {
    Rational lead = prod[static_cast<size_t>(k)];
    if (lead.is_zero()) continue;
    prod[static_cast<size_t>(k)] = Rational(0);
    for (int i = 0; i < d; ++i)
      prod[static_cast<size_t>(k - d + i)] -= lead * m[static_cast<size_t>(i)];
  }
  prod.resize(static_cast<size_t>(d));
  return AlgElem{x.field, std::move(prod)};
}

AlgElem alg_inv(const AlgElem& x) {
  if (x.is_zero()) throw std::domain_error("AlgElem: inverse of zero");
  const int d = x.field->degree();
  UPoly a = x.coords;
  utrim(a);
  UPoly m = x.field->min_poly();
  // extended Euclid: find s with s*a == gcd (mod m); gcd is a nonzero constant
  UPoly r0 = m, r1 = a;
  UPoly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = udivmod(r0, r1);
    UPoly s2 = usub(s0, umul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw std::domain_error("AlgElem: element not invertible (reducible modulus?)");
  UPoly s = uscale(s0, r0[0].inv());
  auto [q, rem] = udivmod(s, m);
  (void)q;
  rem.resize(static_cast<size_t>(d));
  return AlgElem{x.field, std::move(rem)};
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  if (n <= 0) return {};
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc{0, 0};
    for (size_t i = monic.size(); i-- > 0;) acc = acc * z + monic[i];
    return acc;
  };
  // Durand-Kerner with the usual (0.4 + 0.9i)^k starting points
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  const std::complex<double> g{0.4, 0.9};
  std::complex<double> w{1.0, 0.0};
  for (int i = 0; i < n; ++i) {
    w *= g;
    z[static_cast<size_t>(i)] = w;
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double move = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> num = eval(z[static_cast<size_t>(i)]);
      std::complex<double> den{1.0, 0.0};
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
      std::complex<double> delta = num / den;
      z[static_cast<size_t>(i)] -= delta;
      move = std::max(move, std::abs(delta));
    }
    if (move < 1e-15) break;
  }
  std::sort(z.begin(), z.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& monic_coeffs) {
  std::vector<std::complex<double>> c(monic_coeffs.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = monic_coeffs[i].to_complex();
  return polynomial_roots(c);
}

}  // namespace sigma3
