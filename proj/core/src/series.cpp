#include "sigma3/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sigma3 {

Series2 Series2::constant(int order, Scalar c) {
  Series2 s(order);
  if (!c.is_zero()) s.c_.emplace(std::make_pair(0, 0), std::move(c));
  return s;
}

Series2 Series2::var_t(int order) {
  Series2 s(order);
  if (order >= 1) s.c_.emplace(std::make_pair(1, 0), Scalar(Rational(1)));
  return s;
}

Series2 Series2::var_tau(int order) {
  Series2 s(order);
  if (order >= 1) s.c_.emplace(std::make_pair(0, 1), Scalar(Rational(1)));
  return s;
}

Scalar Series2::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Scalar() : it->second;
}

void Series2::set_coeff(int i, int j, Scalar c) {
  if (i < 0 || j < 0 || i + j > order_)
    throw std::out_of_range("Series2::set_coeff: index outside truncation");
  if (c.is_zero())
    c_.erase({i, j});
  else
    c_[{i, j}] = std::move(c);
}

Series2 Series2::operator-() const {
  Series2 r(order_);
  for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
  return r;
}

static int common_order(const Series2& a, const Series2& b) {
  return std::min(a.order(), b.order());
}

Series2 Series2::operator+(const Series2& o) const {
  Series2 r(common_order(*this, o));
  for (const auto& [k, v] : c_) {
    if (k.first + k.second <= r.order()) r.set_coeff(k.first, k.second, v);
  }
  for (const auto& [k, v] : o.c_) {
    if (k.first + k.second <= r.order()) r.set_coeff(k.first, k.second, r.coeff(k.first, k.second) + v);
  }
  return r;
}

Series2 Series2::operator-(const Series2& o) const { return *this + (-o); }

Series2 Series2::operator*(const Series2& o) const {
  Series2 r(common_order(*this, o));
  for (const auto& [ka, va] : c_) {
    if (ka.first + ka.second > r.order()) continue;
    for (const auto& [kb, vb] : o.c_) {
      int i = ka.first + kb.first, j = ka.second + kb.second;
      if (i + j > r.order()) continue;
      Scalar cur = r.coeff(i, j);
      r.set_coeff(i, j, cur + va * vb);
    }
  }
  return r;
}

Series2 Series2::operator*(const Scalar& s) const {
  Series2 r(order_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : c_) {
    Scalar p = v * s;
    if (!p.is_zero()) r.c_.emplace(k, std::move(p));
  }
  return r;
}

Series2 Series2::pow(unsigned k) const {
  Series2 r = Series2::constant(order_, Scalar(Rational(1)));
  Series2 base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

bool Series2::operator==(const Series2& o) const {
  if (order_ != o.order_ || c_.size() != o.c_.size()) return false;
  auto it = c_.begin();
  auto jt = o.c_.begin();
  for (; it != c_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

Series2 Series2::truncated(int new_order) const {
  Series2 r(new_order);
  for (const auto& [k, v] : c_)
    if (k.first + k.second <= new_order) r.c_.emplace(k, v);
  return r;
}

Series2 Series2::reciprocal() const {
  Scalar c0 = coeff(0, 0);
  if (c0.is_zero())
    throw std::domain_error("Series2::reciprocal: constant term is zero");
  // Newton doubling: r <- r*(2 - a*r)
  Series2 r = Series2::constant(order_, c0.inv());
  int known = 0;
  const Series2 two = Series2::constant(order_, Scalar(Rational(2)));
  while (known < order_) {
    r = r * (two - (*this) * r);
    known = 2 * known + 1;
  }
  return r;
}

Series2 Series2::derivative_t() const {
  Series2 r(order_ > 0 ? order_ - 1 : 0);
  for (const auto& [k, v] : c_) {
    if (k.first == 0) continue;
    if (k.first - 1 + k.second > r.order()) continue;
    r.set_coeff(k.first - 1, k.second, v * Scalar(Rational(k.first)));
  }
  return r;
}

Series2 Series2::derivative_tau() const {
  Series2 r(order_ > 0 ? order_ - 1 : 0);
  for (const auto& [k, v] : c_) {
    if (k.second == 0) continue;
    if (k.first + k.second - 1 > r.order()) continue;
    r.set_coeff(k.first, k.second - 1, v * Scalar(Rational(k.second)));
  }
  return r;
}

Series2 Series2::slice_tau0() const {
  Series2 r(order_);
  for (const auto& [k, v] : c_)
    if (k.second == 0) r.c_.emplace(k, v);
  return r;
}

Series2 Series2::slice_t0() const {
  Series2 r(order_);
  for (const auto& [k, v] : c_)
    if (k.first == 0) r.c_.emplace(k, v);
  return r;
}

std::string Series2::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // order by total degree then (i,j)
  std::vector<std::pair<std::pair<int, int>, Scalar>> items(c_.begin(), c_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta < tb;
    return a.first < b.first;
  });
  for (const auto& [k, v] : items) {
    if (!first) os << " + ";
    os << v.str();
    if (k.first > 0) {
      os << "*t";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      os << "*tau";
      if (k.second > 1) os << "^" << k.second;
    }
    first = false;
  }
  os << " + O(" << (order_ + 1) << ")";
  return os.str();
}

Series2 substitute_series(const Poly& p, const std::map<std::string, Series2>& bindings) {
  const size_t n = p.vars()->size();
  int order = -1;
  std::vector<const Series2*> vals(n);
  for (size_t i = 0; i < n; ++i) {
    auto it = bindings.find(p.vars()->name(i));
    if (it == bindings.end())
      throw std::invalid_argument("substitute_series: unbound variable '" + p.vars()->name(i) + "'");
    vals[i] = &it->second;
    order = order < 0 ? it->second.order() : std::min(order, it->second.order());
  }
  if (order < 0) {
    // constant polynomial over the empty table cannot happen; all universes
    // here are non-empty
    throw std::invalid_argument("substitute_series: no variables");
  }
  std::vector<std::vector<Series2>> pows(n);
  auto power = [&](size_t i, int e) -> const Series2& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(Series2::constant(order, Scalar(Rational(1))));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * (*vals[i]));
    return cache[static_cast<size_t>(e)];
  };
  Series2 acc(order);
  for (const auto& [m, c] : p.terms()) {
    Series2 term = Series2::constant(order, c);
    for (size_t i = 0; i < n; ++i)
      if (m[i] != 0) term = term * power(i, m[i]);
    acc = acc + term;
  }
  return acc;
}

Series2 series_newton_root(const Poly& F, const std::string& unknown,
                           const std::map<std::string, Series2>& bindings, const Scalar& seed,
                           int order) {
  int uidx = F.vars()->index_of(unknown);
  if (uidx < 0) throw std::invalid_argument("series_newton_root: unknown variable not in universe");

  // split F into univariate form in the unknown with Series2 coefficients
  int maxdeg = 0;
  for (const auto& [m, c] : F.terms())
    maxdeg = std::max(maxdeg, static_cast<int>(m[static_cast<size_t>(uidx)]));
  std::vector<Series2> A(static_cast<size_t>(maxdeg) + 1, Series2(order));
  {
    // gather coefficient polynomials, then evaluate them at the bindings
    std::vector<Poly> coeff_polys(static_cast<size_t>(maxdeg) + 1, Poly(F.vars()));
    for (const auto& [m, c] : F.terms()) {
      Monomial stripped = m;
      int k = stripped[static_cast<size_t>(uidx)];
      stripped[static_cast<size_t>(uidx)] = 0;
      coeff_polys[static_cast<size_t>(k)].add_term(stripped, c);
    }
    std::map<std::string, Series2> full = bindings;
    // the unknown itself gets a dummy binding so substitute_series sees a
    // fully bound universe (its exponent is already stripped)
    full.emplace(unknown, Series2::constant(order, Scalar()));
    for (int k = 0; k <= maxdeg; ++k) {
      // make sure truncation order matches even for constant coefficients
      A[static_cast<size_t>(k)] = substitute_series(coeff_polys[static_cast<size_t>(k)], full).truncated(order);
    }
  }
  auto eval_at = [&](const std::vector<Series2>& cs, const Series2& x) {
    Series2 acc(order);
    for (size_t k = cs.size(); k-- > 0;) acc = acc * x + cs[k];
    return acc;
  };
  std::vector<Series2> Aprime;
  for (int k = 1; k <= maxdeg; ++k)
    Aprime.push_back(A[static_cast<size_t>(k)] * Scalar(Rational(k)));

  Series2 x = Series2::constant(order, seed);
  Series2 f0 = eval_at(A, x);
  if (!f0.coeff(0, 0).is_zero())
    throw std::domain_error("series_newton_root: seed is not a root of the constant part (F(seed) = " +
                            f0.coeff(0, 0).str() + ")");
  Scalar d0 = eval_at(Aprime, x).coeff(0, 0);
  if (d0.is_zero())
    throw std::domain_error("series_newton_root: derivative at seed has zero constant term");

  int known = 0;
  int guard = 0;
  while (known < order) {
    Series2 fx = eval_at(A, x);
    Series2 dfx = eval_at(Aprime, x);
    x = x - fx * dfx.reciprocal();
    known = 2 * known + 1;
    if (++guard > 64) throw std::logic_error("series_newton_root: iteration bound exceeded");
  }
  if (!eval_at(A, x).is_zero())
    throw std::logic_error("series_newton_root: residual not zero after convergence");
  return x;
}

}  // namespace sigma3
