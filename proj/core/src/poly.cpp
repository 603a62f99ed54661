#include "sigma3/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sigma3 {

VarTablePtr VarTable::make(std::vector<std::pair<std::string, int>> vars) {
  auto t = std::shared_ptr<VarTable>(new VarTable());
  for (auto& [n, w] : vars) {
    t->names_.push_back(std::move(n));
    t->weights_.push_back(w);
  }
  return t;
}

int VarTable::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Poly Poly::constant(VarTablePtr vars, Scalar c) {
  Poly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_->size(), 0), std::move(c));
  return p;
}

Poly Poly::variable(const VarTablePtr& vars, std::string_view name, int exp) {
  int idx = vars->index_of(name);
  if (idx < 0)
    throw std::invalid_argument("Poly::variable: unknown variable '" + std::string(name) + "'");
  Monomial m(vars->size(), 0);
  m[static_cast<size_t>(idx)] = exp;
  return monomial(vars, std::move(m), Scalar(Rational(1)));
}

Poly Poly::monomial(VarTablePtr vars, Monomial m, Scalar c) {
  if (m.size() != vars->size())
    throw std::invalid_argument("Poly::monomial: exponent vector size mismatch");
  Poly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::constant_term() const { return coeff(Monomial(vars_->size(), 0)); }

void Poly::check_universe(const Poly& o) const {
  if (!vars_->same_as(*o.vars_))
    throw std::invalid_argument("Poly: variable universe mismatch");
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_universe(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_universe(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_universe(o);
  Poly r(vars_);
  Monomial m(vars_->size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(vars_, Scalar(Rational(1)));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_universe(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  }
  return true;
}

Poly Poly::derivative(std::string_view var) const {
  int idx = vars_->index_of(var);
  if (idx < 0)
    throw std::invalid_argument("Poly::derivative: unknown variable '" + std::string(var) + "'");
  Poly r(vars_);
  for (const auto& [m, c] : terms_) {
    int e = m[static_cast<size_t>(idx)];
    if (e == 0) continue;
    Monomial dm = m;
    dm[static_cast<size_t>(idx)] = e - 1;
    r.add_term(dm, c * Scalar(Rational(e)));
  }
  return r;
}

Poly::Homogeneity Poly::weighted_degree() const {
  if (terms_.empty()) throw std::domain_error("weighted_degree: zero polynomial");
  bool first = true;
  long deg = 0;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * vars_->weight(i);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return {false, 0};
    }
  }
  return {true, deg};
}

Scalar Poly::eval_scalar(const std::map<std::string, Scalar>& bindings) const {
  std::vector<Scalar> vals(vars_->size());
  for (size_t i = 0; i < vars_->size(); ++i) {
    auto it = bindings.find(vars_->name(i));
    if (it == bindings.end())
      throw std::invalid_argument("eval_scalar: unbound variable '" + vars_->name(i) + "'");
    vals[i] = it->second;
  }
  Scalar acc;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= vals[i].pow(static_cast<unsigned>(m[i]));
    acc += t;
  }
  return acc;
}

std::complex<double> Poly::eval_complex(
    const std::map<std::string, std::complex<double>>& bindings) const {
  std::vector<std::complex<double>> vals(vars_->size());
  for (size_t i = 0; i < vars_->size(); ++i) {
    auto it = bindings.find(vars_->name(i));
    if (it == bindings.end())
      throw std::invalid_argument("eval_complex: unbound variable '" + vars_->name(i) + "'");
    vals[i] = it->second;
  }
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) t *= vals[i];
    }
    acc += t;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  struct Item {
    long wdeg;
    const Monomial* m;
    const Scalar* c;
  };
  std::vector<Item> items;
  items.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * vars_->weight(i);
    items.push_back({d, &m, &c});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.wdeg != b.wdeg) return a.wdeg > b.wdeg;
    return *a.m < *b.m;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& it : items) {
    std::string cs = it.c->str();
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) cs = cs.substr(1);
    bool any_var = false;
    for (size_t i = 0; i < it.m->size(); ++i)
      if ((*it.m)[i] != 0) any_var = true;
    bool coeff_is_one = (cs == "1");
    if (!any_var || !coeff_is_one) os << cs;
    bool need_star = !any_var ? false : !coeff_is_one;
    for (size_t i = 0; i < it.m->size(); ++i) {
      int e = (*it.m)[i];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << vars_->name(i);
      if (e != 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

Poly substitute(const Poly& p, const VarTablePtr& target,
                const std::map<std::string, Poly>& bindings) {
  const size_t n = p.vars()->size();
  // resolve each source variable to a polynomial over `target`
  std::vector<Poly> images(n);
  for (size_t i = 0; i < n; ++i) {
    const std::string& name = p.vars()->name(i);
    auto it = bindings.find(name);
    if (it != bindings.end()) {
      if (!it->second.vars()->same_as(*target))
        throw std::invalid_argument("substitute: binding for '" + name +
                                    "' is not over the target universe");
      images[i] = it->second;
    } else {
      if (target->index_of(name) < 0)
        throw std::invalid_argument("substitute: variable '" + name +
                                    "' neither bound nor present in target universe");
      images[i] = Poly::variable(target, name);
    }
  }
  // cached powers per variable
  std::vector<std::vector<Poly>> pows(n);
  auto power = [&](size_t i, int e) -> const Poly& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, Scalar(Rational(1))));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<size_t>(e)];
  };
  Poly acc(target);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target, c);
    for (size_t i = 0; i < n; ++i)
      if (m[i] != 0) t = t * power(i, m[i]);
    acc = acc + t;
  }
  return acc;
}

Poly rename_vars(const Poly& p, const VarTablePtr& target,
                 const std::map<std::string, std::string>& mapping) {
  std::map<std::string, Poly> bindings;
  for (const auto& [from, to] : mapping) bindings.emplace(from, Poly::variable(target, to));
  return substitute(p, target, bindings);
}

std::optional<Poly> divide_by_var_difference(const Poly& p, std::string_view xi,
                                             std::string_view xj) {
  const auto& vars = p.vars();
  int vi = vars->index_of(xi);
  int vj = vars->index_of(xj);
  if (vi < 0 || vj < 0) throw std::invalid_argument("divide_by_var_difference: unknown variable");
  // view p as univariate in x_i: p = sum_k c_k * x_i^k, then Horner-divide by
  // (x_i - x_j): q_{k-1} = c_k + x_j * q_k, remainder c_0 + x_j * q_0
  int maxdeg = 0;
  for (const auto& [m, c] : p.terms()) maxdeg = std::max(maxdeg, static_cast<int>(m[static_cast<size_t>(vi)]));
  std::vector<Poly> c(static_cast<size_t>(maxdeg) + 1, Poly(vars));
  for (const auto& [m, cf] : p.terms()) {
    Monomial stripped = m;
    int k = stripped[static_cast<size_t>(vi)];
    stripped[static_cast<size_t>(vi)] = 0;
    c[static_cast<size_t>(k)].add_term(stripped, cf);
  }
  Poly xjv = Poly::variable(vars, xj);
  std::vector<Poly> q(static_cast<size_t>(std::max(maxdeg, 1)), Poly(vars));
  Poly carry(vars);
  for (int k = maxdeg; k >= 1; --k) {
    Poly qk = c[static_cast<size_t>(k)] + carry;
    q[static_cast<size_t>(k - 1)] = qk;
    carry = xjv * qk;
  }
  Poly rem = c[0] + carry;
  if (!rem.is_zero()) return std::nullopt;
  Poly out(vars);
  for (int k = 0; k <= maxdeg - 1; ++k) {
    Poly xik = Poly::variable(vars, xi).pow(static_cast<unsigned>(k));
    out = out + q[static_cast<size_t>(k)] * xik;
  }
  return out;
}

}  // namespace sigma3
