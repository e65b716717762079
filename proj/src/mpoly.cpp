#include "bstar/mpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bstar/errors.hpp"

namespace bstar {

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(std::vector<int>{}, c);
}

MPoly MPoly::variable(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_.emplace(std::vector<int>{1}, Rational(1));
  return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, std::vector<int> exps,
                      const Rational& coeff) {
  if (vars.size() != exps.size()) throw Error("monomial arity mismatch");
  MPoly p;
  p.vars_ = std::move(vars);
  if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](int e) { return e == 0; }));
}

Rational MPoly::constant_term() const {
  const std::vector<int> zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  return constant_term();
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // grlex order puts the highest total degree first
  const auto& lead = terms_.begin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0);
}

int MPoly::degree_in(const std::string& v) const {
  const auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[idx]);
  return deg;
}

MPoly MPoly::aligned_to(const std::vector<std::string>& target) const {
  if (target == vars_) return *this;
  std::vector<int> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it == target.end())
      throw Error("aligned_to: variable '" + vars_[i] + "' missing from target");
    pos[i] = static_cast<int>(it - target.begin());
  }
  MPoly out;
  out.vars_ = target;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(pos[i])] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

void MPoly::insert_term(const std::vector<int>& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  const auto merged = merge_vars(vars_, o.vars_);
  if (merged != vars_) *this = aligned_to(merged);
  const MPoly rhs = o.aligned_to(merged);
  for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  const auto merged = merge_vars(a.vars(), b.vars());
  const MPoly lhs = a.aligned_to(merged);
  const MPoly rhs = b.aligned_to(merged);
  MPoly out;
  out.vars_ = merged;
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) {
      std::vector<int> e(merged.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

MPoly operator*(const MPoly& a, const Rational& c) {
  MPoly out;
  if (c.is_zero()) return out;
  out.vars_ = a.vars_;
  for (const auto& [e, coeff] : a.terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

bool MPoly::operator==(const MPoly& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  const auto merged = merge_vars(vars_, o.vars_);
  return aligned_to(merged).terms_ == o.aligned_to(merged).terms_;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  MPoly out(Rational(1));
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Rational MPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MPoly partial(const MPoly& p, const std::string& v) {
  const auto it = std::find(p.vars().begin(), p.vars().end(), v);
  if (it == p.vars().end()) return MPoly();
  const std::size_t idx = static_cast<std::size_t>(it - p.vars().begin());
  MPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[idx] == 0) continue;
    std::vector<int> ne = e;
    ne[idx] -= 1;
    out += MPoly::monomial(p.vars(), ne, c * Rational(e[idx]));
  }
  return out;
}

MPoly substitute(const MPoly& p, const std::string& v, const MPoly& value) {
  const auto it = std::find(p.vars().begin(), p.vars().end(), v);
  if (it == p.vars().end()) return p;
  const std::size_t idx = static_cast<std::size_t>(it - p.vars().begin());
  std::vector<std::string> rest = p.vars();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));

  // Horner in v would need a dense view; the direct sum is fine at this scale.
  MPoly out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> re = e;
    re.erase(re.begin() + static_cast<std::ptrdiff_t>(idx));
    MPoly term = MPoly::monomial(rest, re, c);
    out += term * value.pow(e[idx]);
  }
  return out;
}

Rational evaluate_univariate(const MPoly& p, const Rational& u) {
  int nontrivial = 0;
  for (const auto& v : p.vars())
    if (p.uses(v)) ++nontrivial;
  if (nontrivial > 1) throw Error("evaluate_univariate: polynomial is not univariate");
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) {
    const int deg = std::accumulate(e.begin(), e.end(), 0);
    acc += c * u.pow(deg);
  }
  return acc;
}

MPoly exact_div(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw Error("exact_div by zero");
  const auto merged = merge_vars(p.vars(), d.vars());
  MPoly rem = p.aligned_to(merged);
  const MPoly div = d.aligned_to(merged);
  const auto& dlead = *div.terms().begin();
  MPoly quot;
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().begin();
    std::vector<int> e(merged.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = rlead.first[i] - dlead.first[i];
      if (e[i] < 0) throw NonExact("not divisible: " + p.str() + " by " + d.str());
    }
    const MPoly t = MPoly::monomial(merged, e, rlead.second / dlead.second);
    quot += t;
    rem -= t * div;
    // Leading-term cancellation makes the grlex leading term strictly drop,
    // but a nonzero remainder below the divisor's degree means non-divisibility.
    if (!rem.is_zero() && GrlexDesc{}(dlead.first, rem.terms().begin()->first))
      throw NonExact("not divisible: " + p.str() + " by " + d.str());
  }
  return quot;
}

std::map<int, MPoly> coefficients_in(const MPoly& p, const std::string& var) {
  std::map<int, MPoly> out;
  const auto it = std::find(p.vars().begin(), p.vars().end(), var);
  if (it == p.vars().end()) {
    if (!p.is_zero()) out.emplace(0, p);
    return out;
  }
  const std::size_t idx = static_cast<std::size_t>(it - p.vars().begin());
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ne = e;
    const int k = ne[idx];
    ne[idx] = 0;
    out[k] += MPoly::monomial(p.vars(), ne, c);
  }
  for (auto it2 = out.begin(); it2 != out.end();)
    it2 = it2->second.is_zero() ? out.erase(it2) : std::next(it2);
  return out;
}

std::pair<MPoly, MPoly> divide_in_var(const MPoly& P, const MPoly& a,
                                      const std::string& var) {
  if (a.is_zero()) throw Error("divide_in_var by zero");
  const int d = a.degree_in(var);
  // Monic in var: the coefficient of var^d must be the constant 1.
  {
    const auto ac = coefficients_in(a, var);
    const auto lead = ac.find(d);
    if (lead == ac.end() || !(lead->second == MPoly(Rational(1))))
      throw Error("divide_in_var: divisor is not monic in " + var);
  }
  const auto merged = merge_vars(P.vars(), merge_vars(a.vars(), {var}));
  const MPoly div = a.aligned_to(merged);
  MPoly rem = P.aligned_to(merged);
  MPoly quot;
  const MPoly v = MPoly::variable(var);
  while (!rem.is_zero()) {
    const int n = rem.degree_in(var);
    if (n < d) break;
    const MPoly lead = coefficients_in(rem, var).at(n);
    const MPoly shift = lead * v.pow(n - d);
    quot += shift;
    rem -= shift * div;
  }
  return {quot, rem};
}

MPoly shift_expand(const MPoly& p) {
  int nontrivial = 0;
  std::string var;
  for (const auto& v : p.vars())
    if (p.uses(v)) {
      ++nontrivial;
      var = v;
    }
  if (nontrivial > 1) throw Error("shift_expand: polynomial is not univariate");
  const MPoly st = MPoly::variable("s") + MPoly::variable("t");
  if (nontrivial == 0) return MPoly(p.constant_term()).aligned_to({"s", "t"});
  return substitute(p, var, st).aligned_to({"s", "t"});
}

namespace {

void append_monomial(std::ostream& os, const std::vector<std::string>& vars,
                     const std::vector<int>& exps, const Rational& coeff) {
  const bool empty_monomial =
      std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
  const Rational a = abs(coeff);
  bool printed = false;
  if (!a.is_one() || empty_monomial) {
    os << a.str();
    printed = true;
  }
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (printed) os << "*";
    os << vars[i];
    if (exps[i] > 1) os << "^" << exps[i];
    printed = true;
  }
}

}  // namespace

std::string MPoly::str() const { return to_string(*this); }

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      if (c < Rational(0)) os << "-";
      first = false;
    } else {
      os << (c < Rational(0) ? " - " : " + ");
    }
    append_monomial(os, p.vars(), e, c);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << to_string(p); }

}  // namespace bstar
