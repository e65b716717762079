#include "bstar/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "bstar/errors.hpp"

namespace bstar {

bool WeylKeyDesc::operator()(const WeylKey& a, const WeylKey& b) const {
  if (a.s != b.s) return a.s > b.s;
  const int da = std::accumulate(a.x.begin(), a.x.end(), 0) +
                 std::accumulate(a.d.begin(), a.d.end(), 0);
  const int db = std::accumulate(b.x.begin(), b.x.end(), 0) +
                 std::accumulate(b.d.begin(), b.d.end(), 0);
  if (da != db) return da > db;
  if (a.x != b.x) return a.x > b.x;
  return a.d > b.d;
}

void WeylOp::insert_term(const WeylKey& key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylOp WeylOp::identity() { return constant(Rational(1)); }

WeylOp WeylOp::constant(const Rational& c) {
  WeylOp out;
  out.insert_term(WeylKey{}, c);
  return out;
}

WeylOp WeylOp::parameter() {
  WeylOp out;
  out.insert_term(WeylKey{{}, {}, 1}, Rational(1));
  return out;
}

WeylOp WeylOp::from_polynomial(const MPoly& p) {
  WeylOp out;
  out.vars_ = p.vars();
  const std::vector<int> zeros(out.vars_.size(), 0);
  for (const auto& [e, c] : p.terms()) out.insert_term(WeylKey{e, zeros, 0}, c);
  return out;
}

WeylOp WeylOp::derivation(const std::string& v) {
  WeylOp out;
  out.vars_ = {v};
  out.insert_term(WeylKey{{0}, {1}, 0}, Rational(1));
  return out;
}

WeylOp WeylOp::monomial(std::vector<std::string> vars, std::vector<int> xexp,
                        std::vector<int> dexp, int sexp, const Rational& coeff) {
  if (vars.size() != xexp.size() || vars.size() != dexp.size())
    throw Error("WeylOp::monomial: exponent lists do not match the variables");
  WeylOp out;
  out.vars_ = std::move(vars);
  out.insert_term(WeylKey{std::move(xexp), std::move(dexp), sexp}, coeff);
  return out;
}

bool WeylOp::parameter_free() const {
  for (const auto& [k, c] : terms_)
    if (k.s != 0) return false;
  return true;
}

int WeylOp::parameter_degree() const {
  int deg = 0;
  for (const auto& [k, c] : terms_) deg = std::max(deg, k.s);
  return deg;
}

bool WeylOp::uses(const std::string& v) const {
  const auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return false;
  const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  for (const auto& [k, c] : terms_)
    if (k.x[i] != 0 || k.d[i] != 0) return true;
  return false;
}

std::vector<std::string> WeylOp::used_vars() const {
  std::vector<std::string> out;
  for (const auto& v : vars_)
    if (uses(v)) out.push_back(v);
  return out;
}

WeylOp WeylOp::aligned_to(const std::vector<std::string>& target) const {
  if (target == vars_) return *this;
  std::vector<int> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it == target.end())
      throw Error("aligned_to: variable '" + vars_[i] + "' missing from target");
    pos[i] = static_cast<int>(it - target.begin());
  }
  WeylOp out;
  out.vars_ = target;
  for (const auto& [k, c] : terms_) {
    WeylKey nk{std::vector<int>(target.size(), 0),
               std::vector<int>(target.size(), 0), k.s};
    for (std::size_t i = 0; i < k.x.size(); ++i) {
      nk.x[static_cast<std::size_t>(pos[i])] = k.x[i];
      nk.d[static_cast<std::size_t>(pos[i])] = k.d[i];
    }
    out.insert_term(nk, c);
  }
  return out;
}

WeylOp WeylOp::operator-() const {
  WeylOp out;
  out.vars_ = vars_;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  if (vars_ != o.vars_) {
    const auto merged = merge_vars(vars_, o.vars_);
    *this = aligned_to(merged);
    const WeylOp rhs = o.aligned_to(merged);
    for (const auto& [k, c] : rhs.terms_) insert_term(k, c);
    return *this;
  }
  for (const auto& [k, c] : o.terms_) insert_term(k, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) { return *this += -o; }

namespace {

Rational binom(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

Rational falling(int c, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(c - i);
  return r;
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  const auto merged = merge_vars(a.vars(), b.vars());
  const WeylOp u = a.aligned_to(merged);
  const WeylOp v = b.aligned_to(merged);
  const std::size_t n = merged.size();
  WeylOp out;
  out.vars_ = merged;
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms()) {
      // d^b x^c = sum_k C(b,k) * c(c-1)...(c-k+1) * x^(c-k) d^(b-k),
      // independently in each variable; the parameter is central.
      WeylKey key{std::vector<int>(n, 0), std::vector<int>(n, 0), ku.s + kv.s};
      const Rational base = cu * cv;
      auto expand = [&](auto&& self, std::size_t i, const Rational& w) -> void {
        if (i == n) {
          out.insert_term(key, w);
          return;
        }
        const int b = ku.d[i], c = kv.x[i];
        for (int k = 0; k <= std::min(b, c); ++k) {
          key.x[i] = ku.x[i] + c - k;
          key.d[i] = b - k + kv.d[i];
          self(self, i + 1, w * binom(b, k) * falling(c, k));
        }
      };
      expand(expand, 0, base);
    }
  return out;
}

WeylOp operator*(const WeylOp& a, const Rational& c) {
  WeylOp out;
  if (c.is_zero()) return out;
  out.vars_ = a.vars();
  for (const auto& [k, w] : a.terms()) out.terms_.emplace(k, w * c);
  return out;
}

bool WeylOp::operator==(const WeylOp& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  const auto merged = merge_vars(vars_, o.vars_);
  return aligned_to(merged).terms_ == o.aligned_to(merged).terms_;
}

WeylOp WeylOp::pow(int e) const {
  if (e < 0) throw BadExponent("operator power must be nonnegative");
  WeylOp out = identity();
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string WeylOp::str(const std::string& param) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      if (c < Rational(0)) os << "-";
      first = false;
    } else {
      os << (c < Rational(0) ? " - " : " + ");
    }
    const Rational a = abs(c);
    const bool empty_key =
        k.s == 0 &&
        std::all_of(k.x.begin(), k.x.end(), [](int e) { return e == 0; }) &&
        std::all_of(k.d.begin(), k.d.end(), [](int e) { return e == 0; });
    bool printed = false;
    if (!a.is_one() || empty_key) {
      os << a.str();
      printed = true;
    }
    auto factor = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (printed) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      printed = true;
    };
    for (std::size_t i = 0; i < vars_.size(); ++i) factor(vars_[i], k.x[i]);
    for (std::size_t i = 0; i < vars_.size(); ++i) factor("d_" + vars_[i], k.d[i]);
    factor(param, k.s);
  }
  return os.str();
}

std::vector<WeylOp> param_coefficients(const WeylOp& p) {
  std::vector<WeylOp> out(static_cast<std::size_t>(p.parameter_degree()) + 1);
  for (const auto& [k, c] : p.terms())
    out[static_cast<std::size_t>(k.s)] +=
        WeylOp::monomial(p.vars(), k.x, k.d, 0, c);
  return out;
}

WeylOp substitute_parameter(const WeylOp& p, const WeylOp& chi, int sign) {
  if (!chi.parameter_free())
    throw Error("substitute_parameter: substituted operator carries the parameter");
  for (const auto& v : chi.used_vars())
    if (p.uses(v))
      throw VariableClash("substitute_parameter: variable '" + v +
                          "' appears on both sides");
  const WeylOp shifted = WeylOp::parameter() + chi * Rational(sign);
  const auto cs = param_coefficients(p);
  WeylOp out;
  WeylOp power = WeylOp::identity();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (j > 0) power = power * shifted;
    out += cs[j] * power;
  }
  return out;
}

WeylOp specialize_parameter(const WeylOp& p, const Rational& value) {
  const auto cs = param_coefficients(p);
  WeylOp out;
  Rational v(1);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (j > 0) v = v * value;
    out += cs[j] * v;
  }
  return out;
}

WeylOp eval_bipoly_at_operator(const BiPoly& A, const WeylOp& chi) {
  if (!chi.parameter_free())
    throw Error("eval_bipoly_at_operator: operator argument carries the parameter");
  WeylOp out;
  for (const auto& [j, cj] : coefficients_in(A.aligned_to({"s", "t"}), "t")) {
    const WeylOp chij = chi.pow(j);
    for (const auto& [i, ci] : coefficients_in(cj, "s")) {
      if (!ci.is_constant())
        throw InternalInconsistency("eval_bipoly_at_operator: nonconstant coefficient");
      out += WeylOp::monomial({}, {}, {}, i, ci.constant_value()) * chij;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const WeylOp& op) {
  return os << op.str();
}

}  // namespace bstar
