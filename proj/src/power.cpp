#include "bstar/power.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "bstar/errors.hpp"

namespace bstar {

namespace {

void add_level(std::map<int, MPoly>& levels, int k, const MPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = levels.emplace(k, p);
  if (fresh) return;
  it->second += p;
  if (it->second.is_zero()) levels.erase(it);
}

std::map<int, MPoly> apply_derivation(const std::map<int, MPoly>& levels,
                                      const std::string& v, const MPoly& F,
                                      const MPoly& sigma) {
  const MPoly dF = partial(F, v);
  std::map<int, MPoly> out;
  for (const auto& [k, p] : levels) {
    add_level(out, k, partial(p, v));
    if (!dF.is_zero())
      add_level(out, k - 1, p * (sigma + MPoly(Rational(k))) * dF);
  }
  return out;
}

}  // namespace

PowerElement::PowerElement(MPoly base, std::string param,
                           std::map<int, MPoly> levels)
    : base_(std::move(base)), param_(std::move(param)) {
  if (base_.is_zero()) throw ZeroBase("power element with zero base");
  for (auto& [k, p] : levels)
    if (!p.is_zero()) levels_.emplace(k, std::move(p));
}

PowerElement PowerElement::mk_power(const MPoly& F, const std::string& param) {
  return PowerElement(F, param, {{0, MPoly(Rational(1))}});
}

int PowerElement::min_level() const {
  return levels_.empty() ? 0 : levels_.begin()->first;
}

MPoly PowerElement::cleared_from(int kmin) const {
  MPoly out;
  for (const auto& [k, p] : levels_) out += p * base_.pow(k - kmin);
  return out;
}

bool PowerElement::is_zero() const { return cleared_from(min_level()).is_zero(); }

PowerElement operator-(const PowerElement& a, const PowerElement& b) {
  if (!(a.base_ == b.base_))
    throw BaseMismatch("power elements over different bases");
  if (a.param_ != b.param_)
    throw ParameterMismatch("power elements over different parameters");
  std::map<int, MPoly> levels = a.levels_;
  for (const auto& [k, p] : b.levels_) add_level(levels, k, -p);
  return PowerElement(a.base_, a.param_, std::move(levels));
}

std::string PowerElement::str() const {
  if (levels_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest level first reads like the action formulas.
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(it->second) << ")*(" << to_string(base_) << ")^";
    const int k = it->first;
    if (k == 0)
      os << param_;
    else
      os << "(" << param_ << (k > 0 ? "+" : "-") << (k > 0 ? k : -k) << ")";
  }
  return os.str();
}

PowerElement apply(const WeylOp& op, const PowerElement& e) {
  const MPoly sigma = MPoly::variable(e.parameter());
  const auto& vars = op.vars();
  std::map<int, MPoly> acc;
  for (const auto& [key, c] : op.terms()) {
    // The derivations act first (they sit rightmost in normal order);
    // distinct variables commute so the sweep order is immaterial.
    std::map<int, MPoly> cur = e.levels();
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (int rep = 0; rep < key.d[i]; ++rep)
        cur = apply_derivation(cur, vars[i], e.base(), sigma);
    MPoly mult = MPoly(c);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (key.x[i] > 0) mult = mult * MPoly::variable(vars[i]).pow(key.x[i]);
    if (key.s > 0) mult = mult * sigma.pow(key.s);
    for (const auto& [k, p] : cur) add_level(acc, k, p * mult);
  }
  return PowerElement(e.base(), e.parameter(), std::move(acc));
}

bool equal(const PowerElement& a, const PowerElement& b) {
  if (!(a.base() == b.base()))
    throw BaseMismatch("power elements over different bases");
  if (a.parameter() != b.parameter())
    throw ParameterMismatch("power elements over different parameters");
  const int kmin = std::min(a.min_level(), b.min_level());
  return a.cleared_from(kmin) == b.cleared_from(kmin);
}

MPoly apply_to_polynomial(const WeylOp& op, const MPoly& p, long k) {
  const WeylOp q = specialize_parameter(op, Rational(k));
  const auto& vars = q.vars();
  MPoly out;
  for (const auto& [key, c] : q.terms()) {
    MPoly cur = p;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (int rep = 0; rep < key.d[i]; ++rep) cur = partial(cur, vars[i]);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (key.x[i] > 0) cur = cur * MPoly::variable(vars[i]).pow(key.x[i]);
    out += cur * c;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PowerElement& e) {
  return os << e.str();
}

}  // namespace bstar
