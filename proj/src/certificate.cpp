#include "bstar/certificate.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "bstar/errors.hpp"
#include "bstar/star.hpp"

namespace bstar {

namespace {

void require_declared(const MPoly& p, const std::vector<std::string>& variables,
                      const std::string& what) {
  for (const auto& v : p.vars())
    if (p.uses(v) &&
        std::find(variables.begin(), variables.end(), v) == variables.end())
      throw Error(what + " uses undeclared variable '" + v + "'");
}

void require_unique(const std::vector<std::string>& variables) {
  std::set<std::string> seen;
  for (const auto& v : variables)
    if (!seen.insert(v).second)
      throw Error("variable '" + v + "' declared twice");
}

/// Re-indexes onto exactly the target variables; callers have already checked
/// that nothing outside the target is used.
MPoly onto_vars(const MPoly& p, const std::vector<std::string>& target) {
  if (p.vars() == target) return p;
  std::vector<int> pos(p.vars().size(), -1);
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    const auto it = std::find(target.begin(), target.end(), p.vars()[i]);
    if (it != target.end()) pos[i] = static_cast<int>(it - target.begin());
  }
  MPoly out = MPoly().aligned_to(target);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ne(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) ne[static_cast<std::size_t>(pos[i])] = e[i];
    out += MPoly::monomial(target, ne, c);
  }
  return out;
}

WeylOp onto_vars(const WeylOp& op, const std::vector<std::string>& target) {
  if (op.vars() == target) return op;
  std::vector<int> pos(op.vars().size(), -1);
  for (std::size_t i = 0; i < op.vars().size(); ++i) {
    const auto it = std::find(target.begin(), target.end(), op.vars()[i]);
    if (it != target.end()) pos[i] = static_cast<int>(it - target.begin());
  }
  WeylOp out;
  for (const auto& [key, c] : op.terms()) {
    std::vector<int> nx(target.size(), 0), nd(target.size(), 0);
    for (std::size_t i = 0; i < key.x.size(); ++i) {
      if (key.x[i] != 0) nx[static_cast<std::size_t>(pos[i])] = key.x[i];
      if (key.d[i] != 0) nd[static_cast<std::size_t>(pos[i])] = key.d[i];
    }
    out += WeylOp::monomial(target, std::move(nx), std::move(nd), key.s, c);
  }
  return out;
}

/// Minimal display form of a nonzero residual: clears to one level, then
/// divides out the base while it divides exactly. Display only; equality
/// testing never reduces.
std::string residual_display(const PowerElement& r) {
  int k = r.min_level();
  MPoly cleared = r.cleared_from(k);
  if (cleared.is_zero()) return "0";
  while (!r.base().is_constant()) {
    try {
      MPoly q = exact_div(cleared, r.base());
      cleared = std::move(q);
      ++k;
    } catch (const NonExact&) {
      break;
    }
  }
  return PowerElement(r.base(), r.parameter(), {{k, cleared}}).str();
}

}  // namespace

Certificate Certificate::make(MPoly f, std::vector<std::string> variables,
                              FactoredPoly btilde,
                              std::vector<DecompositionTerm> decomposition) {
  if (f.is_zero()) throw ZeroBase("certificate for the zero function");
  require_unique(variables);
  require_declared(f, variables, "function");
  Certificate c;
  c.f_ = onto_vars(f, variables);
  c.variables_ = std::move(variables);
  c.btilde_ = std::move(btilde);
  c.generators_.push_back(c.f_);
  for (const auto& v : c.variables_) c.generators_.push_back(partial(c.f_, v));
  for (auto& term : decomposition) {
    if (term.generator >= c.generators_.size())
      throw Error("decomposition generator index out of range");
    if (term.op.is_zero()) continue;
    for (const auto& v : term.op.used_vars())
      if (std::find(c.variables_.begin(), c.variables_.end(), v) ==
          c.variables_.end())
        throw Error("decomposition operator uses undeclared variable '" + v + "'");
    // Index onto the declared order so printing is stable.
    c.decomposition_.push_back({onto_vars(term.op, c.variables_), term.generator});
  }
  return c;
}

WeylOp Certificate::assemble() const {
  WeylOp p;
  for (const auto& term : decomposition_)
    p += term.op * WeylOp::from_polynomial(generators_[term.generator]);
  return p;
}

EulerCertificate EulerCertificate::make(
    MPoly g, std::vector<std::string> variables, WeylOp chi, WeylOp q,
    FactoredPoly ctilde, std::vector<DecompositionTerm> q_decomposition) {
  if (g.is_zero()) throw ZeroBase("certificate for the zero function");
  // A unit summand would trivialize the reduced equation.
  if (!g.constant_term().is_zero())
    throw Error("function must vanish at the origin");
  require_unique(variables);
  require_declared(g, variables, "function");
  EulerCertificate e;
  e.g_ = onto_vars(g, variables);
  e.variables_ = std::move(variables);
  e.ctilde_ = std::move(ctilde);

  for (const auto& v : chi.used_vars())
    if (std::find(e.variables_.begin(), e.variables_.end(), v) ==
        e.variables_.end())
      throw Error("euler field uses undeclared variable '" + v + "'");
  e.chi_ = onto_vars(chi, e.variables_);
  e.euler_coefficients_.assign(e.variables_.size(), MPoly());
  for (const auto& [key, c] : e.chi_.terms()) {
    const int dtotal = std::accumulate(key.d.begin(), key.d.end(), 0);
    if (key.s != 0 || dtotal != 1)
      throw VerificationFailure("euler field is not a derivation");
    const std::size_t j = static_cast<std::size_t>(
        std::find(key.d.begin(), key.d.end(), 1) - key.d.begin());
    e.euler_coefficients_[j] += MPoly::monomial(e.variables_, key.x, c);
  }

  for (const auto& v : q.used_vars())
    if (std::find(e.variables_.begin(), e.variables_.end(), v) ==
        e.variables_.end())
      throw Error("q operator uses undeclared variable '" + v + "'");
  e.q_ = onto_vars(q, e.variables_);

  for (const auto& v : e.variables_) e.generators_.push_back(partial(e.g_, v));
  for (auto& term : q_decomposition) {
    if (term.generator >= e.generators_.size())
      throw Error("decomposition generator index out of range");
    if (term.op.is_zero()) continue;
    for (const auto& v : term.op.used_vars())
      if (std::find(e.variables_.begin(), e.variables_.end(), v) ==
          e.variables_.end())
        throw Error("decomposition operator uses undeclared variable '" + v + "'");
    e.q_decomposition_.push_back({onto_vars(term.op, e.variables_), term.generator});
  }
  return e;
}

WeylOp EulerCertificate::assemble() const {
  WeylOp q;
  for (const auto& term : q_decomposition_)
    q += term.op * WeylOp::from_polynomial(generators_[term.generator]);
  return q;
}

VerifyReport verify_certificate(const Certificate& c) {
  VerifyReport rep;
  const PowerElement fs = PowerElement::mk_power(c.f(), "s");
  const PowerElement lhs = apply(c.assemble(), fs);
  const PowerElement rhs(c.f(), "s", {{0, c.btilde().expand("s")}});
  const bool ok = equal(lhs, rhs);
  rep.checks.emplace_back("P(s) * f^s = btilde(s) * f^s", ok);
  if (!ok) {
    rep.pass = false;
    rep.residual = residual_display(lhs - rhs);
  }
  return rep;
}

VerifyReport verify_euler(const EulerCertificate& e) {
  VerifyReport rep;
  const auto check = [&rep](const std::string& label, bool ok) {
    rep.checks.emplace_back(label, ok);
    if (!ok) rep.pass = false;
    return ok;
  };
  check("chi(g) = g", apply_to_polynomial(e.chi(), e.g(), 0) == e.g());
  check("Q is parameter-free", e.q().parameter_free());
  check("Q matches its decomposition", e.assemble() == e.q());
  const PowerElement gt = PowerElement::mk_power(e.g(), "t");
  const PowerElement lhs = apply(e.q(), gt);
  const PowerElement rhs(e.g(), "t", {{0, e.ctilde().expand("t")}});
  if (!check("Q * g^t = ctilde(t) * g^t", equal(lhs, rhs)))
    rep.residual = residual_display(lhs - rhs);
  return rep;
}

EulerCertificate suspension_certificate(int r, const std::string& var) {
  if (r < 2) throw BadExponent("suspension exponent must be at least 2");
  const MPoly z = MPoly::variable(var);
  const Rational rr(r);
  const WeylOp dz = WeylOp::derivation(var);
  const WeylOp chi = WeylOp::from_polynomial(z) * dz * Rational(1, r);
  const WeylOp q =
      (dz.pow(r - 1) * WeylOp::from_polynomial(z.pow(r - 1))) *
      (Rational(1) / rr.pow(r - 1));
  FactoredPoly ct;
  for (int i = 1; i < r; ++i) ct.insert(Rational(i, r), 1);
  // Coefficient times the generator r*z^(r-1) recovers Q exactly.
  std::vector<DecompositionTerm> qdec;
  qdec.push_back({dz.pow(r - 1) * (Rational(1) / rr.pow(r)), 0});
  EulerCertificate e =
      EulerCertificate::make(z.pow(r), {var}, chi, q, ct, std::move(qdec));
  if (!verify_euler(e).pass)
    throw InternalInconsistency("suspension certificate failed self-verification");
  return e;
}

Certificate power_certificate(int r, const std::string& var) {
  const EulerCertificate e = suspension_certificate(r, var);
  std::vector<DecompositionTerm> dec;
  for (const auto& term : e.q_decomposition())
    dec.push_back({term.op, term.generator + 1});
  Certificate c =
      Certificate::make(e.g(), e.variables(), e.ctilde(), std::move(dec));
  if (!verify_certificate(c).pass)
    throw InternalInconsistency("power certificate failed self-verification");
  return c;
}

WeylOp euler_field(const MPoly& g, const std::vector<Rational>& weights) {
  const auto& vars = g.vars();
  if (weights.size() != vars.size())
    throw Error("euler_field: expected one weight per variable");
  for (const auto& [e, c] : g.terms()) {
    Rational wd(0);
    for (std::size_t j = 0; j < vars.size(); ++j)
      wd += weights[j] * Rational(e[j]);
    if (!(wd == Rational(1)))
      throw NotWeightedHomogeneous(
          "monomial of weighted degree " + wd.str() + " (expected 1)");
  }
  WeylOp chi;
  for (std::size_t j = 0; j < vars.size(); ++j)
    chi += WeylOp::from_polynomial(MPoly::variable(vars[j])) *
           WeylOp::derivation(vars[j]) * weights[j];
  return chi;
}

Certificate compose(const Certificate& cf, const EulerCertificate& eg) {
  for (const auto& v : cf.variables())
    if (std::find(eg.variables().begin(), eg.variables().end(), v) !=
        eg.variables().end())
      throw VariableClash("variable '" + v + "' appears in both factors");
  if (!verify_certificate(cf).pass)
    throw VerificationFailure("left certificate fails verification");
  if (!verify_euler(eg).pass)
    throw VerificationFailure("right certificate fails verification");

  const CofactorPair ab = cofactors_theorem_form(cf.btilde(), eg.ctilde());
  const FactoredPoly bt = star(cf.btilde(), eg.ctilde());
  const WeylOp& chi = eg.chi();
  const WeylOp achi = eval_bipoly_at_operator(ab.A, chi);
  const WeylOp bchi = eval_bipoly_at_operator(ab.B, chi);

  const std::size_t n = cf.variables().size();
  const std::size_t m = eg.variables().size();
  std::vector<WeylOp> coeff(1 + n + m);

  // R(s) = sum_j A(s,chi) (s-chi)^j P_j + B(s,chi) Q, with each generator kept
  // rightmost. The term over f itself is rewritten over {h, g-partials} via
  // f = h - g and g = chi(g) = sum_j eta_j g'_{y_j}.
  for (const auto& term : cf.decomposition()) {
    const WeylOp nc = achi * substitute_parameter(term.op, chi, -1);
    if (term.generator == 0) {
      coeff[0] += nc;
      for (std::size_t j = 0; j < m; ++j) {
        const MPoly& eta = eg.euler_coefficients()[j];
        if (!eta.is_zero())
          coeff[1 + n + j] -= nc * WeylOp::from_polynomial(eta);
      }
    } else {
      coeff[term.generator] += nc;
    }
  }
  for (const auto& term : eg.q_decomposition())
    coeff[1 + n + term.generator] += bchi * term.op;

  const MPoly h = cf.f() + eg.g();
  std::vector<std::string> vars = cf.variables();
  vars.insert(vars.end(), eg.variables().begin(), eg.variables().end());
  std::vector<DecompositionTerm> dec;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (!coeff[i].is_zero()) dec.push_back({std::move(coeff[i]), i});

  const Certificate out = Certificate::make(h, std::move(vars), bt, std::move(dec));

  const WeylOp direct =
      achi * substitute_parameter(cf.assemble(), chi, -1) + bchi * eg.q();
  if (!(out.assemble() == direct))
    throw ComposeVerificationFailure("decomposition does not reassemble R(s)");
  if (!verify_certificate(out).pass)
    throw ComposeVerificationFailure(
        "composed certificate fails the functional equation");
  return out;
}

IntegerCheckReport integer_check(const Certificate& c, long K) {
  IntegerCheckReport rep;
  const WeylOp p = c.assemble();
  for (long k = 1; k <= K; ++k) {
    const MPoly fk = c.f().pow(static_cast<int>(k));
    if (!(apply_to_polynomial(p, fk, k) ==
          fk * c.btilde().evaluate(Rational(k)))) {
      rep.pass = false;
      rep.failed_at = k;
      return rep;
    }
    rep.upto = k;
  }
  return rep;
}

std::optional<FactoredPoly> simple_root_shortcut(const FactoredPoly& bf, int r) {
  if (r < 2) throw BadExponent("suspension exponent must be at least 2");
  const auto& fs = bf.factors();
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t k = i + 1; k < fs.size(); ++k) {
      const Rational diff = abs(fs[i].root - fs[k].root);
      for (int j = 1; j <= r; ++j)
        if (diff == Rational(j, r)) return std::nullopt;
    }
  FactoredPoly out;
  for (int i = 1; i < r; ++i) out = out * bf.shifted(Rational(i, r));
  FactoredPoly ct;
  for (int i = 1; i < r; ++i) ct.insert(Rational(i, r), 1);
  if (!(out == star(bf, ct)))
    throw InternalInconsistency("shortcut disagrees with the star operation");
  return out;
}

}  // namespace bstar
