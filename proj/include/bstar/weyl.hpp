#pragma once

#include <map>
#include <string>
#include <vector>

#include "bstar/mpoly.hpp"
#include "bstar/rational.hpp"

namespace bstar {

/// Exponents of one normal-ordered term coeff * x^a * d^b * s^j, with the
/// x and d slots indexed by the owning operator's variable list.
struct WeylKey {
  std::vector<int> x;
  std::vector<int> d;
  int s = 0;
  bool operator==(const WeylKey&) const = default;
};

/// Print order: parameter degree first, then total degree, then x and d
/// exponents lexicographically, leading term first.
struct WeylKeyDesc {
  bool operator()(const WeylKey& a, const WeylKey& b) const;
};

/// Polynomial-coefficient differential operator with an optional central
/// parameter, kept in normal order: every term is coeff * x^a * d^b * s^j
/// with all multiplication operators to the left of all derivations. The
/// parameter symbol is anonymous here; str() and the module action bind it
/// to a name.
class WeylOp {
 public:
  using Terms = std::map<WeylKey, Rational, WeylKeyDesc>;

  WeylOp() = default;  // the zero operator

  static WeylOp zero() { return WeylOp(); }
  static WeylOp identity();
  static WeylOp constant(const Rational& c);
  /// The central parameter s.
  static WeylOp parameter();
  /// Multiplication operator by a polynomial in the x's.
  static WeylOp from_polynomial(const MPoly& p);
  /// The derivation d_v.
  static WeylOp derivation(const std::string& v);
  static WeylOp monomial(std::vector<std::string> vars, std::vector<int> xexp,
                         std::vector<int> dexp, int sexp, const Rational& coeff);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool parameter_free() const;
  /// Highest parameter exponent; 0 for the zero operator.
  int parameter_degree() const;
  /// True when some term carries variable v as a factor or a derivation.
  bool uses(const std::string& v) const;
  /// Variables actually appearing, in list order.
  std::vector<std::string> used_vars() const;

  /// Same operator re-indexed over a superset of the variables.
  WeylOp aligned_to(const std::vector<std::string>& target) const;

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  /// Normal-ordered noncommutative product.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator*(const WeylOp& a, const Rational& c);
  friend WeylOp operator*(const Rational& c, const WeylOp& a) { return a * c; }

  bool operator==(const WeylOp& o) const;

  /// Nonnegative integer power.
  WeylOp pow(int e) const;

  /// "1/2*x*d_x*s + 1/2*s" style, parse-compatible; param names the parameter.
  std::string str(const std::string& param = "s") const;

 private:
  void insert_term(const WeylKey& key, const Rational& c);

  std::vector<std::string> vars_;
  Terms terms_;
};

/// [P_0, ..., P_d] parameter-free with p = sum P_j s^j; never empty.
std::vector<WeylOp> param_coefficients(const WeylOp& p);

/// sum_j P_j (s + sign*chi)^j. chi must be parameter-free and must not share
/// variables with the P_j (VariableClash otherwise): disjointness is what lets
/// the substituted parameter stay central over the P_j.
WeylOp substitute_parameter(const WeylOp& p, const WeylOp& chi, int sign);

/// s ^ j replaced by value^j; the result is parameter-free.
WeylOp specialize_parameter(const WeylOp& p, const Rational& value);

/// For A(s,t) over the reserved parameters, sum a_ij s^i chi^j.
WeylOp eval_bipoly_at_operator(const BiPoly& A, const WeylOp& chi);

std::ostream& operator<<(std::ostream& os, const WeylOp& op);

}  // namespace bstar
