#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bstar/rational.hpp"

namespace bstar {

/// Graded-lexicographic order on exponent vectors, leading term first:
/// higher total degree wins, ties broken lexicographically with earlier
/// variables more significant.
struct GrlexDesc {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of named variables. Canonical form: no zero coefficients,
/// terms kept in graded-lex order. Equality is semantic (variable lists are
/// aligned first), so x+0*y over [x,y] equals x over [x].
class MPoly {
 public:
  using Terms = std::map<std::vector<int>, Rational, GrlexDesc>;

  MPoly() = default;  // the zero polynomial over no variables
  explicit MPoly(const Rational& c);

  static MPoly constant(const Rational& c) { return MPoly(c); }
  static MPoly variable(const std::string& name);
  static MPoly monomial(std::vector<std::string> vars, std::vector<int> exps,
                        const Rational& coeff);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// Requires is_constant().
  Rational constant_value() const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(const std::string& v) const;
  bool uses(const std::string& v) const { return degree_in(v) > 0; }

  /// Same polynomial re-indexed over a superset of the variables.
  MPoly aligned_to(const std::vector<std::string>& target) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const Rational& c);
  friend MPoly operator*(const Rational& c, const MPoly& a) { return a * c; }

  bool operator==(const MPoly& o) const;

  /// Nonnegative integer power.
  MPoly pow(int e) const;

  /// Coefficient of an exponent vector, relative to this->vars().
  Rational coeff(const std::vector<int>& exps) const;

  std::string str() const;

 private:
  void insert_term(const std::vector<int>& exps, const Rational& c);
  friend class MPolyBuilder;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Union of two variable lists: a's order first, then b's unseen names.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Formal partial derivative with respect to v (zero if v is absent).
MPoly partial(const MPoly& p, const std::string& v);

/// Replaces variable v by an arbitrary polynomial.
MPoly substitute(const MPoly& p, const std::string& v, const MPoly& value);

/// Evaluates a univariate polynomial at a rational point.
Rational evaluate_univariate(const MPoly& p, const Rational& u);

/// Exact division: returns q with p == q*d. Throws NonExact otherwise.
MPoly exact_div(const MPoly& p, const MPoly& d);

/// Division of P by a polynomial `a` that is univariate and monic in `var`:
/// P == quotient*a + remainder with deg_var(remainder) < deg(a).
std::pair<MPoly, MPoly> divide_in_var(const MPoly& P, const MPoly& a,
                                      const std::string& var = "s");

/// For a univariate p(u), returns p(s+t) fully expanded over ["s","t"].
MPoly shift_expand(const MPoly& p);

/// Splits P along powers of `var`: degree -> coefficient polynomial
/// (with `var`-exponent zeroed out). Absent degrees are omitted.
std::map<int, MPoly> coefficients_in(const MPoly& p, const std::string& var);

std::string to_string(const MPoly& p);
std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// A polynomial over the reserved parameter names "s" and "t" only.
using BiPoly = MPoly;

}  // namespace bstar
