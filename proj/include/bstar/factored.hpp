#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bstar/mpoly.hpp"
#include "bstar/rational.hpp"

namespace bstar {

/// Monic univariate polynomial with all roots rational, stored as the multiset
/// of its root-opposites: the factor list [(a, m), ...] denotes prod (s+a)^m.
/// Root-opposites are pairwise distinct and kept sorted ascending; an empty
/// list is the constant polynomial 1.
class FactoredPoly {
 public:
  struct Factor {
    Rational root;  // root-opposite: the factor is (s + root)^mult
    int mult;
    bool operator==(const Factor&) const = default;
  };

  FactoredPoly() = default;  // the constant 1

  static FactoredPoly one() { return FactoredPoly(); }
  static FactoredPoly linear(const Rational& root, int mult = 1);
  static FactoredPoly from_factors(std::vector<Factor> factors);

  bool is_one() const { return factors_.empty(); }
  int degree() const;
  const std::vector<Factor>& factors() const { return factors_; }

  /// Multiplicity of a root-opposite; 0 if absent.
  int multiplicity(const Rational& root) const;

  /// Merges (root, mult) into the multiset; mult may be negative to cancel,
  /// the entry is dropped when the total reaches zero.
  void insert(const Rational& root, int mult);

  /// The expanded monic polynomial in the given variable.
  MPoly expand(const std::string& var) const;

  /// prod (u + a)^m at a rational point u.
  Rational evaluate(const Rational& u) const;

  /// p(s + delta): every root-opposite shifts by delta.
  FactoredPoly shifted(const Rational& delta) const;

  /// Plain polynomial product: multiplicities of common roots add up.
  friend FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b);

  bool operator==(const FactoredPoly&) const = default;

  /// "(s+1/2)*(s+7/6)", "(s-1)^2", "s^3", "1".
  std::string str(const std::string& var = "s") const;

 private:
  std::vector<Factor> factors_;
};

std::ostream& operator<<(std::ostream& os, const FactoredPoly& p);

}  // namespace bstar
