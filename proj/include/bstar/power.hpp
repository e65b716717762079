#pragma once

#include <map>
#include <string>

#include "bstar/mpoly.hpp"
#include "bstar/weyl.hpp"

namespace bstar {

/// Element of the twisted-power module O[s, F^{-1}]*F^s: a finite sum
/// sum_k p_k * F^(sigma+k) with polynomial coefficients p_k over the
/// geometric variables and the parameter. Negative k stands for cleared
/// denominators, never for rational-function arithmetic.
class PowerElement {
 public:
  PowerElement(MPoly base, std::string param, std::map<int, MPoly> levels);

  /// The element 1*F^sigma. Throws ZeroBase when F = 0.
  static PowerElement mk_power(const MPoly& F, const std::string& param);

  const MPoly& base() const { return base_; }
  const std::string& parameter() const { return param_; }
  const std::map<int, MPoly>& levels() const { return levels_; }

  /// Zero as a module element: the cleared form vanishes (levels may
  /// telescope, e.g. 1*F^(sigma+1) - F*F^sigma).
  bool is_zero() const;

  /// sum p_k * F^(k - kmin) as a plain polynomial; kmin at most the lowest
  /// stored level.
  MPoly cleared_from(int kmin) const;
  int min_level() const;

  friend PowerElement operator-(const PowerElement& a, const PowerElement& b);

  /// "(2*x*s)*(x^2)^(s-1)" style, levels joined with " + ".
  std::string str() const;

 private:
  MPoly base_;
  std::string param_;
  std::map<int, MPoly> levels_;
};

/// Action of a normal-ordered operator: x_i and the parameter multiply
/// coefficients, d_i acts level-wise by
/// d_i(p*F^(sigma+k)) = (d_i p)*F^(sigma+k) + p*(sigma+k)*(d_i F)*F^(sigma+k-1).
PowerElement apply(const WeylOp& op, const PowerElement& e);

/// Exact equality after clearing both sides to a common level. Throws
/// BaseMismatch / ParameterMismatch when the elements live in different
/// modules.
bool equal(const PowerElement& a, const PowerElement& b);

/// Plain differential-operator action on a polynomial, with the parameter
/// specialized to the integer k first. Backs the integer-specialization
/// sanity checks.
MPoly apply_to_polynomial(const WeylOp& op, const MPoly& p, long k);

std::ostream& operator<<(std::ostream& os, const PowerElement& e);

}  // namespace bstar
