#pragma once

#include "bstar/factored.hpp"
#include "bstar/mpoly.hpp"

namespace bstar {

/// The star operation: root-opposites R_a + R_b, each sum root gamma getting
/// multiplicity max{m_a(alpha) + m_b(beta) - 1 : alpha + beta = gamma}.
/// If either argument is the constant 1 the result is 1 (empty-set convention).
FactoredPoly star(const FactoredPoly& a, const FactoredPoly& b);

/// Per-root max of multiplicities.
FactoredPoly lcm_factored(const FactoredPoly& a, const FactoredPoly& b);

/// Per-root min over common roots.
FactoredPoly gcd_factored(const FactoredPoly& a, const FactoredPoly& b);

/// Bivariate cofactors witnessing the star polynomial as an ideal member.
/// sum-form:      (a*b)(s+t) == A(s,t)*a(s) + B(s,t)*b(t)
/// theorem-form:  (b*c)(s)   == A(s,t)*b(s-t) + B(s,t)*c(t)
struct CofactorPair {
  enum class Form { SumForm, TheoremForm };
  BiPoly A;
  BiPoly B;
  Form form = Form::SumForm;
};

/// Extracts cofactors in sum-form by dividing (a*b)(s+t) first by a(s) in s,
/// then exact-dividing every s-coefficient of the remainder by b(t). The pair
/// {a(s), b(t)} has coprime leading monomials, so this normal form vanishes
/// for ideal members and the exact divisions cannot fail (InternalInconsistency
/// if they ever do).
CofactorPair cofactors_sum_form(const FactoredPoly& a, const FactoredPoly& b);

/// Theorem-form cofactors: A(s,t) = A'(s-t,t), B(s,t) = B'(s-t,t) from sum-form.
CofactorPair cofactors_theorem_form(const FactoredPoly& b, const FactoredPoly& c);

/// Independent route to the star polynomial: the minimal monic member of
/// <a(s), b(t)> ∩ C[s+t]. Starts from the candidate root set R_a + R_b with
/// multiplicity bound max{m_a + m_b}, tests membership by bivariate division,
/// and lowers multiplicities one at a time until no single drop preserves
/// membership. Never consults the star multiset formula.
FactoredPoly star_oracle(const FactoredPoly& a, const FactoredPoly& b);

}  // namespace bstar
