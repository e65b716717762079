#include "bstar/star.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "bstar/errors.hpp"

namespace bstar {

FactoredPoly star(const FactoredPoly& a, const FactoredPoly& b) {
  if (a.is_one() || b.is_one()) return FactoredPoly::one();
  std::map<Rational, int> mult;
  for (const auto& fa : a.factors())
    for (const auto& fb : b.factors()) {
      const Rational gamma = fa.root + fb.root;
      const int m = fa.mult + fb.mult - 1;
      auto [it, fresh] = mult.emplace(gamma, m);
      if (!fresh && m > it->second) it->second = m;
    }
  std::vector<FactoredPoly::Factor> fs;
  fs.reserve(mult.size());
  for (const auto& [root, m] : mult) fs.push_back({root, m});
  return FactoredPoly::from_factors(std::move(fs));
}

FactoredPoly lcm_factored(const FactoredPoly& a, const FactoredPoly& b) {
  FactoredPoly out = a;
  for (const auto& f : b.factors()) {
    const int have = out.multiplicity(f.root);
    if (f.mult > have) out.insert(f.root, f.mult - have);
  }
  return out;
}

FactoredPoly gcd_factored(const FactoredPoly& a, const FactoredPoly& b) {
  std::vector<FactoredPoly::Factor> fs;
  for (const auto& f : a.factors()) {
    const int m = std::min(f.mult, b.multiplicity(f.root));
    if (m > 0) fs.push_back({f.root, m});
  }
  return FactoredPoly::from_factors(std::move(fs));
}

namespace {

/// Normal form of P(s,t) with respect to {a(s), b(t)}: reduce in s by a, then
/// in t by b. The leading monomials s^deg(a), t^deg(b) are coprime, so the
/// normal form is zero exactly for members of the ideal.
struct IdealReduction {
  MPoly quot_a;  // cofactor of a(s)
  MPoly quot_b;  // cofactor of b(t)
  MPoly nf;
};

IdealReduction reduce_by_pair(const MPoly& P, const MPoly& as, const MPoly& bt) {
  auto [qa, r] = divide_in_var(P, as, "s");
  auto [qb, nf] = divide_in_var(r, bt, "t");
  return {std::move(qa), std::move(qb), std::move(nf)};
}

}  // namespace

CofactorPair cofactors_sum_form(const FactoredPoly& a, const FactoredPoly& b) {
  const MPoly P = shift_expand(star(a, b).expand("u"));
  const auto red = reduce_by_pair(P, a.expand("s"), b.expand("t"));
  if (!red.nf.is_zero())
    throw InternalInconsistency(
        "cofactors_sum_form: star polynomial is not in the ideal, residue " +
        to_string(red.nf));
  return {red.quot_a.aligned_to({"s", "t"}), red.quot_b.aligned_to({"s", "t"}),
          CofactorPair::Form::SumForm};
}

CofactorPair cofactors_theorem_form(const FactoredPoly& b, const FactoredPoly& c) {
  const CofactorPair sum = cofactors_sum_form(b, c);
  const MPoly smt = MPoly::variable("s") - MPoly::variable("t");
  return {substitute(sum.A, "s", smt).aligned_to({"s", "t"}),
          substitute(sum.B, "s", smt).aligned_to({"s", "t"}),
          CofactorPair::Form::TheoremForm};
}

FactoredPoly star_oracle(const FactoredPoly& a, const FactoredPoly& b) {
  const MPoly as = a.expand("s");
  const MPoly bt = b.expand("t");
  const auto member = [&](const FactoredPoly& cand) {
    const MPoly P = shift_expand(cand.expand("u"));
    return reduce_by_pair(P, as, bt).nf.is_zero();
  };

  // Upper bound: every sum root with the crude multiplicity max{m_a + m_b}.
  // This is a multiple of the minimal generator, hence a member.
  std::map<Rational, int> bound;
  for (const auto& fa : a.factors())
    for (const auto& fb : b.factors()) {
      const int m = fa.mult + fb.mult;
      auto [it, fresh] = bound.emplace(fa.root + fb.root, m);
      if (!fresh && m > it->second) it->second = m;
    }
  FactoredPoly cand;
  for (const auto& [root, m] : bound) cand.insert(root, m);
  if (!member(cand))
    throw InternalInconsistency("star_oracle: multiplicity bound " + cand.str() +
                                " is not in the ideal");

  // The intersection ideal is principal, so membership is a per-root
  // multiplicity threshold and single-step descent finds the minimum
  // regardless of the order roots are visited.
  bool lowered = true;
  while (lowered) {
    lowered = false;
    std::vector<Rational> roots;
    roots.reserve(cand.factors().size());
    for (const auto& f : cand.factors()) roots.push_back(f.root);
    for (const auto& root : roots) {
      FactoredPoly next = cand;
      next.insert(root, -1);
      if (member(next)) {
        cand = std::move(next);
        lowered = true;
      }
    }
  }
  return cand;
}

}  // namespace bstar
