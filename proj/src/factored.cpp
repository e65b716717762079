#include "bstar/factored.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bstar/errors.hpp"

namespace bstar {

FactoredPoly FactoredPoly::linear(const Rational& root, int mult) {
  FactoredPoly p;
  p.insert(root, mult);
  return p;
}

FactoredPoly FactoredPoly::from_factors(std::vector<Factor> factors) {
  FactoredPoly p;
  for (const auto& f : factors) p.insert(f.root, f.mult);
  return p;
}

int FactoredPoly::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.mult;
  return d;
}

int FactoredPoly::multiplicity(const Rational& root) const {
  for (const auto& f : factors_)
    if (f.root == root) return f.mult;
  return 0;
}

void FactoredPoly::insert(const Rational& root, int mult) {
  if (mult == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), root,
                             [](const Factor& f, const Rational& r) { return f.root < r; });
  if (it != factors_.end() && it->root == root) {
    it->mult += mult;
    if (it->mult == 0) {
      factors_.erase(it);
      return;
    }
  } else {
    it = factors_.insert(it, Factor{root, mult});
  }
  if (it->mult < 0) throw Error("negative multiplicity for root-opposite " + root.str());
}

MPoly FactoredPoly::expand(const std::string& var) const {
  MPoly out(Rational(1));
  const MPoly v = MPoly::variable(var);
  for (const auto& f : factors_) out = out * (v + MPoly(f.root)).pow(f.mult);
  return out.aligned_to(merge_vars(out.vars(), {var}));
}

Rational FactoredPoly::evaluate(const Rational& u) const {
  Rational out(1);
  for (const auto& f : factors_) out *= (u + f.root).pow(f.mult);
  return out;
}

FactoredPoly FactoredPoly::shifted(const Rational& delta) const {
  FactoredPoly out;
  for (const auto& f : factors_) out.insert(f.root + delta, f.mult);
  return out;
}

FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b) {
  FactoredPoly out = a;
  for (const auto& f : b.factors_) out.insert(f.root, f.mult);
  return out;
}

std::string FactoredPoly::str(const std::string& var) const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors_) {
    if (!first) os << "*";
    first = false;
    if (f.root.is_zero()) {
      os << var;
    } else if (f.root > Rational(0)) {
      os << "(" << var << "+" << f.root.str() << ")";
    } else {
      os << "(" << var << "-" << abs(f.root).str() << ")";
    }
    if (f.mult > 1) os << "^" << f.mult;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FactoredPoly& p) { return os << p.str(); }

}  // namespace bstar
