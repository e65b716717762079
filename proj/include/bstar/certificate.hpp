#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bstar/factored.hpp"
#include "bstar/mpoly.hpp"
#include "bstar/power.hpp"
#include "bstar/weyl.hpp"

namespace bstar {

/// One decomposition summand: coefficient operator times multiplication by
/// the indexed generator (which sits rightmost).
struct DecompositionTerm {
  WeylOp op;
  std::size_t generator;
};

/// Certificate for the reduced functional equation
///   P(s) * f^s = btilde(s) * f^s,
/// with P(s) = sum_i op_i * M_{generator_i} ranging over the generator list
/// [f, df/dx_1, ..., df/dx_n]. The generator list is recomputed from f, never
/// stored, so it cannot drift.
class Certificate {
 public:
  static Certificate make(MPoly f, std::vector<std::string> variables,
                          FactoredPoly btilde,
                          std::vector<DecompositionTerm> decomposition);

  const MPoly& f() const { return f_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const FactoredPoly& btilde() const { return btilde_; }
  const std::vector<DecompositionTerm>& decomposition() const {
    return decomposition_;
  }
  /// [f, df/dx_1, ..., df/dx_n] in variable order.
  const std::vector<MPoly>& generators() const { return generators_; }

  /// P(s) assembled from the decomposition.
  WeylOp assemble() const;

 private:
  Certificate() = default;

  MPoly f_;
  std::vector<std::string> variables_;
  FactoredPoly btilde_;
  std::vector<DecompositionTerm> decomposition_;
  std::vector<MPoly> generators_;
};

/// Certificate for an Euler-homogeneous g: a derivation chi with chi(g) = g
/// and a parameter-free Q with Q * g^t = ctilde(t) * g^t, decomposed over the
/// partial generators [dg/dy_1, ..., dg/dy_m].
class EulerCertificate {
 public:
  static EulerCertificate make(MPoly g, std::vector<std::string> variables,
                               WeylOp chi, WeylOp q, FactoredPoly ctilde,
                               std::vector<DecompositionTerm> q_decomposition);

  const MPoly& g() const { return g_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const WeylOp& chi() const { return chi_; }
  const WeylOp& q() const { return q_; }
  const FactoredPoly& ctilde() const { return ctilde_; }
  const std::vector<DecompositionTerm>& q_decomposition() const {
    return q_decomposition_;
  }
  /// [dg/dy_1, ..., dg/dy_m] in variable order.
  const std::vector<MPoly>& generators() const { return generators_; }
  /// eta_j with chi = sum_j eta_j * d_{y_j}, extracted from chi.
  const std::vector<MPoly>& euler_coefficients() const {
    return euler_coefficients_;
  }

  /// Q reassembled from the decomposition.
  WeylOp assemble() const;

 private:
  EulerCertificate() = default;

  MPoly g_;
  std::vector<std::string> variables_;
  WeylOp chi_;
  WeylOp q_;
  FactoredPoly ctilde_;
  std::vector<DecompositionTerm> q_decomposition_;
  std::vector<MPoly> generators_;
  std::vector<MPoly> euler_coefficients_;
};

struct VerifyReport {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> checks;
  /// Display form of the nonzero residual when the functional equation fails.
  std::string residual;
};

/// Applies the assembled P(s) to f^s and compares with btilde(s) * f^s.
/// Failure is reported, never thrown.
VerifyReport verify_certificate(const Certificate& c);

/// Checks chi(g) = g, Q parameter-free, Q against its decomposition, and
/// Q * g^t = ctilde(t) * g^t.
VerifyReport verify_euler(const EulerCertificate& e);

/// Library item for g = z^r: chi = (1/r) z d_z, Q = (1/r^(r-1)) d_z^(r-1)
/// z^(r-1), ctilde = prod_{i=1}^{r-1} (t + i/r). Self-verified before return.
EulerCertificate suspension_certificate(int r, const std::string& var = "z");

/// The same data repackaged as a plain certificate for f = var^r (Q is
/// parameter-free, so it serves as P). Seeds iterated composition.
Certificate power_certificate(int r, const std::string& var);

/// chi = sum w_j y_j d_{y_j} over g's variables, returned iff chi(g) = g,
/// i.e. every monomial has weighted degree exactly 1.
WeylOp euler_field(const MPoly& g, const std::vector<Rational>& weights);

/// The Thom-Sebastiani composition: from certificates for f and an
/// Euler-homogeneous g over disjoint variables, builds the certificate for
/// h = f + g with btilde_h = star(btilde_f, ctilde_g) and
///   R(s) = sum_j A(s,chi) (s-chi)^j P_j + B(s,chi) Q,
/// decomposed over [h, f-partials, g-partials]: f-partial and g-partial terms
/// carry through, and the term over f is rewritten via f = h - g,
/// g = sum eta_j g'_{y_j}. Inputs failing verification raise
/// VerificationFailure; the output is verified symbolically and any failure
/// there raises ComposeVerificationFailure (it would be a bug, the identity
/// is guaranteed).
Certificate compose(const Certificate& cf, const EulerCertificate& eg);

struct IntegerCheckReport {
  bool pass = true;
  long upto = 0;
  std::optional<long> failed_at;
};

/// For k = 1..K checks P(k) f^k = btilde(k) f^k by plain differentiation,
/// independent of the twisted-power machinery.
IntegerCheckReport integer_check(const Certificate& c, long K);

/// When no two root-opposites of bf differ by j/r (j = 1..r), the composed
/// btilde is prod_{i=1}^{r-1} bf(s + i/r); returns nullopt when the condition
/// fails. The applicable result is cross-checked against star.
std::optional<FactoredPoly> simple_root_shortcut(const FactoredPoly& bf, int r);

}  // namespace bstar
