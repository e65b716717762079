#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bstar/factored.hpp"
#include "bstar/mpoly.hpp"
#include "bstar/rational.hpp"
#include "bstar/weyl.hpp"

namespace bstar {

/// Parse tree for the expression grammar. Identifiers are classified while
/// lexing: `s` and `t` are always the reserved parameters, `d_v` is the
/// partial with respect to v, anything else lowercase is a variable.
struct ExprAST {
  enum class Kind {
    RationalLit,
    Variable,
    Partial,
    Parameter,
    Sum,
    Product,
    Power,
    Negation
  };

  ExprAST() = default;
  ExprAST(Kind k, std::size_t p) : kind(k), pos(p) {}

  Kind kind = Kind::RationalLit;
  std::size_t pos = 0;            // byte offset, for error messages
  Rational value;                 // RationalLit
  std::string name;               // Variable, Partial (the variable), Parameter
  std::vector<ExprAST> children;  // Sum/Product operands; Negation/Power child
  int exponent = 0;               // Power
};

/// Parses the full input. Juxtaposition as multiplication is accepted only
/// when requested (factored-polynomial input); everywhere else `*` is
/// mandatory.
ExprAST parse_expression(const std::string& text, bool juxtaposition = false);

/// A single rational constant, e.g. "3/4" or "-2".
Rational parse_rational(const std::string& text);

/// Commutative polynomial over variables; parameters and d_ tokens are
/// rejected. The declared overloads raise UndeclaredVariable for identifiers
/// outside the list.
MPoly parse_poly(const std::string& text);
MPoly parse_poly(const std::string& text,
                 const std::vector<std::string>& declared);

/// Polynomial over the reserved parameters s and t only.
MPoly parse_bipoly(const std::string& text);

/// Product of monic linear factors in a single parameter (s or t), with
/// optional `*`, powers, and the constant 1: "(s+1/2)*(s+7/6)", "(t+1/3)^2",
/// "1". Degree >= 2 factors raise NonRationalRoot.
FactoredPoly parse_factored(const std::string& text);

/// Differential operator; `param` names the central parameter accepted in the
/// input (the other reserved name is rejected).
WeylOp parse_operator(const std::string& text, const std::string& param = "s");
WeylOp parse_operator(const std::string& text,
                      const std::vector<std::string>& declared,
                      const std::string& param = "s");

}  // namespace bstar
