#include "bstar/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "bstar/errors.hpp"

namespace bstar {

namespace {

struct Token {
  enum class Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      out.push_back({Token::Kind::Int, text.substr(start, i - start), start});
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      while (i < text.size() &&
             (std::islower(static_cast<unsigned char>(text[i])) ||
              std::isdigit(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      out.push_back({Token::Kind::Ident, text.substr(start, i - start), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '/': kind = Token::Kind::Slash; break;
      case '^': kind = Token::Kind::Caret; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, text.substr(start, 1), start});
    ++i;
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

bool valid_variable_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    return false;
  return name.rfind("d_", 0) != 0;
}

int parse_exponent(const Token& tok) {
  if (tok.text.size() > 6) throw SyntaxError("exponent too large", tok.pos);
  return std::stoi(tok.text);
}

class Parser {
 public:
  Parser(const std::string& text, bool juxtaposition)
      : tokens_(lex(text)), juxtaposition_(juxtaposition) {}

  ExprAST parse() {
    ExprAST out = expr();
    expect(Token::Kind::End, "unexpected trailing input");
    return out;
  }

 private:
  const Token& peek() const { return tokens_[next_]; }
  const Token& get() { return tokens_[next_++]; }
  void expect(Token::Kind kind, const std::string& msg) {
    if (peek().kind != kind) throw SyntaxError(msg, peek().pos);
    ++next_;
  }

  ExprAST expr() {
    ExprAST lhs = term();
    std::vector<ExprAST> operands;
    operands.push_back(std::move(lhs));
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const Token op = get();
      ExprAST rhs = term();
      if (op.kind == Token::Kind::Minus) {
        ExprAST neg{ExprAST::Kind::Negation, op.pos};
        neg.children.push_back(std::move(rhs));
        operands.push_back(std::move(neg));
      } else {
        operands.push_back(std::move(rhs));
      }
    }
    if (operands.size() == 1) return std::move(operands.front());
    ExprAST sum{ExprAST::Kind::Sum, operands.front().pos};
    sum.children = std::move(operands);
    return sum;
  }

  bool starts_factor(Token::Kind kind) const {
    return kind == Token::Kind::Int || kind == Token::Kind::Ident ||
           kind == Token::Kind::LParen;
  }

  ExprAST term() {
    std::vector<ExprAST> factors;
    factors.push_back(unary());
    while (true) {
      if (peek().kind == Token::Kind::Star) {
        get();
        factors.push_back(unary());
      } else if (juxtaposition_ && starts_factor(peek().kind)) {
        factors.push_back(unary());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors.front());
    ExprAST prod{ExprAST::Kind::Product, factors.front().pos};
    prod.children = std::move(factors);
    return prod;
  }

  ExprAST unary() {
    if (peek().kind == Token::Kind::Minus) {
      const Token op = get();
      ExprAST neg{ExprAST::Kind::Negation, op.pos};
      neg.children.push_back(unary());
      return neg;
    }
    return primary();
  }

  ExprAST primary() {
    ExprAST base = atom();
    if (peek().kind == Token::Kind::Caret) {
      get();
      if (peek().kind != Token::Kind::Int)
        throw SyntaxError("expected a nonnegative integer exponent", peek().pos);
      const Token e = get();
      ExprAST pw{ExprAST::Kind::Power, base.pos};
      pw.exponent = parse_exponent(e);
      pw.children.push_back(std::move(base));
      return pw;
    }
    return base;
  }

  ExprAST atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::Int: {
        const Token num = get();
        ExprAST lit{ExprAST::Kind::RationalLit, num.pos};
        if (peek().kind == Token::Kind::Slash) {
          get();
          if (peek().kind != Token::Kind::Int)
            throw SyntaxError("expected a denominator", peek().pos);
          const Token den = get();
          if (std::all_of(den.text.begin(), den.text.end(),
                          [](char c) { return c == '0'; }))
            throw SyntaxError("zero denominator", den.pos);
          lit.value = Rational::from_string(num.text + "/" + den.text);
        } else {
          lit.value = Rational::from_string(num.text);
        }
        return lit;
      }
      case Token::Kind::Ident: {
        const Token id = get();
        if (id.text == "s" || id.text == "t") {
          ExprAST p{ExprAST::Kind::Parameter, id.pos};
          p.name = id.text;
          return p;
        }
        if (id.text.rfind("d_", 0) == 0) {
          const std::string var = id.text.substr(2);
          if (!valid_variable_name(var))
            throw SyntaxError("malformed differential token '" + id.text + "'",
                              id.pos);
          if (var == "s" || var == "t")
            throw SyntaxError("cannot differentiate by a parameter", id.pos);
          ExprAST p{ExprAST::Kind::Partial, id.pos};
          p.name = var;
          return p;
        }
        ExprAST v{ExprAST::Kind::Variable, id.pos};
        v.name = id.text;
        return v;
      }
      case Token::Kind::LParen: {
        get();
        ExprAST inner = expr();
        expect(Token::Kind::RParen, "expected ')'");
        return inner;
      }
      case Token::Kind::End:
        throw SyntaxError("unexpected end of input", tok.pos);
      default:
        throw SyntaxError("unexpected token '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t next_ = 0;
  bool juxtaposition_;
};

void check_declared(const std::string& name, std::size_t /*pos*/,
                    const std::vector<std::string>* declared) {
  if (declared &&
      std::find(declared->begin(), declared->end(), name) == declared->end())
    throw UndeclaredVariable("variable '" + name + "' is not declared");
}

MPoly eval_poly(const ExprAST& n, const std::vector<std::string>* declared,
                bool params_as_variables) {
  switch (n.kind) {
    case ExprAST::Kind::RationalLit:
      return MPoly(n.value);
    case ExprAST::Kind::Variable:
      check_declared(n.name, n.pos, declared);
      return MPoly::variable(n.name);
    case ExprAST::Kind::Parameter:
      if (!params_as_variables)
        throw SyntaxError("parameter '" + n.name + "' not allowed here", n.pos);
      return MPoly::variable(n.name);
    case ExprAST::Kind::Partial:
      throw SyntaxError("differential token in polynomial input", n.pos);
    case ExprAST::Kind::Sum: {
      MPoly out;
      for (const auto& c : n.children)
        out += eval_poly(c, declared, params_as_variables);
      return out;
    }
    case ExprAST::Kind::Product: {
      MPoly out(Rational(1));
      for (const auto& c : n.children)
        out = out * eval_poly(c, declared, params_as_variables);
      return out;
    }
    case ExprAST::Kind::Power:
      return eval_poly(n.children.front(), declared, params_as_variables)
          .pow(n.exponent);
    case ExprAST::Kind::Negation:
      return -eval_poly(n.children.front(), declared, params_as_variables);
  }
  throw InternalInconsistency("unhandled expression node");
}

WeylOp eval_operator(const ExprAST& n, const std::vector<std::string>* declared,
                     const std::string& param) {
  switch (n.kind) {
    case ExprAST::Kind::RationalLit:
      return WeylOp::constant(n.value);
    case ExprAST::Kind::Variable:
      check_declared(n.name, n.pos, declared);
      return WeylOp::from_polynomial(MPoly::variable(n.name));
    case ExprAST::Kind::Parameter:
      if (n.name != param)
        throw SyntaxError("parameter '" + n.name + "' not allowed here (use '" +
                              param + "')",
                          n.pos);
      return WeylOp::parameter();
    case ExprAST::Kind::Partial:
      check_declared(n.name, n.pos, declared);
      return WeylOp::derivation(n.name);
    case ExprAST::Kind::Sum: {
      WeylOp out;
      for (const auto& c : n.children) out += eval_operator(c, declared, param);
      return out;
    }
    case ExprAST::Kind::Product: {
      WeylOp out = WeylOp::identity();
      for (const auto& c : n.children)
        out = out * eval_operator(c, declared, param);
      return out;
    }
    case ExprAST::Kind::Power:
      return eval_operator(n.children.front(), declared, param).pow(n.exponent);
    case ExprAST::Kind::Negation:
      return eval_operator(n.children.front(), declared, param) * Rational(-1);
  }
  throw InternalInconsistency("unhandled expression node");
}

void scan_parameters(const ExprAST& n, std::string& param) {
  if (n.kind == ExprAST::Kind::Parameter) {
    if (param.empty()) {
      param = n.name;
    } else if (param != n.name) {
      throw SyntaxError("mixed parameters '" + param + "' and '" + n.name + "'",
                        n.pos);
    }
  }
  for (const auto& c : n.children) scan_parameters(c, param);
}

/// One syntactic factor of a factored polynomial: evaluates to a univariate
/// polynomial in the parameter and feeds the root multiset. Products and
/// powers distribute into their children, so ((s+1)(s+2))^2 works.
void absorb_factor(const ExprAST& n, const std::string& param, int mult,
                   FactoredPoly& out) {
  if (n.kind == ExprAST::Kind::Product) {
    for (const auto& c : n.children) absorb_factor(c, param, mult, out);
    return;
  }
  if (n.kind == ExprAST::Kind::Power) {
    absorb_factor(n.children.front(), param, mult * n.exponent, out);
    return;
  }
  const ExprAST* base = &n;
  const MPoly p = eval_poly(*base, nullptr, true);
  for (const auto& v : p.vars())
    if (p.uses(v) && v != param)
      throw SyntaxError("only the parameter '" + param +
                            "' may appear in factored input",
                        base->pos);
  const int deg = p.degree_in(param);
  if (deg == 0) {
    if (!(p == MPoly(Rational(1))))
      throw SyntaxError("constant factor other than 1 in factored input",
                        base->pos);
    return;
  }
  if (deg >= 2)
    throw NonRationalRoot("factor of degree " + std::to_string(deg) +
                          " does not expose a rational root");
  const auto cs = coefficients_in(p, param);
  const auto lead = cs.find(1);
  if (lead == cs.end() || !(lead->second == MPoly(Rational(1))))
    throw NonRationalRoot("factor is not monic in '" + param + "'");
  Rational root(0);
  const auto c0 = cs.find(0);
  if (c0 != cs.end()) {
    if (!c0->second.is_constant())
      throw SyntaxError("malformed linear factor", base->pos);
    root = c0->second.constant_value();
  }
  out.insert(root, mult);
}

}  // namespace

ExprAST parse_expression(const std::string& text, bool juxtaposition) {
  return Parser(text, juxtaposition).parse();
}

Rational parse_rational(const std::string& text) {
  const MPoly p = eval_poly(parse_expression(text), nullptr, false);
  if (!p.is_constant())
    throw SyntaxError("expected a rational constant", 0);
  return p.constant_value();
}

MPoly parse_poly(const std::string& text) {
  return eval_poly(parse_expression(text), nullptr, false);
}

MPoly parse_poly(const std::string& text,
                 const std::vector<std::string>& declared) {
  return eval_poly(parse_expression(text), &declared, false);
}

MPoly parse_bipoly(const std::string& text) {
  const ExprAST ast = parse_expression(text);
  const std::vector<std::string> none;
  return eval_poly(ast, &none, true).aligned_to({"s", "t"});
}

FactoredPoly parse_factored(const std::string& text) {
  const ExprAST ast = parse_expression(text, /*juxtaposition=*/true);
  std::string param;
  scan_parameters(ast, param);
  if (param.empty()) param = "s";
  FactoredPoly out;
  absorb_factor(ast, param, 1, out);
  return out;
}

WeylOp parse_operator(const std::string& text, const std::string& param) {
  return eval_operator(parse_expression(text), nullptr, param);
}

WeylOp parse_operator(const std::string& text,
                      const std::vector<std::string>& declared,
                      const std::string& param) {
  return eval_operator(parse_expression(text), &declared, param);
}

}  // namespace bstar
