#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lda/diff_poly.hpp"
#include "lda/symbols.hpp"

namespace lda {

struct ParseOptions {
  // A bare function name (no argument list) denotes the unshifted term.
  bool allow_bare_functions = false;
};

namespace detail {

struct Token {
  enum Kind { integer, identifier, op, end } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::integer, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::identifier, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^(),=").find(c) != std::string_view::npos) {
      out.push_back({Token::op, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

// One function argument: the i-th variable plus an integer, or (for boundary
// patterns) something involving a wildcard identifier.
struct Argument {
  std::optional<std::size_t> variable;
  bool wildcard = false;
  long offset = 0;
  std::size_t pos = 0;
  std::string text;
};

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols, const std::vector<std::string>& functions,
         ParseOptions options)
      : text_(text), tokens_(tokenize(text)), symbols_(symbols), functions_(functions), options_(options) {}

  DiffPoly parse_full() {
    DiffPoly v = expr();
    expect_end();
    return v;
  }

  // f(arg, ...) with raw argument analysis; used for boundary patterns and targets.
  std::pair<std::size_t, std::vector<Argument>> function_application() {
    const Token& t = peek();
    if (t.kind != Token::identifier) throw ParseError(t.pos, "expected a function name");
    auto f = function_index(t.text);
    if (!f) throw UnknownSymbolError(t.pos, "unknown function '" + t.text + "'");
    advance();
    auto args = arguments();
    return {*f, std::move(args)};
  }

  void expect_op(const char* op) {
    if (peek().kind != Token::op || peek().text != op)
      throw ParseError(peek().pos, std::string("expected '") + op + "'");
    advance();
  }

  void expect_end() {
    if (peek().kind != Token::end) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
  }

  const Token& peek() const { return tokens_[pos_]; }

  void advance() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

 private:

  bool accept(const char* op) {
    if (peek().kind == Token::op && peek().text == op) {
      advance();
      return true;
    }
    return false;
  }

  std::optional<std::size_t> function_index(const std::string& name) const {
    for (std::size_t i = 0; i < functions_.size(); ++i)
      if (functions_[i] == name) return i;
    return std::nullopt;
  }

  DiffPoly expr() {
    DiffPoly v = term();
    while (true) {
      if (accept("+")) v = v + term();
      else if (accept("-")) v = v - term();
      else return v;
    }
  }

  DiffPoly term() {
    DiffPoly v = unary();
    while (true) {
      const std::size_t at = peek().pos;
      if (accept("*")) {
        DiffPoly w = unary();
        if (v.has_terms() && w.has_terms()) throw ParseError(at, "product of two unknown-function terms is not linear");
        v = v.has_terms() ? v.scaled(w.constant()) : w.scaled(v.constant());
      } else if (accept("/")) {
        DiffPoly w = unary();
        if (w.has_terms()) throw ParseError(at, "division by an unknown-function term");
        if (w.constant().is_zero()) throw DivisionByZero();
        v = v.scaled(w.constant().inverse());
      } else {
        return v;
      }
    }
  }

  DiffPoly unary() {
    if (accept("-")) return unary().scaled(RatFun(-1));
    if (accept("+")) return unary();
    return power();
  }

  DiffPoly power() {
    DiffPoly base = primary();
    const std::size_t at = peek().pos;
    if (!accept("^")) return base;
    bool negative = false;
    if (accept("-")) negative = true;
    const Token& e = peek();
    if (e.kind != Token::integer) throw ParseError(e.pos, "exponent must be an integer literal");
    const int exponent = std::stoi(e.text);
    advance();
    if (base.has_terms()) throw ParseError(at, "power of an unknown-function term");
    return DiffPoly(base.constant().pow(negative ? -exponent : exponent));
  }

  DiffPoly primary() {
    const Token t = peek();
    if (t.kind == Token::integer) {
      advance();
      return DiffPoly(RatFun(Integer(t.text)));
    }
    if (accept("(")) {
      DiffPoly v = expr();
      expect_op(")");
      return v;
    }
    if (t.kind == Token::identifier) {
      advance();
      if (auto f = function_index(t.text)) {
        if (peek().kind == Token::op && peek().text == "(") return DiffPoly::term(application(*f, t.pos));
        if (options_.allow_bare_functions)
          return DiffPoly::term(DiffTerm{*f, Exponents(symbols_.num_variables(), 0)});
        throw ParseError(t.pos, "function '" + t.text + "' needs an argument list");
      }
      if (auto s = symbols_.index_of(t.text)) return DiffPoly(RatFun::symbol(symbols_.size(), *s));
      throw UnknownSymbolError(t.pos, "unknown symbol '" + t.text + "'");
    }
    throw ParseError(t.pos, t.kind == Token::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  DiffTerm application(std::size_t f, std::size_t at) {
    auto args = arguments();
    const std::size_t n = symbols_.num_variables();
    if (args.size() != n)
      throw ArityError(at, "function '" + functions_[f] + "' takes " + std::to_string(n) + " arguments, got " +
                               std::to_string(args.size()));
    DiffTerm term{f, Exponents(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
      const Argument& a = args[i];
      if (a.wildcard || !a.variable || *a.variable != i)
        throw ParseError(a.pos, "argument " + std::to_string(i + 1) + " must be '" + symbols_.variables()[i] +
                                    "' plus a nonnegative integer");
      if (a.offset < 0)
        throw NegativeShiftError(a.pos, "negative shift in '" + a.text +
                                            "'; re-offset the unknown so that every shift is nonnegative");
      term.exps[i] = static_cast<std::int32_t>(a.offset);
    }
    return term;
  }

  std::vector<Argument> arguments() {
    expect_op("(");
    std::vector<Argument> args;
    if (accept(")")) return args;
    do {
      args.push_back(argument());
    } while (accept(","));
    expect_op(")");
    return args;
  }

  // Signed sum of identifiers and integers.
  Argument argument() {
    Argument a;
    a.pos = peek().pos;
    int variable_count = 0;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept("-")) sign = -1;
      else if (!first && !accept("+")) break;
      else if (first) accept("+");
      first = false;
      const Token t = peek();
      if (t.kind == Token::integer) {
        a.offset += sign * std::stol(t.text);
      } else if (t.kind == Token::identifier) {
        auto v = symbols_.variable_index(t.text);
        if (v && sign == 1) {
          a.variable = v;
          ++variable_count;
        } else if (v) {
          throw ParseError(t.pos, "variable '" + t.text + "' must appear with coefficient +1");
        } else {
          a.wildcard = true;
        }
      } else {
        throw ParseError(t.pos, "malformed function argument");
      }
      advance();
      if (peek().kind == Token::op && (peek().text == "*" || peek().text == "/" || peek().text == "^"))
        throw ParseError(peek().pos, "function arguments must be a variable plus an integer");
    }
    if (variable_count > 1) throw ParseError(a.pos, "function argument mentions more than one variable");
    a.text = std::string(text_.substr(a.pos, peek().pos - a.pos));
    while (!a.text.empty() && std::isspace(static_cast<unsigned char>(a.text.back()))) a.text.pop_back();
    return a;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const SymbolTable& symbols_;
  const std::vector<std::string>& functions_;
  ParseOptions options_;
};

}  // namespace detail

inline DiffPoly parse_expression(std::string_view text, const SymbolTable& symbols,
                                 const std::vector<std::string>& functions, ParseOptions options = {}) {
  return detail::Parser(text, symbols, functions, options).parse_full();
}

// Parses an expression that must not mention unknown functions.
inline RatFun parse_ratfun(std::string_view text, const SymbolTable& symbols) {
  static const std::vector<std::string> none;
  DiffPoly p = parse_expression(text, symbols, none);
  RatFun c = p.constant();
  return c.arity() == symbols.size() ? c : RatFun(c.num().promoted(symbols.size()), c.den().promoted(symbols.size()));
}

// A single term such as "f(k+3,n+2)".
inline DiffTerm parse_term(std::string_view text, const SymbolTable& symbols,
                           const std::vector<std::string>& functions) {
  DiffPoly p = parse_expression(text, symbols, functions);
  if (p.terms().size() != 1 || !p.constant().is_zero() || !p.terms().begin()->second.is_one())
    throw ParseError(0, "expected a single unknown-function term");
  return p.terms().begin()->first;
}

}  // namespace lda
