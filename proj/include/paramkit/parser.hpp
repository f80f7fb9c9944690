#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "paramkit/error.hpp"
#include "paramkit/polynomial.hpp"

namespace paramkit {

/// Longest accepted integer literal, in decimal digits.
inline constexpr std::size_t kMaxLiteralDigits = 4096;

namespace detail {

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint ('/' uint)? | ident | '(' expr ')'
template <CoefficientField F>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, RingPtr<F> ring, std::size_t line, std::size_t column)
      : text_(text), ring_(std::move(ring)), line_(line), column_(column) {}

  Polynomial<F> parse() {
    skip_space();
    if (at_end()) fail(ErrorCode::SyntaxError, "empty expression");
    Polynomial<F> p = expr();
    skip_space();
    if (!at_end()) fail(ErrorCode::SyntaxError, std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  Polynomial<F> expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance();
    }
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      Polynomial<F> rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial<F> factor() {
    Polynomial<F> b = base();
    skip_space();
    if (peek() == '^') {
      advance();
      skip_space();
      const std::size_t l = line_, c = column_;
      mpz_class e = uint_literal();
      if (e > mpz_class(static_cast<unsigned long>(Monomial::kMaxExponent))) {
        throw Error(ErrorCode::ExponentOverflow, "exponent too large", l, c);
      }
      try {
        return b.pow(e.get_ui());
      } catch (const Error& err) {
        throw Error(err.code(), err.what(), l, c);
      }
    }
    return b;
  }

  Polynomial<F> base() {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t l = line_, col = column_;
      mpz_class num = uint_literal();
      skip_space();
      if (peek() == '/') {
        advance();
        skip_space();
        mpz_class den = uint_literal();
        if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator", l, col);
        try {
          return Polynomial<F>::constant(ring_, ring_->field().from_fraction(num, den));
        } catch (const Error&) {
          throw Error(ErrorCode::CoefficientOverflow, "literal has no value mod p: denominator is divisible by p", l,
                      col);
        }
      }
      return Polynomial<F>::constant(ring_, ring_->field().from_integer(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t l = line_, col = column_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name.push_back(peek());
        advance();
      }
      auto idx = ring_->index_of(name);
      if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'", l, col);
      return Polynomial<F>::variable(ring_, *idx);
    }
    if (c == '(') {
      advance();
      Polynomial<F> inner = expr();
      skip_space();
      if (peek() != ')') fail(ErrorCode::SyntaxError, "expected ')'");
      advance();
      return inner;
    }
    if (at_end()) fail(ErrorCode::SyntaxError, "unexpected end of expression");
    fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
  }

  mpz_class uint_literal() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(ErrorCode::SyntaxError, "expected an unsigned integer");
    }
    const std::size_t l = line_, col = column_;
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    if (digits.size() > kMaxLiteralDigits) {
      throw Error(ErrorCode::CoefficientOverflow, "integer literal too long", l, col);
    }
    return mpz_class(digits, 10);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const {
    throw Error(code, msg, line_, column_);
  }

  std::string_view text_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace detail

/// Parses an expression over `ring`. Errors carry 1-based line/column,
/// offset by `line`/`column` when the text is embedded in a larger file.
template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring,
                               std::size_t line = 1, std::size_t column = 1) {
  return detail::ExpressionParser<F>(text, ring, line, column).parse();
}

template <CoefficientField F>
std::string render_monomial(const Monomial& m, const PolyRing<F>& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Renders in the expression grammar, leading term first.
template <CoefficientField F>
std::string render(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string coef = ring.field().format(it->coef);
    const bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (it->monomial.is_one()) {
      out += coef;
    } else {
      if (coef != "1") out += coef + '*';
      out += render_monomial(it->monomial, ring);
    }
  }
  return out;
}

}  // namespace paramkit
