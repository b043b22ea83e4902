#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "folia/error.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// Recursive-descent parser for the polynomial text grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ['^' natural]
//   base   := integer ['/' integer] | name | '(' expr ')'
//
// Implicit multiplication ("3x", "x y") is rejected. U+2212 is accepted as
// a minus sign.
template <class F>
class PolyParser {
 public:
  using Poly = Polynomial<F>;

  PolyParser(std::string_view text, std::span<const std::string> names, const F& field)
      : text_(text), names_(names), field_(field), order_(TermOrder::grevlex(names.size())) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Poly expr() {
    skip_ws();
    bool neg = false;
    if (accept_minus()) neg = true;
    else accept('+');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (accept('+')) acc += term();
      else if (accept_minus()) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc *= factor();
        continue;
      }
      if (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
                        text_[pos_] == '_'))
        fail("implicit multiplication is not allowed; use '*'");
      break;
    }
    return acc;
  }

  Poly factor() {
    skip_ws();
    if (accept_minus()) return -factor();
    Poly b = base();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(read_integer());
      skip_ws();
      if (accept('/')) {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected denominator after '/'");
        std::size_t at = pos_;
        mpz_class den = read_integer();
        if (den == 0) throw ParseError("zero denominator", at);
        q = mpq_class(q.get_num(), den);
        q.canonicalize();
      }
      return Poly::constant(field_, order_, field_.from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Poly::variable(field_, order_, i);
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
    return Poly(field_, order_);
  }

  mpz_class read_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_minus() {
    if (accept('-')) return true;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::span<const std::string> names_;
  F field_;
  TermOrder order_;
  std::size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_poly(std::string_view text, std::span<const std::string> names, const F& field) {
  return PolyParser<F>(text, names, field).parse();
}

}  // namespace folia
