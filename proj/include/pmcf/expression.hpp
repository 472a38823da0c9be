#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "pmcf/errors.hpp"
#include "pmcf/rational.hpp"

namespace pmcf {

/// Recursive-descent parser for small rational expressions in one variable:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := ('+'|'-') unary | power
///   power  := atom ('^' integer)?
///   atom   := rational | 'x' | '(' expr ')'
/// Juxtaposition such as "3x" is accepted as multiplication.
///
/// Ring supplies: T constant(const Rational&), T variable(),
/// T divide(const T&, const T&), T power(const T&, long), plus +, -, *.
template <typename Ring>
class ExpressionParser {
 public:
  using T = decltype(std::declval<Ring>().variable());

  ExpressionParser(std::string_view text, Ring ring) : text_(text), ring_(std::move(ring)) {}

  T parse() {
    T value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  T expr() {
    T value = term();
    for (;;) {
      if (accept('+')) value = value + term();
      else if (accept('-')) value = value - term();
      else return value;
    }
  }

  T term() {
    T value = unary();
    for (;;) {
      if (accept('*')) value = value * unary();
      else if (accept('/')) value = ring_.divide(value, unary());
      else if (starts_atom()) value = value * power();
      else return value;
    }
  }

  T unary() {
    if (accept('-')) return ring_.constant(Rational(0)) - unary();
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = atom();
    if (accept('^')) {
      skip_space();
      bool negative = accept('-');
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (begin == pos_) fail("expected integer exponent");
      const long e = std::stol(std::string(text_.substr(begin, pos_ - begin)));
      return ring_.power(base, negative ? -e : e);
    }
    return base;
  }

  T atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (c == 'x') {
      ++pos_;
      return ring_.variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.constant(Rational(Integer(std::string(text_.substr(begin, pos_ - begin)), 10)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace pmcf
