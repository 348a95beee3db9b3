#pragma once

// Small grammar for elements of K^{p^-D}:
//   sum    := term (('+' | '-') term)*
//   term   := power (('*' | '/' | juxtaposition) power)*
//   power  := unary ('^' exponent)?
//   unary  := '-' unary | atom
//   atom   := integer | 'T' k | 'T_' k | '(' sum ')'
//   exponent := ['-'] integer | '{' ['-'] integer ['/' integer] '}' | '(' ... ')'
// Fractional exponents a/b require b to be a power of p not exceeding p^D.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "hopflab/error.hpp"
#include "hopflab/ratfunc.hpp"

namespace hopflab {

namespace detail {

class ExprParser {
 public:
  ExprParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  RatFunc parse() {
    RatFunc v = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'T' || c == '(';
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 18) fail("integer literal too long");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  RatFunc sum() {
    RatFunc v = term();
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = power();
    while (true) {
      if (accept('*'))
        v *= power();
      else if (accept('/')) {
        RatFunc d = power();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else if (starts_atom())
        v *= power();
      else
        return v;
    }
  }

  RatFunc power() {
    RatFunc base = unary();
    if (!accept('^')) return base;
    auto [num, den] = exponent();
    RatFunc r = base.pow(num);
    if (den == 1) return r;
    int k = 0;
    std::int64_t q = 1;
    while (q < den) {
      q *= field_.p;
      ++k;
    }
    if (q != den) fail("exponent denominator " + std::to_string(den) + " is not a power of p");
    if (k > field_.D) fail("exponent denominator exceeds p^D");
    return p_root(r, k);
  }

  std::pair<std::int64_t, std::int64_t> exponent() {
    char close = 0;
    if (accept('{'))
      close = '}';
    else if (accept('('))
      close = ')';
    bool neg = accept('-');
    std::int64_t num = integer();
    std::int64_t den = 1;
    if (close && accept('/')) den = integer();
    if (close && !accept(close)) fail(std::string("expected '") + close + "'");
    if (den == 0) fail("zero exponent denominator");
    return {neg ? -num : num, den};
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    return atom();
  }

  RatFunc atom() {
    skip_ws();
    if (accept('(')) {
      RatFunc v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (accept('T')) {
      accept('_');
      std::int64_t k = integer();
      if (k < 1 || k > field_.m) fail("variable T" + std::to_string(k) + " outside T1..T" + std::to_string(field_.m));
      return RatFunc::variable(field_, static_cast<int>(k - 1));
    }
    return RatFunc(field_, static_cast<std::int64_t>(field_.fp().reduce(integer())));
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(const Field& field, std::string_view text) {
  return detail::ExprParser(field, text).parse();
}

}  // namespace hopflab
