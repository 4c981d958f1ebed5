#include "cdelab/parse.hpp"

#include <cctype>
#include <string>

#include "cdelab/errors.hpp"

namespace cdelab {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int order) : text_(text), order_(order) {}

  RatFunc run() {
    RatFunc v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

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

  RatFunc expression() {
    RatFunc v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) throw DivisionByZeroError("division by zero at position " + std::to_string(at));
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const long exponent = signed_integer();
    if (paren && !accept(')')) fail("expected ')'");
    if (exponent < 0 && base.is_zero()) throw DivisionByZeroError("negative power of zero");
    return base.pow(exponent);
  }

  long signed_integer() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return negative ? -v : v;
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      return RatFunc(Cyclo::zeta(order_));
    }
    if (c == 't') {
      ++pos_;
      return RatFunc::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_scalar(std::string_view text, int cyclotomic_order) {
  require_supported_order(cyclotomic_order);
  return Parser(text, cyclotomic_order).run();
}

}  // namespace cdelab
