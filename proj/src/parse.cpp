#include "liealg/errors.hpp"
#include "liealg/scalar.hpp"

#include <cctype>

namespace liealg {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::set<std::string> &allowed) : text_(text), allowed_(allowed) {}

  RatFunc parse() {
    RatFunc value = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return value;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc value = term();
    for (;;) {
      if (accept('+'))
        value = value + term();
      else if (accept('-'))
        value = value - term();
      else
        return value;
    }
  }

  RatFunc term() {
    RatFunc value = factor();
    for (;;) {
      if (accept('*')) {
        value = value * factor();
      } else if (accept('/')) {
        RatFunc divisor = factor();
        if (divisor.is_zero())
          throw DivisionByZero();
        value = value / divisor;
      } else {
        return value;
      }
    }
  }

  RatFunc factor() {
    if (accept('-'))
      return -factor();
    RatFunc base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected exponent", pos_);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4)
        throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')'))
        throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return RatFunc(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!allowed_.empty() && !allowed_.contains(name))
        throw ParseError("unknown parameter '" + name + "'", start);
      return RatFunc(Poly::variable(name));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const std::set<std::string> &allowed_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view text, const std::set<std::string> &allowed) {
  RatFunc value = Parser(text, allowed).parse();
  if (value.is_constant())
    return Scalar(value.constant_value());
  return Scalar(value);
}

} // namespace liealg
