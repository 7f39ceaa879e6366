#include <cctype>
#include <string>

#include "glueform/error.hpp"
#include "glueform/polynomial.hpp"

namespace glueform {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarContext& context) : text_(text), context_(context) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial result = expr();
    skip_space();
    if (!at_end()) unexpected();
    return result;
  }

 private:
  Polynomial expr() {
    Polynomial result = signed_term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        result += signed_term();
      } else if (peek() == '-') {
        ++pos_;
        result -= signed_term();
      } else {
        return result;
      }
    }
  }

  Polynomial signed_term() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -term();
    }
    return term();
  }

  Polynomial term() {
    Polynomial result = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        result = result * factor();
      } else if (starts_operand()) {
        fail("implicit multiplication is not allowed");
      } else {
        return result;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_space();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      if (peek() == '(') fail("non-integer exponent");
      fail("expected exponent");
    }
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == '/') fail("non-integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("exponent too large", start);
    return pow(b, static_cast<std::uint32_t>(std::stoul(digits)));
  }

  Polynomial base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("unbalanced parenthesis", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    if (at_end()) fail("unexpected end of expression");
    unexpected();
  }

  Polynomial rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == '.') fail("decimal literals are not supported");
    const std::string_view literal = text_.substr(start, pos_ - start);
    try {
      return Polynomial::constant(context_, Rational::parse(literal));
    } catch (const ParseError& e) {
      fail(e.what(), start);
    }
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = context_.index_of(name);
    if (!index)
      fail("unknown variable '" + std::string(name) + "' (context " + context_.to_string() + ")",
           start);
    return Polynomial::variable(context_, *index);
  }

  bool starts_operand() const {
    const char c = peek();
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void unexpected() {
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }
  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError("column " + std::to_string(at + 1) + ": " + message + " in \"" +
                         std::string(text_) + "\"",
                     at + 1);
  }

  std::string_view text_;
  const VarContext& context_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarContext& context) {
  return PolyParser(text, context).parse();
}

}  // namespace glueform
