#include "cayley/parse.hpp"

#include <cctype>

namespace cayley {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarSetPtr vars) : text_(text), vars_(std::move(vars)) {}

  MultiPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    MultiPoly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  MultiPoly expr() {
    MultiPoly acc(vars_);
    bool negate = false;
    if (accept('+')) {
    } else if (accept('-')) {
      negate = true;
    }
    MultiPoly first = term();
    acc = negate ? -first : first;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        MultiPoly d = power();
        auto cv = d.constant_value();
        if (!cv) fail_at(at, "division is only allowed by constants");
        if (sgn(*cv) == 0) fail_at(at, "division by zero");
        acc *= Rational(1 / *cv);
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a non-negative integer exponent");
      }
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail_at(start, "exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MultiPoly atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(vars_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (!vars_->contains(name)) fail_at(start, "unknown variable '" + name + "'");
      return MultiPoly::variable(vars_, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  VarSetPtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarSetPtr& vars) { return Parser(text, vars).parse(); }

MultiPoly parse_poly(std::string_view text) {
  bool has_points = false;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    bool boundary = i == 0 || !(std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_');
    if (boundary && text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      has_points = true;
      break;
    }
  }
  return parse_poly(text, has_points ? VarSet::points_and_pluecker() : VarSet::pluecker());
}

}  // namespace cayley
