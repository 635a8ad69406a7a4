#include "vforge/parse.hpp"

#include <cctype>

namespace vforge {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column),
      reason_(msg) {}

namespace {

class Scanner {
 public:
  Scanner(std::string_view s, std::size_t line, std::size_t off) : s_(s), line_(line), off_(off) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line_, off_ + std::min(pos_, s_.size()) + 1, msg);
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t off_;
  std::size_t pos_ = 0;
};

bool is_var(char c) { return c == 'X' || c == 'Y' || c == 'x' || c == 'y'; }

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t line, std::size_t off) : sc_(s, line, off) {}

  Poly run() {
    if (sc_.done()) sc_.fail("empty polynomial");
    Poly p = expr();
    if (!sc_.done()) sc_.fail(std::string("unexpected '") + sc_.peek() + "'");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (sc_.accept('+'))
        acc += term();
      else if (sc_.accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  bool starts_factor() {
    char c = sc_.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || is_var(c) || c == '(';
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (sc_.accept('*')) {
        acc *= unary();
      } else if (sc_.accept('/')) {
        std::size_t at = sc_.pos();
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          sc_.set_pos(at);
          sc_.fail("division only by a nonzero constant");
        }
        acc *= Rational(1) / d.coeff(0);
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (sc_.accept('-')) return -unary();
    if (sc_.accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (sc_.accept('^')) {
      Integer e = sc_.integer();
      if (e > 4096) sc_.fail("exponent too large");
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly atom() {
    char c = sc_.peek();
    if (c == '(') {
      sc_.accept('(');
      Poly p = expr();
      sc_.expect(')');
      return p;
    }
    if (is_var(c)) {
      char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (var_ != '\0' && var_ != up) sc_.fail("mixed variables");
      var_ = up;
      sc_.set_pos(sc_.pos() + 1);
      return Poly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(Rational(sc_.integer()));
    if (c == '\0') sc_.fail("unexpected end of input");
    sc_.fail(std::string("unexpected '") + c + "'");
  }

  Scanner sc_;
  char var_ = '\0';
};

Rational signed_rational(Scanner& sc) {
  bool neg = false;
  while (true) {
    if (sc.accept('-'))
      neg = !neg;
    else if (!sc.accept('+'))
      break;
  }
  Integer num = sc.integer();
  Integer den = 1;
  if (sc.accept('/')) {
    den = sc.integer();
    if (den == 0) sc.fail("zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t line, std::size_t col_offset) {
  return PolyParser(text, line, col_offset).run();
}

Value parse_value(std::string_view text, std::size_t line, std::size_t col_offset) {
  Scanner sc(text, line, col_offset);
  if (sc.done()) sc.fail("empty value");
  {
    sc.skip();
    std::string_view r = sc.rest();
    std::size_t n = r.size();
    while (n > 0 && std::isspace(static_cast<unsigned char>(r[n - 1]))) --n;
    if (r.substr(0, n) == "inf" || r.substr(0, n) == "Infinity") return Value::infinity();
  }
  if (sc.accept('(')) {
    Rational a = signed_rational(sc);
    sc.expect(',');
    Rational b = signed_rational(sc);
    sc.expect(')');
    if (!sc.done()) sc.fail("trailing input after value");
    return Value(a, b);
  }
  Rational r = 0, s = 0;
  bool seen_r = false, seen_s = false;
  bool first = true;
  while (!sc.done()) {
    bool neg = false;
    if (sc.accept('-'))
      neg = true;
    else if (sc.accept('+'))
      ;
    else if (!first)
      sc.fail("expected '+' or '-'");
    first = false;
    Rational c = 1;
    bool has_num = false;
    if (sc.at_digit()) {
      Integer num = sc.integer();
      Integer den = 1;
      if (sc.accept('/')) {
        den = sc.integer();
        if (den == 0) sc.fail("zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
      has_num = true;
    }
    sc.accept('*');
    if (sc.accept('t')) {
      if (seen_s) sc.fail("repeated tau term");
      seen_s = true;
      s = neg ? Rational(-c) : c;
    } else {
      if (!has_num) sc.fail("expected a number");
      if (seen_r) sc.fail("repeated rational term");
      seen_r = true;
      r = neg ? Rational(-c) : c;
    }
  }
  return Value(r, s);
}

Rational parse_rational(std::string_view text) {
  Scanner sc(text, 1, 0);
  Rational r = signed_rational(sc);
  if (!sc.done()) sc.fail("trailing input after rational");
  return r;
}

}  // namespace vforge
