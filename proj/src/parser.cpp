#include "foliasep/parser.hpp"

#include <cctype>

#include "foliasep/errors.hpp"

namespace foliasep {

namespace {

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  // Next significant character; U+2212 is reported as '-'.
  char peek() {
    skip_space();
    if (pos_ >= s_.size()) return '\0';
    if (is_unicode_minus()) return '-';
    return s_[pos_];
  }

  void take() {
    if (is_unicode_minus()) advance(3);
    else advance(1);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  BigInteger integer() {
    skip_space();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance(1);
    if (start == pos_) fail("expected an integer");
    return BigInteger(s_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(line_, col_, what); }
  bool at_end() { return peek() == '\0'; }
  size_t pos() const { return pos_; }
  const std::string& text() const { return s_; }

private:
  bool is_unicode_minus() const {
    return pos_ + 2 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xE2 &&
           static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 && static_cast<unsigned char>(s_[pos_ + 2]) == 0x92;
  }
  void advance(size_t n) {
    for (size_t k = 0; k < n && pos_ < s_.size(); ++k) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(s_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++pos_;
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(Lexer& lx) : lx_(lx) {}

  BiPoly expr() {
    BiPoly acc = term();
    for (char c = lx_.peek(); c == '+' || c == '-'; c = lx_.peek()) {
      lx_.take();
      BiPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

private:
  BiPoly term() {
    BiPoly acc = unary();
    for (char c = lx_.peek(); c == '*' || c == '/'; c = lx_.peek()) {
      lx_.take();
      BiPoly f = unary();
      if (c == '*') {
        acc = acc * f;
      } else {
        if (!f.is_constant() || f.is_zero()) lx_.fail("division is only allowed by nonzero constants");
        acc = acc.scaled(f.coeff(0, 0).inverse());
      }
    }
    return acc;
  }

  BiPoly unary() {
    char c = lx_.peek();
    if (c == '-') {
      lx_.take();
      return -unary();
    }
    if (c == '+') {
      lx_.take();
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (lx_.peek() == '^') {
      lx_.take();
      BigInteger e = lx_.integer();
      if (e > 4096) lx_.fail("exponent too large");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  BiPoly primary() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.take();
      BiPoly e = expr();
      lx_.expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly(FieldElement(BigRational(lx_.integer())));
    if (c == 'x') {
      lx_.take();
      return BiPoly::x();
    }
    if (c == 'y') {
      lx_.take();
      return BiPoly::y();
    }
    if (c == 'i') {
      lx_.take();
      return BiPoly(FieldElement::imaginary_unit());
    }
    if (c == '\0') lx_.fail("unexpected end of input");
    lx_.fail(std::string("unexpected character '") + c + "'");
  }

  Lexer& lx_;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

BiPoly parse_polynomial(const std::string& text) {
  Lexer lx(text);
  Parser p(lx);
  BiPoly r = p.expr();
  if (!lx.at_end()) lx.fail("trailing input");
  return r;
}

InputSpec parse_input(const std::string& text) {
  Lexer lx(text);
  Parser parser(lx);
  InputSpec spec;
  bool have_p = false, have_q = false;
  while (!lx.at_end()) {
    char name = lx.peek();
    if (name != 'P' && name != 'Q') lx.fail("expected 'P' or 'Q'");
    if ((name == 'P' && have_p) || (name == 'Q' && have_q)) lx.fail(std::string("duplicate definition of ") + name);
    lx.take();
    lx.expect('=');
    lx.skip_space();
    size_t start = lx.pos();
    BiPoly e = parser.expr();
    std::string src = trim(lx.text().substr(start, lx.pos() - start));
    lx.expect(';');
    if (name == 'P') {
      spec.P = e;
      spec.p_text = src;
      have_p = true;
    } else {
      spec.Q = e;
      spec.q_text = src;
      have_q = true;
    }
  }
  if (!have_p || !have_q) lx.fail("both P and Q must be defined");
  spec.field = spec.P.is_rational() && spec.Q.is_rational() ? FieldTag::Rational : FieldTag::Gaussian;
  if (spec.P.is_zero() && spec.Q.is_zero()) throw Error(ErrorCode::NotIsolated, "P and Q are both zero");
  require_isolated(spec.germ());
  return spec;
}

std::string print_input(const InputSpec& spec) {
  return "P = " + spec.P.to_string() + "; Q = " + spec.Q.to_string() + ";";
}

}  // namespace foliasep
