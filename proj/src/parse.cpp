#include "staralg/parse.hpp"

#include <cctype>

namespace staralg {

namespace {

class Parser {
public:
  Parser(const std::string& text, unsigned characteristic)
      : text_(text), p_(characteristic) {}

  StarPolynomial run() {
    StarPolynomial f = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  const std::string& text_;
  unsigned p_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  BigInt read_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    return BigInt(text_.substr(start, pos_ - start));
  }

  bool peek_keyword(const char* kw) {
    skip_ws();
    std::size_t n = std::char_traits<char>::length(kw);
    return text_.compare(pos_, n, kw) == 0;
  }

  StarPolynomial poly() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    StarPolynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Scalar coeff() {
    BigInt num = read_int();
    BigInt den = 1;
    if (eat('/')) den = read_int();
    if (den == 0) fail("zero denominator");
    return Scalar::rational(num, den, p_);
  }

  StarPolynomial term() {
    skip_ws();
    StarPolynomial acc = StarPolynomial::unit(p_);
    bool any_factor = false;
    if (peek_digit()) {
      Scalar c = coeff();
      acc = StarPolynomial::constant(c);
      if (!eat('*')) return acc;  // bare constant
    }
    for (;;) {
      acc = acc * factor();
      any_factor = true;
      skip_ws();
      if (!eat('*')) break;
      skip_ws();
      if (peek_digit()) {
        // grammar places coefficients up front only
        fail("unexpected number inside a product");
      }
    }
    (void)any_factor;
    return acc;
  }

  StarPolynomial factor() {
    StarPolynomial base = primary();
    while (peek_is('^')) {
      ++pos_;
      BigInt e = read_int();
      if (e < 0 || e > 64) fail("exponent out of range");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  StarPolynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      StarPolynomial f = poly();
      expect(')', "to close parenthesis");
      return f;
    }
    if (c == '[') {
      ++pos_;
      std::vector<StarPolynomial> args;
      args.push_back(poly());
      if (!peek_is(',')) fail("commutator needs at least two arguments");
      while (eat(',')) args.push_back(poly());
      expect(']', "to close commutator");
      return commutator(std::span<const StarPolynomial>(args));
    }
    if (peek_keyword("jord")) {
      pos_ += 4;
      expect('(', "after jord");
      StarPolynomial a = poly();
      expect(',', "between jord arguments");
      StarPolynomial b = poly();
      expect(')', "to close jord");
      return jordan(a, b);
    }
    if (peek_keyword("adj")) {
      pos_ += 3;
      expect('(', "after adj");
      StarPolynomial a = poly();
      expect(')', "to close adj");
      return star(a);
    }
    if (c == 'y' || c == 'z') {
      ++pos_;
      BigInt idx = read_int();
      if (idx < 1 || idx > 100000) fail("variable index out of range");
      Indet v{c == 'y' ? VarKind::Y : VarKind::Z,
              static_cast<std::uint32_t>(idx)};
      return StarPolynomial::variable(v, p_);
    }
    fail("expected a variable, '(', '[', 'jord', or 'adj'");
  }
};

}  // namespace

StarPolynomial parse_polynomial(const std::string& text, unsigned characteristic) {
  RingConfig{characteristic, false}.validate();
  return Parser(text, characteristic).run();
}

}  // namespace staralg
