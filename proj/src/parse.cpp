// Infix parser for coefficients and elements of N_q^-.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary | unary)*     juxtaposition multiplies
//   unary   := '-' unary | power
//   power   := primary ['^' exp]
//   exp     := ['-'] int | '(' ['-'] int ['/' int] ')'
//   primary := int | 'q' | 'g' | 'x[' int ']' | '[' int ']' | '(' expr ')'
//
// 'g' is the central gamma, '[n]' the quantum integer. Exponents of q and g may
// be half-integers; other bases take integer exponents. Division is only by
// gamma-homogeneous scalars. Products of x's are normalized as they are built.

#include <cctype>

#include "imcrystal/qalgebra.hpp"

namespace imc {
namespace {

bool is_scalar(const Element& e) {
  return e.is_zero() || (e.size() == 1 && e.terms().begin()->first.empty());
}

Coeff scalar_value(const Element& e) { return e.coeff(Monomial{}); }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Element parse_all() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Element e = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
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

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer literal too large");
    }
    const long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Element expr() {
    Element acc;
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Element term() {
    Element acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, unary());
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Element d = unary();
        if (!is_scalar(d)) {
          pos_ = at;
          fail("division by a non-scalar");
        }
        try {
          acc *= Coeff(1) / scalar_value(d);
        } catch (const ArithmeticError& e) {
          pos_ = at;
          fail(e.what());
        }
      } else if (c == 'x' || c == 'q' || c == 'g' || c == '(' || c == '[') {
        acc = multiply(acc, unary());
      } else {
        break;
      }
    }
    return acc;
  }

  Element unary() {
    if (accept('-')) return -unary();
    return power();
  }

  // Exponent in half-units.
  int half_exponent() {
    if (accept('(')) {
      const long num = integer();
      long den = 1;
      if (accept('/')) den = integer();
      expect(')');
      if (den == 0) fail("zero exponent denominator");
      if ((2 * num) % den != 0) fail("exponent must be a multiple of 1/2");
      return static_cast<int>(2 * num / den);
    }
    return static_cast<int>(2 * integer());
  }

  Element power() {
    const char c = peek();
    if (c == 'q' || c == 'g') {
      ++pos_;
      int e = 2;
      if (accept('^')) e = half_exponent();
      if (c == 'q') return Element(Monomial{}, Coeff(QRat::q_pow(HalfExp{e})));
      return Element(Monomial{}, Coeff::gamma_pow(HalfExp{e}));
    }
    Element base = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      const int e = half_exponent();
      if (e % 2 != 0) {
        pos_ = at;
        fail("half-integer exponent on a base other than q or g");
      }
      int n = e / 2;
      Element result = Element::one();
      if (n < 0) {
        if (!is_scalar(base)) {
          pos_ = at;
          fail("negative power of a non-scalar");
        }
        try {
          base = Element(Monomial{}, Coeff(1) / scalar_value(base));
        } catch (const ArithmeticError& err) {
          pos_ = at;
          fail(err.what());
        }
        n = -n;
      }
      for (int i = 0; i < n; ++i) result = multiply(result, base);
      return result;
    }
    return base;
  }

  Element primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Element(Monomial{}, Coeff(integer()));
    }
    if (c == 'x') {
      ++pos_;
      expect('[');
      const long n = integer();
      expect(']');
      return Element::generator(static_cast<int>(n));
    }
    if (c == '[') {
      ++pos_;
      const long n = integer();
      expect(']');
      return Element(Monomial{}, Coeff(quantum_int(n)));
    }
    if (c == '(') {
      ++pos_;
      Element e = expr();
      expect(')');
      return e;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unknown symbol '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text) { return Parser(text).parse_all(); }

Coeff parse_coeff(std::string_view text) {
  Element e = parse_element(text);
  if (!is_scalar(e)) throw ParseError("expected a coefficient, found monomials", 0);
  return scalar_value(e);
}

}  // namespace imc
