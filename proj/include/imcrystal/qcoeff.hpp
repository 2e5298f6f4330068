#pragma once

// Exact coefficients: rational functions in s = q^{1/2} over the rationals,
// tensored with Laurent monomials in a formal central gamma^{1/2}.

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "imcrystal/error.hpp"

namespace imc {

using Integer = mpz_class;
using Rational = mpq_class;

// An exponent counted in powers of q^{1/2}; q^2 has HalfExp{4}.
struct HalfExp {
  int value = 0;
  friend auto operator<=>(const HalfExp&, const HalfExp&) = default;
};

// Integer polynomial in s, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<Integer>;

// Canonical element of Q(s), stored as scale * s^shift * num(s) / den(s).
//   - num and den are primitive with positive leading coefficient,
//   - num(0) != 0 and den(0) != 0 so the s-adic order lives in `shift`,
//   - gcd(num, den) = 1.
// Zero is scale 0, shift 0, num = den = 1. Equal values compare equal field by field.
class QRat {
 public:
  QRat();
  QRat(long n);  // NOLINT(google-explicit-constructor)
  QRat(const Rational& r);  // NOLINT(google-explicit-constructor)

  static QRat q_pow(HalfExp e);
  // sum_i coeffs[i] * s^(lowest + i)
  static QRat laurent(std::span<const Rational> coeffs, HalfExp lowest);
  static QRat laurent(std::initializer_list<long> coeffs, HalfExp lowest);

  bool is_zero() const { return scale_ == 0; }
  bool is_one() const;
  bool is_laurent() const { return den_.size() == 1; }
  // True for c * s^e with c rational.
  bool is_monomial() const { return is_laurent() && num_.size() == 1; }

  const Rational& scale() const { return scale_; }
  HalfExp shift() const { return HalfExp{shift_}; }
  const ZPoly& numerator() const { return num_; }
  const ZPoly& denominator() const { return den_; }

  // s-adic order; nullopt stands for +infinity (the zero value).
  std::optional<HalfExp> valuation() const;
  bool regular_at_zero() const { return is_zero() || shift_ >= 0; }
  // Value at s = 0. Throws DomainError on a pole.
  Rational value_at_zero() const;
  // Substitution s -> 1/s.
  QRat bar() const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b);

  QRat inverse() const;
  std::string str() const;

 private:
  static QRat make(std::vector<Rational> num, int num_shift, ZPoly den);

  Rational scale_;
  int shift_ = 0;
  ZPoly num_;
  ZPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& x);

// [n] = (q^n - q^-n) / (q - q^-1) as a Laurent polynomial.
QRat quantum_int(long n);

// Coefficients of the series g(t) used by Omega_psi:
//   g(0) = q^2,  g(r) = (q^4 - 1) q^{2(r-1)} for r > 0.
// These are the Taylor coefficients at t = 0 of (t - q^2) / (q^2 t - 1).
// Throws DomainError for r < 0.
QRat g_coeff(long r);

// The same coefficients with q -> q^{-1}: the Taylor coefficients of
// (q^2 t - 1) / (t - q^2). Used by Omega_phi and the phi/psi exchange.
QRat g_coeff_conj(long r);

// Finite sum over gamma-exponents (in half-units) of QRat values.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long n);  // NOLINT(google-explicit-constructor)
  Coeff(const Rational& r);  // NOLINT(google-explicit-constructor)
  Coeff(const QRat& r);  // NOLINT(google-explicit-constructor)

  static Coeff gamma_pow(HalfExp e, const QRat& c = QRat(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_gamma_homogeneous() const { return terms_.size() == 1; }
  bool is_gamma_free() const;
  const std::map<int, QRat>& terms() const { return terms_; }

  // gamma -> 1.
  QRat at_gamma_one() const;
  // Minimum s-adic order across gamma-terms; nullopt for zero.
  std::optional<HalfExp> valuation() const;
  // Value at q = 0 per gamma-term. Throws DomainError on a pole.
  std::map<int, Rational> reduce_at_zero() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  // Division only by gamma-homogeneous nonzero values.
  Coeff& operator/=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }

  // True when the printed form needs no parentheses as a product factor.
  bool is_simple() const;
  std::string str() const;

 private:
  void add_term(int gamma_exp, const QRat& c);
  std::map<int, QRat> terms_;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

enum class ArithOp { kAdd, kSub, kMul, kDiv };
Coeff arith(const Coeff& a, const Coeff& b, ArithOp op);

// valuation(c - target) >= 4 half-units, i.e. c == target mod q^2 Z[[q^{1/2}]].
bool congruent_mod_q2(const Coeff& c, const Rational& target);

// Exponent in half-units rendered as a power of the named variable:
// "q", "q^2", "q^-1", "q^(1/2)", "q^(-3/2)". Empty for exponent 0.
std::string half_power_str(const char* var, int half_exp);

}  // namespace imc
