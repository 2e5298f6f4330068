#pragma once

#include <random>
#include <string>
#include <vector>

#include "imcrystal/qalgebra.hpp"

namespace th {

using imc::Coeff;
using imc::Element;
using imc::HalfExp;
using imc::Monomial;
using imc::QRat;
using imc::Rational;

inline QRat q(int n) { return QRat::q_pow(HalfExp{2 * n}); }
inline QRat s(int n) { return QRat::q_pow(HalfExp{n}); }
inline Element el(const std::string& text) { return imc::parse_element(text); }
inline Coeff co(const std::string& text) { return imc::parse_coeff(text); }
inline Element mono(std::initializer_list<int> idx, const Coeff& c = Coeff(1)) { return Element(Monomial(idx), c); }

inline Rational eval_poly(const imc::ZPoly& p, const Rational& point) {
  Rational v = 0, pw = 1;
  for (const auto& c : p) {
    v += Rational(c) * pw;
    pw *= point;
  }
  return v;
}

inline bool finite_at(const QRat& x, const Rational& point) {
  return x.is_zero() || eval_poly(x.denominator(), point) != 0;
}

// Exact value of x at s = q^{1/2} = point, computed from the stored fields.
inline Rational eval(const QRat& x, const Rational& point) {
  if (x.is_zero()) return 0;
  Rational pw = 1;
  const int e = x.shift().value;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) pw *= point;
  if (e < 0) pw = 1 / pw;
  return x.scale() * pw * eval_poly(x.numerator(), point) / eval_poly(x.denominator(), point);
}

inline std::vector<int> random_word(std::mt19937_64& rng, int max_len, int lo, int hi) {
  std::uniform_int_distribution<int> len(1, max_len), idx(lo, hi);
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (auto& x : w) x = idx(rng);
  return w;
}

}  // namespace th
