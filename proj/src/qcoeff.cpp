#include "imcrystal/qcoeff.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace imc {
namespace {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Signed content: gcd of coefficients carrying the sign of the leading one.
Integer signed_content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  return g;
}

void divide_exact(ZPoly& p, const Integer& c) {
  if (c == 1) return;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZPoly primitive(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  divide_exact(p, signed_content(p));
  return p;
}

// Pseudo-remainder of a by b (b nonzero).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t off = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[off + j] -= la * b[j];
    trim(a);
  }
  return a;
}

// Primitive gcd with positive leading coefficient.
ZPoly zgcd(ZPoly a, ZPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// a / b over Z, assuming exact divisibility.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  ZPoly q(a.size() - db, Integer(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t off = a.size() - 1 - db;
    Integer c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    q[off] = c;
    for (std::size_t j = 0; j <= db; ++j) a[off + j] -= c * b[j];
    trim(a);
  }
  trim(q);
  return q;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

// Polynomial (or Laurent polynomial) sum_i c[i] s^(shift+i) with rational
// coefficients, ascending, e.g. "-1+q^2", "3/2*q^(1/2)".
std::string laurent_str(const std::vector<Rational>& c, int shift) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int e = shift + static_cast<int>(i);
    const std::string pw = half_power_str("q", e);
    Rational mag = abs(c[i]);
    std::string term;
    if (pw.empty()) {
      term = rational_str(mag);
    } else if (mag == 1) {
      term = pw;
    } else {
      term = rational_str(mag) + "*" + pw;
    }
    if (c[i] < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    out += term;
    first = false;
  }
  return first ? "0" : out;
}

std::vector<Rational> to_rationals(const ZPoly& p, const Rational& scale) {
  std::vector<Rational> r;
  r.reserve(p.size());
  for (const auto& x : p) r.emplace_back(Rational(x) * scale);
  return r;
}

std::size_t nonzero_count(const ZPoly& p) {
  return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](const Integer& x) { return x != 0; }));
}

}  // namespace

std::string half_power_str(const char* var, int half_exp) {
  if (half_exp == 0) return {};
  std::string v(var);
  if (half_exp % 2 != 0) {
    return v + "^(" + std::to_string(half_exp) + "/2)";
  }
  const int e = half_exp / 2;
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

// ---------------------------------------------------------------- QRat

QRat::QRat() : scale_(0), num_{Integer(1)}, den_{Integer(1)} {}

QRat::QRat(long n) : QRat(Rational(n)) {}

QRat::QRat(const Rational& r) : scale_(r), num_{Integer(1)}, den_{Integer(1)} { scale_.canonicalize(); }

QRat QRat::q_pow(HalfExp e) {
  QRat r(1);
  r.shift_ = e.value;
  return r;
}

QRat QRat::laurent(std::span<const Rational> coeffs, HalfExp lowest) {
  return make(std::vector<Rational>(coeffs.begin(), coeffs.end()), lowest.value, ZPoly{Integer(1)});
}

QRat QRat::laurent(std::initializer_list<long> coeffs, HalfExp lowest) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return make(std::move(c), lowest.value, ZPoly{Integer(1)});
}

QRat QRat::make(std::vector<Rational> num, int num_shift, ZPoly den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.empty()) return QRat();
  std::size_t lo = 0;
  while (num[lo] == 0) ++lo;
  trim(den);
  if (den.empty()) throw ArithmeticError("division by zero");
  std::size_t dlo = 0;
  while (den[dlo] == 0) ++dlo;

  QRat r;
  r.shift_ = num_shift + static_cast<int>(lo) - static_cast<int>(dlo);

  // Clear rational denominators in the numerator.
  Integer l = 1;
  for (std::size_t i = lo; i < num.size(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), num[i].get_den_mpz_t());
  ZPoly n;
  n.reserve(num.size() - lo);
  for (std::size_t i = lo; i < num.size(); ++i) {
    Integer v = num[i].get_num() * (l / num[i].get_den());
    n.push_back(std::move(v));
  }
  Rational scale(1, 1);
  scale /= l;
  const Integer cn = signed_content(n);
  divide_exact(n, cn);
  scale *= cn;

  ZPoly d(den.begin() + static_cast<std::ptrdiff_t>(dlo), den.end());
  const Integer cd = signed_content(d);
  divide_exact(d, cd);
  scale /= cd;

  if (d.size() > 1 && n.size() > 1) {
    ZPoly g = zgcd(n, d);
    if (g.size() > 1) {
      n = zdiv_exact(std::move(n), g);
      d = zdiv_exact(std::move(d), g);
    }
  }
  scale.canonicalize();
  r.scale_ = std::move(scale);
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

bool QRat::is_one() const { return scale_ == 1 && shift_ == 0 && num_.size() == 1 && den_.size() == 1; }

std::optional<HalfExp> QRat::valuation() const {
  if (is_zero()) return std::nullopt;
  return HalfExp{shift_};
}

Rational QRat::value_at_zero() const {
  if (is_zero() || shift_ > 0) return Rational(0);
  if (shift_ < 0) throw DomainError("pole at q = 0 (valuation " + std::to_string(shift_) + " half-units)");
  Rational v = scale_ * Rational(num_.front()) / Rational(den_.front());
  v.canonicalize();
  return v;
}

QRat QRat::bar() const {
  if (is_zero()) return *this;
  ZPoly nr(num_.rbegin(), num_.rend());
  ZPoly dr(den_.rbegin(), den_.rend());
  const int degn = static_cast<int>(num_.size()) - 1;
  const int degd = static_cast<int>(den_.size()) - 1;
  return make(to_rationals(nr, scale_), -shift_ - degn + degd, std::move(dr));
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.scale_ = -r.scale_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(shift_, o.shift_);
  auto accumulate = [lo](std::vector<Rational>& acc, const ZPoly& p, const Rational& scale, int shift) {
    const std::size_t off = static_cast<std::size_t>(shift - lo);
    if (acc.size() < off + p.size()) acc.resize(off + p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) acc[off + i] += Rational(p[i]) * scale;
  };
  std::vector<Rational> acc;
  if (den_ == o.den_) {
    accumulate(acc, num_, scale_, shift_);
    accumulate(acc, o.num_, o.scale_, o.shift_);
    *this = make(std::move(acc), lo, den_);
  } else {
    accumulate(acc, zmul(num_, o.den_), scale_, shift_);
    accumulate(acc, zmul(o.num_, den_), o.scale_, o.shift_);
    *this = make(std::move(acc), lo, zmul(den_, o.den_));
  }
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  if (o.is_monomial() && o.num_.front() == 1) {
    scale_ *= o.scale_;
    shift_ += o.shift_;
    return *this;
  }
  if (is_monomial() && num_.front() == 1) {
    Rational s = scale_ * o.scale_;
    int sh = shift_ + o.shift_;
    *this = o;
    scale_ = std::move(s);
    shift_ = sh;
    return *this;
  }
  *this = make(to_rationals(zmul(num_, o.num_), scale_ * o.scale_), shift_ + o.shift_, zmul(den_, o.den_));
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  QRat r;
  r.scale_ = 1 / scale_;
  r.scale_.canonicalize();
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

bool operator==(const QRat& a, const QRat& b) {
  return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string QRat::str() const {
  if (is_zero()) return "0";
  const std::string n = laurent_str(to_rationals(num_, scale_), shift_);
  if (is_laurent()) return n;
  std::vector<Rational> d(den_.begin(), den_.end());
  const bool single = nonzero_count(num_) == 1;
  return (single ? n : "(" + n + ")") + "/(" + laurent_str(d, 0) + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& x) { return os << x.str(); }

QRat quantum_int(long n) {
  // [n] = sum_{j=0}^{|n|-1} q^{|n|-1-2j}, and [-n] = -[n].
  if (n == 0) return QRat();
  const long a = n < 0 ? -n : n;
  // q-exponents run from -(a-1) to a-1 in steps of 2, i.e. half-units step 4.
  std::vector<Rational> half(static_cast<std::size_t>(4 * (a - 1) + 1), Rational(0));
  for (long j = 0; j < a; ++j) half[static_cast<std::size_t>(4 * j)] = Rational(n < 0 ? -1 : 1);
  return QRat::laurent(half, HalfExp{static_cast<int>(-2 * (a - 1))});
}

QRat g_coeff(long r) {
  if (r < 0) throw DomainError("g(r) requires r >= 0, got " + std::to_string(r));
  if (r == 0) return QRat::q_pow(HalfExp{4});
  // (q^4 - 1) q^{2(r-1)}
  const int base = static_cast<int>(4 * (r - 1));
  return QRat::laurent({-1, 0, 0, 0, 0, 0, 0, 0, 1}, HalfExp{base});
}

QRat g_coeff_conj(long r) { return g_coeff(r).bar(); }

// --------------------------------------------------------------- Coeff

Coeff::Coeff(long n) : Coeff(QRat(n)) {}
Coeff::Coeff(const Rational& r) : Coeff(QRat(r)) {}
Coeff::Coeff(const QRat& r) {
  if (!r.is_zero()) terms_.emplace(0, r);
}

Coeff Coeff::gamma_pow(HalfExp e, const QRat& c) {
  Coeff r;
  if (!c.is_zero()) r.terms_.emplace(e.value, c);
  return r;
}

bool Coeff::is_gamma_free() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

void Coeff::add_term(int gamma_exp, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(gamma_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QRat Coeff::at_gamma_one() const {
  QRat s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::optional<HalfExp> Coeff::valuation() const {
  std::optional<HalfExp> v;
  for (const auto& [e, c] : terms_) {
    const auto cv = c.valuation();
    if (!v || *cv < *v) v = cv;
  }
  return v;
}

std::map<int, Rational> Coeff::reduce_at_zero() const {
  std::map<int, Rational> out;
  for (const auto& [e, c] : terms_) {
    Rational v = c.value_at_zero();
    if (v != 0) out.emplace(e, std::move(v));
  }
  return out;
}

Coeff Coeff::operator-() const {
  Coeff r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (o.terms_.size() == 1 && o.terms_.begin()->first == 0) {
    const QRat& f = o.terms_.begin()->second;
    for (auto& [e, c] : terms_) c *= f;
    return *this;
  }
  Coeff r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
  }
  return *this = std::move(r);
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (!o.is_gamma_homogeneous()) throw ArithmeticError("division by a gamma-inhomogeneous coefficient");
  const auto& [eb, cb] = *o.terms_.begin();
  const QRat inv = cb.inverse();
  Coeff r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e - eb, c * inv);
  return *this = std::move(r);
}

bool Coeff::is_simple() const {
  if (terms_.size() != 1) return false;
  const QRat& c = terms_.begin()->second;
  return c.is_monomial();
}

std::string Coeff::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string t;
    if (e == 0) {
      t = c.str();
    } else {
      const std::string g = half_power_str("g", e);
      if (c.is_one()) {
        t = g;
      } else if (c == QRat(-1)) {
        t = "-" + g;
      } else if (c.is_monomial()) {
        t = c.str() + "*" + g;
      } else {
        t = "(" + c.str() + ")*" + g;
      }
    }
    if (!first && t.front() != '-') out += "+";
    out += t;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.str(); }

Coeff arith(const Coeff& a, const Coeff& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  return {};
}

bool congruent_mod_q2(const Coeff& c, const Rational& target) {
  const Coeff diff = c - Coeff(target);
  const auto v = diff.valuation();
  return !v || v->value >= 4;
}

}  // namespace imc
