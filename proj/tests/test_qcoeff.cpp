#include <doctest.h>

#include "helpers.hpp"
#include "imcrystal/qcoeff.hpp"

using namespace th;
using imc::ArithOp;

TEST_CASE("arith examples") {
  CHECK(imc::arith(Coeff(s(1)), Coeff(s(1)), ArithOp::kMul) == Coeff(q(1)));
  CHECK(imc::arith(Coeff(q(4) - 1), Coeff(q(2) - 1), ArithOp::kDiv) == Coeff(q(2) + 1));
  CHECK(imc::arith(Coeff(q(2)), Coeff(-q(2)), ArithOp::kAdd).is_zero());
  CHECK(imc::arith(Coeff(q(3)), Coeff(q(1)), ArithOp::kSub) == Coeff(q(3) - q(1)));
}

TEST_CASE("division errors") {
  CHECK_THROWS_AS(imc::arith(Coeff(1), Coeff(), ArithOp::kDiv), imc::ArithmeticError);
  CHECK_THROWS_AS(QRat().inverse(), imc::ArithmeticError);
  const Coeff mixed = Coeff(1) + Coeff::gamma_pow(HalfExp{2});
  CHECK_THROWS_AS(imc::arith(Coeff(1), mixed, ArithOp::kDiv), imc::ArithmeticError);
  // gamma-homogeneous divisors are fine
  CHECK(Coeff::gamma_pow(HalfExp{2}, q(1)) / Coeff::gamma_pow(HalfExp{2}) == Coeff(q(1)));
}

TEST_CASE("quantum integers") {
  CHECK(imc::quantum_int(1) == QRat(1));
  CHECK(imc::quantum_int(2) == q(1) + q(-1));
  CHECK(imc::quantum_int(-1) == QRat(-1));
  CHECK(imc::quantum_int(0).is_zero());
  // [n] (q - q^-1) = q^n - q^-n
  for (int n = -6; n <= 6; ++n) CHECK(imc::quantum_int(n) * (q(1) - q(-1)) == q(n) - q(-n));
}

TEST_CASE("g coefficients") {
  CHECK(imc::g_coeff(0) == q(2));
  CHECK(imc::g_coeff(1) == q(4) - 1);
  CHECK(imc::g_coeff(2) == (q(4) - 1) * q(2));
  CHECK_THROWS_AS(imc::g_coeff(-1), imc::DomainError);
  for (int r = 1; r <= 10; ++r) {
    CHECK((1 - q(-4)) * q(2 * (r + 1)) == (q(4) - 1) * q(2 * (r - 1)));
    CHECK(imc::g_coeff_conj(r) == imc::g_coeff(r).bar());
  }
  CHECK(imc::g_coeff_conj(0) == q(-2));
}

// Coefficient of t^j in (sum_r a(r) t^r) (u t + v) - (w t + z), j <= n.
static bool taylor_order_exceeds(const std::function<QRat(long)>& a, const QRat& u, const QRat& v, const QRat& w,
                                 const QRat& z, int n) {
  for (int j = 0; j <= n; ++j) {
    QRat c = a(j) * v;
    if (j > 0) c += a(j - 1) * u;
    if (j == 0) c -= z;
    if (j == 1) c -= w;
    if (!c.is_zero()) return false;
  }
  return true;
}

TEST_CASE("g series Taylor identities") {
  for (int n = 0; n <= 12; ++n) {
    // sum g(r) t^r (q^2 t - 1) = t - q^2
    CHECK(taylor_order_exceeds(imc::g_coeff, q(2), QRat(-1), QRat(1), -q(2), n));
    // sum gbar(r) t^r (t - q^2) = q^2 t - 1
    CHECK(taylor_order_exceeds(imc::g_coeff_conj, QRat(1), -q(2), q(2), QRat(-1), n));
  }
  // The printed coefficients do not expand (q^2 t - 1) / (t - q^2).
  CHECK_FALSE(taylor_order_exceeds(imc::g_coeff, QRat(1), -q(2), q(2), QRat(-1), 0));
}

TEST_CASE("valuation") {
  CHECK(Coeff(q(2) + s(6)).valuation()->value == 4);
  CHECK(Coeff((q(4) - 1) / (q(2) - 1)).valuation()->value == 0);
  CHECK_FALSE(Coeff().valuation().has_value());
  CHECK(QRat(1) / (q(-1) + q(3)) == q(1) / (1 + q(4)));
  CHECK((q(1) / (1 + q(4))).valuation()->value == 2);
  CHECK((1 / (s(3) - s(5))).valuation()->value == -3);
}

TEST_CASE("reduce at zero") {
  CHECK(Coeff(1 + q(2)).reduce_at_zero().at(0) == 1);
  CHECK(Coeff(q(2) - 1).reduce_at_zero().at(0) == -1);
  CHECK(Coeff(s(1)).reduce_at_zero().empty());  // zero entries are dropped
  CHECK(Coeff((2 + q(1)) / (3 - q(2))).reduce_at_zero().at(0) == Rational(2, 3));
  CHECK_THROWS_AS(Coeff(q(-1)).reduce_at_zero(), imc::DomainError);
  const auto g = (Coeff::gamma_pow(HalfExp{-1}, QRat(5)) + Coeff(q(1))).reduce_at_zero();
  CHECK(g.at(-1) == 5);
  CHECK(g.count(0) == 0);
}

TEST_CASE("congruence mod q^2") {
  CHECK(imc::congruent_mod_q2(Coeff(1 + q(2)), 1));
  CHECK(imc::congruent_mod_q2(Coeff(q(2)), 0));
  CHECK_FALSE(imc::congruent_mod_q2(Coeff(q(1)), 0));
  CHECK_FALSE(imc::congruent_mod_q2(Coeff(s(3)), 0));
  CHECK(imc::congruent_mod_q2(Coeff(QRat(7)), 7));
  CHECK_FALSE(imc::congruent_mod_q2(Coeff(q(-1)), 0));
  CHECK(imc::congruent_mod_q2(Coeff(1 / (1 - q(2))), 1));
}

TEST_CASE("canonical form") {
  const QRat a = (q(4) - 1) / (q(2) - 1);
  CHECK(a == q(2) + 1);
  CHECK(a.is_laurent());
  CHECK(a.denominator() == imc::ZPoly{1});
  const QRat b = (2 * q(1) - 2) / (4 * q(2) - 4);
  CHECK(b.denominator() == imc::ZPoly{1, 0, 1});
  CHECK(b.scale() == Rational(1, 2));
  CHECK(QRat().str() == "0");
  CHECK((q(2) - 1).str() == "-1+q^2");
  CHECK((Rational(3, 2) * s(1)).str() == "3/2*q^(1/2)");
  CHECK(Coeff::gamma_pow(HalfExp{-1}).str() == "g^(-1/2)");
}

TEST_CASE("canonical form is unique under random arithmetic") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), sh(-4, 4), len(1, 4);
  auto random_qrat = [&]() {
    std::vector<Rational> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    QRat n = QRat::laurent(c, HalfExp{sh(rng)});
    std::vector<Rational> d(static_cast<std::size_t>(len(rng)));
    for (auto& x : d) x = coef(rng);
    d.front() = 1 + (coef(rng) == 0);
    return n / QRat::laurent(d, HalfExp{0});
  };
  const Rational points[] = {Rational(1, 3), Rational(5, 7), 2, Rational(-3, 2)};
  for (int i = 0; i < 300; ++i) {
    const QRat a = random_qrat(), b = random_qrat();
    if (b.is_zero()) continue;
    CHECK(a * b / b == a);
    CHECK((a + b) - b == a);
    if (!a.is_zero()) {
      CHECK(a * b.inverse() * a.inverse() * b == QRat(1));
      CHECK((a * b).valuation()->value == a.valuation()->value + b.valuation()->value);
    }
    // independent oracle: evaluation at rational points
    for (const auto& p : points) {
      if (!finite_at(a, p) || !finite_at(b, p) || !finite_at(a, 1 / p)) continue;
      const Rational bv = eval(b, p);
      CHECK(eval(a + b, p) == eval(a, p) + bv);
      CHECK(eval(a * b, p) == eval(a, p) * bv);
      if (bv != 0) CHECK(eval(a / b, p) == eval(a, p) / bv);
      CHECK(eval(a.bar(), p) == eval(a, 1 / p));
    }
  }
}

TEST_CASE("coefficient parsing") {
  CHECK(co("q^2-1") == Coeff(q(2) - 1));
  CHECK(co("[2]") == Coeff(q(1) + q(-1)));
  CHECK(co("3/2*q^(1/2)") == Coeff(Rational(3, 2) * s(1)));
  CHECK(co("g^(-1/2)*q") == Coeff::gamma_pow(HalfExp{-1}, q(1)));
  CHECK(co("(q^4-1)/(q^2-1)") == Coeff(q(2) + 1));
  CHECK_THROWS_AS(co("q^"), imc::ParseError);
  CHECK_THROWS_AS(co("1/0"), imc::Error);
  for (const auto* text : {"-1+q^2", "3/2*q^(1/2)", "g^(-1/2)", "(1+q^2)/(1-q)", "q^-3/(-1+q)"}) {
    const Coeff c = co(text);
    CHECK(co(c.str()) == c);
  }
}
