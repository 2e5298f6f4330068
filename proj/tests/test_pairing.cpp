#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "imcrystal/kashiwara.hpp"
#include "imcrystal/pairing.hpp"

using namespace th;

namespace {

// Test-side form: peel the leftmost factor using the closed formula for
// Omega_psi instead of the recursion.
QRat pair_oracle(const Monomial& a, const Monomial& b) {
  if (a.empty()) return b.empty() ? QRat(1) : QRat();
  if (a.length() != b.length()) return QRat();
  const Monomial rest(std::vector<int>(a.indices.begin() + 1, a.indices.end()));
  QRat v;
  const Element peeled = imc::omega_psi_closed(-a.indices.front(), b);
  for (const auto& [m, c] : peeled.terms()) v += c.at_gamma_one() * pair_oracle(rest, m);
  return v;
}

Element random_element(std::mt19937_64& rng, const imc::Weight& w, int lo, int hi) {
  const auto basis = imc::enumerate_basis(static_cast<int>(w.length), lo, hi, w.degree);
  Element e;
  if (basis.empty()) return e;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> c(-2, 2), e2(-1, 2);
  for (int i = 0; i < 3; ++i) e.add_term(basis[pick(rng)], Coeff(c(rng) * q(e2(rng))));
  return e;
}

imc::Weight random_weight(std::mt19937_64& rng, int max_len, int lo, int hi) {
  const auto w = random_word(rng, max_len, lo, hi);
  return {static_cast<long>(w.size()), std::accumulate(w.begin(), w.end(), 0L)};
}

}  // namespace

TEST_CASE("pair examples") {
  CHECK(imc::pair(Element::one(), Element::one()) == Coeff(1));
  CHECK(imc::pair(mono({0}), mono({1})).is_zero());
  CHECK(imc::pair(mono({1, 1}), mono({1, 1})) == Coeff(1 + q(2)));
  CHECK(imc::pair(mono({2, 0}), mono({1, 1})).is_zero());
  CHECK(imc::pair(mono({0}), mono({0})) == Coeff(1));
  // gamma is specialized to 1 first
  CHECK(imc::pair(mono({0}, Coeff::gamma_pow(HalfExp{3})), mono({0})) == Coeff(1));
}

TEST_CASE("pair agrees with the closed-formula oracle") {
  for (int len = 0; len <= 3; ++len) {
    const auto basis = imc::enumerate_basis(len, -2, 2);
    for (const auto& a : basis)
      for (const auto& b : basis) CHECK(imc::pair(Element(a, Coeff(1)), Element(b, Coeff(1))) == Coeff(pair_oracle(a, b)));
  }
}

TEST_CASE("symmetry and adjointness on random pairs") {
  std::mt19937_64 rng(31337);
  int adj_checks = 0;
  for (int i = 0; i < 250; ++i) {
    const auto w = random_weight(rng, 3, -2, 2);
    const Element a = random_element(rng, w, -2, 2), b = random_element(rng, w, -2, 2);
    CHECK(imc::pair(a, b) == imc::pair(b, a));
  }
  std::uniform_int_distribution<int> mdist(-2, 2);
  while (adj_checks < 220) {
    const auto w = random_weight(rng, 2, -2, 2);
    const int m = mdist(rng);
    const Element a = random_element(rng, w, -2, 2);
    const Element b = random_element(rng, {w.length + 1, w.degree + m}, -2, 2);
    if (a.is_zero() || b.is_zero()) continue;
    ++adj_checks;
    const int idx[] = {m};
    CHECK(imc::pair(imc::left_multiply(idx, a), b) ==
          imc::pair(a, imc::omega_apply({imc::OmegaType::kPsi, -m}, b)));
  }
}

TEST_CASE("weight orthogonality and length mismatch") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto w1 = random_weight(rng, 3, -2, 2), w2 = random_weight(rng, 3, -2, 2);
    if (w1 == w2) continue;
    CHECK(imc::pair(random_element(rng, w1, -2, 2), random_element(rng, w2, -2, 2)).is_zero());
  }
  CHECK(imc::pair(mono({1, 0}), mono({1})).is_zero());
  CHECK(imc::pair(mono({0}), Element::one()).is_zero());
}

TEST_CASE("gram examples") {
  const auto g1 = imc::gram({1, 0}, -1, 1);
  REQUIRE(g1.size() == 1);
  CHECK(g1.entries[0][0] == QRat(1));
  const auto g2 = imc::gram({2, 2}, 0, 2);
  REQUIRE(g2.size() == 2);
  CHECK(g2.symmetric());
  CHECK(g2.entries[0][0] == QRat(1));
  CHECK(g2.entries[1][1] == 1 + q(2));
  CHECK(g2.entries[0][1].is_zero());
  CHECK(imc::orthonormality_report(g2).passed());
  CHECK(imc::gram({1, 5}, 0, 2).size() == 0);
  CHECK(imc::gram_determinant(imc::gram({1, 5}, 0, 2)) == QRat(1));
  CHECK(imc::gram_determinant(g2) == 1 + q(2));
}

TEST_CASE("orthonormality mod q^2 on all weights of length <= 3") {
  for (int len = 1; len <= 3; ++len) {
    for (int deg = -2 * len; deg <= 2 * len; ++deg) {
      const auto g = imc::gram({len, deg}, -2, 2);
      INFO("weight " << g.weight.str());
      CHECK(g.symmetric());
      CHECK(imc::orthonormality_report(g).passed());
      CHECK_FALSE(imc::gram_determinant(g).is_zero());
    }
  }
}

TEST_CASE("orthonormality report flags bad entries") {
  imc::GramMatrix id;
  id.basis = {Monomial{0}, Monomial{1}};
  id.entries = {{QRat(1), QRat()}, {QRat(), QRat(1)}};
  CHECK(imc::orthonormality_report(id).passed());
  id.entries[0][1] = q(1);
  const auto rep = imc::orthonormality_report(id);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].row == 0);
  CHECK(rep.violations[0].col == 1);
}

TEST_CASE("lattice membership probe") {
  CHECK(imc::lattice_membership_probe(mono({1, 0}), -2, 2).in_lattice);
  const auto out = imc::lattice_membership_probe(mono({0}, Coeff(q(-1))), -2, 2);
  CHECK_FALSE(out.in_lattice);
  REQUIRE(out.witness.has_value());
  CHECK(*out.witness == Monomial{0});
  CHECK(*out.witness_value == q(-1));
  CHECK(imc::lattice_membership_probe(Element(), -2, 2).in_lattice);
  CHECK_THROWS_AS(imc::lattice_membership_probe(el("x[0] + x[1]x[1]"), -2, 2), imc::DomainError);
  // every A_0-combination of monomials passes
  CHECK(imc::lattice_membership_probe(el("x[2]x[0] + (1/(1-q))*x[1]x[1]"), -2, 2).in_lattice);
}
