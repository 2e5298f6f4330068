#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "helpers.hpp"

using namespace th;
using imc::RewriteStrategy;

namespace {

// Independent normal-form oracle: plain worklist rewriting on words with
// coefficients as QRat, no memoization, rightmost ascent first.
std::map<std::vector<int>, QRat> oracle_normalize(const std::vector<int>& word) {
  std::map<std::vector<int>, QRat> done;
  std::vector<std::pair<std::vector<int>, QRat>> todo{{word, QRat(1)}};
  while (!todo.empty()) {
    auto [w, c] = todo.back();
    todo.pop_back();
    std::size_t pos = w.size();
    for (std::size_t i = w.size(); i-- > 1;) {
      if (w[i - 1] < w[i]) {
        pos = i - 1;
        break;
      }
    }
    if (pos == w.size()) {
      done[w] += c;
      continue;
    }
    const int a = w[pos], b = w[pos + 1];
    auto with = [&](int x, int y) {
      auto v = w;
      v[pos] = x;
      v[pos + 1] = y;
      return v;
    };
    todo.emplace_back(with(b, a), c * q(2));
    if (b != a + 1) {
      todo.emplace_back(with(b - 1, a + 1), -c);
      todo.emplace_back(with(a + 1, b - 1), c * q(2));
    }
  }
  std::erase_if(done, [](const auto& kv) { return kv.second.is_zero(); });
  return done;
}

bool matches(const Element& e, const std::map<std::vector<int>, QRat>& o) {
  if (e.size() != o.size()) return false;
  for (const auto& [m, c] : e.terms()) {
    auto it = o.find(m.indices);
    if (it == o.end() || !(c == Coeff(it->second))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normalize examples") {
  const int w01[] = {0, 1}, w10[] = {1, 0}, w02[] = {0, 2};
  CHECK(imc::normalize(w01) == mono({1, 0}, Coeff(q(2))));
  CHECK(imc::normalize(w10) == mono({1, 0}));
  CHECK(imc::normalize(w02) == mono({2, 0}, Coeff(q(2))) + mono({1, 1}, Coeff(q(2) - 1)));
  CHECK(imc::normalize(std::vector<int>{}) == Element::one());
  CHECK(imc::normalize(w01, Coeff(3)) == mono({1, 0}, Coeff(3 * q(2))));
  CHECK(imc::normalize(w01).str() == "q^2*x[1]x[0]");
  CHECK(imc::normalize(w02).str() == "q^2*x[2]x[0] + (-1+q^2)*x[1]x[1]");
}

TEST_CASE("normal form agrees with an independent rewriter") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, 5, -3, 3);
    CHECK(matches(imc::normalize(w), oracle_normalize(w)));
  }
}

TEST_CASE("confluence: both strategies agree") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 250; ++i) {
    const auto w = random_word(rng, 5, -3, 3);
    const Element left = imc::normalize(w, Coeff(1), RewriteStrategy::kLeftmost);
    const Element right = imc::normalize(w, Coeff(1), RewriteStrategy::kRightmost);
    CHECK(left == right);
    CHECK(imc::normalize_traced(w, RewriteStrategy::kRightmost, {}) == left);
    for (const auto& [m, c] : left.terms()) CHECK(m.is_normal());
  }
}

TEST_CASE("rewrite measure decreases on every step") {
  std::mt19937_64 rng(5);
  long steps = 0;
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, 5, -3, 3);
    imc::normalize_traced(w, RewriteStrategy::kLeftmost, [&](const imc::RewriteStep& st) {
      ++steps;
      const auto before = imc::rewrite_measure(st.before);
      for (const auto& [c, after] : st.after) {
        CHECK(imc::rewrite_measure(after) < before);
        CHECK(std::accumulate(after.begin(), after.end(), 0L) ==
              std::accumulate(st.before.begin(), st.before.end(), 0L));
      }
    });
  }
  CHECK(steps > 0);
  CHECK(imc::rewrite_measure(std::vector<int>{0, 2}) == std::pair<long, long>{4, 1});
}

TEST_CASE("weight preservation") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, 5, -3, 3);
    const Element e = imc::normalize(w);
    if (e.is_zero()) continue;
    const auto wt = imc::weight_of(e);
    CHECK(wt.length == static_cast<long>(w.size()));
    CHECK(wt.degree == std::accumulate(w.begin(), w.end(), 0L));
  }
}

TEST_CASE("multiply") {
  CHECK(imc::multiply(Element::generator(0), Element::generator(2)) ==
        mono({2, 0}, Coeff(q(2))) + mono({1, 1}, Coeff(q(2) - 1)));
  const Element a = el("x[1]x[-1] + q*x[0]");
  CHECK(imc::multiply(Element::one(), a) == a);
  CHECK(imc::multiply(a, Element::one()) == a);
  CHECK(imc::multiply(Element::generator(1), Element::generator(0)) == mono({1, 0}));
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-2, 2);
  auto random_element = [&]() {
    Element e;
    for (int t = 0; t < 2; ++t) e += imc::normalize(random_word(rng, 2, -2, 2), Coeff(c(rng) * q(t)));
    return e;
  };
  for (int i = 0; i < 60; ++i) {
    const Element a = random_element(), b = random_element(), d = random_element();
    CHECK(imc::multiply(imc::multiply(a, b), d) == imc::multiply(a, imc::multiply(b, d)));
  }
}

TEST_CASE("Serre relation x_l x_{k+1} - q^2 x_{k+1} x_l = q^2 x_{l+1} x_k - x_k x_{l+1}") {
  for (int k = -2; k <= 2; ++k) {
    for (int l = -2; l <= 2; ++l) {
      const Element lhs = imc::normalize(std::vector<int>{l, k + 1}) - imc::normalize(std::vector<int>{k + 1, l}) * Coeff(q(2));
      const Element rhs = imc::normalize(std::vector<int>{l + 1, k}) * Coeff(q(2)) - imc::normalize(std::vector<int>{k, l + 1});
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("weight_of") {
  CHECK(imc::weight_of(mono({2, 0})) == imc::Weight{2, 2});
  CHECK(imc::weight_of(Element::one()) == imc::Weight{0, 0});
  CHECK(imc::weight_of(el("x[0]*x[2]")) == imc::Weight{2, 2});
  CHECK_THROWS_AS(imc::weight_of(Element()), imc::DomainError);
  try {
    imc::weight_of(el("x[1] + x[2]x[0]"));
    FAIL("expected DomainError");
  } catch (const imc::DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("x[1]") != std::string::npos);
    CHECK(msg.find("x[2]x[0]") != std::string::npos);
  }
}

TEST_CASE("enumerate_basis") {
  auto strs = [](const std::vector<Monomial>& v) {
    std::vector<std::string> out;
    for (const auto& m : v) out.push_back(m.str());
    return out;
  };
  CHECK(strs(imc::enumerate_basis(2, 0, 1)) == std::vector<std::string>{"x[1]x[1]", "x[1]x[0]", "x[0]x[0]"});
  CHECK(strs(imc::enumerate_basis(2, 0, 2, 2)) == std::vector<std::string>{"x[2]x[0]", "x[1]x[1]"});
  CHECK(strs(imc::enumerate_basis(0, -3, 3)) == std::vector<std::string>{"1"});
  CHECK(imc::enumerate_basis(3, -2, 2).size() == 35);
  CHECK(imc::enumerate_basis(1, 0, 2, 5).empty());
}

TEST_CASE("parse and format") {
  CHECK(el("x[0]*x[1]") == mono({1, 0}, Coeff(q(2))));
  const Element e = el("3/2*q^(1/2)*x[2]");
  CHECK(e.size() == 1);
  CHECK(e.coeff(Monomial{2}) == Coeff(Rational(3, 2) * s(1)));
  CHECK(el("x[1]*x[0] - x[1]*x[0]").is_zero());
  CHECK(el("x[0]x[1]") == el("x[0]*x[1]"));
  CHECK(el("  x[ -1 ] * x[2]  ") == imc::normalize(std::vector<int>{-1, 2}));
  CHECK(el("2") == Element(Monomial{}, Coeff(2)));
  CHECK(el("[2]*x[0]") == mono({0}, Coeff(q(1) + q(-1))));
}

TEST_CASE("parse errors carry a position") {
  for (const auto* bad : {"x[0", "x[0]*", "x[a]", "q^^2", "foo", "x[0] x[1] +", "(x[1]"}) {
    CHECK_THROWS_AS(el(bad), imc::ParseError);
  }
  try {
    el("x[0]*)");
    FAIL("expected ParseError");
  } catch (const imc::ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(el("x[0]/x[1]"), imc::ParseError);
}

TEST_CASE("round trip parse(format(e)) == e") {
  std::mt19937_64 rng(3);
  const Coeff pool[] = {Coeff(1), Coeff(-2), Coeff(q(2) - 1), Coeff(s(3) / (1 - q(1))),
                        Coeff::gamma_pow(HalfExp{-1}, q(1)), Coeff(Rational(3, 7)) + Coeff::gamma_pow(HalfExp{2})};
  std::uniform_int_distribution<int> pick(0, 5);
  for (int i = 0; i < 200; ++i) {
    const Element e = imc::normalize(random_word(rng, 4, -3, 3), pool[pick(rng)]) +
                      imc::normalize(random_word(rng, 4, -3, 3), pool[pick(rng)]);
    CHECK(el(imc::format_element(e)) == e);
  }
}
