#pragma once

// The algebra N_q^-: words in the generators x_n (n in Z), the quantum Serre
// rewriting system, and linear combinations of weakly decreasing (normal) words.

#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imcrystal/qcoeff.hpp"

namespace imc {

// x_{n_1} x_{n_2} ... x_{n_k}; the empty word is the unit.
struct Monomial {
  std::vector<int> indices;

  Monomial() = default;
  Monomial(std::initializer_list<int> idx) : indices(idx) {}
  explicit Monomial(std::vector<int> idx) : indices(std::move(idx)) {}

  std::size_t length() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  long degree() const;
  // n_1 >= n_2 >= ... >= n_k
  bool is_normal() const;
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Printing / enumeration order: shorter words first, then lexicographically
// descending indices (x[2]x[0] before x[1]x[1]).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// -k alpha_1 + m delta, written (k, m).
struct Weight {
  long length = 0;
  long degree = 0;
  friend auto operator<=>(const Weight&, const Weight&) = default;
  std::string str() const;
};

Weight weight_of(const Monomial& m);

class Element {
 public:
  using Terms = std::map<Monomial, Coeff, MonomialOrder>;

  Element() = default;
  // c * m; m must be normal.
  Element(const Monomial& m, const Coeff& c);
  static Element one();
  static Element generator(int n);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of a normal monomial (zero when absent).
  Coeff coeff(const Monomial& m) const;

  // Adds c * m for a normal monomial m.
  void add_term(const Monomial& m, const Coeff& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Coeff& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Coeff& c) { return a *= c; }
  friend Element operator*(const Coeff& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  // gamma -> 1 in every coefficient.
  Element at_gamma_one() const;
  std::string str() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

enum class RewriteStrategy {
  kLeftmost,   // rewrite the leftmost ascent first
  kRightmost,  // rewrite the rightmost ascent first
};

// One application of a Serre rule at position `pos` of `before`.
struct RewriteStep {
  std::vector<int> before;
  std::size_t pos = 0;
  std::vector<std::pair<Coeff, std::vector<int>>> after;
};

using RewriteObserver = std::function<void(const RewriteStep&)>;

// Rewrites every adjacent ascent x_a x_b (a < b):
//   b == a + 1:  x_a x_b -> q^2 x_b x_a
//   otherwise:   x_a x_b -> q^2 x_b x_a - x_{b-1} x_{a+1} + q^2 x_{a+1} x_{b-1}
// until only normal words remain.
Element normalize(std::span<const int> word, const Coeff& c = Coeff(1),
                  RewriteStrategy strategy = RewriteStrategy::kLeftmost);

// Uncached normalization reporting every rewrite step.
Element normalize_traced(std::span<const int> word, RewriteStrategy strategy, const RewriteObserver& observer);

// Left multiplication by the word `prefix` followed by normalization.
Element left_multiply(std::span<const int> prefix, const Element& e);

Element multiply(const Element& a, const Element& b);

// Common weight of all terms. Throws DomainError for 0 or for inhomogeneous
// elements (the message names the offending pair of monomials).
Weight weight_of(const Element& e);

// Normal monomials of the given length with every index in [lo, hi],
// optionally restricted to a total degree; MonomialOrder order.
std::vector<Monomial> enumerate_basis(int length, int lo, int hi, std::optional<long> degree = std::nullopt);

// Termination measure for the rewriting system: (sum n_i^2, number of pairs i<j with n_i<n_j).
std::pair<long, long> rewrite_measure(std::span<const int> word);

// Text forms (see parse.cpp for the grammar).
Coeff parse_coeff(std::string_view text);
Element parse_element(std::string_view text);
inline std::string format_element(const Element& e) { return e.str(); }

}  // namespace imc
