#include "imcrystal/qalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace imc {
namespace {

struct WordHash {
  std::size_t operator()(const std::vector<int>& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

const Coeff& q2() {
  static const Coeff c(QRat::q_pow(HalfExp{4}));
  return c;
}

// Position of the ascent to rewrite, or -1 when the word is normal.
std::ptrdiff_t find_ascent(std::span<const int> w, RewriteStrategy s) {
  if (w.size() < 2) return -1;
  if (s == RewriteStrategy::kLeftmost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] < w[i + 1]) return static_cast<std::ptrdiff_t>(i);
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (w[i] < w[i + 1]) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::vector<std::pair<Coeff, std::vector<int>>> rewrite_at(std::span<const int> w, std::size_t i) {
  const int a = w[i];
  const int b = w[i + 1];
  auto with = [&](int x, int y) {
    std::vector<int> r(w.begin(), w.end());
    r[i] = x;
    r[i + 1] = y;
    return r;
  };
  std::vector<std::pair<Coeff, std::vector<int>>> out;
  out.emplace_back(q2(), with(b, a));
  if (b != a + 1) {
    out.emplace_back(Coeff(-1), with(b - 1, a + 1));
    out.emplace_back(q2(), with(a + 1, b - 1));
  }
  return out;
}

class Normalizer {
 public:
  explicit Normalizer(RewriteStrategy s) : strategy_(s) {}

  const Element& unit_form(const std::vector<int>& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    if (cache_.size() > kMaxCache) cache_.clear();
    Element r;
    const auto pos = find_ascent(w, strategy_);
    if (pos < 0) {
      r.add_term(Monomial(w), Coeff(1));
    } else {
      for (auto& [c, nw] : rewrite_at(w, static_cast<std::size_t>(pos))) {
        Element sub = unit_form(nw);
        r += sub * c;
      }
    }
    return cache_.emplace(w, std::move(r)).first->second;
  }

 private:
  static constexpr std::size_t kMaxCache = 1u << 20;
  RewriteStrategy strategy_;
  std::unordered_map<std::vector<int>, Element, WordHash> cache_;
};

Normalizer& normalizer(RewriteStrategy s) {
  thread_local Normalizer left(RewriteStrategy::kLeftmost);
  thread_local Normalizer right(RewriteStrategy::kRightmost);
  return s == RewriteStrategy::kLeftmost ? left : right;
}

Element traced(const std::vector<int>& w, RewriteStrategy s, const RewriteObserver& obs) {
  const auto pos = find_ascent(w, s);
  Element r;
  if (pos < 0) {
    r.add_term(Monomial(w), Coeff(1));
    return r;
  }
  RewriteStep step{w, static_cast<std::size_t>(pos), rewrite_at(w, static_cast<std::size_t>(pos))};
  if (obs) obs(step);
  for (auto& [c, nw] : step.after) r += traced(nw, s, obs) * c;
  return r;
}

}  // namespace

// -------------------------------------------------------------- Monomial

long Monomial::degree() const { return std::accumulate(indices.begin(), indices.end(), 0L); }

bool Monomial::is_normal() const {
  return std::is_sorted(indices.begin(), indices.end(), std::greater<>());
}

std::string Monomial::str() const {
  if (indices.empty()) return "1";
  std::string s;
  for (int n : indices) s += "x[" + std::to_string(n) + "]";
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
  return std::lexicographical_compare(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                                      std::greater<>());
}

std::string Weight::str() const { return "(" + std::to_string(length) + "," + std::to_string(degree) + ")"; }

Weight weight_of(const Monomial& m) { return Weight{static_cast<long>(m.length()), m.degree()}; }

// --------------------------------------------------------------- Element

Element::Element(const Monomial& m, const Coeff& c) { add_term(m, c); }

Element Element::one() { return Element(Monomial{}, Coeff(1)); }

Element Element::generator(int n) { return Element(Monomial{n}, Coeff(1)); }

Coeff Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff() : it->second;
}

void Element::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

Element Element::at_gamma_one() const {
  Element r;
  for (const auto& [m, c] : terms_) r.add_term(m, Coeff(c.at_gamma_one()));
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string t;
    const std::string cs = c.str();
    if (m.empty()) {
      t = c.is_simple() || first ? cs : "(" + cs + ")";
    } else if (cs == "1") {
      t = m.str();
    } else if (cs == "-1") {
      t = "-" + m.str();
    } else if (c.is_simple()) {
      t = cs + "*" + m.str();
    } else {
      t = "(" + cs + ")*" + m.str();
    }
    if (first) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

// ---------------------------------------------------------- operations

Element normalize(std::span<const int> word, const Coeff& c, RewriteStrategy strategy) {
  if (c.is_zero()) return {};
  Element r = normalizer(strategy).unit_form(std::vector<int>(word.begin(), word.end()));
  return r *= c;
}

Element normalize_traced(std::span<const int> word, RewriteStrategy strategy, const RewriteObserver& observer) {
  return traced(std::vector<int>(word.begin(), word.end()), strategy, observer);
}

Element left_multiply(std::span<const int> prefix, const Element& e) {
  if (prefix.empty()) return e;
  Element r;
  std::vector<int> w;
  for (const auto& [m, c] : e.terms()) {
    w.assign(prefix.begin(), prefix.end());
    w.insert(w.end(), m.indices.begin(), m.indices.end());
    r += normalize(w, c);
  }
  return r;
}

Element multiply(const Element& a, const Element& b) {
  Element r;
  std::vector<int> w;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      w = ma.indices;
      w.insert(w.end(), mb.indices.begin(), mb.indices.end());
      r += normalize(w, ca * cb);
    }
  }
  return r;
}

Weight weight_of(const Element& e) {
  if (e.is_zero()) throw DomainError("the zero element has no weight");
  const auto& first = e.terms().begin()->first;
  const Weight w = weight_of(first);
  for (const auto& [m, c] : e.terms()) {
    if (weight_of(m) != w) {
      throw DomainError("inhomogeneous element: " + first.str() + " has weight " + w.str() + " but " + m.str() +
                        " has weight " + weight_of(m).str());
    }
  }
  return w;
}

std::vector<Monomial> enumerate_basis(int length, int lo, int hi, std::optional<long> degree) {
  std::vector<Monomial> out;
  if (length < 0 || lo > hi) return out;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(length));
  // Depth-first, largest index first, which yields MonomialOrder directly.
  std::function<void(int, long)> rec = [&](int maxIdx, long sum) {
    if (static_cast<int>(cur.size()) == length) {
      if (!degree || sum == *degree) out.emplace_back(cur);
      return;
    }
    for (int n = maxIdx; n >= lo; --n) {
      cur.push_back(n);
      rec(n, sum + n);
      cur.pop_back();
    }
  };
  rec(hi, 0);
  return out;
}

std::pair<long, long> rewrite_measure(std::span<const int> word) {
  long sq = 0;
  long inv = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    sq += static_cast<long>(word[i]) * word[i];
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] < word[j]) ++inv;
  }
  return {sq, inv};
}

}  // namespace imc
