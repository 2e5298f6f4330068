#include "imcrystal/pairing.hpp"

#include <map>

#include "imcrystal/kashiwara.hpp"

namespace imc {
namespace {

using MonoPair = std::pair<std::vector<int>, std::vector<int>>;

// (a, b) for normal monomials, peeling the leftmost factor of a.
QRat pair_monomials(const Monomial& a, const Monomial& b) {
  thread_local std::map<MonoPair, QRat> cache;
  if (a.empty()) return b.empty() ? QRat(1) : QRat();
  MonoPair key{a.indices, b.indices};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const Monomial rest(std::vector<int>(a.indices.begin() + 1, a.indices.end()));
  const Element image = omega_apply_word({OmegaType::kPsi, -a.indices.front()}, b.indices).at_gamma_one();
  QRat v;
  for (const auto& [m, c] : image.terms()) v += c.at_gamma_one() * pair_monomials(rest, m);
  cache.emplace(std::move(key), v);
  return v;
}

}  // namespace

Coeff pair(const Element& a, const Element& b) {
  const Element a1 = a.at_gamma_one();
  const Element b1 = b.at_gamma_one();
  QRat v;
  for (const auto& [ma, ca] : a1.terms()) {
    for (const auto& [mb, cb] : b1.terms()) {
      const QRat p = pair_monomials(ma, mb);
      if (!p.is_zero()) v += ca.at_gamma_one() * cb.at_gamma_one() * p;
    }
  }
  return Coeff(v);
}

bool GramMatrix::symmetric() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(entries[i][j] == entries[j][i])) return false;
  return true;
}

GramMatrix gram(const Weight& w, int lo, int hi) {
  GramMatrix g;
  g.weight = w;
  g.basis = enumerate_basis(static_cast<int>(w.length), lo, hi, w.degree);
  const std::size_t n = g.basis.size();
  g.entries.assign(n, std::vector<QRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.entries[i][j] = pair_monomials(g.basis[i], g.basis[j]);
  return g;
}

QRat gram_determinant(const GramMatrix& g) {
  auto a = g.entries;
  const std::size_t n = a.size();
  QRat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return QRat();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const QRat inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const QRat f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

OrthonormalityReport orthonormality_report(const GramMatrix& g) {
  OrthonormalityReport rep;
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    for (std::size_t j = 0; j < g.entries[i].size(); ++j) {
      if (!congruent_mod_q2(Coeff(g.entries[i][j]), Rational(i == j ? 1 : 0))) {
        rep.violations.push_back({i, j, g.entries[i][j]});
      }
    }
  }
  return rep;
}

MembershipProbe lattice_membership_probe(const Element& u, int lo, int hi) {
  MembershipProbe probe;
  if (u.is_zero()) return probe;
  const Weight w = weight_of(u);
  for (const auto& m : enumerate_basis(static_cast<int>(w.length), lo, hi, w.degree)) {
    const QRat v = pair(u, Element(m, Coeff(1))).at_gamma_one();
    if (!v.regular_at_zero()) {
      probe.in_lattice = false;
      probe.witness = m;
      probe.witness_value = v;
      return probe;
    }
  }
  return probe;
}

}  // namespace imc
