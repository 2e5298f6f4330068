#include "imcrystal/kashiwara.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace imc {
namespace {

struct OmegaKey {
  OmegaType type;
  int k;
  std::vector<int> word;
  bool operator==(const OmegaKey&) const = default;
};

struct OmegaKeyHash {
  std::size_t operator()(const OmegaKey& key) const noexcept {
    std::size_t h = static_cast<std::size_t>(key.type) * 31u + static_cast<std::size_t>(key.k + 4096);
    for (int x : key.word) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

Coeff gamma(int integer_power, const QRat& c = QRat(1)) { return Coeff::gamma_pow(HalfExp{2 * integer_power}, c); }

const Coeff& q2() {
  static const Coeff c(QRat::q_pow(HalfExp{4}));
  return c;
}

class OmegaEvaluator {
 public:
  const Element& eval(OmegaType type, int k, std::span<const int> word) {
    OmegaKey key{type, k, std::vector<int>(word.begin(), word.end())};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (cache_.size() > (1u << 20)) cache_.clear();
    Element r = compute(type, k, word);
    return cache_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  Element compute(OmegaType type, int k, std::span<const int> word) {
    Element r;
    if (word.empty()) return r;
    const int m = word.front();
    const auto rest = word.subspan(1);
    if (k == -m) {
      r += normalize(rest, type == OmegaType::kPsi ? gamma(k) : gamma(-k));
    }
    if (rest.empty()) return r;
    if (type == OmegaType::kPsi) {
      const int hi = *std::max_element(rest.begin(), rest.end());
      for (int s = 0; s <= k + hi; ++s) {
        Element sub = eval(type, k - s, rest);
        if (sub.is_zero()) continue;
        const int idx[] = {m + s};
        r += left_multiply(idx, sub) * gamma(s, g_coeff(s));
      }
    } else {
      const int lo = *std::min_element(rest.begin(), rest.end());
      for (int s = 0; s <= -k - lo; ++s) {
        Element sub = eval(type, k + s, rest);
        if (sub.is_zero()) continue;
        const int idx[] = {m - s};
        r += left_multiply(idx, sub) * gamma(s, g_coeff_conj(s));
      }
    }
    return r;
  }

  std::unordered_map<OmegaKey, Element, OmegaKeyHash> cache_;
};

OmegaEvaluator& evaluator() {
  thread_local OmegaEvaluator ev;
  return ev;
}

Element op_psi(int k, const Element& e) { return omega_apply({OmegaType::kPsi, k}, e); }
Element op_phi(int k, const Element& e) { return omega_apply({OmegaType::kPhi, k}, e); }
Element op_x(int n, const Element& e) {
  const int idx[] = {n};
  return left_multiply(idx, e);
}

int max_index(const Monomial& m) { return m.empty() ? 0 : *std::max_element(m.indices.begin(), m.indices.end()); }

// LHS - RHS for one relation, one index pair and one monomial.
Element residual(KashiwaraRelation rel, int a, int b, const Monomial& mono) {
  const Element w(mono, Coeff(1));
  switch (rel) {
    case KashiwaraRelation::kOmegaPsiX: {
      const int m = a, n = b;
      Element lhs = op_psi(m, op_x(n + 1, w)) * (q2() * gamma(1)) - op_psi(m + 1, op_x(n, w));
      Element rhs = op_x(n + 1, op_psi(m, w)) * gamma(1) - op_x(n, op_psi(m + 1, w)) * q2();
      if (m == -n - 1) rhs += w * gamma(m + 1, QRat::laurent({-1, 0, 0, 0, 1}, HalfExp{0}));
      return lhs - rhs;
    }
    case KashiwaraRelation::kOmegaPhiX: {
      const int m = a, n = b;
      Element lhs = op_phi(m, op_x(n + 1, w)) * q2() - op_phi(m + 1, op_x(n, w)) * gamma(1);
      Element rhs = op_x(n + 1, op_phi(m, w)) - op_x(n, op_phi(m + 1, w)) * (q2() * gamma(1));
      if (m == -n - 1) rhs += w * gamma(-m, QRat::laurent({-1, 0, 0, 0, 1}, HalfExp{0}));
      return lhs - rhs;
    }
    case KashiwaraRelation::kPsiPsi:
    case KashiwaraRelation::kPhiPhi: {
      const auto op = rel == KashiwaraRelation::kPsiPsi ? op_psi : op_phi;
      const int k = a, l = b;
      Element lhs = op(k + 1, op(l, w)) * q2() - op(l, op(k + 1, w));
      Element rhs = op(k, op(l + 1, w)) - op(l + 1, op(k, w)) * q2();
      return lhs - rhs;
    }
    case KashiwaraRelation::kPhiPsi: {
      const int k = a, m = b;
      Element lhs = op_psi(k, op_phi(m, w));
      Element rhs;
      if (!mono.empty()) {
        // Omega_psi(k - r) w = 0 once k - r < -max(w).
        for (int r = 0; r <= k + max_index(mono); ++r) {
          rhs += op_phi(r + m, op_psi(k - r, w)) * gamma(2 * r, g_coeff_conj(r));
        }
      }
      return lhs - rhs;
    }
    case KashiwaraRelation::kSerreX: {
      const int k = a, l = b;
      auto word = [&](int x, int y) {
        std::vector<int> v{x, y};
        return left_multiply(v, w);
      };
      Element lhs = word(l, k + 1) - word(k + 1, l) * q2();
      Element rhs = word(l + 1, k) * q2() - word(k, l + 1);
      return lhs - rhs;
    }
    case KashiwaraRelation::kPsiSeries: {
      const int k = a, m = b;
      Element lhs = op_psi(k, op_x(m, w));
      Element rhs;
      if (k == -m) rhs += w * gamma(k);
      if (!mono.empty()) {
        for (int r = 0; r <= k + max_index(mono); ++r) {
          rhs += op_x(m + r, op_psi(k - r, w)) * gamma(r, g_coeff(r));
        }
      }
      return lhs - rhs;
    }
    case KashiwaraRelation::kPhiSeries: {
      const int k = a, m = b;
      Element lhs = op_phi(k, op_x(m, w));
      Element rhs;
      if (k == -m) rhs += w * gamma(-k);
      if (!mono.empty()) {
        const int lo = *std::min_element(mono.indices.begin(), mono.indices.end());
        for (int r = 0; r <= -k - lo; ++r) {
          rhs += op_x(m - r, op_phi(k + r, w)) * gamma(r, g_coeff_conj(r));
        }
      }
      return lhs - rhs;
    }
  }
  return {};
}

}  // namespace

Element omega_apply_word(OmegaKind op, std::span<const int> word) {
  return evaluator().eval(op.type, op.component, word);
}

Element omega_apply(OmegaKind op, const Element& e) {
  Element r;
  for (const auto& [m, c] : e.terms()) {
    Element t = omega_apply_word(op, m.indices);
    r += t *= c;
  }
  return r;
}

Element omega_psi_closed(int p, const Monomial& m) {
  Element r;
  const auto& n = m.indices;
  const Coeff gp = gamma(p);
  std::vector<int> shifts;
  for (std::size_t l = 0; l < n.size(); ++l) {
    const long total = static_cast<long>(p) + n[l];
    if (total < 0) continue;
    shifts.assign(l, 0);
    // Enumerate all compositions of `total` into l nonnegative parts.
    std::function<void(std::size_t, long, QRat)> rec = [&](std::size_t j, long left, QRat weight) {
      if (j + 1 >= l || l == 0) {
        if (l == 0) {
          if (left != 0) return;
        } else {
          shifts[j] = static_cast<int>(left);
          weight *= g_coeff(left);
        }
        std::vector<int> word;
        word.reserve(n.size() - 1);
        for (std::size_t i = 0; i < l; ++i) word.push_back(n[i] + shifts[i]);
        for (std::size_t i = l + 1; i < n.size(); ++i) word.push_back(n[i]);
        r += normalize(word, gp * Coeff(weight));
        return;
      }
      for (long s = 0; s <= left; ++s) {
        shifts[j] = static_cast<int>(s);
        rec(j + 1, left - s, weight * g_coeff(s));
      }
    };
    rec(0, total, QRat(1));
  }
  return r;
}

std::string relation_name(KashiwaraRelation r) {
  switch (r) {
    case KashiwaraRelation::kOmegaPsiX: return "omegapsi-x";
    case KashiwaraRelation::kOmegaPhiX: return "omegaphi-x";
    case KashiwaraRelation::kPsiPsi: return "psi-psi";
    case KashiwaraRelation::kPhiPhi: return "phi-phi";
    case KashiwaraRelation::kPhiPsi: return "phi-psi";
    case KashiwaraRelation::kSerreX: return "serre-x";
    case KashiwaraRelation::kPsiSeries: return "psi-series";
    case KashiwaraRelation::kPhiSeries: return "phi-series";
  }
  return "?";
}

std::vector<KashiwaraRelation> all_relations() {
  return {KashiwaraRelation::kOmegaPsiX, KashiwaraRelation::kOmegaPhiX, KashiwaraRelation::kPsiPsi,
          KashiwaraRelation::kPhiPhi,    KashiwaraRelation::kPhiPsi,    KashiwaraRelation::kSerreX,
          KashiwaraRelation::kPsiSeries, KashiwaraRelation::kPhiSeries};
}

KashiwaraRelation relation_from_name(const std::string& name) {
  for (auto r : all_relations())
    if (relation_name(r) == name) return r;
  throw DomainError("unknown relation '" + name + "'");
}

RelationReport check_kashiwara_relation(KashiwaraRelation rel, int comp_lo, int comp_hi, const DomainBounds& domain) {
  RelationReport rep{rel, comp_lo, comp_hi, domain, 0, {}};
  std::vector<Monomial> monos;
  for (int len = 0; len <= domain.max_length; ++len) {
    auto b = enumerate_basis(len, domain.lo, domain.hi);
    monos.insert(monos.end(), b.begin(), b.end());
  }
  for (int a = comp_lo; a <= comp_hi; ++a) {
    for (int b = comp_lo; b <= comp_hi; ++b) {
      for (const auto& m : monos) {
        ++rep.evaluations;
        Element res = residual(rel, a, b, m);
        if (!res.is_zero()) rep.residuals.push_back({rel, {a, b}, m, std::move(res)});
      }
    }
  }
  return rep;
}

}  // namespace imc
