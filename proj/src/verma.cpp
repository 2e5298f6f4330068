#include "imcrystal/verma.hpp"

#include <functional>
#include <tuple>

#include "imcrystal/kashiwara.hpp"

namespace imc {
namespace {

Coeff qpow(int integer_exp) { return Coeff(QRat::q_pow(HalfExp{2 * integer_exp})); }

// q - q^-1
const QRat& q_minus_qinv() {
  static const QRat v = QRat::laurent({-1, 0, 0, 0, 1}, HalfExp{-2});
  return v;
}

// Partitions of n into positive parts, as (part, multiplicity) lists.
void partitions(int n, int max_part, std::vector<std::pair<int, int>>& cur,
                std::vector<std::vector<std::pair<int, int>>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    for (int mult = n / p; mult >= 1; --mult) {
      cur.emplace_back(p, mult);
      partitions(n - p * mult, p - 1, cur, out);
      cur.pop_back();
    }
  }
}

QRat factorial(int n) {
  QRat f(1);
  for (int i = 2; i <= n; ++i) f *= QRat(i);
  return f;
}

QRat power(const QRat& x, int n) {
  QRat r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

const HPolynomial& cached_series(CartanSeries s, int n) {
  thread_local std::map<std::pair<int, int>, HPolynomial> cache;
  auto key = std::make_pair(static_cast<int>(s), n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return cache.emplace(key, psi_phi_component(s, n)).first->second;
}

}  // namespace

std::string HighestWeight::str() const { return "(h=" + std::to_string(h) + ",d=" + std::to_string(d) + ")"; }

DirectSum::DirectSum(std::vector<HighestWeight> summands) : summands_(std::move(summands)) {
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (summands_[i].h == 0) {
      throw DomainError("lambda(h) = 0 for component " + std::to_string(i + 1) +
                        ": not in the reduced category");
    }
  }
}

const HighestWeight& DirectSum::summand(int id) const {
  if (id < 1 || static_cast<std::size_t>(id) > summands_.size()) {
    throw DomainError("no component " + std::to_string(id) + " in a sum of " + std::to_string(summands_.size()));
  }
  return summands_[static_cast<std::size_t>(id - 1)];
}

// ---------------------------------------------------------- VermaVector

Element VermaVector::component(int id) const {
  auto it = components.find(id);
  return it == components.end() ? Element() : it->second;
}

void VermaVector::add(int id, const Element& e) {
  if (e.is_zero()) return;
  auto [it, inserted] = components.try_emplace(id, e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) components.erase(it);
  }
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  for (const auto& [id, e] : o.components) add(id, e);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  for (const auto& [id, e] : o.components) add(id, -e);
  return *this;
}

VermaVector& VermaVector::operator*=(const Coeff& c) {
  for (auto it = components.begin(); it != components.end();) {
    it->second *= c;
    it = it->second.is_zero() ? components.erase(it) : std::next(it);
  }
  return *this;
}

std::string VermaVector::str(const DirectSum& m) const {
  if (components.empty()) return "0";
  std::string out;
  for (const auto& [id, e] : components) {
    if (!out.empty()) out += " ; ";
    out += "[" + std::to_string(id) + "] " + e.str() + " @ " + m.summand(id).str();
  }
  return out;
}

VermaVector inject(int id, const Element& e) {
  VermaVector v;
  v.add(id, e);
  return v;
}

Element project(int id, const VermaVector& v) { return v.component(id); }

// --------------------------------------------------------------- actions

VermaVector act_xminus(int n, const VermaVector& v) {
  VermaVector r;
  const int idx[] = {n};
  for (const auto& [id, e] : v.components) r.add(id, left_multiply(idx, e));
  return r;
}

VermaVector act_h(int k, const VermaVector& v) {
  if (k == 0) throw DomainError("h_0 is not a generator");
  const Coeff factor(-(quantum_int(2L * k) / QRat(k)));
  VermaVector r;
  for (const auto& [id, e] : v.components) {
    Element acc;
    for (const auto& [m, c] : e.terms()) {
      std::vector<int> w = m.indices;
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] += k;
        acc += normalize(w, c);
        w[i] -= k;
      }
    }
    r.add(id, acc * factor);
  }
  return r;
}

VermaVector act_K(const DirectSum& m, const VermaVector& v, int power) {
  VermaVector r;
  for (const auto& [id, e] : v.components) {
    const int h = m.summand(id).h;
    Element acc;
    for (const auto& [mono, c] : e.terms()) {
      acc.add_term(mono, c * qpow(power * (h - 2 * static_cast<int>(mono.length()))));
    }
    r.add(id, acc);
  }
  return r;
}

VermaVector act_D(const DirectSum& m, const VermaVector& v, int power) {
  VermaVector r;
  for (const auto& [id, e] : v.components) {
    const int d = m.summand(id).d;
    Element acc;
    for (const auto& [mono, c] : e.terms()) {
      acc.add_term(mono, c * qpow(power * (d + static_cast<int>(mono.degree()))));
    }
    r.add(id, acc);
  }
  return r;
}

std::string HPolynomial::str() const {
  if (terms.empty()) return "0";
  std::string out;
  const std::string k = k_power == 0 ? "" : (k_power == 1 ? "K" : "K^" + std::to_string(k_power));
  for (const auto& [mono, c] : terms) {
    std::string t;
    std::string hs;
    for (const auto& [idx, mult] : mono) {
      hs += "*h[" + std::to_string(idx) + "]";
      if (mult > 1) hs += "^" + std::to_string(mult);
    }
    const std::string body = k + hs;
    const std::string cs = c.str();
    if (cs == "1") {
      t = body.empty() ? "1" : (body.front() == '*' ? body.substr(1) : body);
    } else {
      t = (c.is_monomial() ? cs : "(" + cs + ")") + (body.empty() ? "" : (body.front() == '*' ? body : "*" + body));
    }
    if (!out.empty()) out += t.front() == '-' ? " - " + t.substr(1) : " + " + t;
    else out = t;
  }
  return out;
}

HPolynomial psi_phi_component(CartanSeries s, int n) {
  HPolynomial p;
  p.k_power = s == CartanSeries::kPsi ? 1 : -1;
  const int size = s == CartanSeries::kPsi ? n : -n;
  if (size < 0) return p;
  if (size == 0) {
    p.terms.emplace(std::vector<std::pair<int, int>>{}, QRat(1));
    return p;
  }
  const QRat base = s == CartanSeries::kPsi ? q_minus_qinv() : -q_minus_qinv();
  std::vector<std::pair<int, int>> cur;
  std::vector<std::vector<std::pair<int, int>>> parts;
  partitions(size, size, cur, parts);
  for (auto& part : parts) {
    QRat coeff(1);
    std::vector<std::pair<int, int>> key;
    for (const auto& [k, mult] : part) {
      coeff *= power(base, mult) / factorial(mult);
      key.emplace_back(s == CartanSeries::kPsi ? k : -k, mult);
    }
    std::sort(key.begin(), key.end());
    p.terms.emplace(std::move(key), coeff);
  }
  return p;
}

VermaVector apply_hpolynomial(const DirectSum& m, const HPolynomial& p, const VermaVector& v) {
  VermaVector r;
  for (const auto& [mono, c] : p.terms) {
    VermaVector t = v;
    for (const auto& [idx, mult] : mono)
      for (int i = 0; i < mult; ++i) t = act_h(idx, t);
    r += t * Coeff(c);
  }
  return act_K(m, r, p.k_power);
}

namespace {

// x^+_k x_w v_lambda; depends on lambda only through lambda(h).
const Element& xplus_word(const DirectSum& single, int k, const std::vector<int>& w) {
  thread_local std::map<std::tuple<int, int, std::vector<int>>, Element> cache;
  auto key = std::make_tuple(single.summand(1).h, k, w);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const Coeff inv(q_minus_qinv().inverse());
  Element acc;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const int p = k + w[j];
    const VermaVector tail =
        inject(1, Element(Monomial(std::vector<int>(w.begin() + static_cast<long>(j) + 1, w.end())), Coeff(1)));
    const Element t = (apply_hpolynomial(single, cached_series(CartanSeries::kPsi, p), tail) -
                       apply_hpolynomial(single, cached_series(CartanSeries::kPhi, p), tail))
                          .component(1);
    if (!t.is_zero()) acc += left_multiply(std::span<const int>(w.data(), j), t) * inv;
  }
  return cache.emplace(std::move(key), std::move(acc)).first->second;
}

}  // namespace

VermaVector act_xplus(const DirectSum& m, int k, const VermaVector& v) {
  VermaVector r;
  for (const auto& [id, e] : v.components) {
    const DirectSum single({{m.summand(id).h, 0}});
    Element acc;
    for (const auto& [mono, c] : e.terms()) acc += xplus_word(single, k, mono.indices) * c;
    r.add(id, acc);
  }
  return r;
}

VermaVector act_chevalley(const DirectSum& m, Chevalley gen, const VermaVector& v) {
  switch (gen) {
    case Chevalley::kE0: return act_xminus(1, act_K(m, v, -1));
    case Chevalley::kF0: return act_K(m, act_xplus(m, -1, v), 1);
    case Chevalley::kE1: return act_xplus(m, 0, v);
    case Chevalley::kF1: return act_xminus(0, v);
    case Chevalley::kK0: return act_K(m, v, -1);
    case Chevalley::kK1: return act_K(m, v, 1);
    case Chevalley::kD: return act_D(m, v, 1);
  }
  return {};
}

Chevalley chevalley_from_name(const std::string& name) {
  static const std::map<std::string, Chevalley> names = {
      {"E0", Chevalley::kE0}, {"E1", Chevalley::kE1}, {"F0", Chevalley::kF0}, {"F1", Chevalley::kF1},
      {"K0", Chevalley::kK0}, {"K1", Chevalley::kK1}, {"D", Chevalley::kD}};
  auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown Chevalley generator '" + name + "'");
  return it->second;
}

VermaVector tilde_omega(int m, const VermaVector& v) {
  VermaVector r;
  for (const auto& [id, e] : v.components) r.add(id, omega_apply({OmegaType::kPsi, m}, e).at_gamma_one());
  return r;
}

std::vector<VermaVector> sample_vectors(const DirectSum& m, int max_length, int lo, int hi) {
  std::vector<VermaVector> out;
  for (std::size_t id = 1; id <= m.size(); ++id) {
    for (int len = 0; len <= max_length; ++len) {
      for (auto& mono : enumerate_basis(len, lo, hi)) {
        out.push_back(inject(static_cast<int>(id), Element(mono, Coeff(1))));
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ module maps

ModuleMap ModuleMap::injection(const DirectSum& target, int id) {
  ModuleMap f;
  f.kind_ = Kind::kInject;
  f.id_ = id;
  f.source_ = DirectSum({target.summand(id)});
  f.target_ = target;
  return f;
}

ModuleMap ModuleMap::projection(const DirectSum& source, int id) {
  ModuleMap f;
  f.kind_ = Kind::kProject;
  f.id_ = id;
  f.source_ = source;
  f.target_ = DirectSum({source.summand(id)});
  return f;
}

ModuleMap ModuleMap::swap(const DirectSum& m) {
  if (m.size() != 2) throw DomainError("swap needs a two-component sum");
  ModuleMap f;
  f.kind_ = Kind::kSwap;
  f.source_ = m;
  f.target_ = m;
  return f;
}

VermaVector ModuleMap::apply(const VermaVector& v) const {
  switch (kind_) {
    case Kind::kInject: return inject(id_, v.component(1));
    case Kind::kProject: return inject(1, v.component(id_));
    case Kind::kSwap: {
      VermaVector r;
      r.add(2, v.component(1));
      r.add(1, v.component(2));
      return r;
    }
  }
  return {};
}

std::string ModuleMap::str() const {
  switch (kind_) {
    case Kind::kInject: return "inject " + std::to_string(id_);
    case Kind::kProject: return "project " + std::to_string(id_);
    case Kind::kSwap: return "swap";
  }
  return "?";
}

IntertwiningReport verify_intertwining(const ModuleMap& map, const std::vector<VermaVector>& samples, int m_lo,
                                       int m_hi) {
  IntertwiningReport rep;
  const DirectSum& src = map.source();
  const DirectSum& dst = map.target();
  using Op = std::function<VermaVector(const DirectSum&, const VermaVector&)>;
  auto check = [&](const std::string& name, const Op& op, const VermaVector& v) {
    ++rep.checks;
    const VermaVector lhs = map.apply(op(src, v));
    const VermaVector rhs = op(dst, map.apply(v));
    if (!(lhs == rhs)) {
      rep.failures.push_back({name, map.str() + " on " + v.str(src) + ": " + lhs.str(dst) + " != " + rhs.str(dst)});
    }
  };
  for (const auto& v : samples) {
    check("K", [](const DirectSum& m, const VermaVector& x) { return act_K(m, x, 1); }, v);
    check("D", [](const DirectSum& m, const VermaVector& x) { return act_D(m, x, 1); }, v);
    for (int n = m_lo; n <= m_hi; ++n) {
      check("x+[" + std::to_string(n) + "]", [n](const DirectSum& m, const VermaVector& x) { return act_xplus(m, n, x); }, v);
      check("x-[" + std::to_string(n) + "]", [n](const DirectSum&, const VermaVector& x) { return act_xminus(n, x); }, v);
      if (n != 0) check("h[" + std::to_string(n) + "]", [n](const DirectSum&, const VermaVector& x) { return act_h(n, x); }, v);
      check("tilde-omega[" + std::to_string(n) + "]",
            [n](const DirectSum&, const VermaVector& x) { return tilde_omega(n, x); }, v);
      check("tilde-x[" + std::to_string(n) + "]", [n](const DirectSum&, const VermaVector& x) { return act_xminus(n, x); }, v);
    }
  }
  return rep;
}

std::optional<int> nilpotency_probe(const DirectSum& m, int n, const VermaVector& v, int cap) {
  VermaVector cur = v;
  for (int t = 1; t <= cap; ++t) {
    cur = act_xplus(m, n, cur);
    if (cur.is_zero()) return t;
  }
  return std::nullopt;
}

ModuleRelationReport check_module_relations(const DirectSum& m, const std::vector<VermaVector>& samples, int idx_lo,
                                            int idx_hi) {
  ModuleRelationReport rep;
  auto expect_zero = [&](const std::string& name, const VermaVector& residual, const VermaVector& v) {
    ++rep.checks;
    if (!residual.is_zero()) rep.failures.push_back({name, "on " + v.str(m) + ": residual " + residual.str(m)});
  };
  auto K = [&](const VermaVector& x, int p) { return act_K(m, x, p); };
  auto D = [&](const VermaVector& x, int p) { return act_D(m, x, p); };
  auto xp = [&](int k, const VermaVector& x) { return act_xplus(m, k, x); };
  const Coeff q2 = qpow(1) * qpow(1);
  const QRat inv = q_minus_qinv().inverse();

  for (const auto& v : samples) {
    for (int k = idx_lo; k <= idx_hi; ++k) {
      const std::string ks = std::to_string(k);
      expect_zero("K x-[" + ks + "] K^-1", K(act_xminus(k, K(v, -1)), 1) - act_xminus(k, v) * (Coeff(1) / q2), v);
      expect_zero("K x+[" + ks + "] K^-1", K(xp(k, K(v, -1)), 1) - xp(k, v) * q2, v);
      expect_zero("D x-[" + ks + "] D^-1", D(act_xminus(k, D(v, -1)), 1) - act_xminus(k, v) * qpow(k), v);
      expect_zero("D x+[" + ks + "] D^-1", D(xp(k, D(v, -1)), 1) - xp(k, v) * qpow(k), v);
      for (int l = idx_lo; l <= idx_hi; ++l) {
        const std::string kl = "[" + ks + "," + std::to_string(l) + "]";
        if (k != 0 && l != 0) {
          expect_zero("[h,h]" + kl, act_h(k, act_h(l, v)) - act_h(l, act_h(k, v)), v);
        }
        if (k != 0) {
          const Coeff c(quantum_int(2L * k) / QRat(k));
          expect_zero("[h,x-]" + kl,
                      act_h(k, act_xminus(l, v)) - act_xminus(l, act_h(k, v)) + act_xminus(k + l, v) * c, v);
          expect_zero("[h,x+]" + kl, act_h(k, xp(l, v)) - xp(l, act_h(k, v)) - xp(k + l, v) * c, v);
        }
        VermaVector cartan = apply_hpolynomial(m, cached_series(CartanSeries::kPsi, k + l), v) -
                             apply_hpolynomial(m, cached_series(CartanSeries::kPhi, k + l), v);
        expect_zero("[x+,x-]" + kl, xp(k, act_xminus(l, v)) - act_xminus(l, xp(k, v)) - cartan * Coeff(inv), v);
        // x+_{k+1} x+_l - q^2 x+_l x+_{k+1} = q^2 x+_k x+_{l+1} - x+_{l+1} x+_k
        expect_zero("serre x+" + kl,
                    xp(k + 1, xp(l, v)) - xp(l, xp(k + 1, v)) * q2 - xp(k, xp(l + 1, v)) * q2 + xp(l + 1, xp(k, v)),
                    v);
      }
    }
    const std::pair<Chevalley, Chevalley> pairs[] = {{Chevalley::kE0, Chevalley::kF0},
                                                      {Chevalley::kE1, Chevalley::kF1},
                                                      {Chevalley::kE0, Chevalley::kF1},
                                                      {Chevalley::kE1, Chevalley::kF0}};
    const std::pair<Chevalley, int> kfor[] = {{Chevalley::kK0, 0}, {Chevalley::kK1, 1}};
    for (const auto& [e, f] : pairs) {
      VermaVector lhs = act_chevalley(m, e, act_chevalley(m, f, v)) - act_chevalley(m, f, act_chevalley(m, e, v));
      const bool diag = (e == Chevalley::kE0) == (f == Chevalley::kF0);
      if (diag) {
        const int i = e == Chevalley::kE0 ? 0 : 1;
        const Chevalley ki = kfor[i].first;
        // K_i^-1 = K^{+1} for i = 0 and K^{-1} for i = 1 at gamma = 1.
        const VermaVector kinv = i == 0 ? K(v, 1) : K(v, -1);
        lhs -= (act_chevalley(m, ki, v) - kinv) * Coeff(inv);
      }
      expect_zero(std::string("[E,F]") + (e == Chevalley::kE0 ? "0" : "1") + (f == Chevalley::kF0 ? "0" : "1"), lhs,
                  v);
    }
  }
  return rep;
}

namespace {

bool is_top(const VermaVector& v) {
  if (v.is_zero()) return false;
  for (const auto& [id, e] : v.components)
    for (const auto& [mono, c] : e.terms())
      if (!mono.empty()) return false;
  return true;
}

std::size_t max_length(const VermaVector& v) {
  std::size_t len = 0;
  for (const auto& [id, e] : v.components)
    for (const auto& [mono, c] : e.terms()) len = std::max(len, mono.length());
  return len;
}

// Every x^+ shortens words by one, so the search depth is the word length.
bool descend(const DirectSum& m, const VermaVector& v, int lo, int hi, std::vector<int>& path) {
  if (is_top(v)) return true;
  if (v.is_zero() || path.size() > 64) return false;
  for (int n = lo; n <= hi; ++n) {
    const VermaVector next = act_xplus(m, n, v);
    if (next.is_zero()) continue;
    path.push_back(n);
    if (descend(m, next, lo, hi, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> simplicity_probe(const DirectSum& m, const VermaVector& v, int lo, int hi) {
  std::vector<int> path;
  path.reserve(max_length(v));
  if (descend(m, v, lo, hi, path)) return path;
  return std::nullopt;
}

}  // namespace imc
