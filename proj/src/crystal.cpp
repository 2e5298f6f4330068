#include "imcrystal/crystal.hpp"

#include <set>

namespace imc {
namespace {

std::string witness(const CrystalClass& b, const std::string& op, const std::string& what) {
  return op + " on " + b.str() + ": " + what;
}

struct Pole {
  int component;
  Monomial mono;
  QRat coordinate;
};

std::optional<Pole> first_pole(const LatticeDesc& L, const VermaVector& v) {
  for (const auto& [id, e] : v.components) {
    for (const auto& [mono, c] : e.terms()) {
      QRat coord = c.at_gamma_one() / L.scale(id, mono);
      if (!coord.regular_at_zero()) return Pole{id, mono, std::move(coord)};
    }
  }
  return std::nullopt;
}

bool valuation_at_least(const QRat& x, int half_units) {
  if (x.is_zero()) return true;
  return x.valuation()->value >= half_units;
}

// Solves G x = b over Q(q^{1/2}); G square and invertible.
std::vector<QRat> solve(std::vector<std::vector<QRat>> g, std::vector<QRat> b) {
  const std::size_t n = g.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && g[piv][col].is_zero()) ++piv;
    if (piv == n) throw DomainError("lattice generator matrix is singular");
    std::swap(g[piv], g[col]);
    std::swap(b[piv], b[col]);
    const QRat inv = g[col][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || g[r][col].is_zero()) continue;
      const QRat f = g[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) g[r][c] -= f * g[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= g[i][i];
  return b;
}

std::string column_str(const std::vector<std::vector<QRat>>& g, std::size_t col) {
  std::string s = "(";
  for (std::size_t r = 0; r < g.size(); ++r) s += (r ? ", " : "") + g[r][col].str();
  return s + ")";
}

}  // namespace

std::string CrystalClass::str() const {
  return std::string(sign < 0 ? "-" : "+") + "[" + std::to_string(component) + "] " + mono.str();
}

std::string CrystalBounds::str() const {
  return "max-length " + std::to_string(max_length) + ", window " + std::to_string(lo) + ":" + std::to_string(hi) +
         ", m " + std::to_string(m_lo) + ":" + std::to_string(m_hi);
}

QRat LatticeDesc::scale(int component, const Monomial& m) const {
  if (auto it = scales.find({component, m.indices}); it != scales.end()) return it->second;
  if (auto it = component_scales.find(component); it != component_scales.end()) return it->second;
  return QRat(1);
}

VermaVector LatticeDesc::lift(const CrystalClass& b) const {
  return inject(b.component, Element(b.mono, Coeff(scale(b.component, b.mono) * QRat(b.sign))));
}

std::vector<CrystalClass> LatticeDesc::classes() const {
  std::vector<CrystalClass> out;
  for (std::size_t id = 1; id <= module.size(); ++id)
    for (int len = 0; len <= bounds.max_length; ++len)
      for (auto& m : enumerate_basis(len, bounds.lo, bounds.hi)) out.push_back({1, std::move(m), static_cast<int>(id)});
  return out;
}

ReducedVector reduce_mod_q(const LatticeDesc& L, const VermaVector& v) {
  ReducedVector r;
  for (const auto& [id, e] : v.components) {
    for (const auto& [mono, c] : e.terms()) {
      const QRat coord = c.at_gamma_one() / L.scale(id, mono);
      if (!coord.regular_at_zero()) {
        throw NotInLatticeError("coordinate " + coord.str() + " of [" + std::to_string(id) + "] " + mono.str() +
                                    " has a pole at q = 0",
                                id, mono, coord);
      }
      Rational v0 = coord.value_at_zero();
      if (v0 != 0) r.emplace(std::make_pair(id, mono.indices), std::move(v0));
    }
  }
  return r;
}

std::string reduced_str(const ReducedVector& r) {
  if (r.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : r) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")*[" + std::to_string(key.first) + "] " + Monomial(key.second).str();
  }
  return out;
}

std::string ClassImage::str() const {
  switch (kind) {
    case Kind::kZero: return "0";
    case Kind::kClass: return cls.str();
    case Kind::kViolation: return "violation: " + detail;
  }
  return "?";
}

ClassImage classify(const ReducedVector& r) {
  ClassImage img;
  if (r.empty()) return img;
  if (r.size() > 1) {
    img.kind = ClassImage::Kind::kViolation;
    img.detail = "multi-term class " + reduced_str(r);
    return img;
  }
  const auto& [key, c] = *r.begin();
  if (c != 1 && c != -1) {
    img.kind = ClassImage::Kind::kViolation;
    img.detail = "coefficient " + c.get_str() + " is not +-1";
    return img;
  }
  img.kind = ClassImage::Kind::kClass;
  img.cls = {c > 0 ? 1 : -1, Monomial(key.second), key.first};
  return img;
}

namespace {

ClassImage image_of(const LatticeDesc& L, const VermaVector& v) {
  try {
    return classify(reduce_mod_q(L, v));
  } catch (const NotInLatticeError& e) {
    ClassImage img;
    img.kind = ClassImage::Kind::kViolation;
    img.detail = e.what();
    return img;
  }
}

}  // namespace

ClassImage crystal_image_x(const LatticeDesc& L, int m, const CrystalClass& b) {
  return image_of(L, act_xminus(m, L.lift(b)));
}

ClassImage crystal_image_omega(const LatticeDesc& L, int m, const CrystalClass& b) {
  return image_of(L, tilde_omega(m, L.lift(b)));
}

bool CrystalReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const AxiomResult& CrystalReport::result(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return r;
  throw DomainError("no axiom '" + name + "' in report");
}

CrystalReport verify_crystal_axioms(const LatticeDesc& L) {
  CrystalReport rep;
  rep.bounds = L.bounds;
  AxiomResult span{"lattice-span"}, weights{"weight-decomposition"}, stability{"stability"}, basis{"basis"},
      images{"images"}, commutation{"commutation"};
  auto fail = [](AxiomResult& a, std::string w) {
    a.passed = false;
    if (a.witnesses.size() < 20) a.witnesses.push_back(std::move(w));
  };

  const auto classes = L.classes();
  std::set<std::pair<int, std::vector<int>>> seen;
  for (const auto& b : classes) {
    ++span.checks;
    if (L.scale(b.component, b.mono).is_zero()) fail(span, b.str() + " has scale 0");

    ++basis.checks;
    if (!seen.emplace(b.component, b.mono.indices).second) fail(basis, b.str() + " repeated");
    const ClassImage self = image_of(L, L.lift(b));
    if (!self.is_class() || !(self.cls == b)) fail(basis, b.str() + " reduces to " + self.str());

    const Weight w = weight_of(b.mono);
    for (int m = L.bounds.m_lo; m <= L.bounds.m_hi; ++m) {
      const std::string ms = std::to_string(m);
      const VermaVector xv = act_xminus(m, L.lift(b));
      const VermaVector ov = tilde_omega(m, L.lift(b));

      ++weights.checks;
      const Weight wx{w.length + 1, w.degree + m};
      const Weight wo{w.length - 1, w.degree + m};
      for (const auto& [id, e] : xv.components)
        if (weight_of(e) != wx) fail(weights, witness(b, "x~[" + ms + "]", "weight " + weight_of(e).str()));
      for (const auto& [id, e] : ov.components)
        if (weight_of(e) != wo) fail(weights, witness(b, "Omega~[" + ms + "]", "weight " + weight_of(e).str()));

      for (const auto* v : {&xv, &ov}) {
        ++stability.checks;
        if (auto p = first_pole(L, *v)) {
          fail(stability, witness(b, (v == &xv ? "x~[" : "Omega~[") + ms + "]",
                                  "coordinate " + p->coordinate.str() + " at [" + std::to_string(p->component) +
                                      "] " + p->mono.str()));
        }
      }

      const ClassImage ix = image_of(L, xv);
      const ClassImage io = image_of(L, ov);
      images.checks += 2;
      if (ix.kind == ClassImage::Kind::kViolation) fail(images, witness(b, "x~[" + ms + "]", ix.detail));
      if (io.kind == ClassImage::Kind::kViolation) fail(images, witness(b, "Omega~[" + ms + "]", io.detail));

      const VermaVector ominus = tilde_omega(-m, L.lift(b));
      const ClassImage iom = image_of(L, ominus);
      if (ix.is_class() && iom.is_class()) {
        ++commutation.checks;
        const ClassImage lhs = image_of(L, act_xminus(m, ominus));
        const ClassImage rhs = image_of(L, tilde_omega(-m, xv));
        const bool same = lhs.kind == rhs.kind && (!lhs.is_class() || lhs.cls == rhs.cls);
        if (!same || lhs.kind == ClassImage::Kind::kViolation) {
          fail(commutation, witness(b, "m = " + ms, "x~ Omega~ = " + lhs.str() + ", Omega~ x~ = " + rhs.str()));
        }
      }
    }
  }
  rep.results = {span, weights, stability, basis, images, commutation};
  return rep;
}

DirectSumBasis assemble_direct_sum_basis(const std::vector<HighestWeight>& weights, const CrystalBounds& bounds) {
  DirectSumBasis out;
  out.lattice.module = DirectSum(weights);
  out.lattice.bounds = bounds;
  out.basis = out.lattice.classes();
  return out;
}

SplitFixture SplitFixture::canonical(const DirectSum& m, const CrystalBounds& bounds) {
  SplitFixture f;
  f.module = m;
  f.bounds = bounds;
  const std::size_t n = m.size();
  f.generators.assign(n, std::vector<QRat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    f.generators[i][i] = QRat(1);
    f.parts.push_back(static_cast<int>(i + 1));
  }
  return f;
}

SplitFixture SplitFixture::diagonal(const HighestWeight& w, const CrystalBounds& bounds) {
  SplitFixture f;
  f.module = DirectSum({w, w});
  f.bounds = bounds;
  f.generators = {{QRat(1), QRat(0)}, {QRat(1), QRat::q_pow(HalfExp{2})}};
  f.parts = {1, 2};
  return f;
}

bool SplitReport::passed() const {
  if (!compatible) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  for (const auto& p : parts)
    if (!p.passed()) return false;
  return true;
}

SplitReport split_converse_check(const SplitFixture& f) {
  SplitReport rep;
  const auto& g = f.generators;
  const std::size_t n = f.module.size();
  if (g.size() != n || f.parts.size() != n) throw DomainError("split fixture needs a square generator matrix");
  for (const auto& row : g)
    if (row.size() != n) throw DomainError("split fixture needs a square generator matrix");

  AxiomResult decomposition{"decomposition"}, intersection{"intersection"}, classes{"basis-split"};
  auto column = [&](std::size_t c) {
    std::vector<QRat> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = g[r][c];
    return v;
  };

  // L = sum_j (L n M_j) iff every projection p_j(column) lies in L.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      ++decomposition.checks;
      std::vector<QRat> p(n);
      p[j] = g[j][c];
      const auto coords = solve(g, p);
      for (const auto& x : coords) {
        if (!x.regular_at_zero()) {
          decomposition.passed = false;
          decomposition.witnesses.push_back("p_" + std::to_string(j + 1) + column_str(g, c) + " has coordinate " +
                                            x.str() + " outside A_0");
          break;
        }
      }
    }
  }
  rep.compatible = decomposition.passed;

  // L_j = L n M_j: the columns of part j lie in M_j.
  for (std::size_t c = 0; c < n; ++c) {
    ++intersection.checks;
    const std::size_t j = static_cast<std::size_t>(f.parts[c] - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != j && !g[r][c].is_zero()) {
        intersection.passed = false;
        intersection.witnesses.push_back("column " + column_str(g, c) + " of part " + std::to_string(j + 1) +
                                         " leaves M_" + std::to_string(j + 1));
        break;
      }
    }
  }

  // B_j = B n (L_j/qL_j): column - p_j(column) lies in qL.
  for (std::size_t c = 0; c < n; ++c) {
    ++classes.checks;
    const std::size_t j = static_cast<std::size_t>(f.parts[c] - 1);
    auto rest = column(c);
    rest[j] = QRat();
    for (const auto& x : solve(g, rest)) {
      if (!valuation_at_least(x, 2)) {
        classes.passed = false;
        classes.witnesses.push_back("class of column " + column_str(g, c) + " is not in L_" + std::to_string(j + 1) +
                                    "/qL_" + std::to_string(j + 1));
        break;
      }
    }
  }
  rep.checks = {decomposition, intersection, classes};
  if (!rep.compatible || !intersection.passed) return rep;

  for (std::size_t c = 0; c < n; ++c) {
    const int j = f.parts[c];
    LatticeDesc part;
    part.module = DirectSum({f.module.summand(j)});
    part.bounds = f.bounds;
    part.component_scales[1] = g[static_cast<std::size_t>(j - 1)][c];
    rep.parts.push_back(verify_crystal_axioms(part));
  }
  return rep;
}

}  // namespace imc
