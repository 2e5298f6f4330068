// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every bound and count below is fixed here on purpose.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "imcrystal/crystal.hpp"
#include "imcrystal/kashiwara.hpp"
#include "imcrystal/pairing.hpp"
#include "imcrystal/report.hpp"
#include "imcrystal/verma.hpp"

using namespace imc;

namespace {

// Exact arithmetic throughout: every comparison below is equality, tolerance 0.
constexpr std::uint64_t kSeed = 12345;
constexpr int kConfluenceWords = 200;
constexpr int kConfluenceMaxLength = 5;
constexpr int kConfluenceLo = -3, kConfluenceHi = 3;
constexpr int kRelLo = -2, kRelHi = 2, kRelMaxLength = 2;
constexpr int kOracleMaxLength = 3, kOracleLo = -2, kOracleHi = 2, kOraclePLo = -5, kOraclePHi = 5;
constexpr int kFormPairs = 200, kFormMaxLength = 3, kFormLo = -2, kFormHi = 2;
constexpr int kModuleMaxLength = 3, kModuleLo = -2, kModuleHi = 2;
constexpr int kNilLo = -3, kNilHi = 3;
constexpr int kCrystalMaxLength = 3, kCrystalLo = -2, kCrystalHi = 2, kCrystalMLo = -3, kCrystalMHi = 3;

QRat q(int n) { return QRat::q_pow(HalfExp{2 * n}); }

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> run;  // empty string on success, else the first witness
};

std::vector<Monomial> monomials(int max_len, int lo, int hi) {
  std::vector<Monomial> out;
  for (int len = 0; len <= max_len; ++len) {
    auto b = enumerate_basis(len, lo, hi);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::string first_witness(const SuiteReport& r) {
  for (const auto& x : r.results)
    if (!x.passed) return x.name + (x.witnesses.empty() ? "" : ": " + x.witnesses.front());
  return "";
}

std::string c1() {
  const int w01[] = {0, 1};
  if (!(normalize(w01) == Element(Monomial{1, 0}, Coeff(q(2))))) return "x[0]x[1] -> " + normalize(w01).str();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> len(1, kConfluenceMaxLength), idx(kConfluenceLo, kConfluenceHi);
  for (int i = 0; i < kConfluenceWords; ++i) {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = idx(rng);
    const Element a = normalize(w, Coeff(1), RewriteStrategy::kLeftmost);
    const Element b = normalize(w, Coeff(1), RewriteStrategy::kRightmost);
    if (!(a == b)) return "strategies differ on word " + std::to_string(i);
    for (const auto& [m, c] : a.terms())
      if (!m.is_normal()) return "non-normal output " + m.str();
  }
  return "";
}

std::string c2() {
  for (auto rel : all_relations()) {
    const auto r = check_kashiwara_relation(rel, kRelLo, kRelHi, {kRelMaxLength, kRelLo, kRelHi});
    if (r.evaluations == 0) return relation_name(rel) + ": nothing evaluated";
    if (!r.passed()) return relation_name(rel) + " on " + r.residuals.front().monomial.str() + ": " + r.residuals.front().residual.str();
  }
  return "";
}

std::string c3() {
  for (const auto& m : monomials(kOracleMaxLength, kOracleLo, kOracleHi))
    for (int p = kOraclePLo; p <= kOraclePHi; ++p)
      if (!(omega_psi_closed(p, m) == omega_apply({OmegaType::kPsi, p}, Element(m, Coeff(1)))))
        return "p=" + std::to_string(p) + " on " + m.str();
  return "";
}

std::string c4() {
  RunConfig cfg;
  cfg.max_length = kFormMaxLength;
  cfg.window = std::pair{kFormLo, kFormHi};
  cfg.seed = kSeed;
  cfg.samples = kFormPairs;
  const auto rep = run_suite("form", cfg);
  for (const auto& name : {"symmetry", "adjointness"}) {
    for (const auto& r : rep.results)
      if (r.name == name && r.checks < kFormPairs) return std::string(name) + ": only " + std::to_string(r.checks) + " pairs";
  }
  if (!rep.passed()) return first_witness(rep);
  for (int len = 1; len <= kFormMaxLength; ++len)
    for (int deg = len * kFormLo; deg <= len * kFormHi; ++deg)
      if (!orthonormality_report(gram({len, deg}, kFormLo, kFormHi)).passed()) return "gram (" + std::to_string(len) + "," + std::to_string(deg) + ")";
  const Element x11(Monomial{1, 1}, Coeff(1));
  if (!(pair(x11, x11) == Coeff(1 + q(2)))) return "(x[1]x[1], x[1]x[1]) = " + pair(x11, x11).str();
  return "";
}

std::string c5() {
  for (int h : {1, 2, -1}) {
    const DirectSum m({{h, 0}});
    const auto r = check_module_relations(m, sample_vectors(m, kModuleMaxLength, kModuleLo, kModuleHi), kModuleLo, kModuleHi);
    if (!r.passed()) return "h=" + std::to_string(h) + " " + r.failures.front().check + ": " + r.failures.front().detail;
  }
  return "";
}

std::string c6() {
  for (int h : {1, 2, -1}) {
    const DirectSum m({{h, 0}});
    for (const auto& v : sample_vectors(m, kModuleMaxLength, kModuleLo, kModuleHi)) {
      const int k = static_cast<int>(v.component(1).terms().begin()->first.length());
      for (int n = kNilLo; n <= kNilHi; ++n) {
        VermaVector cur = v;
        for (int t = 0; t <= k; ++t) cur = act_xplus(m, n, cur);
        if (!cur.is_zero()) return "h=" + std::to_string(h) + " x+[" + std::to_string(n) + "] on " + v.str(m);
      }
    }
  }
  return "";
}

std::string c7() {
  const CrystalBounds b{kCrystalMaxLength, kCrystalLo, kCrystalHi, kCrystalMLo, kCrystalMHi};
  const std::vector<std::vector<HighestWeight>> cases = {{{1, 0}}, {{3, 0}}, {{1, 0}, {3, 0}}};
  for (const auto& ws : cases) {
    const auto rep = verify_crystal_axioms(assemble_direct_sum_basis(ws, b).lattice);
    for (const auto& a : rep.results) {
      if (!a.passed) return a.name + ": " + (a.witnesses.empty() ? "" : a.witnesses.front());
      if (a.checks == 0) return a.name + ": nothing checked";
    }
  }
  const LatticeDesc L = assemble_direct_sum_basis({{1, 0}}, b).lattice;
  const auto img = crystal_image_x(L, 0, CrystalClass{1, Monomial{2}, 1});
  const CrystalClass expected{-1, Monomial{1, 1}, 1};
  if (!img.is_class() || !(img.cls == expected)) return "x~[0] on +[1] x[2] gives " + img.str();
  return "";
}

std::string c8() {
  const CrystalBounds b{kCrystalMaxLength, kCrystalLo, kCrystalHi, kCrystalMLo, kCrystalMHi};
  const auto canon = split_converse_check(SplitFixture::canonical(DirectSum({{1, 0}, {3, 0}}), b));
  if (!canon.passed()) return "canonical split rejected";
  const auto diag = split_converse_check(SplitFixture::diagonal({2, 0}, b));
  if (diag.compatible) return "diagonal sublattice accepted";
  return "";
}

std::string c9() {
  RunConfig cfg;
  cfg.corrupt = true;
  cfg.seed = kSeed;
  for (const auto* name : {"crystal", "module", "form"}) {
    const auto rep = run_suite(name, cfg);
    if (rep.passed()) return std::string(name) + " control passed";
    bool witnessed = false;
    for (const auto& r : rep.results) witnessed = witnessed || (!r.passed && !r.witnesses.empty());
    if (!witnessed) return std::string(name) + " control failed without a witness";
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Serre rewriting and confluence (200 words, length <= 5, indices [-3,3])", c1},
      {2, "Kashiwara relation suite, formal gamma, components [-2,2], length <= 2", c2},
      {3, "closed Omega_psi formula equals the recursion (length <= 3, p in [-5,5])", c3},
      {4, "bilinear form: symmetry, adjointness, Gram congruence, (x[1]x[1],x[1]x[1]) = 1+q^2", c4},
      {5, "module relations for lambda(h) in {1,2,-1}, length <= 3, window [-2,2]", c5},
      {6, "local nilpotency (x+[n])^(k+1) = 0, n in [-3,3]", c6},
      {7, "crystal axioms for h=1, h=3 and their sum, x~[0] +[1] x[2] = -[1] x[1]x[1]", c7},
      {8, "split converse: canonical passes, diagonal control rejected", c8},
      {9, "negative controls fail with witnesses (scaled lattice, swap map, perturbed Gram)", c9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::printf("PASS criterion %d: %s\n", c.id, c.title.c_str());
    } else {
      ++failed;
      std::printf("FAIL criterion %d: %s -- %s\n", c.id, c.title.c_str(), why.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
