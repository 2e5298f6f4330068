#include "imcrystal/report.hpp"

#include <json.hpp>
#include <random>
#include <sstream>

#include "imcrystal/crystal.hpp"
#include "imcrystal/kashiwara.hpp"
#include "imcrystal/pairing.hpp"

namespace imc {
namespace {

constexpr std::size_t kMaxWitnesses = 20;

void add_witness(SuiteResult& r, std::string w) {
  r.passed = false;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
}

SuiteResult from_axiom(const std::string& name, const AxiomResult& a) {
  return {name, a.passed, a.checks, a.witnesses};
}

std::string weight_tag(const HighestWeight& w) { return " " + w.str(); }

std::vector<Monomial> all_monomials(int max_length, int lo, int hi) {
  std::vector<Monomial> out;
  for (int len = 0; len <= max_length; ++len) {
    auto b = enumerate_basis(len, lo, hi);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, int lo, int hi) : rng_(seed), lo_(lo), hi_(hi) {}

  int uniform(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  Coeff coeff() {
    static const std::vector<QRat> pool = {QRat(1),
                                           QRat(-1),
                                           QRat(2),
                                           QRat::q_pow(HalfExp{2}),
                                           QRat::q_pow(HalfExp{4}),
                                           QRat::laurent({1, 0, 1}, HalfExp{0}),
                                           QRat::q_pow(HalfExp{-2}),
                                           QRat::laurent({-1, 0, 0, 0, 1}, HalfExp{0})};
    return Coeff(pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))]);
  }

  // Random element of the given weight with up to three terms; zero if the
  // weight has no monomials in the window.
  Element element(const Weight& w) {
    const auto basis = enumerate_basis(static_cast<int>(w.length), lo_, hi_, w.degree);
    Element e;
    if (basis.empty()) return e;
    const int terms = uniform(1, 3);
    for (int i = 0; i < terms; ++i) {
      e.add_term(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], coeff());
    }
    return e;
  }

  Weight weight(int min_length, int max_length) {
    const int len = uniform(min_length, max_length);
    std::vector<int> idx(static_cast<std::size_t>(len));
    for (auto& x : idx) x = uniform(lo_, hi_);
    long deg = 0;
    for (int x : idx) deg += x;
    return {len, deg};
  }

  std::vector<int> word(int max_length) {
    std::vector<int> w(static_cast<std::size_t>(uniform(1, max_length)));
    for (auto& x : w) x = uniform(lo_, hi_);
    return w;
  }

 private:
  std::mt19937_64 rng_;
  int lo_;
  int hi_;
};

// ------------------------------------------------------------- relations

SuiteReport run_relations(SuiteReport rep) {
  const auto& b = rep.bounds;
  for (auto rel : all_relations()) {
    const auto r = check_kashiwara_relation(rel, b.lo, b.hi, {b.max_length, b.lo, b.hi});
    SuiteResult s{relation_name(rel), true, r.evaluations, {}};
    for (const auto& res : r.residuals) {
      std::string comps;
      for (int x : res.components) comps += (comps.empty() ? "" : ",") + std::to_string(x);
      add_witness(s, "(" + comps + ") on " + res.monomial.str() + ": residual " + res.residual.str());
    }
    rep.results.push_back(std::move(s));
  }
  return rep;
}

// ------------------------------------------------------------------ form

SuiteReport run_form(SuiteReport rep, int samples, bool corrupt) {
  const auto& b = rep.bounds;
  if (corrupt) {
    // Gram matrix of weight (2, 2) with one off-diagonal entry shifted by q.
    auto g = gram({2, 2}, 0, 2);
    if (g.size() < 2) throw DomainError("perturbed Gram fixture needs a 2x2 matrix");
    g.entries[0][1] += QRat::q_pow(HalfExp{2});
    const auto o = orthonormality_report(g);
    SuiteResult s{"gram-congruence (2,2) perturbed", true, static_cast<long>(g.size() * g.size()), {}};
    for (const auto& v : o.violations) {
      add_witness(s, "entry (" + g.basis[v.row].str() + ", " + g.basis[v.col].str() + ") = " + v.entry.str());
    }
    rep.results.push_back(std::move(s));
    return rep;
  }

  Sampler rng(rep.seed, b.lo, b.hi);
  SuiteResult sym{"symmetry"}, adj{"adjointness"}, orth{"weight-orthogonality"};
  for (int i = 0; i < samples; ++i) {
    const Weight w = rng.weight(0, b.max_length);
    const Element x = rng.element(w), y = rng.element(w);
    ++sym.checks;
    if (!(pair(x, y) == pair(y, x))) add_witness(sym, "(" + x.str() + ", " + y.str() + ")");
  }
  for (int done = 0, tries = 0; done < samples && tries < 50 * samples; ++tries) {
    const Weight w = rng.weight(0, b.max_length - 1);
    const int m = rng.uniform(b.lo, b.hi);
    const Element x = rng.element(w);
    const Element y = rng.element({w.length + 1, w.degree + m});
    if (x.is_zero() || y.is_zero()) continue;
    ++done;
    ++adj.checks;
    const int idx[] = {m};
    if (!(pair(left_multiply(idx, x), y) == pair(x, omega_apply({OmegaType::kPsi, -m}, y)))) {
      add_witness(adj, "m = " + std::to_string(m) + ", a = " + x.str() + ", b = " + y.str());
    }
  }
  for (int i = 0; i < samples; ++i) {
    const Weight w1 = rng.weight(0, b.max_length), w2 = rng.weight(0, b.max_length);
    if (w1 == w2) continue;
    const Element x = rng.element(w1), y = rng.element(w2);
    ++orth.checks;
    if (!pair(x, y).is_zero()) add_witness(orth, "(" + x.str() + ", " + y.str() + ") = " + pair(x, y).str());
  }

  SuiteResult cong{"gram-congruence"}, symm{"gram-symmetry"}, cross{"cross-length-zero"}, member{"membership"};
  for (int len = 1; len <= b.max_length; ++len) {
    for (int deg = len * b.lo; deg <= len * b.hi; ++deg) {
      const auto g = gram({len, deg}, b.lo, b.hi);
      ++cong.checks;
      ++symm.checks;
      if (!g.symmetric()) add_witness(symm, "weight " + g.weight.str());
      for (const auto& v : orthonormality_report(g).violations) {
        add_witness(cong, "weight " + g.weight.str() + " entry (" + g.basis[v.row].str() + ", " +
                              g.basis[v.col].str() + ") = " + v.entry.str());
      }
    }
  }
  const auto monos = all_monomials(b.max_length, b.lo, b.hi);
  for (const auto& x : monos) {
    for (const auto& y : monos) {
      if (x.length() == y.length()) continue;
      ++cross.checks;
      const Coeff v = pair(Element(x, Coeff(1)), Element(y, Coeff(1)));
      if (!v.is_zero()) add_witness(cross, "(" + x.str() + ", " + y.str() + ") = " + v.str());
    }
  }
  for (const auto& x : monos) {
    if (x.empty()) continue;
    member.checks += 2;
    const auto inside = lattice_membership_probe(Element(x, rng.coeff() * Coeff(QRat::q_pow(HalfExp{4}))), b.lo, b.hi);
    if (!inside.in_lattice) add_witness(member, "q^2-multiple of " + x.str() + " rejected");
    const auto outside = lattice_membership_probe(Element(x, Coeff(QRat::q_pow(HalfExp{-2}))), b.lo, b.hi);
    if (outside.in_lattice) add_witness(member, "q^-1*" + x.str() + " accepted");
  }
  SuiteResult value{"value (x[1]x[1], x[1]x[1])", true, 1, {}};
  const Element x11(Monomial{1, 1}, Coeff(1));
  const Coeff v = pair(x11, x11);
  if (!(v == Coeff(QRat::laurent({1, 0, 0, 0, 1}, HalfExp{0})))) add_witness(value, "got " + v.str());
  rep.results = {sym, adj, orth, cong, symm, cross, member, value};
  return rep;
}

// --------------------------------------------------------------- crystal

CrystalBounds crystal_bounds(const Bounds& b) { return {b.max_length, b.lo, b.hi, b.m_lo, b.m_hi}; }

SuiteReport run_crystal(SuiteReport rep, bool corrupt) {
  const auto& b = rep.bounds;
  const CrystalBounds cb = crystal_bounds(b);
  if (corrupt) {
    auto fixture = assemble_direct_sum_basis({b.weights.front()}, cb);
    fixture.lattice.scales[{1, {0}}] = QRat::q_pow(HalfExp{-2});
    const auto r = verify_crystal_axioms(fixture.lattice);
    for (const auto& a : r.results) rep.results.push_back(from_axiom("scaled-lattice " + a.name + weight_tag(b.weights.front()), a));
    return rep;
  }
  for (const auto& w : b.weights) {
    const auto r = verify_crystal_axioms(assemble_direct_sum_basis({w}, cb).lattice);
    for (const auto& a : r.results) rep.results.push_back(from_axiom(a.name + weight_tag(w), a));
  }
  if (b.weights.size() > 1) {
    const auto sum = assemble_direct_sum_basis(b.weights, cb);
    const auto r = verify_crystal_axioms(sum.lattice);
    for (const auto& a : r.results) rep.results.push_back(from_axiom("sum " + a.name, a));

    const auto split = split_converse_check(SplitFixture::canonical(sum.lattice.module, cb));
    SuiteResult s{"split-converse canonical", split.passed(), 0, {}};
    for (const auto& c : split.checks) {
      s.checks += c.checks;
      for (const auto& w : c.witnesses) add_witness(s, c.name + ": " + w);
    }
    for (const auto& p : split.parts) {
      for (const auto& a : p.results) {
        s.checks += a.checks;
        for (const auto& w : a.witnesses) add_witness(s, a.name + ": " + w);
      }
    }
    rep.results.push_back(std::move(s));
  }
  const auto diag = split_converse_check(SplitFixture::diagonal(b.weights.front(), cb));
  SuiteResult d{"split-converse diagonal control rejected", !diag.compatible, 1, {}};
  if (diag.compatible) add_witness(d, "diagonal sublattice accepted as a split");
  rep.results.push_back(std::move(d));
  return rep;
}

// ------------------------------------------------------------ confluence

SuiteReport run_confluence(SuiteReport rep, int samples) {
  const auto& b = rep.bounds;
  Sampler rng(rep.seed, b.lo, b.hi);
  SuiteResult conf{"confluence"}, measure{"rewrite-measure"}, normal{"normal-output"};
  for (int i = 0; i < samples; ++i) {
    const auto w = rng.word(b.max_length);
    std::string ws;
    for (int x : w) ws += "x[" + std::to_string(x) + "]";
    ++conf.checks;
    const Element left = normalize_traced(w, RewriteStrategy::kLeftmost, [&](const RewriteStep& step) {
      ++measure.checks;
      const auto before = rewrite_measure(step.before);
      for (const auto& [c, after] : step.after) {
        if (!(rewrite_measure(after) < before)) add_witness(measure, "step at " + std::to_string(step.pos) + " of " + ws);
      }
    });
    const Element right = normalize_traced(w, RewriteStrategy::kRightmost, {});
    if (!(left == right)) add_witness(conf, ws + ": " + left.str() + " vs " + right.str());
    if (!(left == normalize(w))) add_witness(conf, ws + ": cached normal form differs");
    ++normal.checks;
    for (const auto& [m, c] : left.terms())
      if (!m.is_normal()) add_witness(normal, ws + " leaves " + m.str());
  }
  rep.results = {conf, measure, normal};
  return rep;
}

// ---------------------------------------------------------------- module

SuiteResult from_checks(const std::string& name, long checks, const std::vector<CheckFailure>& failures) {
  SuiteResult s{name, true, checks, {}};
  for (const auto& f : failures) add_witness(s, f.check + ": " + f.detail);
  return s;
}

SuiteReport run_module(SuiteReport rep, bool corrupt) {
  const auto& b = rep.bounds;
  // Intertwining samples: vectors of length <= 2.
  constexpr int kMapSampleLength = 2;
  std::vector<HighestWeight> sum_weights = b.weights;
  if (sum_weights.size() < 2) sum_weights.push_back({3, 0});
  if (sum_weights.size() > 2) sum_weights.resize(2);
  if (sum_weights[0] == sum_weights[1]) sum_weights[1].h += 2;
  const DirectSum sum(sum_weights);

  if (corrupt) {
    const auto map = ModuleMap::swap(sum);
    const auto r = verify_intertwining(map, sample_vectors(sum, kMapSampleLength, b.lo, b.hi), b.m_lo, b.m_hi);
    rep.results.push_back(from_checks("intertwining swap " + sum_weights[0].str() + sum_weights[1].str(), r.checks, r.failures));
    return rep;
  }

  for (const auto& w : b.weights) {
    const DirectSum m({w});
    const auto samples = sample_vectors(m, b.max_length, b.lo, b.hi);
    const auto rel = check_module_relations(m, samples, b.lo, b.hi);
    rep.results.push_back(from_checks("relations" + weight_tag(w), rel.checks, rel.failures));

    SuiteResult nil{"nilpotency" + weight_tag(w)}, simple{"simplicity" + weight_tag(w)},
        grading{"weight-decomposition" + weight_tag(w)};
    for (const auto& v : samples) {
      const Element e = v.component(1);
      const auto& mono = e.terms().begin()->first;
      const Weight wt = weight_of(mono);
      for (int n = b.m_lo; n <= b.m_hi; ++n) {
        ++nil.checks;
        if (!nilpotency_probe(m, n, v, static_cast<int>(mono.length()) + 1)) {
          add_witness(nil, "x+[" + std::to_string(n) + "] on " + v.str(m));
        }
        const std::pair<std::string, VermaVector> images[] = {
            {"x-", act_xminus(n, v)}, {"x+", act_xplus(m, n, v)}, {"h", n != 0 ? act_h(n, v) : VermaVector{}}};
        const Weight expected[] = {{wt.length + 1, wt.degree + n}, {wt.length - 1, wt.degree + n}, {wt.length, wt.degree + n}};
        for (int i = 0; i < 3; ++i) {
          ++grading.checks;
          const Element img = images[i].second.component(1);
          if (!img.is_zero() && weight_of(img) != expected[i]) {
            add_witness(grading, images[i].first + "[" + std::to_string(n) + "] on " + v.str(m));
          }
        }
      }
      ++simple.checks;
      if (!simplicity_probe(m, v, b.m_lo, b.m_hi)) add_witness(simple, "no x+ path from " + v.str(m));
    }
    rep.results.push_back(std::move(nil));
    rep.results.push_back(std::move(grading));
    rep.results.push_back(std::move(simple));
  }

  const auto samples = sample_vectors(sum, kMapSampleLength, b.lo, b.hi);
  for (int id = 1; id <= 2; ++id) {
    const DirectSum single({sum.summand(id)});
    const auto inj = ModuleMap::injection(sum, id);
    const auto r1 = verify_intertwining(inj, sample_vectors(single, kMapSampleLength, b.lo, b.hi), b.m_lo, b.m_hi);
    rep.results.push_back(from_checks("intertwining inject " + std::to_string(id), r1.checks, r1.failures));
    const auto r2 = verify_intertwining(ModuleMap::projection(sum, id), samples, b.m_lo, b.m_hi);
    rep.results.push_back(from_checks("intertwining project " + std::to_string(id), r2.checks, r2.failures));
  }
  return rep;
}

}  // namespace

Bounds suite_defaults(const std::string& suite) {
  if (suite == "relations") return {2, -2, 2, -2, 2, {}};
  if (suite == "form") return {3, -2, 2, -3, 3, {}};
  if (suite == "crystal") return {3, -2, 2, -3, 3, {{1, 0}, {3, 0}}};
  if (suite == "confluence") return {5, -3, 3, -3, 3, {}};
  if (suite == "module") return {3, -2, 2, -3, 3, {{1, 0}, {2, 0}, {-1, 0}}};
  throw DomainError("unknown suite '" + suite + "'");
}

Bounds resolve(const std::string& suite, const RunConfig& c) {
  Bounds b = suite_defaults(suite);
  if (c.max_length) b.max_length = *c.max_length;
  if (c.window) std::tie(b.lo, b.hi) = *c.window;
  if (c.m_range) std::tie(b.m_lo, b.m_hi) = *c.m_range;
  if (!c.weights.empty()) b.weights = c.weights;
  if (b.max_length < 0) throw DomainError("max-length must be nonnegative");
  if (b.lo > b.hi || b.m_lo > b.m_hi) throw DomainError("empty range");
  for (const auto& w : b.weights)
    if (w.h == 0) throw DomainError("lambda(h) = 0: not in the reduced category");
  return b;
}

std::vector<std::string> suite_names() { return {"relations", "form", "crystal", "confluence", "module"}; }

SuiteReport run_suite(const std::string& name, const RunConfig& config) {
  SuiteReport rep;
  rep.suite = name;
  rep.bounds = resolve(name, config);
  rep.seed = config.seed;
  rep.corrupt = config.corrupt;
  if (config.corrupt && (name == "relations" || name == "confluence")) {
    throw DomainError("suite '" + name + "' has no corrupted fixture");
  }
  if (name == "relations") return run_relations(std::move(rep));
  if (name == "form") return run_form(std::move(rep), config.samples, config.corrupt);
  if (name == "crystal") return run_crystal(std::move(rep), config.corrupt);
  if (name == "confluence") return run_confluence(std::move(rep), config.samples);
  return run_module(std::move(rep), config.corrupt);
}

bool SuiteReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string SuiteReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json weights = ordered_json::array();
  for (const auto& w : bounds.weights) weights.push_back({{"h", w.h}, {"d", w.d}});
  ordered_json results = ordered_json::array();
  for (const auto& r : this->results) {
    results.push_back({{"name", r.name},
                       {"status", r.passed ? "pass" : "fail"},
                       {"checks", r.checks},
                       {"witnesses", r.witnesses}});
  }
  ordered_json j = {{"suite", suite},
                    {"bounds",
                     {{"max_length", bounds.max_length},
                      {"window", {bounds.lo, bounds.hi}},
                      {"m", {bounds.m_lo, bounds.m_hi}},
                      {"weights", weights}}},
                    {"seed", seed},
                    {"corrupt", corrupt},
                    {"status", passed() ? "pass" : "fail"},
                    {"results", results}};
  return j.dump(2);
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << (corrupt ? " (corrupted fixture)" : "") << "\n";
  os << "bounds: max-length " << bounds.max_length << ", window " << bounds.lo << ":" << bounds.hi << ", m "
     << bounds.m_lo << ":" << bounds.m_hi;
  if (!bounds.weights.empty()) {
    os << ", weights";
    for (const auto& w : bounds.weights) os << " " << w.str();
  }
  os << "\nseed: " << seed << "\n";
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
    for (const auto& w : r.witnesses) os << "     " << w << "\n";
  }
  os << (passed() ? "PASS" : "FAIL") << " " << suite << "\n";
  return os.str();
}

}  // namespace imc
