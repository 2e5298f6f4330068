// imcrystal: command-line access to the algebra, the form, the module actions
// and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 domain error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "imcrystal/crystal.hpp"
#include "imcrystal/kashiwara.hpp"
#include "imcrystal/pairing.hpp"
#include "imcrystal/report.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw CLI::ValidationError("range", "expected a:b, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const int lo = std::stoi(a, &used_a), hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("range", "expected a:b, got '" + text + "'");
  }
}

// The first four half-steps of the q-expansion of a value regular at 0.
std::string residue_mod_q2(const imc::QRat& v) {
  if (!v.regular_at_zero()) return "not in A_0";
  imc::QRat rest = v, truncated;
  const imc::QRat s = imc::QRat::q_pow(imc::HalfExp{1});
  for (int i = 0; i < 4; ++i) {
    const imc::Rational a = rest.value_at_zero();
    truncated += imc::QRat(a) * imc::QRat::q_pow(imc::HalfExp{i});
    rest = (rest - imc::QRat(a)) / s;
  }
  return truncated.str();
}

std::vector<imc::HighestWeight> weights_from(const std::vector<int>& hs, const std::vector<int>& ds) {
  if (!ds.empty() && ds.size() != hs.size() && ds.size() != 1) {
    throw CLI::ValidationError("--d", "give one --d or one per --h");
  }
  std::vector<imc::HighestWeight> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    out.push_back({hs[i], ds.empty() ? 0 : ds[ds.size() == 1 ? 0 : i]});
  }
  return out;
}

struct Options {
  std::string format = "text";
  std::string expr;
  std::string expr2;
  std::string kind = "psi";
  int p = 0;
  std::string gen;
  int k = 0;
  int component = 1;
  std::vector<int> hs;
  std::vector<int> ds;
  std::string suite;
  std::string window;
  std::string m_range;
  std::optional<int> max_length;
  std::uint64_t seed = imc::kDefaultSeed;
  int samples = 200;
  bool corrupt = false;
  std::string weight;
};

void emit(const Options& o, const std::string& text, const ordered_json& json) {
  if (o.format == "json") std::cout << json.dump(2) << "\n";
  else std::cout << text << "\n";
}

int cmd_normalize(const Options& o) {
  const auto e = imc::parse_element(o.expr);
  emit(o, e.str(), {{"input", o.expr}, {"result", e.str()}});
  return 0;
}

int cmd_omega(const Options& o) {
  if (o.kind != "psi" && o.kind != "phi") throw CLI::ValidationError("--kind", "expected psi or phi");
  const auto e = imc::parse_element(o.expr);
  const auto r = imc::omega_apply({o.kind == "psi" ? imc::OmegaType::kPsi : imc::OmegaType::kPhi, o.p}, e);
  emit(o, r.str(), {{"kind", o.kind}, {"p", o.p}, {"input", e.str()}, {"result", r.str()}});
  return 0;
}

int cmd_pair(const Options& o) {
  const auto v = imc::pair(imc::parse_element(o.expr), imc::parse_element(o.expr2)).at_gamma_one();
  const std::string res = residue_mod_q2(v);
  emit(o, v.str() + " (= " + res + " mod q^2)", {{"value", v.str()}, {"mod_q2", res}});
  return 0;
}

int cmd_gram(const Options& o) {
  const auto comma = o.weight.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--weight", "expected k,m");
  const imc::Weight w{std::stol(o.weight.substr(0, comma)), std::stol(o.weight.substr(comma + 1))};
  const auto [lo, hi] = o.window.empty() ? std::pair{-2, 2} : parse_range(o.window);
  const auto g = imc::gram(w, lo, hi);
  const auto report = imc::orthonormality_report(g);
  ordered_json basis = ordered_json::array(), entries = ordered_json::array(), residues = ordered_json::array();
  std::string text = "weight " + w.str() + ", window " + std::to_string(lo) + ":" + std::to_string(hi) + ", " +
                     std::to_string(g.size()) + " monomials\n";
  for (const auto& m : g.basis) basis.push_back(m.str());
  for (std::size_t i = 0; i < g.size(); ++i) {
    ordered_json row = ordered_json::array(), rrow = ordered_json::array();
    text += g.basis[i].str() + ":";
    for (std::size_t j = 0; j < g.size(); ++j) {
      row.push_back(g.entries[i][j].str());
      rrow.push_back(g.entries[i][j].regular_at_zero() ? g.entries[i][j].value_at_zero().get_str() : "pole");
      text += "  " + g.entries[i][j].str();
    }
    text += "\n";
    entries.push_back(row);
    residues.push_back(rrow);
  }
  text += std::string(report.passed() ? "orthonormal" : "not orthonormal") + " mod q^2";
  emit(o, text,
       {{"weight", {w.length, w.degree}},
        {"window", {lo, hi}},
        {"basis", basis},
        {"entries", entries},
        {"residues_at_q0", residues},
        {"orthonormal_mod_q2", report.passed()}});
  return 0;
}

int cmd_act(const Options& o) {
  if (o.hs.empty()) throw CLI::ValidationError("--h", "act needs --h");
  const imc::DirectSum m(weights_from(o.hs, o.ds));
  const auto v = imc::inject(o.component, imc::parse_element(o.expr).at_gamma_one());
  m.summand(o.component);
  imc::VermaVector r;
  if (o.gen == "x-") r = imc::act_xminus(o.k, v);
  else if (o.gen == "x+") r = imc::act_xplus(m, o.k, v);
  else if (o.gen == "h") r = imc::act_h(o.k, v);
  else if (o.gen == "K") r = imc::act_K(m, v, 1);
  else if (o.gen == "D") r = imc::act_D(m, v, 1);
  else if (o.gen == "omega") r = imc::tilde_omega(o.k, v);
  else r = imc::act_chevalley(m, imc::chevalley_from_name(o.gen), v);
  emit(o, r.str(m), {{"gen", o.gen}, {"k", o.k}, {"input", v.str(m)}, {"result", r.str(m)}});
  return 0;
}

int cmd_verify(const Options& o) {
  imc::RunConfig c;
  c.max_length = o.max_length;
  if (!o.window.empty()) c.window = parse_range(o.window);
  if (!o.m_range.empty()) c.m_range = parse_range(o.m_range);
  c.weights = weights_from(o.hs, o.ds);
  c.seed = o.seed;
  c.samples = o.samples;
  c.corrupt = o.corrupt;
  std::vector<std::string> suites = o.suite == "all" ? imc::suite_names() : std::vector<std::string>{o.suite};
  if (o.corrupt && o.suite == "all") suites = {"form", "crystal", "module"};
  bool ok = true;
  ordered_json all = ordered_json::array();
  for (const auto& s : suites) {
    const auto rep = imc::run_suite(s, c);
    ok = ok && rep.passed();
    if (o.format == "json") all.push_back(ordered_json::parse(rep.to_json()));
    else std::cout << rep.to_text();
  }
  if (o.format == "json") std::cout << (suites.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Imaginary crystal bases for reduced quantized imaginary Verma modules"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");  // --h is lambda(h)
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* normalize = app.add_subcommand("normalize", "Normal form of an element of N_q^-");
  normalize->add_option("expr", o.expr, "Element, e.g. \"x[0]*x[1]\"")->required();

  auto* omega = app.add_subcommand("omega", "Apply Omega_psi(p) or Omega_phi(p)");
  omega->add_option("--kind", o.kind, "psi or phi")->check(CLI::IsMember({"psi", "phi"}));
  omega->add_option("-p", o.p, "Component index")->required();
  omega->add_option("expr", o.expr)->required();

  auto* pair = app.add_subcommand("pair", "Bilinear form (a, b) at gamma = 1 and its residue mod q^2");
  pair->add_option("a", o.expr)->required();
  pair->add_option("b", o.expr2)->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix of one weight space");
  gram->add_option("--weight", o.weight, "k,m for the weight -k alpha_1 + m delta")->required();
  gram->add_option("--window", o.window, "Index window a:b (default -2:2)");

  auto* act = app.add_subcommand("act", "Apply a generator to a vector of a reduced Verma module");
  act->add_option("--gen", o.gen, "x+, x-, h, K, D, omega, E0, E1, F0, F1, K0, K1")->required();
  act->add_option("-k", o.k, "Generator index");
  act->add_option("--h", o.hs, "lambda(h) per component (repeatable)")->required();
  act->add_option("--d", o.ds, "lambda(d) per component (repeatable)");
  act->add_option("--component", o.component, "Component the element lives in (1-based)");
  act->add_option("expr", o.expr, "Element e acting on v, e.g. \"x[0]\"")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite)->required()->check(
      CLI::IsMember({"relations", "form", "crystal", "confluence", "module", "all"}));
  verify->add_option("--h", o.hs, "lambda(h) per component (repeatable)");
  verify->add_option("--d", o.ds, "lambda(d) per component (repeatable)");
  verify->add_option("--max-length", o.max_length, "Maximum word length");
  verify->add_option("--window", o.window, "Index window a:b");
  verify->add_option("--m", o.m_range, "Operator index range a:b");
  verify->add_option("--seed", o.seed, "Seed of the randomized suites");
  verify->add_option("--samples", o.samples, "Random samples per randomized check");
  verify->add_flag("--corrupt", o.corrupt, "Run the negative-control fixture");

  for (auto* sub : {normalize, omega, pair, gram, act, verify}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*normalize) return cmd_normalize(o);
    if (*omega) return cmd_omega(o);
    if (*pair) return cmd_pair(o);
    if (*gram) return cmd_gram(o);
    if (*act) return cmd_act(o);
    return cmd_verify(o);
  } catch (const imc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const imc::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const imc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}
