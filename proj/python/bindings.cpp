// Thin string-level bindings: elements go in and out in the text grammar,
// verification reports come back as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "imcrystal/crystal.hpp"
#include "imcrystal/kashiwara.hpp"
#include "imcrystal/pairing.hpp"
#include "imcrystal/report.hpp"

namespace py = pybind11;

namespace {

std::string normalize_text(const std::string& expr) { return imc::format_element(imc::parse_element(expr)); }

std::string omega_text(const std::string& kind, int p, const std::string& expr) {
  if (kind != "psi" && kind != "phi") throw imc::DomainError("kind must be psi or phi");
  const auto type = kind == "psi" ? imc::OmegaType::kPsi : imc::OmegaType::kPhi;
  return imc::format_element(imc::omega_apply({type, p}, imc::parse_element(expr)));
}

std::string pair_text(const std::string& a, const std::string& b) {
  return imc::pair(imc::parse_element(a), imc::parse_element(b)).str();
}

py::dict gram_dict(long length, long degree, int lo, int hi) {
  const auto g = imc::gram({length, degree}, lo, hi);
  std::vector<std::string> basis;
  std::vector<std::vector<std::string>> entries;
  for (const auto& m : g.basis) basis.push_back(m.str());
  for (const auto& row : g.entries) {
    auto& out = entries.emplace_back();
    for (const auto& e : row) out.push_back(e.str());
  }
  py::dict d;
  d["basis"] = basis;
  d["entries"] = entries;
  d["orthonormal_mod_q2"] = imc::orthonormality_report(g).passed();
  return d;
}

std::string act_text(const std::string& gen, int k, const std::string& expr, const std::vector<int>& hs,
                     const std::vector<int>& ds, int component) {
  if (!ds.empty() && ds.size() != hs.size()) throw imc::DomainError("give one d per h");
  std::vector<imc::HighestWeight> ws;
  for (std::size_t i = 0; i < hs.size(); ++i) ws.push_back({hs[i], ds.empty() ? 0 : ds[i]});
  const imc::DirectSum m(ws);
  m.summand(component);
  const auto v = imc::inject(component, imc::parse_element(expr).at_gamma_one());
  imc::VermaVector r;
  if (gen == "x-") r = imc::act_xminus(k, v);
  else if (gen == "x+") r = imc::act_xplus(m, k, v);
  else if (gen == "h") r = imc::act_h(k, v);
  else if (gen == "K") r = imc::act_K(m, v);
  else if (gen == "D") r = imc::act_D(m, v);
  else if (gen == "omega") r = imc::tilde_omega(k, v);
  else r = imc::act_chevalley(m, imc::chevalley_from_name(gen), v);
  return r.str(m);
}

std::string verify_json(const std::string& suite, std::optional<int> max_length, std::optional<std::pair<int, int>> window,
                        std::optional<std::pair<int, int>> m, const std::vector<int>& hs, std::uint64_t seed, int samples,
                        bool corrupt) {
  imc::RunConfig c;
  c.max_length = max_length;
  c.window = window;
  c.m_range = m;
  for (int h : hs) c.weights.push_back({h, 0});
  c.seed = seed;
  c.samples = samples;
  c.corrupt = corrupt;
  return imc::run_suite(suite, c).to_json();
}

}  // namespace

PYBIND11_MODULE(_imcrystal, mod) {
  mod.doc() = "Exact computations in N_q^-, reduced imaginary Verma modules and their crystal bases";

  auto base = py::register_exception<imc::Error>(mod, "Error");
  py::register_exception<imc::ParseError>(mod, "ParseError", base.ptr());
  py::register_exception<imc::DomainError>(mod, "DomainError", base.ptr());
  py::register_exception<imc::ArithmeticError>(mod, "ArithmeticError", base.ptr());

  mod.def("normalize", &normalize_text, py::arg("expr"));
  mod.def("omega", &omega_text, py::arg("kind"), py::arg("p"), py::arg("expr"));
  mod.def("pair", &pair_text, py::arg("a"), py::arg("b"), "Bilinear form at gamma = 1");
  mod.def("gram", &gram_dict, py::arg("length"), py::arg("degree"), py::arg("lo") = -2, py::arg("hi") = 2);
  mod.def("act", &act_text, py::arg("gen"), py::arg("k"), py::arg("expr"), py::arg("h"), py::arg("d") = std::vector<int>{},
          py::arg("component") = 1);
  mod.def("verify_json", &verify_json, py::arg("suite"), py::arg("max_length") = py::none(), py::arg("window") = py::none(),
          py::arg("m") = py::none(), py::arg("h") = std::vector<int>{}, py::arg("seed") = imc::kDefaultSeed,
          py::arg("samples") = 200, py::arg("corrupt") = false);
  mod.def("suite_names", &imc::suite_names);
  mod.attr("DEFAULT_SEED") = imc::kDefaultSeed;
}
