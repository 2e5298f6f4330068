#pragma once

// The Kashiwara-type operators Omega_psi(p), Omega_phi(p) on N_q^- and checks of
// the identities they satisfy together with left multiplication by x_n.

#include <string>
#include <vector>

#include "imcrystal/qalgebra.hpp"

namespace imc {

enum class OmegaType { kPsi, kPhi };

struct OmegaKind {
  OmegaType type = OmegaType::kPsi;
  int component = 0;
};

// Component recursion on words, with Omega(k)(1) = 0:
//   Omega_psi(k)(x_m w) = delta_{k,-m} g^k w + sum_{r>=0} g(r) gamma^r x_{m+r} Omega_psi(k-r)(w)
//   Omega_phi(k)(x_m w) = delta_{k,-m} g^-k w + sum_{r>=0} gbar(r) gamma^r x_{m-r} Omega_phi(k+r)(w)
// with g = g_coeff and gbar = g_coeff_conj. Each sum is finite: Omega_psi(p)
// vanishes on a word whose indices are all < -p, Omega_phi(p) on one whose
// indices are all > -p.
Element omega_apply(OmegaKind op, const Element& e);
Element omega_apply_word(OmegaKind op, std::span<const int> word);

// Closed-form coefficient extraction of Omega_psi(p) on a single monomial:
// sum over the removed slot l and tuples r_1..r_{l-1} >= 0 with
// sum r_j = p + n_l of prod g(r_j) gamma^p x_{n_1+r_1}...x_{n_{l-1}+r_{l-1}} x_{n_{l+1}}...x_{n_k}.
Element omega_psi_closed(int p, const Monomial& m);

enum class KashiwaraRelation {
  kOmegaPsiX,    // q^2 g Op(m) x_{n+1} - Op(m+1) x_n = (q^2-1) g^{m+1} d_{m,-n-1} + g x_{n+1} Op(m) - q^2 x_n Op(m+1)
  kOmegaPhiX,    // q^2 Of(m) x_{n+1} - g Of(m+1) x_n = (q^2-1) g^{-m} d_{m,-n-1} + x_{n+1} Of(m) - q^2 g x_n Of(m+1)
  kPsiPsi,       // q^2 Op(k+1) Op(l) - Op(l) Op(k+1) = Op(k) Op(l+1) - q^2 Op(l+1) Op(k)
  kPhiPhi,       // the same for Omega_phi
  kPhiPsi,       // Op(k) Of(m) = sum_r gbar(r) g^{2r} Of(r+m) Op(k-r)
  kSerreX,       // x_l x_{k+1} - q^2 x_{k+1} x_l = q^2 x_{l+1} x_k - x_k x_{l+1}
  kPsiSeries,    // Op(k) x_m = d_{k,-m} g^k + sum_r g(r) x_{m+r} Op(k-r) g^r  (products normalized first)
  kPhiSeries,    // Of(k) x_m = d_{k,-m} g^-k + sum_r gbar(r) x_{m-r} Of(k+r) g^r
};

std::string relation_name(KashiwaraRelation r);
KashiwaraRelation relation_from_name(const std::string& name);  // throws DomainError
std::vector<KashiwaraRelation> all_relations();

struct DomainBounds {
  int max_length = 2;
  int lo = -2;
  int hi = 2;
};

struct RelationResidual {
  KashiwaraRelation relation;
  std::vector<int> components;
  Monomial monomial;
  Element residual;
};

struct RelationReport {
  KashiwaraRelation relation;
  int comp_lo = 0;
  int comp_hi = 0;
  DomainBounds domain;
  long evaluations = 0;
  std::vector<RelationResidual> residuals;
  bool passed() const { return residuals.empty(); }
};

// Evaluates LHS - RHS of the chosen identity (formal gamma) for every pair of
// operator indices in [comp_lo, comp_hi] and every normal monomial of length
// <= domain.max_length with indices in [domain.lo, domain.hi].
RelationReport check_kashiwara_relation(KashiwaraRelation rel, int comp_lo, int comp_hi, const DomainBounds& domain);

}  // namespace imc
