#pragma once

// Reduced imaginary Verma modules M(lambda) = N_q^- v_lambda at gamma = 1 and
// their finite direct sums: the Drinfeld and Chevalley generator actions, the
// tilde operators, module maps and the verification probes built on them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imcrystal/qalgebra.hpp"

namespace imc {

// lambda(h), lambda(d); lambda(c) = 0 throughout.
struct HighestWeight {
  int h = 1;
  int d = 0;
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  std::string str() const;
};

// Descriptor of M(lambda_1) + ... + M(lambda_n). Component ids are 1-based.
class DirectSum {
 public:
  DirectSum() = default;
  // Throws DomainError when some lambda(h) == 0.
  explicit DirectSum(std::vector<HighestWeight> summands);

  std::size_t size() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }
  const std::vector<HighestWeight>& summands() const { return summands_; }
  const HighestWeight& summand(int id) const;  // throws DomainError on a bad id

 private:
  std::vector<HighestWeight> summands_;
};

// sum_i e_i v_{lambda_i}; every e_i is normal and gamma-free.
struct VermaVector {
  std::map<int, Element> components;

  bool is_zero() const { return components.empty(); }
  Element component(int id) const;
  void add(int id, const Element& e);

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const Coeff& c);
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(VermaVector a, const Coeff& c) { return a *= c; }
  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.components == b.components; }

  // "[i] <element> @ (h=J,d=D)" per component, joined by " ; "; "0" for zero.
  std::string str(const DirectSum& m) const;
};

VermaVector inject(int id, const Element& e);
Element project(int id, const VermaVector& v);

// tilde x^-_n: left multiplication in every component.
VermaVector act_xminus(int n, const VermaVector& v);
// h_k, k != 0: x_{n_1}...x_{n_j} v -> -[2k]/k sum_i x_{n_1}...x_{n_i+k}...x_{n_j} v; h_k v = 0.
VermaVector act_h(int k, const VermaVector& v);
// K^power, D^power (diagonal): q^{power (lambda(h) - 2 len)}, q^{power (lambda(d) + deg)}.
VermaVector act_K(const DirectSum& m, const VermaVector& v, int power = 1);
VermaVector act_D(const DirectSum& m, const VermaVector& v, int power = 1);

// Polynomial in commuting h's times K^k_power. Keys list (h index, multiplicity).
struct HPolynomial {
  int k_power = 1;
  std::map<std::vector<std::pair<int, int>>, QRat> terms;
  std::string str() const;
};

enum class CartanSeries { kPsi, kPhi };

// psi(n) = K [z^-n] exp((q - q^-1) sum_{k>0} h_k z^-k), zero for n < 0;
// phi(n) = K^-1 [z^-n] exp(-(q - q^-1) sum_{k>0} h_-k z^k), zero for n > 0.
HPolynomial psi_phi_component(CartanSeries s, int n);
VermaVector apply_hpolynomial(const DirectSum& m, const HPolynomial& p, const VermaVector& v);

// x^+_k, commuted through each x^- factor with
//   [x^+_k, x^-_l] = (psi(k+l) - phi(k+l)) / (q - q^-1),   x^+_k v_lambda = 0.
VermaVector act_xplus(const DirectSum& m, int k, const VermaVector& v);

enum class Chevalley { kE0, kE1, kF0, kF1, kK0, kK1, kD };
// E0 -> x^-_1 K^-1, F0 -> K x^+_-1, E1 -> x^+_0, F1 -> x^-_0, K0 -> K^-1 (gamma = 1), K1 -> K.
VermaVector act_chevalley(const DirectSum& m, Chevalley gen, const VermaVector& v);
Chevalley chevalley_from_name(const std::string& name);

// tilde Omega_psi(m): Omega_psi(m) in every component, gamma = 1.
VermaVector tilde_omega(int m, const VermaVector& v);

// All monomial vectors x_k v_i with |k| <= max_length and indices in [lo, hi].
std::vector<VermaVector> sample_vectors(const DirectSum& m, int max_length, int lo, int hi);

// ------------------------------------------------------------ module maps

class ModuleMap {
 public:
  enum class Kind { kInject, kProject, kSwap };

  static ModuleMap injection(const DirectSum& target, int id);
  static ModuleMap projection(const DirectSum& source, int id);
  // Exchanges components 1 and 2 of a two-component sum; a module map only
  // when lambda_1 == lambda_2.
  static ModuleMap swap(const DirectSum& m);

  Kind kind() const { return kind_; }
  const DirectSum& source() const { return source_; }
  const DirectSum& target() const { return target_; }
  VermaVector apply(const VermaVector& v) const;
  std::string str() const;

 private:
  Kind kind_ = Kind::kInject;
  int id_ = 1;
  DirectSum source_;
  DirectSum target_;
};

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct IntertwiningReport {
  long checks = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

// On every sample (a vector of map.source()) and every m in [m_lo, m_hi]:
// the map commutes with K, D, x^+_m, x^-_m, h_m (module map property) and with
// tilde Omega_psi(m), tilde x^-_m.
IntertwiningReport verify_intertwining(const ModuleMap& map, const std::vector<VermaVector>& samples, int m_lo,
                                       int m_hi);

// Smallest t <= cap with (x^+_n)^t v = 0.
std::optional<int> nilpotency_probe(const DirectSum& m, int n, const VermaVector& v, int cap);

struct ModuleRelationReport {
  long checks = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Drinfeld relations at gamma = 1 as operator identities on the samples, for
// generator indices in [idx_lo, idx_hi]:
//   [h_k, h_l] = 0, K x^-_k K^-1 = q^-2 x^-_k, K x^+_k K^-1 = q^2 x^+_k,
//   D x^+-_k D^-1 = q^k x^+-_k, [h_k, x^-_l] = -[2k]/k x^-_{k+l},
//   [h_k, x^+_l] = [2k]/k x^+_{k+l}, [x^+_k, x^-_l] = (psi(k+l) - phi(k+l))/(q - q^-1),
//   the x^+ Serre relation, and [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1).
ModuleRelationReport check_module_relations(const DirectSum& m, const std::vector<VermaVector>& samples, int idx_lo,
                                            int idx_hi);

// Depth-first search for x^+_{n_1}, ..., x^+_{n_j} with every n_i in [lo, hi]
// taking v to a nonzero multiple of the highest weight vectors. Returns the
// indices in the order applied, or nullopt.
std::optional<std::vector<int>> simplicity_probe(const DirectSum& m, const VermaVector& v, int lo, int hi);

}  // namespace imc
