#pragma once

// Imaginary crystal lattices L = sum_i L(lambda_i) over A_0, reduction to
// L/qL, the signed monomial bases B(lambda) and finite-probe checks of the
// crystal basis axioms.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imcrystal/error.hpp"
#include "imcrystal/verma.hpp"

namespace imc {

// +-(x_{i_1}...x_{i_k} v_{lambda_c} + qL), i_1 >= ... >= i_k.
struct CrystalClass {
  int sign = 1;
  Monomial mono;
  int component = 1;

  friend bool operator==(const CrystalClass&, const CrystalClass&) = default;
  std::string str() const;  // "+[1] x[1]x[0]", "-[2] 1"
};

struct CrystalBounds {
  int max_length = 3;
  int lo = -2;
  int hi = 2;
  int m_lo = -3;
  int m_hi = 3;
  std::string str() const;
};

// L = sum_i sum_k A_0 s_i(k) x_k v_{lambda_i}, with s_i(k) = 1 unless overridden.
struct LatticeDesc {
  DirectSum module;
  CrystalBounds bounds;
  std::map<int, QRat> component_scales;
  std::map<std::pair<int, std::vector<int>>, QRat> scales;

  QRat scale(int component, const Monomial& m) const;
  // Lattice generator s_i(k) x_k v_{lambda_i}.
  VermaVector lift(const CrystalClass& b) const;
  // Every class +[i] x_k with x_k normal, |k| <= max_length, indices in [lo, hi].
  std::vector<CrystalClass> classes() const;
};

class NotInLatticeError : public DomainError {
 public:
  NotInLatticeError(const std::string& what, int component, Monomial witness, QRat coordinate)
      : DomainError(what), component_(component), witness_(std::move(witness)), coordinate_(std::move(coordinate)) {}
  int component() const { return component_; }
  const Monomial& witness() const { return witness_; }
  const QRat& coordinate() const { return coordinate_; }

 private:
  int component_;
  Monomial witness_;
  QRat coordinate_;
};

// Lattice coordinates of v at q = 0, keyed by (component, monomial); zero
// entries are dropped. Throws NotInLatticeError when a coordinate has a pole.
using ReducedVector = std::map<std::pair<int, std::vector<int>>, Rational>;
ReducedVector reduce_mod_q(const LatticeDesc& L, const VermaVector& v);
std::string reduced_str(const ReducedVector& r);

struct ClassImage {
  enum class Kind { kZero, kClass, kViolation };
  Kind kind = Kind::kZero;
  CrystalClass cls;
  std::string detail;  // for violations

  bool is_zero() const { return kind == Kind::kZero; }
  bool is_class() const { return kind == Kind::kClass; }
  std::string str() const;
};

// A reduced vector as zero, a single +-class, or a violation.
ClassImage classify(const ReducedVector& r);

ClassImage crystal_image_x(const LatticeDesc& L, int m, const CrystalClass& b);
ClassImage crystal_image_omega(const LatticeDesc& L, int m, const CrystalClass& b);

struct AxiomResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> witnesses;
};

struct CrystalReport {
  CrystalBounds bounds;
  std::vector<AxiomResult> results;
  bool passed() const;
  const AxiomResult& result(const std::string& name) const;  // throws DomainError
};

// Axioms, in report order:
//   lattice-span          every generator scale is nonzero (L is free on the generators)
//   weight-decomposition  generators and their images are weight-homogeneous with the expected shifts
//   stability             Omega~(m) and x~_m map generators into L
//   basis                 the classes reduce to themselves and are pairwise distinct
//   images                Omega~(m) b, x~_m b in +-B or 0
//   commutation           x~_m Omega~(-m) b = Omega~(-m) x~_m b whenever both sides are nonzero
CrystalReport verify_crystal_axioms(const LatticeDesc& L);

// L = sum_i L(lambda_i), B = disjoint union of the B(lambda_i). Throws DomainError
// when some lambda(h) == 0.
struct DirectSumBasis {
  LatticeDesc lattice;
  std::vector<CrystalClass> basis;
};
DirectSumBasis assemble_direct_sum_basis(const std::vector<HighestWeight>& weights, const CrystalBounds& bounds);

// A lattice in M = M_1 + ... + M_n given, on every monomial fibre, by the
// A_0-span of the columns of `generators` (rows = components), together with
// the part each column is assigned to.
struct SplitFixture {
  DirectSum module;
  std::vector<std::vector<QRat>> generators;
  std::vector<int> parts;  // 1-based part per column
  CrystalBounds bounds;

  static SplitFixture canonical(const DirectSum& m, const CrystalBounds& bounds);
  // lambda_1 = lambda_2, columns (1, 1) and (0, q): not a direct sum of L n M_j.
  static SplitFixture diagonal(const HighestWeight& w, const CrystalBounds& bounds);
};

struct SplitReport {
  bool compatible = true;
  std::vector<AxiomResult> checks;
  std::vector<CrystalReport> parts;
  bool passed() const;
};

// Checks L = sum_j (L n M_j) and B_j = B n (L_j/qL_j) on the fibre, then runs
// verify_crystal_axioms on every restricted pair (L_j, B_j).
SplitReport split_converse_check(const SplitFixture& f);

}  // namespace imc
