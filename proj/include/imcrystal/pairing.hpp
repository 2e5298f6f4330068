#pragma once

// The symmetric bilinear form on N_q^- determined by
//   (x_m a, b) = (a, Omega_psi(-m) b),   (1, 1) = 1,
// evaluated at gamma = 1.

#include <optional>
#include <string>
#include <vector>

#include "imcrystal/qalgebra.hpp"

namespace imc {

Coeff pair(const Element& a, const Element& b);

struct GramMatrix {
  Weight weight;
  std::vector<Monomial> basis;
  std::vector<std::vector<QRat>> entries;

  std::size_t size() const { return basis.size(); }
  bool symmetric() const;
};

// Form values on the normal monomials of the given weight with indices in [lo, hi].
GramMatrix gram(const Weight& w, int lo, int hi);

// Determinant over Q(q^{1/2}); 1 for the empty matrix.
QRat gram_determinant(const GramMatrix& g);

struct GramViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  QRat entry;
};

struct OrthonormalityReport {
  std::vector<GramViolation> violations;
  bool passed() const { return violations.empty(); }
};

// entries[i][j] == delta_ij mod q^2 Z[[q^{1/2}]].
OrthonormalityReport orthonormality_report(const GramMatrix& g);

struct MembershipProbe {
  bool in_lattice = true;
  std::optional<Monomial> witness;
  std::optional<QRat> witness_value;
};

// Finite probe of u in L: (u, x_k) regular at q = 0 for every normal monomial x_k
// of u's weight with indices in [lo, hi]. Throws DomainError when u is inhomogeneous.
MembershipProbe lattice_membership_probe(const Element& u, int lo, int hi);

}  // namespace imc
