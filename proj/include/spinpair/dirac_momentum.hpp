#pragma once

// Chiral bispinors psi = col{v1, v2} and the momentum-space Dirac equation
// gamma^mu p_mu psi = psi.

#include "spinpair/pair_construction.hpp"

namespace spinpair {

using FourSpinor = CVector<4>;

struct Bispinor {
  TwoSpinor upper;  // v1, right-handed
  TwoSpinor lower;  // v2, left-handed

  FourSpinor column() const;
  static Bispinor from_column(const FourSpinor& c);

  friend Bispinor operator+(const Bispinor& x, const Bispinor& y) {
    return {x.upper + y.upper, x.lower + y.lower};
  }
  friend Bispinor operator*(Complex s, const Bispinor& x) { return {s * x.upper, s * x.lower}; }
};

double norm(const Bispinor& psi);

/// psi = col{v1, v2}.
Bispinor assemble_bispinor(const EigenPair& pair);

/// Spin-down pair with the same energy-momentum as a plus-branch pair:
/// v2- = c u-(n), v1- = e^{-u} c u-(n), c = ||v2||. The e^{-u} ratio is the
/// one that satisfies the Dirac equation, since (n.sigma) u- = -u-.
/// Throws DomainError if `pair` is not on the plus branch.
EigenPair spin_down_pair(const EigenPair& pair);

/// assemble_bispinor(spin_down_pair(pair)).
Bispinor spin_down_partner(const EigenPair& pair);

/// gamma^mu p_mu with p_mu lowered by diag(-1, -1, -1, +1).
DiracMatrix dirac_operator(const FourMomentum& p);

/// ||gamma^mu p_mu psi - psi|| / ||psi||.
/// Throws DomainError for psi = 0 or an off-shell p.
double dirac_residual_momentum(const Bispinor& psi, const FourMomentum& p);

/// Singular values of a 4x4 complex matrix, descending.
std::array<double, 4> singular_values(const DiracMatrix& m);

/// Dimension of {psi : gamma^mu p_mu psi = psi}, by counting singular values
/// of (gamma^mu p_mu - I) below rel_threshold * sigma_max.
int solution_space_dimension(const FourMomentum& p, double rel_threshold = 1e-8);

/// Gram determinant of the two normalized bispinors; 1 for orthogonal, 0 for parallel.
double normalized_gram_determinant(const Bispinor& x, const Bispinor& y);

}  // namespace spinpair
