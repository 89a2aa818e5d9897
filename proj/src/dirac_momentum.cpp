#include "spinpair/dirac_momentum.hpp"

#include <Eigen/Dense>

#include "spinpair/errors.hpp"

namespace spinpair {

FourSpinor Bispinor::column() const { return {{upper[0], upper[1], lower[0], lower[1]}}; }

Bispinor Bispinor::from_column(const FourSpinor& c) { return {{{c[0], c[1]}}, {{c[2], c[3]}}}; }

double norm(const Bispinor& psi) { return norm(psi.column()); }

Bispinor assemble_bispinor(const EigenPair& pair) { return {pair.v1, pair.v2}; }

EigenPair spin_down_pair(const EigenPair& pair) {
  if (pair.branch != Branch::plus) throw DomainError("spin-down partner needs a plus-branch pair");
  const double c = norm(pair.v2);
  EigenPair down = pair;
  down.v2 = c * eigenspinor_minus(pair.axis);
  down.v1 = std::exp(-pair.rapidity) * down.v2;
  down.branch = Branch::minus;
  return down;
}

Bispinor spin_down_partner(const EigenPair& pair) { return assemble_bispinor(spin_down_pair(pair)); }

DiracMatrix dirac_operator(const FourMomentum& p) {
  DiracMatrix op;
  for (int mu = 1; mu <= 4; ++mu) op += p.lower(mu) * gamma(mu);
  return op;
}

double dirac_residual_momentum(const Bispinor& psi, const FourMomentum& p) {
  require_on_shell(p);
  const FourSpinor col = psi.column();
  const double len = norm(col);
  if (len == 0.0) throw DomainError("Dirac residual needs a nonzero bispinor");
  return norm(dirac_operator(p) * col - col) / len;
}

std::array<double, 4> singular_values(const DiracMatrix& m) {
  Eigen::Matrix4cd e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(e).singularValues();
  return {sv(0), sv(1), sv(2), sv(3)};
}

int solution_space_dimension(const FourMomentum& p, double rel_threshold) {
  require_on_shell(p);
  const auto sv = singular_values(dirac_operator(p) - DiracMatrix::identity());
  int null = 0;
  for (double s : sv)
    if (s <= rel_threshold * sv[0]) ++null;
  return null;
}

double normalized_gram_determinant(const Bispinor& x, const Bispinor& y) {
  const FourSpinor a = x.column();
  const FourSpinor b = y.column();
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw DomainError("Gram determinant needs nonzero bispinors");
  return 1.0 - std::norm(inner(a, b)) / (na * na * nb * nb);
}

}  // namespace spinpair
