#include "doctest.h"
#include "spinpair/dirac_momentum.hpp"
#include "spinpair/errors.hpp"
#include "test_support.hpp"

using namespace spinpair;

namespace {

EigenPair random_pair(std::mt19937_64& g, double umax = 5.0) {
  return make_pair(testing::random_axis(g), testing::uniform(g, -7, 7), testing::uniform(g, -umax, umax),
                   testing::uniform(g, 0.2, 3.0));
}

FourMomentum momentum_of(const EigenPair& pair) {
  return reduce_to_unit_momentum(pair.rapidity, pair.axis);
}

// gamma^mu p_mu assembled directly from the block formula
// [[0, p4 + sigma.p], [p4 - sigma.p, 0]] with upper-index spatial p.
DiracMatrix block_operator(const FourMomentum& p) {
  SpinMatrix sp{};
  for (int k = 1; k <= 3; ++k) sp = sp + p.upper(k) * pauli(k);
  const SpinMatrix e = p.p4 * pauli(4);
  return block(SpinMatrix{}, e + sp, e - sp, SpinMatrix{});
}

}  // namespace

TEST_CASE("dirac operator equals the block formula and squares to the identity") {
  auto g = testing::rng(30);
  for (int t = 0; t < 500; ++t) {
    const FourMomentum p = momentum_of(random_pair(g));
    const DiracMatrix d = dirac_operator(p);
    CHECK(max_abs_diff(d, block_operator(p)) <= 1e-14 * p.p4);
    CHECK(max_abs_diff(d * d, DiracMatrix::identity()) <= 1e-12 * p.p4 * p.p4);
  }
}

TEST_CASE("spin-up, spin-down and superpositions solve the momentum-space equation") {
  auto g = testing::rng(31);
  for (int t = 0; t < 1000; ++t) {
    const EigenPair pair = random_pair(g);
    const FourMomentum p = momentum_of(pair);
    const Bispinor up = assemble_bispinor(pair);
    const Bispinor dn = spin_down_partner(pair);
    REQUIRE(dirac_residual_momentum(up, p) <= 1e-10);
    REQUIRE(dirac_residual_momentum(dn, p) <= 1e-10);
    const Bispinor mix = testing::random_complex(g) * up + testing::random_complex(g) * dn;
    if (norm(mix) > 1e-6 * norm(up)) REQUIRE(dirac_residual_momentum(mix, p) <= 1e-10);
  }
}

TEST_CASE("spin-down bookkeeping") {
  auto g = testing::rng(32);
  for (int t = 0; t < 200; ++t) {
    const EigenPair pair = random_pair(g);
    const EigenPair down = spin_down_pair(pair);
    CHECK(down.branch == Branch::minus);
    CHECK(norm(down.v2) == doctest::Approx(norm(pair.v2)).epsilon(1e-14));
    CHECK(norm(down.v1) / norm(down.v2) * std::exp(pair.rapidity) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(verify_rotation_eigen(pair.axis, pair.theta, down.v1, Branch::minus) <= 1e-10);
    CHECK(verify_rotation_eigen(pair.axis, pair.theta, down.v2, Branch::minus) <= 1e-10);
    CHECK(normalized_gram_determinant(assemble_bispinor(pair), assemble_bispinor(down)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(spin_down_pair(spin_down_pair(make_pair(UnitAxis::z(), 0.0, 0.5))), DomainError);
}

TEST_CASE("the spin-down ratio e^{+u} fails unless u = 0") {
  const EigenPair pair = make_pair(UnitAxis::normalized(1, 0, 1), 0.3, 0.9);
  EigenPair wrong = spin_down_pair(pair);
  wrong.v1 = std::exp(2.0 * pair.rapidity) * wrong.v1;
  CHECK(dirac_residual_momentum(assemble_bispinor(wrong), momentum_of(pair)) > 0.1);
}

TEST_CASE("solution space is exactly two dimensional") {
  auto g = testing::rng(33);
  for (int t = 0; t < 300; ++t) {
    const FourMomentum p = momentum_of(random_pair(g));
    CHECK(solution_space_dimension(p) == 2);
    const auto sv = singular_values(dirac_operator(p) - DiracMatrix::identity());
    CHECK(sv[0] >= sv[1]);
    CHECK(sv[2] >= sv[3]);
    CHECK(sv[3] <= 1e-12 * sv[0]);
  }
  CHECK(solution_space_dimension(FourMomentum{}) == 2);
}

TEST_CASE("bispinor column round trip and argument checks") {
  const EigenPair pair = make_pair(UnitAxis::normalized(0.3, -0.2, 1), 1.1, -0.4, 2.0);
  const Bispinor psi = assemble_bispinor(pair);
  const FourSpinor col = psi.column();
  CHECK(col[0] == pair.v1[0]);
  CHECK(col[3] == pair.v2[1]);
  const Bispinor back = Bispinor::from_column(col);
  CHECK(norm(back.upper - psi.upper) == 0.0);
  CHECK(norm(back.lower - psi.lower) == 0.0);
  CHECK(normalized_gram_determinant(psi, Complex(0, 2) * psi) <= 1e-14);

  CHECK_THROWS_AS(dirac_residual_momentum(Bispinor{}, momentum_of(pair)), DomainError);
  FourMomentum off = momentum_of(pair);
  off.p4 += 0.1;
  CHECK_THROWS_AS(dirac_residual_momentum(psi, off), DomainError);
  CHECK_THROWS_AS(normalized_gram_determinant(psi, Bispinor{}), DomainError);
}

TEST_CASE("rest frame: v1 = v2 and the operator is gamma^4") {
  const EigenPair pair = make_pair(UnitAxis::normalized(1, 1, 1), 0.5, 0.0);
  CHECK(norm(pair.v1 - pair.v2) == 0.0);
  CHECK(max_abs_diff(dirac_operator(momentum_of(pair)), gamma(4)) <= 1e-15);
}
