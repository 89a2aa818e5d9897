#include "doctest.h"
#include "spinpair/errors.hpp"
#include "spinpair/pauli_algebra.hpp"
#include "test_support.hpp"

using namespace spinpair;
using testing::C2;

namespace {
const Complex i1(0.0, 1.0);
}

TEST_CASE("pauli matrices match their literal entries") {
  const C2 s1{{{0.0, 1.0}, {1.0, 0.0}}};
  const C2 s2{{{0.0, -i1}, {i1, 0.0}}};
  const C2 s3{{{1.0, 0.0}, {0.0, -1.0}}};
  const C2 s4{{{1.0, 0.0}, {0.0, 1.0}}};
  CHECK(testing::diff(testing::to_c2(pauli(1)), s1) == 0.0);
  CHECK(testing::diff(testing::to_c2(pauli(2)), s2) == 0.0);
  CHECK(testing::diff(testing::to_c2(pauli(3)), s3) == 0.0);
  CHECK(testing::diff(testing::to_c2(pauli(4)), s4) == 0.0);
  CHECK_THROWS_AS(pauli(0), DomainError);
  CHECK_THROWS_AS(pauli(5), DomainError);
}

TEST_CASE("pauli products: sigma^j sigma^k = delta + i eps_jkl sigma^l") {
  const auto eps = [](int a, int b, int c) {
    return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
  };
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      SpinMatrix expected = (j == k ? 1.0 : 0.0) * pauli(4);
      for (int l = 1; l <= 3; ++l) expected = expected + (i1 * eps(j, k, l)) * pauli(l);
      CHECK(max_abs_diff(pauli(j) * pauli(k), expected) == 0.0);
    }
}

TEST_CASE("axis_dot_sigma squares to the identity and is hermitian, traceless") {
  auto g = testing::rng(1);
  for (int t = 0; t < 1000; ++t) {
    const UnitAxis n = testing::random_axis(g);
    const SpinMatrix s = axis_dot_sigma(n);
    REQUIRE(max_abs_diff(s * s, pauli(4)) <= 1e-14);
    CHECK(is_hermitian(s));
    CHECK(std::abs(trace(s)) <= 1e-15);
    CHECK(std::abs(determinant(s) + 1.0) <= 1e-14);
  }
}

TEST_CASE("unit axis construction") {
  SUBCASE("normalization") {
    const UnitAxis n = UnitAxis::normalized(3.0, 0.0, 4.0);
    CHECK(n.x() == doctest::Approx(0.6));
    CHECK(n.z_component() == doctest::Approx(0.8));
    CHECK(n(1) == n.x());
    CHECK_THROWS_AS(n(0), DomainError);
    CHECK_THROWS_AS(n(4), DomainError);
  }
  SUBCASE("degenerate or non-finite input is rejected") {
    CHECK_THROWS_AS(UnitAxis::normalized(0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(UnitAxis::normalized(1e-9, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(UnitAxis::normalized(NAN, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(UnitAxis::normalized(INFINITY, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(UnitAxis::exact(1.0, 1.0, 0.0), DomainError);
    CHECK_NOTHROW(UnitAxis::exact(1.0, 0.0, 0.0));
  }
  SUBCASE("polar round trip") {
    auto g = testing::rng(2);
    for (int t = 0; t < 200; ++t) {
      const UnitAxis n = testing::random_axis(g);
      const UnitAxis m = UnitAxis::from_polar(n.polar(), n.azimuth());
      for (int k = 1; k <= 3; ++k) CHECK(std::abs(n(k) - m(k)) <= 1e-14);
    }
  }
  SUBCASE("poles and the azimuth branch cut") {
    CHECK(UnitAxis::z().polar() == 0.0);
    CHECK(UnitAxis::z().azimuth() == 0.0);
    CHECK(UnitAxis::normalized(0, 0, -1).polar() == doctest::Approx(std::numbers::pi));
    CHECK(UnitAxis::normalized(0, 0, -1).azimuth() == 0.0);
    CHECK(UnitAxis::normalized(-1, -0.0, 0).azimuth() == doctest::Approx(std::numbers::pi));
  }
}

TEST_CASE("closed-form rotation agrees with a 30-term series") {
  auto g = testing::rng(3);
  for (int t = 0; t < 1000; ++t) {
    const UnitAxis n = testing::random_axis(g);
    const double theta = testing::uniform(g, -2 * std::numbers::pi, 2 * std::numbers::pi);
    const C2 closed = testing::to_c2(rotation_matrix(n, theta));
    const C2 oracle = testing::series_rotation(n.x(), n.y(), n.z_component(), theta);
    REQUIRE(testing::diff(closed, oracle) <= 1e-10);
  }
}

TEST_CASE("matrix_exp_series") {
  auto g = testing::rng(4);
  SUBCASE("matches the closed form for 30 terms") {
    for (int t = 0; t < 200; ++t) {
      const UnitAxis n = testing::random_axis(g);
      const double theta = testing::uniform(g, -2 * std::numbers::pi, 2 * std::numbers::pi);
      const SpinMatrix m = (i1 * theta / 2.0) * axis_dot_sigma(n);
      CHECK(max_abs_diff(matrix_exp_series(m, 30), rotation_matrix(n, theta)) <= 1e-10);
    }
  }
  SUBCASE("30 and 40 terms agree; the 20-term gap is bounded by the tail") {
    for (int t = 0; t < 200; ++t) {
      const UnitAxis n = testing::random_axis(g);
      const double theta = testing::uniform(g, -2 * std::numbers::pi, 2 * std::numbers::pi);
      const SpinMatrix m = (i1 * theta / 2.0) * axis_dot_sigma(n);
      CHECK(max_abs_diff(matrix_exp_series(m, 30), matrix_exp_series(m, 40)) <= 1e-14);
      // ||m|| = |theta|/2 and the series tail from k = 20 is at most 2 x^20 / 20!.
      const double x = std::abs(theta) / 2.0;
      const double tail = 2.0 * std::pow(x, 20) / std::tgamma(21.0);
      CHECK(max_abs_diff(matrix_exp_series(m, 20), matrix_exp_series(m, 40)) <= tail + 1e-15);
    }
  }
  SUBCASE("term counts") {
    const SpinMatrix m = 0.5 * pauli(3);
    CHECK(max_abs_diff(matrix_exp_series(m, 1), pauli(4)) == 0.0);
    CHECK_THROWS_AS(matrix_exp_series(m, 0), DomainError);
  }
}

TEST_CASE("rotation properties") {
  auto g = testing::rng(5);
  SUBCASE("unitary with unit determinant") {
    for (int t = 0; t < 200; ++t) {
      const SpinMatrix r = rotation_matrix(testing::random_axis(g), testing::uniform(g, -10, 10));
      CHECK(max_abs_diff(adjoint(r) * r, pauli(4)) <= 1e-14);
      CHECK(std::abs(determinant(r) - 1.0) <= 1e-14);
    }
  }
  SUBCASE("same-axis angles add") {
    for (int t = 0; t < 200; ++t) {
      const UnitAxis n = testing::random_axis(g);
      const double a = testing::uniform(g, -5, 5), b = testing::uniform(g, -5, 5);
      CHECK(max_abs_diff(rotation_matrix(n, a) * rotation_matrix(n, b), rotation_matrix(n, a + b)) <=
            1e-14);
    }
  }
  SUBCASE("a full turn is -1, two turns the identity") {
    const UnitAxis n = testing::random_axis(g);
    CHECK(max_abs_diff(rotation_matrix(n, 2 * std::numbers::pi), -pauli(4)) <= 1e-15);
    CHECK(max_abs_diff(rotation_matrix(n, 4 * std::numbers::pi), pauli(4)) <= 1e-15);
  }
  SUBCASE("covariance under a change of spin basis") {
    // U (n.sigma) U^dagger is the rotated axis; conjugating R gives R about that axis.
    for (int t = 0; t < 200; ++t) {
      const UnitAxis n = testing::random_axis(g);
      const SpinMatrix u = rotation_matrix(testing::random_axis(g), testing::uniform(g, -5, 5));
      const SpinMatrix rotated = u * axis_dot_sigma(n) * adjoint(u);
      std::array<double, 3> m{};
      for (int k = 1; k <= 3; ++k) m[k - 1] = 0.5 * trace(rotated * pauli(k)).real();
      const UnitAxis nm = UnitAxis::normalized(m[0], m[1], m[2]);
      const double theta = testing::uniform(g, -5, 5);
      CHECK(max_abs_diff(u * rotation_matrix(n, theta) * adjoint(u), rotation_matrix(nm, theta)) <=
            1e-13);
    }
  }
}

TEST_CASE("gamma matrices obey the Clifford relation with signature (-,-,-,+)") {
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      const DiracMatrix ac = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      const double g = mu != nu ? 0.0 : (mu == 4 ? 2.0 : -2.0);
      CHECK(max_abs_diff(ac, g * DiracMatrix::identity()) <= 1e-14);
      CHECK(metric(mu, nu) == g / 2.0);
    }
  CHECK_THROWS_AS(gamma(0), DomainError);
  CHECK_THROWS_AS(gamma(5), DomainError);
}

TEST_CASE("gamma blocks") {
  const SpinMatrix z{};
  for (int k = 1; k <= 3; ++k)
    CHECK(max_abs_diff(gamma(k), block(z, -pauli(k), pauli(k), z)) == 0.0);
  CHECK(max_abs_diff(gamma(4), block(z, pauli(4), pauli(4), z)) == 0.0);
  CHECK(gamma(4)(0, 2) == Complex(1.0));
  CHECK(gamma(1)(0, 3) == Complex(-1.0));
}
