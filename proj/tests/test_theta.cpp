#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "salie/theta.hpp"

using namespace salie;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("basis enumeration frozen values") {
  using E = ThetaBasisElement;
  CHECK(enumerate_basis(1, 1) == std::vector<E>{{1, 1, 1}});
  CHECK(enumerate_basis(27, 1) == std::vector<E>{{1, 1, 1}, {1, 1, 3}});
  CHECK(enumerate_basis(125, 1) == std::vector<E>{{1, 1, 1}, {1, 1, 5}, {5, 1, 1}});
  CHECK(enumerate_basis(45, 1) == std::vector<E>{{1, 1, 1}, {1, 1, 3}});
  CHECK(enumerate_basis(3, 5) == std::vector<E>{{1, 1, 1}});
  // the twist must be squarefree and 1 mod 4
  CHECK(enumerate_basis(3, 7).empty());
  CHECK(enumerate_basis(7, 45).empty());
}

TEST_CASE("basis level pairs must be odd and coprime") {
  CHECK_THROWS_AS(enumerate_basis(2, 1), std::domain_error);
  CHECK_THROWS_AS(enumerate_basis(27, 2), std::domain_error);
  CHECK_THROWS_AS(enumerate_basis(15, 5), std::domain_error);
  CHECK_THROWS_AS(enumerate_basis(27, 3), std::domain_error);
  CHECK_THROWS_AS(enumerate_basis(0, 1), std::domain_error);
}

TEST_CASE("element invariants on a sweep") {
  for (i64 D = 1; D <= 600; D += 2) {
    for (i64 f : {i64(1), i64(5), i64(13)}) {
      if (std::gcd(D, f) != 1) continue;
      for (const auto& e : enumerate_basis(D, f)) {
        CHECK(e.t % 4 == 1);
        CHECK(moebius(e.t) != 0);
        CHECK(std::gcd(e.t, f) == 1);
        CHECK(std::gcd(e.q, e.t) == 1);
        i64 blob = e.t * e.t * e.t * e.s * e.s * e.q * e.q;
        CHECK(D % blob == 0);
        CHECK(e.d(f) == e.t * f);
      }
    }
  }
}

TEST_CASE("norms frozen values") {
  CHECK(theta_norm_squared(1, 1, {1, 1, 1}) == doctest::Approx(2 * kPi).epsilon(1e-13));
  CHECK(theta_norm_squared(27, 1, {1, 1, 3}) ==
        doctest::Approx(144 * kPi).epsilon(1e-13));
  CHECK(theta_norm_squared(125, 1, {5, 1, 1}) ==
        doctest::Approx(240 * kPi / std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("normalization inverts the norm") {
  for (i64 D = 1; D <= 400; D += 2)
    for (i64 f : {i64(1), i64(5)}) {
      if (std::gcd(D, f) != 1) continue;
      for (const auto& e : enumerate_basis(D, f)) {
        double c = normalization(D, f, e);
        CHECK(c * c * theta_norm_squared(D, f, e) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
}

TEST_CASE("tau coefficients") {
  // level (1,1): supported exactly on squares, constant value
  double a1 = fourier_coeff_tau(1, 1, {1, 1, 1}, 1);
  CHECK(a1 == doctest::Approx(2.0 / std::sqrt(2 * kPi)).epsilon(1e-13));
  CHECK(fourier_coeff_tau(1, 1, {1, 1, 1}, 2) == 0.0);
  CHECK(fourier_coeff_tau(1, 1, {1, 1, 1}, 3) == 0.0);
  CHECK(fourier_coeff_tau(1, 1, {1, 1, 1}, 4) == a1);

  // q = 3 component at D = 27 carries the Ramanujan factor
  double b1 = fourier_coeff_tau(27, 1, {1, 1, 3}, 1);
  double b9 = fourier_coeff_tau(27, 1, {1, 1, 3}, 9);
  CHECK(b9 / b1 == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(fourier_coeff_tau(27, 1, {1, 1, 3}, 3) == 0.0);

  // t = 5 component is supported on 5 times squares, with the quadratic sign
  double c5 = fourier_coeff_tau(125, 1, {5, 1, 1}, 5);
  double c20 = fourier_coeff_tau(125, 1, {5, 1, 1}, 20);
  double c45 = fourier_coeff_tau(125, 1, {5, 1, 1}, 45);
  CHECK(c5 > 0);
  CHECK(c20 / c5 == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(c45 / c5 == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fourier_coeff_tau(125, 1, {5, 1, 1}, 10) == 0.0);

  CHECK_THROWS_AS(fourier_coeff_tau(1, 1, {1, 1, 1}, 0), std::domain_error);
}

TEST_CASE("sigma coefficients") {
  Complex s1 = fourier_coeff_sigma(1, 1, {1, 1, 1}, 1);
  CHECK(std::abs(s1 - Complex(1, 1) / std::sqrt(2 * kPi)) < 1e-13);
  CHECK(fourier_coeff_sigma(1, 1, {1, 1, 1}, 2) == Complex(0, 0));
  CHECK(fourier_coeff_sigma(1, 1, {1, 1, 1}, 8) == Complex(0, 0));
  // rescaled index 4fm stays supported: 4 = (2)^2
  CHECK(std::abs(fourier_coeff_sigma(1, 1, {1, 1, 1}, 4) - s1) < 1e-13);
  CHECK_THROWS_AS(fourier_coeff_sigma(1, 1, {1, 1, 1}, -1), std::domain_error);
}

TEST_CASE("pairing sum frozen values") {
  auto unit = spectral_sum(1, 1, 1, 1);
  CHECK(rel_err(unit.lhs, Complex(1, -1) / kPi) < 1e-13);
  CHECK(rel_err(unit.rhs, Complex(1, -1) / kPi) < 1e-13);

  auto d27 = spectral_sum(27, 1, 1, 1);
  Complex want = -Complex(1, 1) / (24 * kPi);
  CHECK(rel_err(d27.lhs, want) < 1e-12);
  CHECK(rel_err(d27.rhs, want) < 1e-12);
  CHECK(d27.gross > 0);
}

TEST_CASE("pairing sum matches its closed form on a grid") {
  for (auto [D, f] : std::vector<std::pair<i64, i64>>{
           {1, 1}, {27, 1}, {45, 1}, {125, 1}, {3, 5}, {9, 1}, {75, 1}}) {
    if (std::gcd(D, f) != 1) continue;
    for (const auto& e : enumerate_basis(D, f)) {
      i64 base = e.t * f * e.s * e.s;
      for (i64 mp = 1; mp <= 4; ++mp)
        for (i64 np = 1; np <= 4; ++np) {
          auto r = spectral_sum(D, f, base * mp * mp, base * np * np);
          double tol = 1e-11 * std::max(std::abs(r.lhs), std::abs(r.rhs)) +
                       1e-13 * r.gross + 1e-18;
          CHECK(std::abs(r.lhs - r.rhs) <= tol);
        }
    }
  }
}

TEST_CASE("pairing sum vanishes off the supported indices") {
  for (auto [m, n] : std::vector<std::pair<i64, i64>>{
           {2, 3}, {1, 2}, {7, 7}, {3, 3}, {1, 11}}) {
    auto r = spectral_sum(27, 1, m, n);
    CHECK(r.lhs == Complex(0, 0));
    CHECK(r.rhs == Complex(0, 0));
  }
  // mixed shapes at D = 125: m on the t=1 branch, n on the t=5 branch
  auto r = spectral_sum(125, 1, 1, 5);
  CHECK(r.lhs == Complex(0, 0));
  CHECK(r.rhs == Complex(0, 0));
  CHECK_THROWS_AS(spectral_sum(27, 1, 0, 1), std::domain_error);
}

TEST_CASE("zeta constants") {
  Complex z = zeta_constant({1, 1}, 1, 1);
  CHECK(rel_err(z, Complex(16 / (kPi * kPi), 0)) < 1e-13);
  CHECK(zeta_constant({1, 1}, 0, 1) == Complex(0, 0));
  CHECK(zeta_constant({1, 1}, 1, -3) == Complex(0, 0));
  CHECK(zeta_constant({27, 1}, 2, 3) == Complex(0, 0));
}

TEST_CASE("gram matrix diagonalizes exactly") {
  auto g = gram_orthogonality_check(100);
  CHECK(g.pass);
}
