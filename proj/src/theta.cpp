#include "salie/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "salie/expsums.hpp"
#include "salie/kahan.hpp"

namespace salie {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// All prime factors of s divide t.
bool supported_on(i64 s, i64 t) {
  i64 x = s;
  for (;;) {
    i64 g = std::gcd(x, t);
    if (g == 1) break;
    while (x % g == 0) x /= g;
  }
  return x == 1;
}

void validate_level_pair(i64 D, i64 f) {
  if (D < 1 || D % 2 == 0) throw std::domain_error("basis: D must be odd and positive");
  if (f < 1 || f % 2 == 0) throw std::domain_error("basis: f must be odd and positive");
  if (std::gcd(D, f) != 1) throw std::domain_error("basis: D and f must be coprime");
}

}  // namespace

std::vector<ThetaBasisElement> enumerate_basis(i64 D, i64 f) {
  validate_level_pair(D, f);
  if (f % 4 != 1 || !is_squarefree(f)) return {};

  std::vector<ThetaBasisElement> out;
  for (i64 t : divisors_of(D)) {
    if (t % 4 != 1) continue;
    if (std::gcd(t, f) != 1) continue;
    if (!is_squarefree(t)) continue;
    i64 M = D;
    bool cube_divides = true;
    for (int k = 0; k < 3; ++k) {
      if (M % t != 0) {
        cube_divides = false;
        break;
      }
      M /= t;
    }
    if (!cube_divides) continue;
    for (i64 s : divisors_of(M)) {
      if (s > M / s || M % (s * s) != 0) continue;
      if (!supported_on(s, t)) continue;
      i64 Q = M / (s * s);
      for (i64 q : divisors_of(Q)) {
        if (q > Q / q || Q % (q * q) != 0) continue;
        if (std::gcd(q, t) != 1) continue;
        out.push_back({t, s, q});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double theta_norm_squared(i64 D, i64 f, const ThetaBasisElement& elem) {
  i64 level = D * f;
  double val = 2.0 * kPi * static_cast<double>(level);
  val *= static_cast<double>(euler_phi(elem.q));
  val /= static_cast<double>(elem.s) * std::sqrt(static_cast<double>(elem.d(f)));
  val *= prod_one_minus_inv_p(elem.t);
  val *= prod_one_plus_inv_p(level);
  return val;
}

double normalization(i64 D, i64 f, const ThetaBasisElement& elem) {
  double inv_sq = 2.0 * kPi * static_cast<double>(D) * std::sqrt(static_cast<double>(f));
  inv_sq *= static_cast<double>(euler_phi(elem.q));
  inv_sq /= static_cast<double>(elem.s) * std::sqrt(static_cast<double>(elem.t));
  inv_sq *= prod_one_minus_inv_p(elem.t);
  inv_sq *= prod_one_plus_inv_p(D * f);
  return 1.0 / std::sqrt(inv_sq);
}

double fourier_coeff_tau(i64 D, i64 f, const ThetaBasisElement& elem, i64 n) {
  if (n < 1) throw std::domain_error("fourier_coeff_tau: index must be positive");
  i64 base = elem.t * f * elem.s * elem.s;
  if (n % base != 0) return 0.0;
  auto root = exact_sqrt(n / base);
  if (!root) return 0.0;
  i64 np = *root;
  int chi = jacobi_symbol(np, elem.t);
  if (chi == 0) return 0.0;
  return 2.0 * normalization(D, f, elem) * chi *
         static_cast<double>(ramanujan(elem.q, np));
}

Complex fourier_coeff_sigma(i64 D, i64 f, const ThetaBasisElement& elem, i64 m) {
  if (m < 1) throw std::domain_error("fourier_coeff_sigma: index must be positive");
  i64 base = elem.t * elem.s * elem.s;
  if (m % base != 0) return {};
  auto root = exact_sqrt(m / base);
  if (!root) return {};
  i64 mpp = *root;
  int chi = jacobi_symbol(2 * mpp, elem.t);
  if (chi == 0) return {};
  Complex val = Complex(1.0, 1.0) / std::sqrt(static_cast<double>(f));
  val *= epsilon_factor(D).value();
  val *= normalization(D, f, elem) * chi * static_cast<double>(ramanujan(elem.q, mpp));
  return val;
}

namespace {

Complex spectral_rhs(i64 D, i64 f, i64 m, i64 n) {
  if (m % f != 0 || n % f != 0) return {};
  SquareSplit am = square_split(m / f);
  SquareSplit an = square_split(n / f);
  if (am.t != an.t || am.s != an.s) return {};
  i64 t = am.t, s = am.s, mp = am.r, np = an.r;
  if (t % 4 != 1 || std::gcd(t, f) != 1) return {};

  // t^3 s^2 must divide D or no basis element can pick the pair up.
  i64 rest = D;
  for (int k = 0; k < 3; ++k) {
    if (rest % t != 0) return {};
    rest /= t;
  }
  if (rest % (s * s) != 0) return {};

  i64 D_t = 1;
  i64 D_prime = D;
  for (;;) {
    i64 g = std::gcd(D_prime, t);
    if (g == 1) break;
    while (D_prime % g == 0) {
      D_prime /= g;
      D_t *= g;
    }
  }

  double qsum = 0.0;
  for (i64 q : divisors_of(D_prime)) {
    if (q > D_prime / q || D_prime % (q * q) != 0) continue;
    qsum += static_cast<double>(ramanujan(q, np)) *
            static_cast<double>(ramanujan(q, mp)) /
            static_cast<double>(euler_phi(q));
  }

  i64 jac_arg = t == 1 ? 0 : mul_mod(mul_mod(f % t, mp % t, t), np % t, t);
  int chi = jacobi_symbol(jac_arg, t);
  if (chi == 0) return {};

  Complex val = Complex(1.0, -1.0) / kPi;
  val *= static_cast<double>(s) * std::sqrt(static_cast<double>(t)) /
         (static_cast<double>(D) * static_cast<double>(f));
  val *= epsilon_factor(D).conj().value();
  val *= chi;
  val /= prod_one_minus_inv_p(t);
  val /= prod_one_plus_inv_p(D * f);
  val *= qsum;
  return val;
}

}  // namespace

SpectralSumResult spectral_sum(i64 D, i64 f, i64 m, i64 n) {
  if (m < 1 || n < 1) throw std::domain_error("spectral_sum: m, n must be positive");
  auto basis = enumerate_basis(D, f);
  KahanComplex lhs;
  double gross = 0.0;
  for (const auto& elem : basis) {
    Complex sig = fourier_coeff_sigma(D, f, elem, 4 * f * m);
    if (sig == Complex{}) continue;
    double tau = fourier_coeff_tau(D, f, elem, n);
    if (tau == 0.0) continue;
    Complex term = std::conj(sig) * tau;
    lhs.add(term);
    gross += std::abs(term);
  }
  return {lhs.value(), spectral_rhs(D, f, m, n), gross};
}

Complex zeta_constant(const ZetaContext& ctx, i64 m, i64 n) {
  if (m <= 0 || n <= 0) return {};
  auto basis = enumerate_basis(ctx.D, ctx.f);
  KahanComplex acc;
  for (const auto& elem : basis) {
    Complex sig = fourier_coeff_sigma(ctx.D, ctx.f, elem, 4 * ctx.f * m);
    if (sig == Complex{}) continue;
    double tau = fourier_coeff_tau(ctx.D, ctx.f, elem, n);
    if (tau == 0.0) continue;
    acc.add(std::conj(sig) * tau);
  }
  return Complex(2.0, 2.0) * (4.0 * static_cast<double>(ctx.f) / kPi) * acc.value();
}

GramCheckResult gram_orthogonality_check(i64 U) {
  if (U < 1) throw std::domain_error("gram_orthogonality_check: U must be positive");
  auto divs = divisors_of(U);
  const std::size_t k = divs.size();

  std::vector<std::vector<i64>> gram(k, std::vector<i64>(k));
  std::vector<std::vector<i64>> moeb(k, std::vector<i64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gram[i][j] = std::gcd(divs[i], divs[j]);
      if (divs[i] % divs[j] == 0) moeb[i][j] = moebius(divs[i] / divs[j]);
    }
  }

  // B = A * M * A^T should come out diag(phi(u)).
  std::vector<std::vector<i64>> tmp(k, std::vector<i64>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (moeb[i][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) tmp[i][j] += moeb[i][l] * gram[l][j];
    }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      i64 b = 0;
      for (std::size_t l = 0; l < k; ++l)
        if (moeb[j][l] != 0) b += tmp[i][l] * moeb[j][l];
      i64 expected = i == j ? euler_phi(divs[i]) : 0;
      if (b != expected) return {false, divs[i], divs[j]};
    }
  }
  return {true, 0, 0};
}

}  // namespace salie
