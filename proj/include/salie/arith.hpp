#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace salie {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct PrimePower {
  i64 p;
  int e;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization, primes ascending, exponents >= 1. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Shared smallest-prime-factor sieve. ensure() may grow it (thread-safe);
// lookups are lock-free once built. Initial size honours SALIE_SIEVE_LIMIT.
namespace sieve {
void ensure(i64 limit);
i64 limit();
i64 spf(i64 n);  // smallest prime factor, 2 <= n <= limit()
}  // namespace sieve

i64 default_sieve_limit();

// n >= 1; sieve lookups below the sieve limit, deterministic Miller-Rabin +
// Pollard rho above it. Valid for all n < 2^63.
Factorization factorize(i64 n);

bool is_prime(i64 n);

// Jacobi symbol (a/n) for odd n >= 1; a is reduced mod n first (negative ok).
int jacobi_symbol(i64 a, i64 n);

// Exact fourth root of unity i^k, k in {0,1,2,3}.
class UnitFourth {
 public:
  constexpr UnitFourth() = default;
  static constexpr UnitFourth i_pow(int k) {
    UnitFourth u;
    u.k_ = ((k % 4) + 4) % 4;
    return u;
  }
  constexpr int re() const { return k_ == 0 ? 1 : (k_ == 2 ? -1 : 0); }
  constexpr int im() const { return k_ == 1 ? 1 : (k_ == 3 ? -1 : 0); }
  constexpr UnitFourth conj() const { return i_pow(-k_); }
  constexpr UnitFourth operator*(UnitFourth o) const { return i_pow(k_ + o.k_); }
  constexpr bool operator==(const UnitFourth&) const = default;
  std::complex<double> value() const {
    return {static_cast<double>(re()), static_cast<double>(im())};
  }
  int exponent() const { return k_; }

 private:
  int k_ = 0;
};

// eps_c for odd c > 0: 1 when c = 1 (mod 4), i when c = 3 (mod 4).
UnitFourth epsilon_factor(i64 c);

// All solutions of x^2 = a (mod c) in [0, c), sorted. c >= 1, any a
// (reduced mod c; gcd(a, c) > 1 is handled via the prime-power case split).
std::vector<i64> sqrt_mod(i64 a, i64 c);
std::vector<i64> sqrt_mod_prime_power(i64 a, i64 p, int e);

struct ArithFunctions {
  i64 phi;
  int mu;     // 0 when not squarefree
  int omega;  // number of distinct primes
  i64 sigma;  // sum of divisors
  std::vector<i64> divisors;  // ascending
};
ArithFunctions arith_functions(i64 n);  // n >= 1

i64 euler_phi(i64 n);
int moebius(i64 n);
std::vector<i64> divisors_of(i64 n);

bool is_squarefree(i64 n);  // n >= 1

// Integer square root when n is a perfect square, empty otherwise. n >= 0.
std::optional<i64> exact_sqrt(i64 n);

// n = t * s^2 * r^2 with t squarefree collecting the odd-exponent primes,
// s supported on the primes of t, and gcd(r, t) = 1. Unique. n >= 1.
struct SquareSplit {
  i64 t = 1;
  i64 s = 1;
  i64 r = 1;
};
SquareSplit square_split(i64 n);

// prod over distinct primes p | n of (1 -+ 1/p).
double prod_one_minus_inv_p(i64 n);
double prod_one_plus_inv_p(i64 n);

// Canonical inverse residue in [0, c); empty when gcd(a, c) > 1. c >= 1.
std::optional<i64> mod_inverse(i64 a, i64 c);

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 a, i64 e, i64 m);

// e(num/den) = exp(2*pi*i*num/den), with the fraction reduced exactly first.
std::complex<double> unit_phase(i64 num, i64 den);

}  // namespace salie
