#include "salie/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace salie {

namespace {

i64 parse_env_limit() {
  if (const char* s = std::getenv("SALIE_SIEVE_LIMIT")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v >= 2 && v <= (1LL << 31)) return v;
  }
  return 1LL << 20;
}

struct SpfTable {
  std::vector<std::uint32_t> spf;  // spf[n] for n <= limit
  i64 limit = 0;
};

std::mutex g_sieve_mutex;
std::atomic<const SpfTable*> g_sieve{nullptr};

const SpfTable* build_table(i64 limit) {
  auto* t = new SpfTable;
  t->limit = limit;
  t->spf.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (i64 i = 2; i <= limit; ++i) {
    if (t->spf[i] == 0) {
      for (i64 j = i; j <= limit; j += i)
        if (t->spf[j] == 0) t->spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return t;
}

}  // namespace

namespace sieve {

void ensure(i64 lim) {
  if (lim < 2) lim = 2;
  const SpfTable* cur = g_sieve.load(std::memory_order_acquire);
  if (cur && cur->limit >= lim) return;
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  cur = g_sieve.load(std::memory_order_acquire);
  if (cur && cur->limit >= lim) return;
  // Old table is leaked on purpose: readers may still hold the pointer.
  g_sieve.store(build_table(std::max(lim, default_sieve_limit())),
                std::memory_order_release);
}

i64 limit() {
  const SpfTable* cur = g_sieve.load(std::memory_order_acquire);
  return cur ? cur->limit : 0;
}

i64 spf(i64 n) {
  const SpfTable* cur = g_sieve.load(std::memory_order_acquire);
  if (!cur || n < 2 || n > cur->limit)
    throw std::out_of_range("sieve::spf: n outside sieve range");
  return cur->spf[static_cast<std::size_t>(n)];
}

}  // namespace sieve

i64 default_sieve_limit() {
  static const i64 v = parse_env_limit();
  return v;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

i64 pow_mod(i64 a, i64 e, i64 m) {
  if (m == 1) return 0;
  a %= m;
  if (a < 0) a += m;
  i64 r = 1;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all n < 2^64.
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

i64 pollard_rho(i64 n) {
  if (n % 2 == 0) return 2;
  // Brent's cycle detection.
  for (i64 c = 1;; ++c) {
    i64 x = 2, y = 2, d = 1;
    i64 q = 1;
    int m = 128;
    i64 ys = y;
    while (d == 1) {
      x = y;
      for (int i = 0; i < m; ++i) y = (mul_mod(y, y, n) + c) % n;
      int k = 0;
      while (k < m && d == 1) {
        ys = y;
        int lim = std::min(128, m - k);
        for (int i = 0; i < lim; ++i) {
          y = (mul_mod(y, y, n) + c) % n;
          q = mul_mod(q, std::abs(x - y), n);
        }
        d = std::gcd(q, n);
        k += lim;
      }
    }
    if (d == n) {
      // Backtrack one step at a time.
      d = 1;
      while (d == 1) {
        ys = (mul_mod(ys, ys, n) + c) % n;
        d = std::gcd(std::abs(x - ys), n);
      }
    }
    if (d != n) return d;
  }
}

void factor_rec(i64 n, std::vector<i64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  i64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(i64 n) {
  if (n < 1) throw std::domain_error("factorize: n must be positive");
  Factorization f;
  if (n == 1) return f;
  sieve::ensure(default_sieve_limit());
  std::vector<i64> primes;
  while (n > 1 && n <= sieve::limit()) {
    i64 p = sieve::spf(n);
    primes.push_back(p);
    n /= p;
  }
  if (n > 1) {
    for (i64 p : {2, 3, 5, 7, 11, 13}) {
      while (n % p == 0) {
        primes.push_back(p);
        n /= p;
      }
    }
    if (n > 1) factor_rec(n, primes);
  }
  std::sort(primes.begin(), primes.end());
  for (i64 p : primes) {
    if (!f.empty() && f.back().p == p)
      ++f.back().e;
    else
      f.push_back({p, 1});
  }
  return f;
}

int jacobi_symbol(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0)
    throw std::domain_error("jacobi_symbol: n must be odd and positive");
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      i64 r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

UnitFourth epsilon_factor(i64 c) {
  if (c <= 0 || c % 2 == 0)
    throw std::domain_error("epsilon_factor: c must be odd and positive");
  return c % 4 == 1 ? UnitFourth::i_pow(0) : UnitFourth::i_pow(1);
}

namespace {

// Tonelli-Shanks: one root of x^2 = a (mod p), p odd prime, (a/p) = 1.
i64 sqrt_mod_prime(i64 a, i64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  i64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  i64 z = 2;
  while (jacobi_symbol(z, p) != -1) ++z;
  i64 m = s;
  i64 c = pow_mod(z, q, p);
  i64 t = pow_mod(a, q, p);
  i64 r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    i64 t2 = t;
    i64 i = 0;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

// Roots of z^2 = b (mod p^j) for p odd, p not dividing b. 0 or 2 roots.
std::vector<i64> unit_roots_odd(i64 b, i64 p, int j) {
  i64 pj = 1;
  for (int k = 0; k < j; ++k) pj *= p;
  b %= pj;
  if (jacobi_symbol(b % p, p) != 1) return {};
  i64 r = sqrt_mod_prime(b % p, p);
  // Hensel, doubling precision: r <- (r + b/r) / 2.
  i64 mod = p;
  while (mod < pj) {
    i64 next = mod <= pj / mod ? mod * mod : pj;
    i64 rinv = 0;  // inverse of r mod next (r is a unit)
    {
      i64 t0 = 0, t1 = 1, r0 = next, r1 = r % next;
      while (r1 != 0) {
        i64 qd = r0 / r1;
        t0 -= qd * t1;
        std::swap(t0, t1);
        r0 -= qd * r1;
        std::swap(r0, r1);
      }
      rinv = t0 % next;
      if (rinv < 0) rinv += next;
    }
    i64 half = (next + 1) / 2;  // inverse of 2 mod odd next
    r = mul_mod(half, (r + mul_mod(b % next, rinv, next)) % next, next);
    mod = next;
  }
  i64 r2 = pj - r;
  if (r == r2) return {r};
  return {std::min(r, r2), std::max(r, r2)};
}

// Roots of z^2 = b (mod 2^j) for odd b.
std::vector<i64> unit_roots_two(i64 b, int j) {
  i64 pj = i64(1) << j;
  b &= pj - 1;
  if (j == 1) return {1};
  if (j == 2) return b % 4 == 1 ? std::vector<i64>{1, 3} : std::vector<i64>{};
  if (b % 8 != 1) return {};
  i64 r = 1;
  for (int k = 3; k < j; ++k) {
    i64 mod_next = i64(1) << (k + 1);
    if ((mul_mod(r, r, mod_next) - b % mod_next + mod_next) % mod_next != 0)
      r += i64(1) << (k - 1);
  }
  i64 half = i64(1) << (j - 1);
  std::vector<i64> roots{r % pj, (pj - r) % pj, (r + half) % pj,
                         (pj - r + half) % pj};
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<i64> sqrt_mod_prime_power(i64 a, i64 p, int e) {
  if (e < 1 || p < 2) throw std::domain_error("sqrt_mod_prime_power: bad p^e");
  i64 pe = 1;
  for (int k = 0; k < e; ++k) pe *= p;
  a %= pe;
  if (a < 0) a += pe;

  if (a == 0) {
    // x = 0 (mod p^ceil(e/2))
    int h = (e + 1) / 2;
    i64 ph = 1;
    for (int k = 0; k < h; ++k) ph *= p;
    std::vector<i64> roots;
    for (i64 x = 0; x < pe; x += ph) roots.push_back(x);
    return roots;
  }

  int v = 0;
  i64 b = a;
  while (b % p == 0) {
    b /= p;
    ++v;
  }
  if (v % 2 != 0) return {};
  int j = e - v;
  std::vector<i64> unit;
  if (p == 2)
    unit = unit_roots_two(b, j);
  else
    unit = unit_roots_odd(b, p, j);
  if (unit.empty()) return {};

  // x = p^(v/2) * z with z = z0 (mod p^j); z ranges mod p^(e - v/2).
  i64 pv2 = 1;
  for (int k = 0; k < v / 2; ++k) pv2 *= p;
  i64 pj = 1;
  for (int k = 0; k < j; ++k) pj *= p;
  i64 lifts = 1;
  for (int k = 0; k < v / 2; ++k) lifts *= p;

  std::vector<i64> roots;
  roots.reserve(unit.size() * static_cast<std::size_t>(lifts));
  for (i64 z0 : unit)
    for (i64 tl = 0; tl < lifts; ++tl)
      roots.push_back((pv2 % pe) * ((z0 + tl * pj) % (pe / pv2)) % pe);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<i64> sqrt_mod(i64 a, i64 c) {
  if (c < 1) throw std::domain_error("sqrt_mod: modulus must be positive");
  if (c == 1) return {0};
  a %= c;
  if (a < 0) a += c;

  Factorization fac = factorize(c);
  std::vector<i64> acc{0};
  i64 mod_acc = 1;
  for (const auto& [p, e] : fac) {
    i64 pe = 1;
    for (int k = 0; k < e; ++k) pe *= p;
    std::vector<i64> local = sqrt_mod_prime_power(a % pe, p, e);
    if (local.empty()) return {};
    std::vector<i64> next;
    next.reserve(acc.size() * local.size());
    // CRT: x = r (mod mod_acc), x = s (mod pe).
    i64 inv = 0;
    {
      i64 t0 = 0, t1 = 1, r0 = pe, r1 = mod_acc % pe;
      while (r1 != 0) {
        i64 qd = r0 / r1;
        t0 -= qd * t1;
        std::swap(t0, t1);
        r0 -= qd * r1;
        std::swap(r0, r1);
      }
      inv = t0 % pe;
      if (inv < 0) inv += pe;
    }
    for (i64 r : acc)
      for (i64 s : local) {
        i64 diff = (s - r) % pe;
        if (diff < 0) diff += pe;
        i64 k = mul_mod(diff, inv, pe);
        next.push_back(r + mod_acc * k);
      }
    acc = std::move(next);
    mod_acc *= pe;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

ArithFunctions arith_functions(i64 n) {
  if (n < 1) throw std::domain_error("arith_functions: n must be positive");
  Factorization fac = factorize(n);
  ArithFunctions out;
  out.phi = 1;
  out.mu = 1;
  out.omega = static_cast<int>(fac.size());
  out.sigma = 1;
  out.divisors = {1};
  for (const auto& [p, e] : fac) {
    i64 pe = 1;
    i64 sig = 1;
    for (int k = 0; k < e; ++k) {
      pe *= p;
      sig += pe;
    }
    out.phi *= pe - pe / p;
    out.mu = e > 1 ? 0 : -out.mu;
    out.sigma *= sig;
    std::size_t base = out.divisors.size();
    i64 mult = 1;
    for (int k = 1; k <= e; ++k) {
      mult *= p;
      for (std::size_t idx = 0; idx < base; ++idx)
        out.divisors.push_back(out.divisors[idx] * mult);
    }
  }
  std::sort(out.divisors.begin(), out.divisors.end());
  return out;
}

i64 euler_phi(i64 n) { return arith_functions(n).phi; }
int moebius(i64 n) { return arith_functions(n).mu; }
std::vector<i64> divisors_of(i64 n) { return arith_functions(n).divisors; }

bool is_squarefree(i64 n) {
  for (const auto& pp : factorize(n))
    if (pp.e > 1) return false;
  return true;
}

std::optional<i64> exact_sqrt(i64 n) {
  if (n < 0) return std::nullopt;
  if (n == 0) return 0;
  i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r > 1 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  if (r * r == n) return r;
  return std::nullopt;
}

SquareSplit square_split(i64 n) {
  if (n < 1) throw std::domain_error("square_split: n must be positive");
  SquareSplit out;
  for (const auto& pp : factorize(n)) {
    if (pp.e % 2 == 1) {
      out.t *= pp.p;
      for (int k = 0; k < (pp.e - 1) / 2; ++k) out.s *= pp.p;
    } else {
      for (int k = 0; k < pp.e / 2; ++k) out.r *= pp.p;
    }
  }
  return out;
}

double prod_one_minus_inv_p(i64 n) {
  double out = 1.0;
  for (const auto& pp : factorize(n)) out *= 1.0 - 1.0 / static_cast<double>(pp.p);
  return out;
}

double prod_one_plus_inv_p(i64 n) {
  double out = 1.0;
  for (const auto& pp : factorize(n)) out *= 1.0 + 1.0 / static_cast<double>(pp.p);
  return out;
}

std::complex<double> unit_phase(i64 num, i64 den) {
  if (den == 0) throw std::domain_error("unit_phase: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num %= den;
  if (num < 0) num += den;
  if (num == 0) return {1.0, 0.0};
  constexpr double two_pi = 6.283185307179586476925286766559;
  double theta = two_pi * (static_cast<double>(num) / static_cast<double>(den));
  return {std::cos(theta), std::sin(theta)};
}

std::optional<i64> mod_inverse(i64 a, i64 c) {
  if (c < 1) throw std::domain_error("mod_inverse: modulus must be positive");
  if (c == 1) return 0;
  a %= c;
  if (a < 0) a += c;
  i64 t0 = 0, t1 = 1, r0 = c, r1 = a;
  while (r1 != 0) {
    i64 q = r0 / r1;
    t0 -= q * t1;
    std::swap(t0, t1);
    r0 -= q * r1;
    std::swap(r0, r1);
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += c;
  return t0;
}

}  // namespace salie
