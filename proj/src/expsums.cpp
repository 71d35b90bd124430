#include "salie/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "salie/kahan.hpp"

namespace salie {

namespace {

constexpr i64 kDirectLimit = (i64(1) << 31) - 1;

void require_odd(i64 c, const char* who) {
  if (c < 1 || c % 2 == 0)
    throw std::domain_error(std::string(who) + ": modulus must be odd and positive");
}

i64 reduce(i64 a, i64 c) {
  a %= c;
  return a < 0 ? a + c : a;
}

}  // namespace

SalieDirectEvaluator::SalieDirectEvaluator(i64 c) : c_(c) {
  require_odd(c, "salie_direct");
  if (c > kDirectLimit)
    throw std::domain_error("salie_direct: modulus too large for O(c) evaluation");
  if (c == 1) return;
  sieve::ensure(c);
  std::size_t n = static_cast<std::size_t>(c);
  jac_.assign(n, 0);
  inv_.assign(n, 0);
  jac_[1] = 1;
  inv_[1] = 1;
  // (x/c) is completely multiplicative in x; fill by smallest prime factor.
  for (i64 x = 2; x < c; ++x) {
    i64 p = sieve::spf(x);
    if (x == p) {
      jac_[x] = static_cast<std::int8_t>(jacobi_symbol(p, c));
    } else {
      jac_[x] = static_cast<std::int8_t>(jac_[p] * jac_[x / p]);
    }
    if (jac_[x] != 0) {
      // extended Euclid; x is a unit
      i64 t0 = 0, t1 = 1, r0 = c, r1 = x;
      while (r1 != 0) {
        i64 q = r0 / r1;
        t0 -= q * t1;
        std::swap(t0, t1);
        r0 -= q * r1;
        std::swap(r0, r1);
      }
      if (t0 < 0) t0 += c;
      inv_[x] = static_cast<std::uint32_t>(t0);
    }
  }
}

Complex SalieDirectEvaluator::eval(i64 m, i64 n) const {
  if (c_ == 1) return {1.0, 0.0};
  const i64 c = c_;
  const i64 mm = reduce(m, c);
  const i64 nn = reduce(n, c);
  const double step = 6.283185307179586476925286766559 / static_cast<double>(c);
  KahanComplex acc;
  for (i64 x = 1; x < c; ++x) {
    int j = jac_[x];
    if (j == 0) continue;
    i64 r = (mm * x % c + nn * static_cast<i64>(inv_[x]) % c) % c;
    double theta = step * static_cast<double>(r);
    Complex term(std::cos(theta), std::sin(theta));
    acc.add(j > 0 ? term : -term);
  }
  return acc.value();
}

Complex salie_direct(i64 m, i64 n, i64 c) {
  return SalieDirectEvaluator(c).eval(m, n);
}

Complex salie_fast(i64 m, i64 n, i64 c) {
  require_odd(c, "salie_fast");
  if (c == 1) return {1.0, 0.0};
  i64 mm = reduce(m, c);
  i64 nn = reduce(n, c);
  if (std::gcd(mm, c) != 1 || std::gcd(nn, c) != 1)
    throw std::domain_error("salie_fast: gcd(mn, c) must be 1");
  i64 a = mul_mod(mm, nn, c);
  KahanComplex acc;
  for (i64 x : sqrt_mod(a, c)) acc.add(unit_phase(2 * x, c));
  Complex root_sum = acc.value();
  double sign = static_cast<double>(jacobi_symbol(nn, c));
  return sign * std::sqrt(static_cast<double>(c)) *
         (epsilon_factor(c).value() * root_sum);
}

Complex salie_eval(i64 m, i64 n, i64 c, SumMode mode) {
  require_odd(c, "salie_eval");
  switch (mode) {
    case SumMode::Fast:
      return salie_fast(m, n, c);
    case SumMode::Direct:
      return salie_direct(m, n, c);
    case SumMode::Auto: {
      if (c == 1) return {1.0, 0.0};
      i64 mm = reduce(m, c);
      i64 nn = reduce(n, c);
      if (std::gcd(mm, c) == 1 && std::gcd(nn, c) == 1)
        return salie_fast(m, n, c);
      return salie_direct(m, n, c);
    }
  }
  throw std::logic_error("salie_eval: bad mode");
}

Complex kloosterman(i64 m, i64 n, i64 c) {
  if (c < 1) throw std::domain_error("kloosterman: c must be positive");
  if (c == 1) return {1.0, 0.0};
  if (c > kDirectLimit)
    throw std::domain_error("kloosterman: modulus too large");
  i64 mm = reduce(m, c);
  i64 nn = reduce(n, c);
  const double step = 6.283185307179586476925286766559 / static_cast<double>(c);
  KahanComplex acc;
  for (i64 x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    i64 t0 = 0, t1 = 1, r0 = c, r1 = x;
    while (r1 != 0) {
      i64 q = r0 / r1;
      t0 -= q * t1;
      std::swap(t0, t1);
      r0 -= q * r1;
      std::swap(r0, r1);
    }
    if (t0 < 0) t0 += c;
    i64 r = (mm * x % c + nn * t0 % c) % c;
    double theta = step * static_cast<double>(r);
    acc.add(Complex(std::cos(theta), std::sin(theta)));
  }
  return acc.value();
}

Complex gauss_quadratic(i64 c) {
  require_odd(c, "gauss_quadratic");
  KahanComplex acc;
  for (i64 y = 0; y < c; ++y) acc.add(unit_phase(mul_mod(y, y, c), c));
  Complex direct = acc.value();
  Complex closed = gauss_closed(c);
  if (std::abs(direct - closed) > 1e-9 * std::sqrt(static_cast<double>(c)))
    throw std::logic_error("gauss_quadratic: drift against eps_c sqrt(c)");
  return direct;
}

Complex gauss_closed(i64 c) {
  require_odd(c, "gauss_closed");
  return epsilon_factor(c).value() * std::sqrt(static_cast<double>(c));
}

Complex quad_root_sum(i64 m, i64 l, i64 c) {
  if (c < 1) throw std::domain_error("quad_root_sum: c must be positive");
  i64 ll = reduce(l, c);
  KahanComplex acc;
  for (i64 x : sqrt_mod(m, c))
    acc.add(unit_phase(mul_mod(mul_mod(2 % c, x, c), ll, c), c));
  return acc.value();
}

RelationCheck short_sum_relation_check(i64 m, i64 l, i64 c) {
  require_odd(c, "short_sum_relation_check");
  if (l < 1) throw std::domain_error("short_sum_relation_check: l must be positive");
  Complex lhs = quad_root_sum(m, l, c);
  KahanComplex rhs;
  for (i64 d : divisors_of(std::gcd(l, c))) {
    i64 cd = c / d;
    Complex k2 = salie_eval(m, (l / d) * (l / d), cd, SumMode::Auto);
    Complex e = epsilon_factor(cd).conj().value();
    rhs.add(std::sqrt(static_cast<double>(d) / static_cast<double>(c)) * e * k2);
  }
  RelationCheck out{lhs, rhs.value(), 0.0};
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

i64 ramanujan(i64 q, i64 n) {
  if (q < 1) throw std::domain_error("ramanujan: q must be positive");
  i64 g = n == 0 ? q : std::gcd(q, std::abs(n));
  i64 s = 0;
  for (i64 d : divisors_of(g)) s += moebius(q / d) * d;
  return s;
}

Rational t_kernel(i64 m, i64 n, i64 c, KernelMode mode) {
  if (c < 1 || m < 1 || n < 1)
    throw std::domain_error("t_kernel: arguments must be positive");
  if (mode == KernelMode::Brute) {
    Rational total(0);
    for (i64 u : divisors_of(c)) {
      i64 cm = ramanujan(u, m);
      i64 cn = ramanujan(u, n);
      if (cm != 0 && cn != 0) total += Rational(cm, 1) * Rational(cn, euler_phi(u));
    }
    return total;
  }
  i64 gm = std::gcd(m, c);
  i64 gn = std::gcd(n, c);
  if (gm != gn) return Rational(0);
  Rational r(gm);
  for (auto [p, e] : factorize(c / gm)) {
    (void)e;
    r *= Rational(p, p - 1);
  }
  return r;
}

Complex geometric_salie(i64 m, i64 n, i64 c, i64 D, i64 f,
                        const DirichletCharacter& chi) {
  require_odd(D, "geometric_salie");
  if (c < 1) throw std::domain_error("geometric_salie: c must be positive");
  if (c % 2 == 0 || c % D != 0) return {0.0, 0.0};
  Complex phase = epsilon_factor(D).conj().value() *
                  epsilon_factor(c).conj().value();
  Complex chi_c = chi.eval(c);
  Complex chi_d = std::conj(chi.eval(D));
  double jac = static_cast<double>(jacobi_symbol(f, D));
  return phase * chi_c * chi_d * jac * salie_eval(m, n, c, SumMode::Auto);
}

}  // namespace salie
