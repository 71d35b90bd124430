#pragma once

#include <complex>
#include <cstdint>

#include "salie/arith.hpp"
#include "salie/characters.hpp"
#include "salie/rational.hpp"

namespace salie {

using Complex = std::complex<double>;

// Salie sum K2(m,n;c) = sum over x mod c, gcd(x,c)=1, of (x/c) e((mx+nx')/c)
// where x' is the inverse of x. Defined for odd c >= 1; K2(m,n;1) = 1.
//
// Direct evaluation is O(c). Reusing the evaluator amortizes the Jacobi and
// inverse tables across many (m,n) at the same modulus.
class SalieDirectEvaluator {
 public:
  explicit SalieDirectEvaluator(i64 c);  // throws std::domain_error: even c
  Complex eval(i64 m, i64 n) const;
  i64 modulus() const { return c_; }

 private:
  i64 c_;
  std::vector<std::int8_t> jac_;       // (x/c), 0 on non-units
  std::vector<std::uint32_t> inv_;     // x^{-1} mod c on units
};

Complex salie_direct(i64 m, i64 n, i64 c);

// Salie's closed-form evaluation, valid for odd c with gcd(mn, c) = 1:
//   K2(m,n;c) = (n/c) eps_c sqrt(c) sum over x^2 = mn (mod c) of e(2x/c).
// Throws std::domain_error outside that domain.
Complex salie_fast(i64 m, i64 n, i64 c);

enum class SumMode { Auto, Fast, Direct };

// Dispatcher: Auto takes the closed form when gcd(mn, c) = 1, the O(c)
// enumeration otherwise. Even c is a domain error in every mode.
Complex salie_eval(i64 m, i64 n, i64 c, SumMode mode = SumMode::Auto);

// Kloosterman sum S(m,n;c), any c >= 1 (no Jacobi twist).
Complex kloosterman(i64 m, i64 n, i64 c);

// Quadratic Gauss sum g(c) = sum over y mod c of e(y^2/c), odd c.
// Computed directly and checked against the closed form eps_c sqrt(c).
Complex gauss_quadratic(i64 c);
Complex gauss_closed(i64 c);  // eps_c sqrt(c)

// S(m,l;c) = sum over x^2 = m (mod c) of e(2xl/c). Any c >= 1.
Complex quad_root_sum(i64 m, i64 l, i64 c);

// Both sides of the divisor relation (odd c)
//   S(m,l;c) = sum over d | (l,c) of sqrt(d/c) conj(eps_{c/d})
//              K2(m, (l/d)^2; c/d).
struct RelationCheck {
  Complex lhs;
  Complex rhs;
  double residual;  // |lhs - rhs|
};
RelationCheck short_sum_relation_check(i64 m, i64 l, i64 c);

// Ramanujan sum c_q(n) = sum over d | (q,n) of mu(q/d) d.
i64 ramanujan(i64 q, i64 n);

// T(m,n;c) = sum over u | c of c_u(m) c_u(n) / phi(u), exact.
// Closed form: 0 unless (m,c) = (n,c); otherwise
//   (m,c) * prod over p | c/(m,c) of p/(p-1).
enum class KernelMode { Brute, Closed };
Rational t_kernel(i64 m, i64 n, i64 c, KernelMode mode = KernelMode::Closed);

// Kloosterman-type kernel attached to the two-cusp pair at level Df:
// 0 if c is even or c != 0 (mod D); otherwise
//   conj(eps_D) conj(eps_c) chi(c) conj(chi(D)) (f/D) K2(m,n;c).
Complex geometric_salie(i64 m, i64 n, i64 c, i64 D, i64 f,
                        const DirichletCharacter& chi);

}  // namespace salie
