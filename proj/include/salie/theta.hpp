#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "salie/arith.hpp"
#include "salie/characters.hpp"

namespace salie {

using Complex = std::complex<double>;

// One unary theta series in the weight-3/2 basis attached to the pair (D, f).
// The triple (t, s, q) determines everything else: the series lives at level
// D*f, its twisting discriminant is d = t*f, and d has squarefree part t.
struct ThetaBasisElement {
  i64 t = 1;  // squarefree, t == 1 (mod 4), coprime to f
  i64 s = 1;  // supported on primes dividing t
  i64 q = 1;  // coprime to t, with t^3 s^2 q^2 | D

  i64 d(i64 f) const { return t * f; }

  bool operator==(const ThetaBasisElement& other) const {
    return t == other.t && s == other.s && q == other.q;
  }
  bool operator<(const ThetaBasisElement& other) const {
    if (t != other.t) return t < other.t;
    if (s != other.s) return s < other.s;
    return q < other.q;
  }
};

// All admissible (t, s, q) triples for level D*f, sorted by (t, s, q).
// D and f must be odd, positive and coprime; the list is empty unless f is
// squarefree and f == 1 (mod 4), since no twisting discriminant exists
// otherwise.
std::vector<ThetaBasisElement> enumerate_basis(i64 D, i64 f);

// Petersson norm squared of the (unnormalized) basis element.
double theta_norm_squared(i64 D, i64 f, const ThetaBasisElement& elem);

// Scaling constant making the element unit-norm: normalization^2 * norm^2 == 1.
double normalization(i64 D, i64 f, const ThetaBasisElement& elem);

// n-th Fourier coefficient of the unit-normalized theta series.  Nonzero only
// when n = t*f*s^2*n'^2 with n' coprime to t; requires n >= 1.
double fourier_coeff_tau(i64 D, i64 f, const ThetaBasisElement& elem, i64 n);

// m-th Fourier coefficient of the unit-normalized companion series on the
// other side of the pairing.  Nonzero only when m = t*s^2*m''^2; requires
// m >= 1.  Callers pairing against tau coefficients are expected to pass the
// rescaled index 4*f*m.
Complex fourier_coeff_sigma(i64 D, i64 f, const ThetaBasisElement& elem, i64 m);

struct SpectralSumResult {
  Complex lhs;   // literal sum over the basis
  Complex rhs;   // closed form
  double gross = 0.0;  // sum of term magnitudes in lhs, for cancellation floors
};

// Both sides of the coefficient-pairing identity
//   sum over the basis of conj(sigma coeff at 4*f*m) * (tau coeff at n).
// m, n >= 1.
SpectralSumResult spectral_sum(i64 D, i64 f, i64 m, i64 n);

// Everything needed to turn a coefficient pairing into a moment constant.
struct ZetaContext {
  i64 D = 1;
  i64 f = 1;
};

// The constant produced by the full coefficient pairing with its arithmetic
// prefactors: (2(1+i)/pi) * 4f * sum over the basis.  Zero for m <= 0 or
// n <= 0 (only positive indices carry a coefficient).
Complex zeta_constant(const ZetaContext& ctx, i64 m, i64 n);

struct GramCheckResult {
  bool pass = false;
  i64 first_bad_u = 0;  // 0 when pass
  i64 first_bad_v = 0;
};

// Exact integer check that the gcd Gram matrix M[u][v] = gcd(u, v), indexed by
// divisors u, v of U, diagonalizes to diag(phi(u)) under the Moebius basis
// change A[u][j] = mu(u/j) for j | u.
GramCheckResult gram_orthogonality_check(i64 U);

}  // namespace salie
