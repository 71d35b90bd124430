#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "salie/arith.hpp"
#include "salie/characters.hpp"
#include "salie/expsums.hpp"

namespace salie {

// Moment average over the arithmetic progression c = 0 (mod D), c odd:
//   C(X) = (1/X) * sum over 0 < c <= X of K2(m,n;c)/sqrt(c) conj(eps_c) chi(c).
struct MomentSpec {
  i64 D = 1;
  i64 f = 1;
  DirichletCharacter chi = DirichletCharacter::trivial();
  i64 m = 1;
  i64 n = 1;
};

// Shared square decomposition of the index pair: m/f = t s^2 m'^2 and
// n/f = t s^2 n'^2 with one (t, s), plus the induced split of D away from t.
// D_t carries the primes of t, D' = D/D_t = D_0 D_1^2 with D_0 squarefree.
struct SalieDecomposition {
  i64 t = 1;
  i64 s = 1;
  i64 m_prime = 1;
  i64 n_prime = 1;
  i64 D_t = 1;
  i64 D_0 = 1;
  i64 D_1 = 1;
};

// Empty unless every admissibility condition holds: chi is the real character
// attached to f, f | m and f | n, the two square splits share (t, s),
// t = 1 (mod 4) with gcd(t, f) = 1, t^3 s^2 | D, and m', n' meet D_1 in the
// same gcd.  Throws std::domain_error for malformed (D, f).
std::optional<SalieDecomposition> decompose(const MomentSpec& spec);

// Closed form of the limit of C(X); zero when no decomposition exists.
double constant_C(const MomentSpec& spec);

// Limit of (1/X) * sum over odd c <= X of S(m,l;c): zero unless m is a
// perfect square, in which case (8/pi^2) sigma(l)/l.  l >= 1.
double constant_C_corollary(i64 m, i64 l);

struct Checkpoint {
  i64 x = 0;
  Complex partial_sum;  // raw sum over c <= x, before dividing by x
};

struct MomentSeries {
  i64 x_max = 0;
  bool complete = true;  // false only for a capped incremental run
  Complex partial_sum;
  Complex average;  // partial_sum / x_max
  std::vector<Checkpoint> checkpoints;
  i64 evaluated_terms = 0;
  i64 skipped_terms = 0;        // chi(c) = 0, summand never evaluated
  double worst_imag_residual = 0.0;  // max |Im(K2 conj(eps_c))| / sqrt(c)
  double worst_bound_ratio = 0.0;    // max |K2| / (2^omega(c) sqrt(c))
  double wall_seconds = 0.0;
};

// Raised when a resume file does not match the requested run.
class ResumeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeriesOptions {
  int workers = 1;
  i64 chunk_size = 4096;     // terms per work unit; fixes the merge order
  std::string resume_path;   // empty: stateless run
  SumMode mode = SumMode::Auto;
  i64 max_chunks = 0;        // > 0: merge at most this many chunks, then stop;
                             // pair with resume_path to run incrementally
};

// Accumulates the series for spec up to x_max, recording the raw partial sum
// at each requested checkpoint.  The checkpoint list is sorted and deduped;
// every entry must lie in [1, x_max].
//
// Work is cut into fixed-size chunks (split further at checkpoint borders)
// and merged in index order, so the result is bit-identical for any worker
// count at a fixed chunk size.  With a resume path the engine persists state
// after every merged chunk and continues from a matching file; a file written
// for different parameters raises ResumeMismatchError.
MomentSeries partial_sum_series(const MomentSpec& spec, i64 x_max,
                                const std::vector<i64>& checkpoint_xs,
                                const SeriesOptions& options = {});

// Same engine for the short-sum average (1/X) sum over odd c <= X of S(m,l;c).
MomentSeries corollary_series(i64 m, i64 l, i64 x_max,
                              const std::vector<i64>& checkpoint_xs,
                              const SeriesOptions& options = {});

// floor(k * x_max / count) for k = 1..count, deduped.
std::vector<i64> linear_checkpoints(i64 x_max, int count = 25);

// Least-squares slope of log |S(X) - target*X| against log X over the
// checkpoints with x >= x_min.  Empty when fewer than five usable points
// remain (zero residuals are dropped) or the abscissas are degenerate.
std::optional<double> error_exponent_fit(const std::vector<Checkpoint>& checkpoints,
                                         Complex target, double x_min = 0.0);

// The six convergence experiments shipped with the CLI.
struct ExperimentPreset {
  int id = 0;
  i64 m = 1;
  i64 n = 1;
  i64 D = 1;
  i64 f = 1;
  std::string char_spec;
  i64 x_max = 0;
  double target = 0.0;        // exact limit of C(X)
  std::string target_label;   // human-readable form of the limit
  MomentSpec spec() const;
};

const std::vector<ExperimentPreset>& experiment_presets();

}  // namespace salie
