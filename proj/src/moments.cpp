#include "salie/moments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "json.hpp"
#include "salie/kahan.hpp"

namespace salie {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int jacobi_of_product(i64 a, i64 b, i64 c, i64 t) {
  if (t == 1) return 1;
  i64 x = mul_mod(mul_mod(a % t, b % t, t), c % t, t);
  return jacobi_symbol(x, t);
}

}  // namespace

std::optional<SalieDecomposition> decompose(const MomentSpec& spec) {
  if (spec.D < 1 || spec.D % 2 == 0)
    throw std::domain_error("decompose: D must be odd and positive");
  if (spec.f < 1 || spec.f % 2 == 0)
    throw std::domain_error("decompose: f must be odd and positive");
  if (std::gcd(spec.D, spec.f) != 1)
    throw std::domain_error("decompose: D and f must be coprime");

  if (spec.m < 1 || spec.n < 1) return std::nullopt;
  if (spec.f % 4 != 1 || !is_squarefree(spec.f)) return std::nullopt;
  if (!represents_kronecker(spec.chi, spec.f)) return std::nullopt;
  if (spec.m % spec.f != 0 || spec.n % spec.f != 0) return std::nullopt;

  SquareSplit am = square_split(spec.m / spec.f);
  SquareSplit an = square_split(spec.n / spec.f);
  if (am.t != an.t || am.s != an.s) return std::nullopt;
  const i64 t = am.t, s = am.s;
  if (t % 4 != 1) return std::nullopt;
  if (std::gcd(t, spec.f) != 1) return std::nullopt;

  i64 rest = spec.D;
  for (int k = 0; k < 3; ++k) {
    if (rest % t != 0) return std::nullopt;
    rest /= t;
  }
  if (rest % (s * s) != 0) return std::nullopt;

  i64 D_t = 1, D_prime = spec.D;
  for (;;) {
    i64 g = std::gcd(D_prime, t);
    if (g == 1) break;
    while (D_prime % g == 0) {
      D_prime /= g;
      D_t *= g;
    }
  }
  i64 D_1 = 1;
  for (const auto& pp : factorize(D_prime))
    for (int k = 0; k < pp.e / 2; ++k) D_1 *= pp.p;
  i64 D_0 = D_prime / (D_1 * D_1);

  if (std::gcd(am.r, D_1) != std::gcd(an.r, D_1)) return std::nullopt;
  return SalieDecomposition{t, s, am.r, an.r, D_t, D_0, D_1};
}

double constant_C(const MomentSpec& spec) {
  auto dec = decompose(spec);
  if (!dec) return 0.0;
  const i64 g = std::gcd(dec->m_prime, dec->D_1);
  double val = 8.0 / (kPi * kPi);
  val *= static_cast<double>(dec->s) * std::sqrt(static_cast<double>(dec->t)) /
         static_cast<double>(spec.D);
  val *= jacobi_of_product(spec.f, dec->m_prime, dec->n_prime, dec->t);
  val *= static_cast<double>(g);
  val /= prod_one_plus_inv_p(spec.D * spec.f);
  val /= prod_one_minus_inv_p(dec->t);
  val /= prod_one_minus_inv_p(dec->D_1 / g);
  return val;
}

double constant_C_corollary(i64 m, i64 l) {
  if (l < 1) throw std::domain_error("constant_C_corollary: l must be positive");
  if (m < 1 || !exact_sqrt(m)) return 0.0;
  return 8.0 / (kPi * kPi) * static_cast<double>(arith_functions(l).sigma) /
         static_cast<double>(l);
}

// ---------------------------------------------------------------------------
// series engine

namespace {

struct TermOut {
  Complex value;
  double imag_residual = 0.0;
  double bound_ratio = 0.0;
  bool skipped = false;
};

struct ChunkResult {
  Complex sum;
  Complex comp;  // outstanding Kahan correction, to be subtracted on merge
  i64 evaluated = 0;
  i64 skipped = 0;
  double worst_imag = 0.0;
  double worst_ratio = 0.0;
  bool ready = false;
};

using TermFn = std::function<TermOut(i64)>;

std::string mode_name(SumMode mode) {
  switch (mode) {
    case SumMode::Fast:
      return "fast";
    case SumMode::Direct:
      return "direct";
    default:
      return "auto";
  }
}

std::vector<i64> normalized_checkpoints(std::vector<i64> xs, i64 x_max) {
  for (i64 x : xs)
    if (x < 1 || x > x_max)
      throw std::domain_error("series: checkpoints must lie in [1, x_max]");
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

ChunkResult compute_chunk(i64 begin, i64 end, i64 first, i64 step,
                          const TermFn& term) {
  ChunkResult r;
  KahanComplex acc;
  for (i64 i = begin; i < end; ++i) {
    TermOut t = term(first + step * i);
    if (t.skipped) {
      ++r.skipped;
      continue;
    }
    acc.add(t.value);
    ++r.evaluated;
    r.worst_imag = std::max(r.worst_imag, t.imag_residual);
    r.worst_ratio = std::max(r.worst_ratio, t.bound_ratio);
  }
  r.sum = acc.value();
  r.comp = acc.compensation();
  return r;
}

void write_resume_file(const std::string& path, const nlohmann::json& identity,
                       i64 chunk_size, i64 first, i64 step, i64 merged_terms,
                       const KahanComplex& global,
                       const std::vector<Checkpoint>& recorded) {
  nlohmann::json cps = nlohmann::json::array();
  for (const auto& cp : recorded)
    cps.push_back({{"X", cp.x},
                   {"sum_re", cp.partial_sum.real()},
                   {"sum_im", cp.partial_sum.imag()}});
  nlohmann::json j = {
      {"spec", identity},
      {"chunk_size", chunk_size},
      {"last_c", merged_terms == 0 ? 0 : first + step * (merged_terms - 1)},
      {"sum_re", global.re.sum},
      {"sum_im", global.im.sum},
      {"comp_re", global.re.comp},
      {"comp_im", global.im.comp},
      {"checkpoints", cps},
  };
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write resume file " + tmp);
    out << j.dump(1) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("short write on resume file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// checkpoint_xs must already be sorted, deduped and range-checked.
MomentSeries run_engine(i64 first, i64 step, i64 x_max,
                        const std::vector<i64>& checkpoint_xs,
                        const SeriesOptions& options,
                        const nlohmann::json& identity, const TermFn& term) {
  const auto t_start = std::chrono::steady_clock::now();
  if (first < 1 || step < 1)
    throw std::domain_error("series: progression must have positive start and step");
  if (x_max < 1) throw std::domain_error("series: x_max must be positive");
  if (options.chunk_size < 1)
    throw std::domain_error("series: chunk size must be positive");

  // Terms are c = first, first + step, ... <= x_max, indexed from zero.
  const auto terms_up_to = [first, step](i64 x) {
    return x < first ? 0 : (x - first) / step + 1;
  };
  const i64 total_terms = terms_up_to(x_max);
  std::vector<i64> cp_index(checkpoint_xs.size());
  for (std::size_t i = 0; i < checkpoint_xs.size(); ++i)
    cp_index[i] = terms_up_to(checkpoint_xs[i]);

  std::set<i64> cuts{0, total_terms};
  for (i64 b = options.chunk_size; b < total_terms; b += options.chunk_size)
    cuts.insert(b);
  for (i64 ix : cp_index) cuts.insert(ix);
  const std::vector<i64> bounds(cuts.begin(), cuts.end());
  const std::size_t nchunks = bounds.size() - 1;

  MomentSeries out;
  out.x_max = x_max;
  KahanComplex global;
  std::size_t cp_ptr = 0;
  std::size_t merged_chunks = 0;
  i64 merged_terms = 0;

  const bool persist = !options.resume_path.empty();
  if (persist && std::filesystem::exists(options.resume_path)) {
    nlohmann::json j;
    {
      std::ifstream in(options.resume_path);
      if (!in)
        throw ResumeMismatchError("resume: cannot read " + options.resume_path);
      try {
        in >> j;
      } catch (const nlohmann::json::exception&) {
        throw ResumeMismatchError("resume: unparsable file " + options.resume_path);
      }
    }
    try {
      if (j.at("spec") != identity || j.at("chunk_size").get<i64>() != options.chunk_size)
        throw ResumeMismatchError("resume: stored parameters do not match this run");
      const i64 last_c = j.at("last_c").get<i64>();
      const i64 done = last_c <= 0 ? 0 : terms_up_to(last_c);
      const auto it = std::find(bounds.begin(), bounds.end(), done);
      if (it == bounds.end())
        throw ResumeMismatchError("resume: stored progress is not on a chunk boundary");
      merged_chunks = static_cast<std::size_t>(it - bounds.begin());
      merged_terms = done;
      global.re.sum = j.at("sum_re").get<double>();
      global.im.sum = j.at("sum_im").get<double>();
      global.re.comp = j.at("comp_re").get<double>();
      global.im.comp = j.at("comp_im").get<double>();
      for (const auto& cj : j.at("checkpoints")) {
        if (cp_ptr >= checkpoint_xs.size() ||
            cj.at("X").get<i64>() != checkpoint_xs[cp_ptr])
          throw ResumeMismatchError("resume: checkpoint records do not match");
        out.checkpoints.push_back(
            {checkpoint_xs[cp_ptr],
             Complex(cj.at("sum_re").get<double>(), cj.at("sum_im").get<double>())});
        ++cp_ptr;
      }
      std::size_t expected = 0;
      while (expected < cp_index.size() && cp_index[expected] <= merged_terms)
        ++expected;
      if (cp_ptr != expected)
        throw ResumeMismatchError("resume: checkpoint records do not match");
    } catch (const nlohmann::json::exception&) {
      throw ResumeMismatchError("resume: malformed file " + options.resume_path);
    }
  }

  auto record_pending = [&] {
    while (cp_ptr < checkpoint_xs.size() && cp_index[cp_ptr] <= merged_terms) {
      out.checkpoints.push_back({checkpoint_xs[cp_ptr], global.value()});
      ++cp_ptr;
    }
  };
  auto merge = [&](const ChunkResult& r, std::size_t chunk_idx) {
    global.add(r.sum);
    global.add(-r.comp);
    out.evaluated_terms += r.evaluated;
    out.skipped_terms += r.skipped;
    out.worst_imag_residual = std::max(out.worst_imag_residual, r.worst_imag);
    out.worst_bound_ratio = std::max(out.worst_bound_ratio, r.worst_ratio);
    merged_terms = bounds[chunk_idx + 1];
    ++merged_chunks;
    record_pending();
    if (persist)
      write_resume_file(options.resume_path, identity, options.chunk_size, first,
                        step, merged_terms, global, out.checkpoints);
  };

  record_pending();

  std::size_t stop_chunk = nchunks;
  if (options.max_chunks > 0)
    stop_chunk = std::min(nchunks, merged_chunks + static_cast<std::size_t>(options.max_chunks));

  if (options.workers <= 1) {
    for (std::size_t ci = merged_chunks; ci < stop_chunk; ci = merged_chunks)
      merge(compute_chunk(bounds[ci], bounds[ci + 1], first, step, term), ci);
  } else if (merged_chunks < stop_chunk) {
    std::vector<ChunkResult> slots(nchunks);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{merged_chunks};
    std::exception_ptr failure;

    auto worker = [&] {
      try {
        for (;;) {
          const std::size_t ci = next.fetch_add(1);
          if (ci >= stop_chunk) return;
          ChunkResult r = compute_chunk(bounds[ci], bounds[ci + 1], first, step, term);
          {
            std::lock_guard<std::mutex> lk(mu);
            slots[ci] = r;
            slots[ci].ready = true;
          }
          cv.notify_all();
        }
      } catch (...) {
        {
          std::lock_guard<std::mutex> lk(mu);
          if (!failure) failure = std::current_exception();
        }
        cv.notify_all();
      }
    };

    const std::size_t remaining = stop_chunk - merged_chunks;
    const std::size_t nworkers =
        std::min<std::size_t>(static_cast<std::size_t>(options.workers), remaining);
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t w = 0; w < nworkers; ++w) pool.emplace_back(worker);

    for (std::size_t ci = merged_chunks; ci < stop_chunk; ci = merged_chunks) {
      ChunkResult r;
      {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] { return slots[ci].ready || failure; });
        if (failure) break;
        r = slots[ci];
      }
      merge(r, ci);
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  out.complete = merged_chunks == nchunks;
  out.partial_sum = global.value();
  out.average = out.partial_sum / static_cast<double>(x_max);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return out;
}

}  // namespace

MomentSeries partial_sum_series(const MomentSpec& spec, i64 x_max,
                                const std::vector<i64>& checkpoint_xs,
                                const SeriesOptions& options) {
  if (spec.D < 1 || spec.D % 2 == 0)
    throw std::domain_error("series: D must be odd and positive");
  const std::vector<i64> cps = normalized_checkpoints(checkpoint_xs, x_max);

  nlohmann::json identity = {
      {"kind", "moment"},       {"D", spec.D},
      {"f", spec.f},            {"char", spec.chi.spec_string()},
      {"m", spec.m},            {"n", spec.n},
      {"x_max", x_max},         {"mode", mode_name(options.mode)},
      {"checkpoints", cps},
  };

  const MomentSpec local = spec;
  const SumMode mode = options.mode;
  TermFn term = [local, mode](i64 c) {
    TermOut t;
    const Complex chi_c = local.chi.eval(c);
    if (chi_c == Complex{}) {
      t.skipped = true;
      return t;
    }
    const Complex k2 = salie_eval(local.m, local.n, c, mode);
    const Complex raw = k2 * epsilon_factor(c).conj().value();
    const double rc = std::sqrt(static_cast<double>(c));
    t.value = raw * chi_c / rc;
    t.imag_residual = std::abs(raw.imag()) / rc;
    t.bound_ratio = std::abs(k2) / std::ldexp(rc, arith_functions(c).omega);
    return t;
  };
  return run_engine(spec.D, 2 * spec.D, x_max, cps, options, identity, term);
}

MomentSeries corollary_series(i64 m, i64 l, i64 x_max,
                              const std::vector<i64>& checkpoint_xs,
                              const SeriesOptions& options) {
  if (l < 1) throw std::domain_error("corollary_series: l must be positive");
  const std::vector<i64> cps = normalized_checkpoints(checkpoint_xs, x_max);

  nlohmann::json identity = {
      {"kind", "corollary"}, {"m", m},
      {"l", l},              {"x_max", x_max},
      {"mode", mode_name(options.mode)},
      {"checkpoints", cps},
  };
  TermFn term = [m, l](i64 c) {
    TermOut t;
    t.value = quad_root_sum(m, l, c);
    return t;
  };
  // Odd moduli only: the divisor relation that links these root sums to the
  // averaged exponential sums needs odd quotients, and the even-c root sums
  // settle at a different constant (l = 1 drifts from 8/pi^2 up to 18/pi^2).
  return run_engine(1, 2, x_max, cps, options, identity, term);
}

std::vector<i64> linear_checkpoints(i64 x_max, int count) {
  if (x_max < 1 || count < 1)
    throw std::domain_error("linear_checkpoints: positive x_max and count required");
  std::vector<i64> out;
  for (int k = 1; k <= count; ++k) {
    i64 x = static_cast<i64>((static_cast<__int128>(x_max) * k) / count);
    if (x >= 1 && (out.empty() || out.back() != x)) out.push_back(x);
  }
  return out;
}

std::optional<double> error_exponent_fit(const std::vector<Checkpoint>& checkpoints,
                                         Complex target, double x_min) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& cp : checkpoints) {
    const double x = static_cast<double>(cp.x);
    if (x < x_min) continue;
    const double r = std::abs(cp.partial_sum - target * x);
    if (!(r > 0.0)) continue;
    pts.emplace_back(std::log(x), std::log(r));
  }
  if (pts.size() < 5) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [px, py] : pts) {
    sx += px;
    sy += py;
    sxx += px * px;
    sxy += px * py;
  }
  const double n = static_cast<double>(pts.size());
  const double denom = n * sxx - sx * sx;
  if (denom < 1e-12) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

MomentSpec ExperimentPreset::spec() const {
  return {D, f, parse_character(char_spec), m, n};
}

const std::vector<ExperimentPreset>& experiment_presets() {
  static const double pi2 = kPi * kPi;
  static const std::vector<ExperimentPreset> table = {
      {1, 1, 1, 27, 1, "trivial", 270000, 1.0 / (3.0 * pi2), "1/(3 pi^2)"},
      {2, 1, 1, 45, 1, "trivial", 270000, 1.0 / (6.0 * pi2), "1/(6 pi^2)"},
      {3, 1, 1, 1, 1, "trivial", 150000, 8.0 / pi2, "8/pi^2"},
      {4, 5, 5, 3, 5, "kronecker:5", 150000, 5.0 / (3.0 * pi2), "5/(3 pi^2)"},
      {5, 5, 5, 7, 5, "kronecker:5", 350000, 5.0 / (6.0 * pi2), "5/(6 pi^2)"},
      {6, 5, 5, 125, 1, "trivial", 375000, std::sqrt(5.0) / (15.0 * pi2),
       "sqrt(5)/(15 pi^2)"},
  };
  return table;
}

}  // namespace salie
