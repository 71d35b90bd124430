#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "salie/characters.hpp"
#include "salie/expsums.hpp"
#include "salie/format.hpp"
#include "salie/moments.hpp"
#include "salie/theta.hpp"
#include "salie/verify.hpp"

namespace {

using salie::i64;

salie::SumMode parse_sum_mode(const std::string& s) {
  if (s == "auto") return salie::SumMode::Auto;
  if (s == "fast") return salie::SumMode::Fast;
  if (s == "direct") return salie::SumMode::Direct;
  throw std::domain_error("unknown mode '" + s + "' (want auto, fast or direct)");
}

void write_csv(const std::string& path, const salie::MomentSeries& series,
               std::optional<double> target) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << salie::csv_header() << '\n';
  for (const auto& cp : series.checkpoints) {
    const std::complex<double> avg = cp.partial_sum / static_cast<double>(cp.x);
    out << salie::csv_row(cp.x, avg, target) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("short write on " + path);
}

nlohmann::json series_json(const salie::MomentSeries& series,
                           std::optional<double> target,
                           std::optional<double> slope,
                           const nlohmann::json& params) {
  nlohmann::json cps = nlohmann::json::array();
  for (const auto& cp : series.checkpoints) {
    const std::complex<double> avg = cp.partial_sum / static_cast<double>(cp.x);
    cps.push_back({{"X", cp.x}, {"C_re", avg.real()}, {"C_im", avg.imag()}});
  }
  nlohmann::json j = {
      {"x_max", series.x_max},
      {"complete", series.complete},
      {"C_re", series.average.real()},
      {"C_im", series.average.imag()},
      {"evaluated_terms", series.evaluated_terms},
      {"skipped_terms", series.skipped_terms},
      {"worst_imag_residual", series.worst_imag_residual},
      {"worst_bound_ratio", series.worst_bound_ratio},
      {"wall_seconds", series.wall_seconds},
      {"checkpoints", cps},
      {"params", params},
  };
  j["target"] = nullptr;
  j["abs_error"] = nullptr;
  j["slope"] = nullptr;
  if (target) {
    j["target"] = *target;
    j["abs_error"] = std::abs(series.average - *target);
  }
  if (slope) j["slope"] = *slope;
  return j;
}

void print_series_summary(const salie::MomentSeries& series,
                          std::optional<double> target, const std::string& label,
                          std::optional<double> slope) {
  std::cout << "X = " << series.x_max << '\n';
  std::cout << "C = " << salie::fmt_value(series.average) << '\n';
  if (target) {
    std::cout << "target = " << salie::fmt_g12(*target);
    if (!label.empty()) std::cout << "  (" << label << ")";
    std::cout << '\n';
    std::cout << "abs_error = " << salie::fmt_g12(std::abs(series.average - *target))
              << '\n';
  }
  if (slope) std::cout << "error_slope = " << salie::fmt_g12(*slope) << '\n';
  std::cout << "evaluated = " << series.evaluated_terms << '\n';
  std::cout << "skipped = " << series.skipped_terms << '\n';
  std::cout << "worst_imag_residual = " << salie::fmt_g12(series.worst_imag_residual)
            << '\n';
  std::cout << "worst_bound_ratio = " << salie::fmt_g12(series.worst_bound_ratio)
            << '\n';
  std::cout << "wall_seconds = " << salie::fmt_g12(series.wall_seconds) << '\n';
  if (!series.complete) std::cout << "note: run capped before completion\n";
}

int run_verify(const std::string& suite) {
  std::vector<salie::CheckResult> results;
  if (suite == "sums")
    results = salie::verify_sums();
  else if (suite == "basis")
    results = salie::verify_basis();
  else if (suite == "spectral")
    results = salie::verify_spectral();
  else if (suite == "moments")
    results = salie::verify_moments();
  else
    results = salie::verify_all();

  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << "  [" << r.detail << "]\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Salie sums, half-integral theta bases and first-moment averages"};
  app.require_subcommand(1);
  int exit_code = 0;

  i64 m = 1, n = 1, c = 1, q = 1, l = 1;
  std::string mode = "auto";
  std::string kernel_mode = "closed";

  auto* eval = app.add_subcommand("eval", "evaluate one sum or kernel");
  eval->require_subcommand(1);

  auto* ev_salie = eval->add_subcommand("salie", "twisted Kloosterman sum K2(m,n;c)");
  ev_salie->add_option("-m,--m", m)->required();
  ev_salie->add_option("-n,--n", n)->required();
  ev_salie->add_option("-c,--c", c)->required();
  ev_salie->add_option("--mode", mode, "auto|fast|direct");
  ev_salie->callback([&] {
    std::cout << salie::fmt_value(salie::salie_eval(m, n, c, parse_sum_mode(mode)))
              << '\n';
  });

  auto* ev_kloos = eval->add_subcommand("kloosterman", "classical S(m,n;c)");
  ev_kloos->add_option("-m,--m", m)->required();
  ev_kloos->add_option("-n,--n", n)->required();
  ev_kloos->add_option("-c,--c", c)->required();
  ev_kloos->callback(
      [&] { std::cout << salie::fmt_value(salie::kloosterman(m, n, c)) << '\n'; });

  auto* ev_gauss = eval->add_subcommand("gauss", "quadratic Gauss sum g(c)");
  ev_gauss->add_option("-c,--c", c)->required();
  ev_gauss->callback(
      [&] { std::cout << salie::fmt_value(salie::gauss_quadratic(c)) << '\n'; });

  auto* ev_root = eval->add_subcommand("rootsum", "sum of e(2xl/c) over x^2 = m (c)");
  ev_root->add_option("-m,--m", m)->required();
  ev_root->add_option("-l,--l", l)->required();
  ev_root->add_option("-c,--c", c)->required();
  ev_root->callback(
      [&] { std::cout << salie::fmt_value(salie::quad_root_sum(m, l, c)) << '\n'; });

  auto* ev_ram = eval->add_subcommand("ramanujan", "Ramanujan sum c_q(n)");
  ev_ram->add_option("-q,--q", q)->required();
  ev_ram->add_option("-n,--n", n)->required();
  ev_ram->callback([&] { std::cout << salie::ramanujan(q, n) << '\n'; });

  auto* ev_tk = eval->add_subcommand("tkernel", "multiplicative kernel T(m,n;c)");
  ev_tk->add_option("-m,--m", m)->required();
  ev_tk->add_option("-n,--n", n)->required();
  ev_tk->add_option("-c,--c", c)->required();
  ev_tk->add_option("--mode", kernel_mode, "brute|closed");
  ev_tk->callback([&] {
    salie::KernelMode km;
    if (kernel_mode == "brute")
      km = salie::KernelMode::Brute;
    else if (kernel_mode == "closed")
      km = salie::KernelMode::Closed;
    else
      throw std::domain_error("unknown mode '" + kernel_mode + "' (want brute or closed)");
    std::cout << salie::t_kernel(m, n, c, km).str() << '\n';
  });

  i64 D = 1, f = 1, x_max = 0;
  std::string char_spec = "trivial";
  int checkpoints = 25;
  int workers = 1;
  i64 chunk_size = 4096;
  std::string output, resume;
  bool as_json = false;
  int example = 0;

  auto* moment = app.add_subcommand("moment", "average the twisted sums over c = 0 (D)");
  moment->require_subcommand(1);

  auto* mom_run = moment->add_subcommand("run", "accumulate C(X) with checkpoints");
  auto* opt_example =
      mom_run->add_option("--example", example, "preset experiment, 1-6")
          ->check(CLI::Range(1, 6));
  auto* opt_D = mom_run->add_option("--D", D, "progression modulus, odd");
  auto* opt_f = mom_run->add_option("--f", f, "index divisor, odd");
  auto* opt_char = mom_run->add_option("--char", char_spec,
                                       "trivial | kronecker:<d> | product:<d1>,<d2>");
  auto* opt_m = mom_run->add_option("--m", m);
  auto* opt_n = mom_run->add_option("--n", n);
  auto* opt_x = mom_run->add_option("--xmax", x_max, "upper limit X");
  mom_run->add_option("--checkpoints", checkpoints, "number of linear checkpoints");
  mom_run->add_option("--mode", mode, "auto|fast|direct");
  mom_run->add_option("--workers", workers);
  mom_run->add_option("--chunk-size", chunk_size);
  mom_run->add_option("--output", output, "write checkpoint CSV here");
  mom_run->add_option("--resume", resume, "persist/restore state at this path");
  mom_run->add_flag("--json", as_json, "print a JSON report instead of the summary");
  for (auto* o : {opt_D, opt_f, opt_char, opt_m, opt_n}) opt_example->excludes(o);
  mom_run->callback([&] {
    salie::MomentSpec spec;
    std::optional<double> target;
    std::string label;
    if (example > 0) {
      const auto& preset = salie::experiment_presets().at(example - 1);
      spec = preset.spec();
      if (opt_x->count() == 0) x_max = preset.x_max;
      target = preset.target;
      label = preset.target_label;
    } else {
      if (opt_x->count() == 0)
        throw std::domain_error("moment run needs --xmax (or --example)");
      spec = {D, f, salie::parse_character(char_spec), m, n};
      try {
        if (salie::decompose(spec)) target = salie::constant_C(spec);
      } catch (const std::domain_error&) {
        // leave the target unknown; the series itself still runs
      }
    }
    salie::SeriesOptions opt;
    opt.workers = workers;
    opt.chunk_size = chunk_size;
    opt.resume_path = resume;
    opt.mode = parse_sum_mode(mode);
    const auto cps = salie::linear_checkpoints(x_max, checkpoints);
    const auto series = salie::partial_sum_series(spec, x_max, cps, opt);
    std::optional<double> slope;
    if (target) slope = salie::error_exponent_fit(series.checkpoints, *target, 1e4);
    if (!output.empty()) write_csv(output, series, target);
    if (as_json) {
      nlohmann::json params = {
          {"D", spec.D},           {"f", spec.f}, {"char", spec.chi.spec_string()},
          {"m", spec.m},           {"n", spec.n}, {"mode", mode},
          {"chunk_size", chunk_size},
      };
      std::cout << series_json(series, target, slope, params).dump(2) << '\n';
    } else {
      print_series_summary(series, target, label, slope);
    }
  });

  auto* mom_cor = moment->add_subcommand("corollary", "average the short sums S(m,l;c)");
  mom_cor->add_option("-m,--m", m)->required();
  mom_cor->add_option("-l,--l", l)->required();
  auto* cor_x = mom_cor->add_option("--xmax", x_max)->required();
  mom_cor->add_option("--checkpoints", checkpoints);
  mom_cor->add_option("--workers", workers);
  mom_cor->add_option("--chunk-size", chunk_size);
  mom_cor->add_option("--output", output);
  mom_cor->add_option("--resume", resume);
  mom_cor->add_flag("--json", as_json);
  mom_cor->callback([&] {
    (void)cor_x;
    salie::SeriesOptions opt;
    opt.workers = workers;
    opt.chunk_size = chunk_size;
    opt.resume_path = resume;
    const double target = salie::constant_C_corollary(m, l);
    const auto cps = salie::linear_checkpoints(x_max, checkpoints);
    const auto series = salie::corollary_series(m, l, x_max, cps, opt);
    const auto slope = salie::error_exponent_fit(series.checkpoints, target, 1e4);
    if (!output.empty()) write_csv(output, series, target);
    if (as_json) {
      nlohmann::json params = {
          {"m", m}, {"l", l}, {"chunk_size", chunk_size}, {"kind", "corollary"}};
      std::cout << series_json(series, target, slope, params).dump(2) << '\n';
    } else {
      print_series_summary(series, target, "(8/pi^2) sigma(l)/l", slope);
    }
  });

  auto* basis = app.add_subcommand("basis", "inspect the theta basis");
  auto* basis_list = basis->add_subcommand("list", "elements for the pair (D, f)");
  basis_list->add_option("--D", D)->required();
  basis_list->add_option("--f", f);
  basis_list->add_flag("--json", as_json);
  basis_list->callback([&] {
    const auto elems = salie::enumerate_basis(D, f);
    if (as_json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : elems)
        arr.push_back({{"t", e.t},
                       {"s", e.s},
                       {"q", e.q},
                       {"norm_squared", salie::theta_norm_squared(D, f, e)},
                       {"normalization", salie::normalization(D, f, e)}});
      std::cout << arr.dump(2) << '\n';
    } else {
      for (const auto& e : elems)
        std::cout << e.t << ' ' << e.s << ' ' << e.q << ' '
                  << salie::fmt_g12(salie::theta_norm_squared(D, f, e)) << ' '
                  << salie::fmt_g12(salie::normalization(D, f, e)) << '\n';
    }
  });

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("suite", suite, "sums|basis|spectral|moments|all")
      ->check(CLI::IsMember({"sums", "basis", "spectral", "moments", "all"}));
  verify->callback([&] { exit_code = run_verify(suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const salie::ResumeMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
