#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "salie/characters.hpp"
#include "salie/expsums.hpp"
#include "salie/moments.hpp"
#include "salie/theta.hpp"

namespace py = pybind11;
using namespace salie;

namespace {

SumMode mode_of(const std::string& s) {
  if (s == "auto") return SumMode::Auto;
  if (s == "fast") return SumMode::Fast;
  if (s == "direct") return SumMode::Direct;
  throw std::domain_error("unknown mode '" + s + "'");
}

MomentSpec spec_of(i64 D, i64 f, const std::string& chi, i64 m, i64 n) {
  return {D, f, parse_character(chi), m, n};
}

py::dict series_dict(const MomentSeries& s) {
  py::list cps;
  for (const auto& cp : s.checkpoints)
    cps.append(py::make_tuple(cp.x, cp.partial_sum));
  py::dict d;
  d["x_max"] = s.x_max;
  d["complete"] = s.complete;
  d["partial_sum"] = s.partial_sum;
  d["average"] = s.average;
  d["checkpoints"] = cps;
  d["evaluated_terms"] = s.evaluated_terms;
  d["skipped_terms"] = s.skipped_terms;
  d["worst_imag_residual"] = s.worst_imag_residual;
  d["worst_bound_ratio"] = s.worst_bound_ratio;
  d["wall_seconds"] = s.wall_seconds;
  return d;
}

SeriesOptions options_of(int workers, i64 chunk_size, const std::string& mode) {
  SeriesOptions o;
  o.workers = workers;
  o.chunk_size = chunk_size;
  o.mode = mode_of(mode);
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Salie sums, theta bases and first-moment averages";

  mod.def(
      "salie",
      [](i64 m, i64 n, i64 c, const std::string& mode) {
        return salie_eval(m, n, c, mode_of(mode));
      },
      py::arg("m"), py::arg("n"), py::arg("c"), py::arg("mode") = "auto",
      "K2(m,n;c), the quadratically twisted Kloosterman sum; c must be odd");
  mod.def("kloosterman", &kloosterman, py::arg("m"), py::arg("n"), py::arg("c"));
  mod.def("gauss", &gauss_quadratic, py::arg("c"), "quadratic Gauss sum, odd c");
  mod.def("root_sum", &quad_root_sum, py::arg("m"), py::arg("l"), py::arg("c"),
          "sum of e(2xl/c) over the square roots of m mod c");
  mod.def("ramanujan", &ramanujan, py::arg("q"), py::arg("n"));
  mod.def(
      "t_kernel",
      [](i64 m, i64 n, i64 c) {
        Rational r = t_kernel(m, n, c);
        auto frac = py::module_::import("fractions").attr("Fraction");
        return frac(r.num(), r.den());
      },
      py::arg("m"), py::arg("n"), py::arg("c"),
      "exact divisor kernel T(m,n;c) as a Fraction");

  py::class_<ThetaBasisElement>(mod, "BasisElement")
      .def(py::init<i64, i64, i64>(), py::arg("t"), py::arg("s"), py::arg("q"))
      .def_readonly("t", &ThetaBasisElement::t)
      .def_readonly("s", &ThetaBasisElement::s)
      .def_readonly("q", &ThetaBasisElement::q)
      .def("__eq__",
           [](const ThetaBasisElement& a, const ThetaBasisElement& b) {
             return a == b;
           })
      .def("__repr__", [](const ThetaBasisElement& e) {
        return "BasisElement(t=" + std::to_string(e.t) +
               ", s=" + std::to_string(e.s) + ", q=" + std::to_string(e.q) + ")";
      });

  mod.def("basis", &enumerate_basis, py::arg("D"), py::arg("f") = 1,
          "theta basis labels (t, s, q) for the level pair (D, f)");
  mod.def("norm_squared", &theta_norm_squared, py::arg("D"), py::arg("f"),
          py::arg("element"));
  mod.def("normalization", &normalization, py::arg("D"), py::arg("f"),
          py::arg("element"));
  mod.def("coeff_tau", &fourier_coeff_tau, py::arg("D"), py::arg("f"),
          py::arg("element"), py::arg("n"));
  mod.def("coeff_sigma", &fourier_coeff_sigma, py::arg("D"), py::arg("f"),
          py::arg("element"), py::arg("m"));
  mod.def(
      "spectral_sum",
      [](i64 D, i64 f, i64 m, i64 n) {
        auto r = spectral_sum(D, f, m, n);
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["gross"] = r.gross;
        return d;
      },
      py::arg("D"), py::arg("f"), py::arg("m"), py::arg("n"));
  mod.def(
      "zeta_constant",
      [](i64 D, i64 f, i64 m, i64 n) { return zeta_constant({D, f}, m, n); },
      py::arg("D"), py::arg("f"), py::arg("m"), py::arg("n"));

  mod.def(
      "decompose",
      [](i64 D, i64 f, const std::string& chi, i64 m, i64 n) -> py::object {
        auto d = decompose(spec_of(D, f, chi, m, n));
        if (!d) return py::none();
        py::dict out;
        out["t"] = d->t;
        out["s"] = d->s;
        out["m_prime"] = d->m_prime;
        out["n_prime"] = d->n_prime;
        out["D_t"] = d->D_t;
        out["D_0"] = d->D_0;
        out["D_1"] = d->D_1;
        return out;
      },
      py::arg("D"), py::arg("f"), py::arg("char"), py::arg("m"), py::arg("n"));
  mod.def(
      "constant",
      [](i64 D, i64 f, const std::string& chi, i64 m, i64 n) {
        return constant_C(spec_of(D, f, chi, m, n));
      },
      py::arg("D"), py::arg("f"), py::arg("char"), py::arg("m"), py::arg("n"),
      "closed form of the moment limit; 0 when the indices do not decompose");
  mod.def("corollary_constant", &constant_C_corollary, py::arg("m"), py::arg("l"));

  mod.def(
      "moment_series",
      [](i64 D, i64 f, const std::string& chi, i64 m, i64 n, i64 x_max,
         std::optional<std::vector<i64>> checkpoints, int workers, i64 chunk_size,
         const std::string& mode) {
        auto cps = checkpoints ? *checkpoints : linear_checkpoints(x_max);
        MomentSeries s;
        {
          py::gil_scoped_release release;
          s = partial_sum_series(spec_of(D, f, chi, m, n), x_max, cps,
                                 options_of(workers, chunk_size, mode));
        }
        return series_dict(s);
      },
      py::arg("D"), py::arg("f"), py::arg("char"), py::arg("m"), py::arg("n"),
      py::arg("x_max"), py::arg("checkpoints") = py::none(), py::arg("workers") = 1,
      py::arg("chunk_size") = 4096, py::arg("mode") = "auto");
  mod.def(
      "corollary_series",
      [](i64 m, i64 l, i64 x_max, std::optional<std::vector<i64>> checkpoints,
         int workers, i64 chunk_size) {
        auto cps = checkpoints ? *checkpoints : linear_checkpoints(x_max);
        MomentSeries s;
        {
          py::gil_scoped_release release;
          s = corollary_series(m, l, x_max, cps,
                               options_of(workers, chunk_size, "auto"));
        }
        return series_dict(s);
      },
      py::arg("m"), py::arg("l"), py::arg("x_max"),
      py::arg("checkpoints") = py::none(), py::arg("workers") = 1,
      py::arg("chunk_size") = 4096);

  mod.def("linear_checkpoints", &linear_checkpoints, py::arg("x_max"),
          py::arg("count") = 25);
  mod.def("presets", [] {
    py::list out;
    for (const auto& p : experiment_presets()) {
      py::dict d;
      d["id"] = p.id;
      d["m"] = p.m;
      d["n"] = p.n;
      d["D"] = p.D;
      d["f"] = p.f;
      d["char"] = p.char_spec;
      d["x_max"] = p.x_max;
      d["target"] = p.target;
      d["target_label"] = p.target_label;
      out.append(d);
    }
    return out;
  });
}
