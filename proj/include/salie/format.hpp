#pragma once

#include <complex>
#include <optional>
#include <string>

#include "salie/arith.hpp"

namespace salie {

std::string fmt_g12(double x);      // shortest %.12g form, for CSV cells
std::string fmt_fixed12(double x);  // fixed 12 decimals

// Scalar printing rule shared by the CLI evaluators: exact integers print
// bare, other reals print with 12 fixed decimals, and values with a nonzero
// imaginary part print as "re imi".
std::string fmt_value(std::complex<double> z);
std::string fmt_real(double x);

// Rows of the moment CSV: X,C_real,C_imag,target_C,abs_error.
// Without a known target the last two cells are left empty.
std::string csv_header();
std::string csv_row(i64 x, std::complex<double> average, std::optional<double> target);

}  // namespace salie
