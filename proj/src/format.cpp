#include "salie/format.hpp"

#include <cmath>
#include <cstdio>

namespace salie {

namespace {

bool integral(double x) {
  return std::isfinite(x) && std::abs(x) < 9.0e15 && x == std::nearbyint(x);
}

std::string printf_double(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

}  // namespace

std::string fmt_g12(double x) { return printf_double("%.12g", x); }

std::string fmt_fixed12(double x) { return printf_double("%.12f", x); }

std::string fmt_real(double x) {
  if (integral(x)) return std::to_string(static_cast<long long>(x));
  return fmt_fixed12(x);
}

std::string fmt_value(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt_real(z.real());
  return fmt_fixed12(z.real()) + " " + fmt_fixed12(z.imag()) + "i";
}

std::string csv_header() { return "X,C_real,C_imag,target_C,abs_error"; }

std::string csv_row(i64 x, std::complex<double> average, std::optional<double> target) {
  std::string row = std::to_string(x);
  row += ',';
  row += fmt_g12(average.real());
  row += ',';
  row += fmt_g12(average.imag());
  row += ',';
  if (target) {
    row += fmt_g12(*target);
    row += ',';
    row += fmt_g12(std::abs(average - *target));
  } else {
    row += ',';
  }
  return row;
}

}  // namespace salie
