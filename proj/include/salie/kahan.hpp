#pragma once

#include <complex>

namespace salie {

// Kahan compensated accumulator. Deterministic for a fixed addend order.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanComplex {
  KahanSum re, im;

  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
  std::complex<double> compensation() const { return {re.comp, im.comp}; }
};

}  // namespace salie
