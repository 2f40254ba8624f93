#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace autorake {

struct MinimizeResult {
  double x;
  double fx;
  int iterations;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi]. Stops
/// when the bracket is narrower than tol. Reuses one interior evaluation per
/// step, so each iteration costs a single call to f.
template <typename F>
MinimizeResult golden_section_minimize(F&& f, double lo, double hi, double tol, int max_iterations = 500) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_minimize: empty bracket");
  if (!(tol > 0)) throw std::invalid_argument("golden_section_minimize: tol must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  for (; it < max_iterations && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? MinimizeResult{c, fc, it} : MinimizeResult{d, fd, it};
}

}  // namespace autorake
