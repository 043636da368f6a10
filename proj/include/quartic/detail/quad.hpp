#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace quartic::detail {

using Complex = std::complex<double>;

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_rule(int n = 32);

// Integral of f over the straight segment [a, b], composite Gauss-Legendre.
Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex a,
                          Complex b, int panels = 4, int order = 32);

// Square root of `value` choosing the sign closest to `ref` (branch tracking).
inline Complex sqrt_near(Complex value, Complex ref) {
  Complex r = std::sqrt(value);
  return (std::norm(r - ref) <= std::norm(r + ref)) ? r : -r;
}

// Continuity-tracked sqrt(f) along the segment [a, b] starting from branch
// value `start` at a; steps refine until the phase step is small. Returns the
// branch value at b.
Complex track_sqrt(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                   Complex start, int minSteps = 16);

}  // namespace quartic::detail
