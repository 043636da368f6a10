#pragma once

#include <array>
#include <complex>

namespace quartic::detail {

using Complex = std::complex<double>;

// R(s) = (s^2 - a^2)(s^2 - b^2)(s^2 - c^2) held through its six linear roots
// +-a, +-b, +-c; branch-tracked path integrals of sqrt(R) with square-root
// endpoint singularities removed by quadratic substitutions.
class SqrtPoly6 {
 public:
  SqrtPoly6(Complex a, Complex b, Complex c) : roots_{a, -a, b, -b, c, -c} {}

  Complex R(Complex s) const {
    Complex acc(1.0, 0.0);
    for (const auto& r : roots_) acc *= (s - r);
    return acc;
  }

  struct PathValue {
    Complex integral;   // int sqrt(R) ds along the segment
    Complex sqrtAtEnd;  // branch value of sqrt(R) at the far endpoint
  };

  // Segment between two roots r1, r2; branch anchored by the principal square
  // root of the regular cofactor at the first quadrature node.
  Complex integrate_root_to_root(Complex r1, Complex r2, int order = 64,
                                 int panels = 4) const;

  // Segment from a root to a regular point q; gRef (optional) anchors
  // sqrt(R/(s-root)) at the root and thereby selects the global branch.
  PathValue integrate_from_root(Complex root, Complex q, Complex gRef = {},
                                int order = 64, int panels = 4) const;

  // Segment from a regular point p (with incoming branch value sqrtRefAtP)
  // into a root.
  Complex integrate_into_root(Complex p, Complex root, Complex sqrtRefAtP,
                              int order = 64, int panels = 4) const;

  // Regular segment [p, q]; branch continued from sqrtRefAtP.
  PathValue integrate_regular(Complex p, Complex q, Complex sqrtRefAtP,
                              int order = 64) const;

  // Branch value of sqrt(R) at z continued along [from, z].
  Complex continue_sqrt(Complex from, Complex z, Complex refAtFrom) const;

 private:
  // R(s)/(s - r) with the factor nearest r removed analytically.
  Complex cofactor1(Complex s, Complex r) const;
  // R(s)/((s - r1)(s - r2)).
  Complex cofactor2(Complex s, Complex r1, Complex r2) const;
  int nearest_root(Complex r) const;

  std::array<Complex, 6> roots_;
};

}  // namespace quartic::detail
