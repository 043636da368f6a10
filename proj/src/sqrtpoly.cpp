#include "quartic/detail/sqrtpoly.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "quartic/detail/quad.hpp"

namespace quartic::detail {

namespace {
// Ordered Gauss-Legendre nodes over [0, 1] split into `panels` panels.
std::vector<std::pair<double, double>> unit_nodes(int order, int panels) {
  const GaussRule& g = gauss_rule(order);
  std::vector<std::pair<double, double>> out;
  out.reserve(order * panels);
  for (int p = 0; p < panels; ++p) {
    const double a = static_cast<double>(p) / panels, w = 0.5 / panels;
    for (int i = order - 1; i >= 0; --i)  // ascending node order
      out.emplace_back(a + (g.x[i] + 1.0) * w, g.w[i] * w);
  }
  return out;
}
}  // namespace

int SqrtPoly6::nearest_root(Complex r) const {
  int best = 0;
  double bd = std::abs(r - roots_[0]);
  for (int k = 1; k < 6; ++k) {
    const double d = std::abs(r - roots_[k]);
    if (d < bd) {
      bd = d;
      best = k;
    }
  }
  return best;
}

Complex SqrtPoly6::cofactor1(Complex s, Complex r) const {
  const int skip = nearest_root(r);
  Complex acc(1.0, 0.0);
  for (int k = 0; k < 6; ++k)
    if (k != skip) acc *= (s - roots_[k]);
  return acc;
}

Complex SqrtPoly6::cofactor2(Complex s, Complex r1, Complex r2) const {
  const int s1 = nearest_root(r1);
  int s2 = nearest_root(r2);
  if (s2 == s1) throw std::invalid_argument("SqrtPoly6: duplicate root pair");
  Complex acc(1.0, 0.0);
  for (int k = 0; k < 6; ++k)
    if (k != s1 && k != s2) acc *= (s - roots_[k]);
  return acc;
}

Complex SqrtPoly6::integrate_root_to_root(Complex r1, Complex r2, int order,
                                          int panels) const {
  // s(theta) = m - h cos(theta); (s - r1)(s - r2) = -h^2 sin^2(theta), so
  // sqrt(R) = i h sin(theta) sqrt(H) with H the regular cofactor.
  const Complex m = (r1 + r2) / 2.0, h = (r2 - r1) / 2.0;
  auto nodes = unit_nodes(order, panels);
  Complex acc(0.0, 0.0);
  Complex cur(0.0, 0.0);
  bool first = true;
  for (const auto& [t, wt] : nodes) {
    const double theta = M_PI * t;
    const Complex s = m - h * std::cos(theta);
    const Complex H = cofactor2(s, r1, r2);
    cur = first ? std::sqrt(H) : sqrt_near(H, cur);
    first = false;
    acc += wt * std::sin(theta) * std::sin(theta) * cur;
  }
  return Complex(0.0, 1.0) * h * h * M_PI * acc;
}

SqrtPoly6::PathValue SqrtPoly6::integrate_from_root(Complex root, Complex q,
                                                    Complex gRef, int order,
                                                    int panels) const {
  // s = root + t^2 (q - root), ds = 2 t (q - root) dt,
  // sqrt(R) = t sqrt(q - root) sqrt(G) with G = R/(s - root).
  const Complex dq = q - root;
  const Complex sq_dq = std::sqrt(dq);
  auto nodes = unit_nodes(order, panels);
  Complex cur = (gRef == Complex(0.0, 0.0)) ? std::sqrt(cofactor1(root, root)) : gRef;
  Complex acc(0.0, 0.0);
  for (const auto& [t, wt] : nodes) {
    const Complex s = root + t * t * dq;
    cur = sqrt_near(cofactor1(s, root), cur);
    acc += wt * (t * t) * cur;
  }
  PathValue pv;
  pv.integral = 2.0 * dq * sq_dq * acc;
  pv.sqrtAtEnd = sq_dq * cur;  // value at t = 1
  return pv;
}

Complex SqrtPoly6::integrate_into_root(Complex p, Complex root, Complex sqrtRefAtP,
                                       int order, int panels) const {
  const Complex dp = p - root;
  const Complex sq_dp = std::sqrt(dp);
  // G-branch at p matching the incoming sqrt(R) value.
  Complex cur = sqrt_near(cofactor1(p, root), sqrtRefAtP / sq_dp);
  auto nodes = unit_nodes(order, panels);
  Complex acc(0.0, 0.0);
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {  // t: 1 -> 0
    const Complex s = root + it->first * it->first * dp;
    cur = sqrt_near(cofactor1(s, root), cur);
    acc += it->second * (it->first * it->first) * cur;
  }
  // int_p^root sqrt(R) ds = - int_root^p.
  return -2.0 * dp * sq_dp * acc;
}

SqrtPoly6::PathValue SqrtPoly6::integrate_regular(Complex p, Complex q,
                                                  Complex sqrtRefAtP,
                                                  int order) const {
  const int panels =
      std::max(2, static_cast<int>(std::ceil(std::abs(q - p))));
  auto nodes = unit_nodes(order, panels);
  Complex cur = sqrt_near(R(p), sqrtRefAtP);
  Complex acc(0.0, 0.0);
  for (const auto& [t, wt] : nodes) {
    const Complex s = p + t * (q - p);
    cur = sqrt_near(R(s), cur);
    acc += wt * cur;
  }
  PathValue pv;
  pv.integral = acc * (q - p);
  pv.sqrtAtEnd = cur;
  return pv;
}

Complex SqrtPoly6::continue_sqrt(Complex from, Complex z, Complex refAtFrom) const {
  return track_sqrt([this](Complex s) { return R(s); }, from, z, refAtFrom, 64);
}

}  // namespace quartic::detail
