#include "quartic/detail/quad.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace quartic::detail {

namespace {
GaussRule make_rule(int n) {
  // Newton iteration on Legendre polynomials.
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.x[i] = x;
    r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}
}  // namespace

const GaussRule& gauss_rule(int n) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex a,
                          Complex b, int panels, int order) {
  const GaussRule& g = gauss_rule(order);
  Complex total(0.0, 0.0);
  for (int p = 0; p < panels; ++p) {
    Complex pa = a + (b - a) * (static_cast<double>(p) / panels);
    Complex pb = a + (b - a) * (static_cast<double>(p + 1) / panels);
    Complex mid = (pa + pb) / 2.0, half = (pb - pa) / 2.0;
    Complex acc(0.0, 0.0);
    for (int i = 0; i < order; ++i) acc += g.w[i] * f(mid + half * g.x[i]);
    total += acc * half;
  }
  return total;
}

Complex track_sqrt(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                   Complex start, int minSteps) {
  int steps = minSteps;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Complex cur = start;
    bool ok = true;
    for (int i = 1; i <= steps; ++i) {
      Complex z = a + (b - a) * (static_cast<double>(i) / steps);
      Complex nxt = sqrt_near(f(z), cur);
      // A near-180-degree jump means the step straddled a branch point.
      if (std::abs(nxt) > 0 && std::abs(nxt - cur) > 0.9 * std::abs(nxt + cur)) {
        ok = false;
        break;
      }
      cur = nxt;
    }
    if (ok) return cur;
    steps *= 4;
  }
  throw std::runtime_error("track_sqrt: branch tracking failed");
}

}  // namespace quartic::detail
