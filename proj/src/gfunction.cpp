#include "quartic/gfunction.hpp"

#include <cmath>

#include "quartic/detail/quad.hpp"
#include "quartic/detail/sqrtpoly.hpp"

namespace quartic::gfun {

namespace {

using detail::SqrtPoly6;

constexpr double kEllRadius = 30.0;  // matching radius for the 3-cut ell*

// Sign fixing the branch: sqrt(R) must behave like +s^3 far out on the ray
// through c3 (this makes Re eta3 ~ -Re z^4/4 at infinity).
double branch_sign(const SqrtPoly6& R, const endpoints::ThreeCutEndpoints& e) {
  const Complex dir = e.c3 / std::abs(e.c3);
  const Complex far = dir * (std::abs(e.c3) + kEllRadius);
  auto pv = R.integrate_from_root(e.c3, far, Complex(0.0, 0.0));
  const Complex want = detail::sqrt_near(R.R(far), far * far * far);
  return (std::norm(pv.sqrtAtEnd - want) <= std::norm(pv.sqrtAtEnd + want)) ? 1.0
                                                                            : -1.0;
}

}  // namespace

Complex sqrt_segment(Complex z, Complex b) {
  if (z == Complex(0.0, 0.0)) {
    // On-cut midpoint: limit from the +side of the ray through i b.
    z = b * Complex(0.0, 1e-300);
  }
  const Complex r = b / z;
  return z * std::sqrt(1.0 - r * r);
}

Complex sqrt_pair(Complex zeta) {
  if (zeta == Complex(0.0, 0.0)) return Complex(0.0, 2.0);  // limit from above
  const Complex r = 2.0 / zeta;
  return zeta * std::sqrt(1.0 - r * r);
}

EtaValue eta1(Complex z, SigmaPoint sigma) {
  return eta1(z, sigma, endpoints::one_cut(sigma));
}

EtaValue eta1(Complex z, SigmaPoint sigma, const endpoints::OneCutEndpoints& e) {
  (void)sigma;
  const Complex sq = sqrt_segment(z, e.b1);
  const Complex b2 = e.b1 * e.b1, z02 = e.z0 * e.z0;
  EtaValue out;
  out.value = z / 8.0 * (b2 + 4.0 * z02 - 2.0 * z * z) * sq +
              2.0 * std::log((z + sq) / e.b1);
  out.branchPath = "segment-cut sqrt, principal log";
  return out;
}

EtaValue eta2(Complex z, SigmaPoint sigma) {
  return eta2(z, sigma, endpoints::two_cut(sigma));
}

EtaValue eta2(Complex z, SigmaPoint sigma, const endpoints::TwoCutEndpoints& e) {
  (void)e;
  const Complex zeta = z * z + sigma;
  const Complex sq = sqrt_pair(zeta);
  EtaValue out;
  out.value = -0.25 * zeta * sq + std::log((zeta + sq) / 2.0);
  out.branchPath = "Joukowski-cut sqrt in zeta = z^2 + sigma, principal log";
  return out;
}

EtaValue eta3(Complex z, SigmaPoint sigma, const endpoints::ThreeCutEndpoints& e,
              const std::vector<Complex>& waypoints) {
  (void)sigma;
  const SqrtPoly6 R(e.a3, e.b3, e.c3);
  // Global branch: principal gRef at c3, flipped when the far-field test says
  // the other sheet carries sqrt(R) ~ +s^3.
  const double sign = branch_sign(R, e);

  EtaValue out;
  out.branchPath = "quadrature from c3, far-field-anchored branch";
  std::vector<Complex> path;
  path.push_back(e.c3);
  for (const auto& w : waypoints) path.push_back(w);
  path.push_back(z);
  // A leg joining two branch points directly gets a mid waypoint slightly off
  // the chord, so each leg carries at most one square-root endpoint.
  auto isRoot = [&](Complex q) {
    for (const Complex r : {e.a3, -e.a3, e.b3, -e.b3, e.c3, -e.c3})
      if (std::abs(q - r) < 1e-12 * (1.0 + std::abs(r))) return true;
    return false;
  };
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    if (isRoot(path[k]) && isRoot(path[k + 1])) {
      const Complex mid = (path[k] + path[k + 1]) / 2.0;
      const Complex perp =
          (path[k + 1] - path[k]) * Complex(0.0, 0.15);
      path.insert(path.begin() + k + 1, mid + perp);
      ++k;
    }
  }

  // Leave the root c3 toward the first node.
  Complex total(0.0, 0.0);
  if (std::abs(path[1] - e.c3) < 1e-14) {
    out.value = Complex(0.0, 0.0);
    return out;
  }
  auto first = R.integrate_from_root(e.c3, path[1], Complex(0.0, 0.0));
  total = first.integral;
  Complex ref = first.sqrtAtEnd;
  for (size_t k = 2; k < path.size(); ++k) {
    const Complex p = path[k - 1], q = path[k];
    if (std::abs(q - p) < 1e-14) continue;
    // Segment ending at a root of R gets the singular treatment.
    bool intoRoot = false;
    for (const Complex r :
         {e.a3, -e.a3, e.b3, -e.b3, e.c3, -e.c3}) {
      if (std::abs(q - r) < 1e-12 * (1.0 + std::abs(r))) {
        total += R.integrate_into_root(p, r, ref);
        intoRoot = true;
        break;
      }
    }
    if (intoRoot) {
      if (k + 1 != path.size())
        throw PathCrossesCut("eta3: waypoint at a branch point");
      break;
    }
    auto pv = R.integrate_regular(p, q, ref);
    total += pv.integral;
    ref = pv.sqrtAtEnd;
  }
  out.value = -sign * total;
  return out;
}

Complex eta_value(Complex z, SigmaPoint sigma, const model::PhaseRegime& regime) {
  switch (regime.kind) {
    case model::RegimeKind::OneCut:
      return eta1(z, sigma).value;
    case model::RegimeKind::TwoCut:
      return eta2(z, sigma).value;
    case model::RegimeKind::ThreeCut:
      return eta3(z, sigma, endpoints::three_cut_continued(sigma)).value;
    default:
      throw std::invalid_argument("eta_value: boundary regime has no bulk eta");
  }
}

Complex g_value(Complex z, SigmaPoint sigma, const model::PhaseRegime& regime) {
  const Complex ell = endpoints::lagrange_constant(sigma, regime).ellStar;
  return (model::potential(z, sigma) + ell + eta_value(z, sigma, regime)) / 2.0;
}

Complex g_minus_log(Complex z, SigmaPoint sigma, const model::PhaseRegime& regime) {
  switch (regime.kind) {
    case model::RegimeKind::OneCut: {
      const auto e = endpoints::one_cut(sigma);
      if (std::abs(z) < 10.0 * std::abs(e.b1))
        return g_value(z, sigma, regime) - std::log(z);
      const Complex b2 = e.b1 * e.b1, z02 = e.z0 * e.z0;
      const Complex t = b2 / (z * z);
      const Complex wt = std::sqrt(1.0 - t);
      const Complex u = t / (1.0 + wt);  // 1 - wt without cancellation
      // V + eta1 - 2 log z collapses to an O(1) rationalized expression.
      const Complex F =
          b2 / (1.0 + wt) * (b2 / (2.0 * (8.0 - 4.0 * u)) - (b2 + 4.0 * z02) / 8.0);
      const Complex lg = 2.0 * std::log((1.0 + wt) / e.b1);
      const Complex ell = endpoints::lagrange_constant(sigma, regime).ellStar;
      return (F + lg + ell) / 2.0;
    }
    case model::RegimeKind::TwoCut: {
      const auto e = endpoints::two_cut(sigma);
      if (std::abs(z) < 10.0 * std::abs(e.b2))
        return g_value(z, sigma, regime) - std::log(z);
      const Complex zeta = z * z + sigma;
      const Complex m = 4.0 / (zeta * zeta);
      const Complex wt = std::sqrt(1.0 - m);
      const Complex ell = endpoints::lagrange_constant(sigma, regime).ellStar;
      const Complex val = 1.0 / (1.0 + wt) - sigma * sigma / 4.0 +
                          std::log((1.0 + sigma / (z * z)) * (1.0 + wt) / 2.0);
      return (val + ell) / 2.0;
    }
    default:
      return g_value(z, sigma, regime) - std::log(z);
  }
}

Complex ell3_numeric(SigmaPoint sigma, const endpoints::ThreeCutEndpoints& e) {
  const double Rbig = std::abs(e.c3) + kEllRadius;
  const Complex dir = e.c3 / std::abs(e.c3);
  const Complex zR = dir * Rbig;
  const Complex etaR = eta3(zR, sigma, e).value;
  // Tail of int sqrt(R) past |z| = Rbig along the ray: expand
  // sqrt(R) = s^3 P(1/s^2) with log P = -(1/2) sum_k M_k/(k s^{2k}),
  // M_k the power sums of the squared endpoints.
  const Complex e2[3] = {e.a3 * e.a3, e.b3 * e.b3, e.c3 * e.c3};
  Complex M[7];
  for (int k = 1; k <= 6; ++k) {
    M[k] = Complex(0.0, 0.0);
    for (int i = 0; i < 3; ++i) M[k] += std::pow(e2[i], k);
  }
  // exp series of L(t) = -(1/2) (M1 t + M2 t^2/2 + ... ), t = 1/s^2, to t^6.
  Complex L[7] = {};
  for (int k = 1; k <= 6; ++k) L[k] = -0.5 * M[k] / static_cast<double>(k);
  Complex q[7] = {};
  q[0] = 1.0;
  for (int n = 1; n <= 6; ++n) {
    Complex acc(0.0, 0.0);
    for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * L[k] * q[n - k];
    q[n] = acc / static_cast<double>(n);
  }
  // T(z) = -int_z^inf rho, rho = sum_{k>=3} q_k s^{3-2k}: along the ray the
  // antiderivative is evaluated in closed form.
  Complex T(0.0, 0.0);
  for (int k = 3; k <= 6; ++k)
    T -= q[k] * std::pow(zR, 4 - 2 * k) / static_cast<double>(2 * k - 4);
  const Complex K0 =
      etaR + std::pow(zR, 4) / 4.0 + sigma * zR * zR / 2.0 - 2.0 * std::log(zR) + T;
  return -K0;
}

DensitySample density(Complex s, SigmaPoint sigma, const model::PhaseRegime& regime,
                      std::optional<Complex> tangentHint,
                      const endpoints::ThreeCutEndpoints* three) {
  DensitySample out;
  out.point = s;
  endpoints::ThreeCutEndpoints e3;
  if (regime.kind == model::RegimeKind::ThreeCut)
    e3 = three ? *three : endpoints::three_cut_continued(sigma);
  // Tangent of the trajectory through s: direction with Q(s) t^2 < 0.
  auto qval = [&](Complex z) -> Complex {
    switch (regime.kind) {
      case model::RegimeKind::OneCut: {
        auto e = endpoints::one_cut(sigma);
        const Complex h = z * z - e.z0 * e.z0;
        return h * h * (z * z - e.b1 * e.b1);
      }
      case model::RegimeKind::TwoCut: {
        auto e = endpoints::two_cut(sigma);
        return z * z * (z * z - e.a2 * e.a2) * (z * z - e.b2 * e.b2);
      }
      case model::RegimeKind::ThreeCut:
        return SqrtPoly6(e3.a3, e3.b3, e3.c3).R(z);
      default:
        throw std::invalid_argument("density: regime");
    }
  };
  const Complex Q = qval(s);
  if (std::abs(Q) < 1e-300) throw NotOnSupport("density: endpoint");
  Complex t = Complex(0.0, 1.0) / std::sqrt(Q);
  t /= std::abs(t);
  if (tangentHint) {
    if ((t * std::conj(*tangentHint)).real() < 0.0) t = -t;
  } else if (t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0)) {
    t = -t;  // canonical orientation: rightward, ties upward
  }
  out.density = qhalf_plus(s, sigma, regime, t, &e3) * t / (M_PI * Complex(0.0, 1.0));
  return out;
}

Complex qhalf_plus(Complex s, SigmaPoint sigma, const model::PhaseRegime& regime,
                   Complex tangent, const endpoints::ThreeCutEndpoints* three) {
  const Complex t = tangent / std::abs(tangent);
  const double delta = 1e-9 * (1.0 + std::abs(s));
  const Complex sp = s + Complex(0.0, 1.0) * t * delta;
  switch (regime.kind) {
    case model::RegimeKind::OneCut: {
      auto e = endpoints::one_cut(sigma);
      return 0.5 * (sp * sp - e.z0 * e.z0) * sqrt_segment(sp, e.b1);
    }
    case model::RegimeKind::TwoCut:
      return 0.5 * sp * sqrt_pair(sp * sp + sigma);
    case model::RegimeKind::ThreeCut: {
      endpoints::ThreeCutEndpoints e3 =
          three ? *three : endpoints::three_cut_continued(sigma);
      const SqrtPoly6 R(e3.a3, e3.b3, e3.c3);
      // Perpendicular approach through the + side: continue the resolvent
      // branch of sqrt(R) (+z^3 at infinity) radially to a point straight
      // above sp in the + normal direction, then descend onto sp; the path
      // stays clear of all three support arcs.
      double hull = std::max({std::abs(e3.a3), std::abs(e3.b3), std::abs(e3.c3)});
      const Complex above = s + Complex(0.0, 1.0) * t * (2.0 * hull + 2.0);
      const Complex far = above / std::abs(above) * (hull + kEllRadius);
      const Complex farVal = detail::sqrt_near(R.R(far), far * far * far);
      const Complex atAbove = R.continue_sqrt(far, above, farVal);
      return 0.5 * R.continue_sqrt(above, sp, atAbove);
    }
    default:
      throw std::invalid_argument("qhalf_plus: regime");
  }
}

}  // namespace quartic::gfun
