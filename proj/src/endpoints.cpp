#include "quartic/endpoints.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "quartic/detail/sqrtpoly.hpp"
#include "quartic/gfunction.hpp"

namespace quartic::endpoints {

namespace {

using detail::SqrtPoly6;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// --- Newton machinery on 6 real unknowns --------------------------------

using Vec6 = std::array<double, 6>;

Vec6 pack(const ThreeCutEndpoints& e) {
  return {e.a3.real(), e.a3.imag(), e.b3.real(), e.b3.imag(), e.c3.real(), e.c3.imag()};
}

ThreeCutEndpoints unpack(const Vec6& x) {
  ThreeCutEndpoints e;
  e.a3 = {x[0], x[1]};
  e.b3 = {x[2], x[3]};
  e.c3 = {x[4], x[5]};
  return e;
}

Vec6 equations(SigmaPoint sigma, const Vec6& x) {
  const ThreeCutEndpoints e = unpack(x);
  const Complex a2 = e.a3 * e.a3, b2 = e.b3 * e.b3, c2 = e.c3 * e.c3;
  const Complex f1 = a2 + b2 + c2 + 2.0 * sigma;
  const Complex f2 = a2 * a2 + b2 * b2 + c2 * c2 -
                     2.0 * (a2 * b2 + b2 * c2 + a2 * c2) - 16.0;
  const SqrtPoly6 R(e.a3, e.b3, e.c3);
  const double g1 = R.integrate_root_to_root(e.a3, e.b3).real();
  const double g2 = R.integrate_root_to_root(e.b3, e.c3).real();
  return {f1.real(), f1.imag(), f2.real(), f2.imag(), g1, g2};
}

double max_abs(const Vec6& f) {
  double m = 0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

// Gaussian elimination with partial pivoting for the 6x6 Newton system.
bool solve6(std::array<Vec6, 6>& J, Vec6& rhs) {
  for (int col = 0; col < 6; ++col) {
    int piv = col;
    for (int r = col + 1; r < 6; ++r)
      if (std::abs(J[r][col]) > std::abs(J[piv][col])) piv = r;
    if (std::abs(J[piv][col]) < 1e-14) return false;
    std::swap(J[piv], J[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < 6; ++r) {
      const double f = J[r][col] / J[col][col];
      for (int c = col; c < 6; ++c) J[r][c] -= f * J[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int col = 5; col >= 0; --col) {
    for (int r = 0; r < col; ++r) rhs[r] -= J[r][col] / J[col][col] * rhs[col];
    rhs[col] /= J[col][col];
  }
  return true;
}

ThreeCutEndpoints newton(SigmaPoint sigma, ThreeCutEndpoints seed) {
  if (!finite(seed.a3) || !finite(seed.b3) || !finite(seed.c3))
    throw BadSeed("three_cut: non-finite seed");
  Vec6 x = pack(seed);
  Vec6 f = equations(sigma, x);
  double res = max_abs(f);
  for (int iter = 0; iter < 60 && res > 1e-12; ++iter) {
    // Finite-difference Jacobian.
    std::array<Vec6, 6> J;
    for (int c = 0; c < 6; ++c) {
      const double h = 1e-7 * std::max(1.0, std::abs(x[c]));
      Vec6 xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      const Vec6 fp = equations(sigma, xp), fm = equations(sigma, xm);
      for (int r = 0; r < 6; ++r) J[r][c] = (fp[r] - fm[r]) / (2.0 * h);
    }
    // Transpose storage: J[r][c] already row-major.
    Vec6 rhs = f;
    if (!solve6(J, rhs)) break;
    // Damped update.
    double lambda = 1.0;
    bool accepted = false;
    for (int halvings = 0; halvings <= 30; ++halvings) {
      Vec6 xt = x;
      double stepNorm = 0;
      for (int c = 0; c < 6; ++c) {
        xt[c] -= lambda * rhs[c];
        stepNorm = std::max(stepNorm, std::abs(lambda * rhs[c]));
      }
      const Vec6 ft = equations(sigma, xt);
      const double rt = max_abs(ft);
      if (rt < res || stepNorm < 1e-15) {
        x = xt;
        f = ft;
        res = rt;
        accepted = true;
        break;
      }
      lambda /= 2.0;
    }
    if (!accepted) break;
  }
  ThreeCutEndpoints out = unpack(x);
  out.residual = res;
  out.converged = res <= 1e-10;
  return out;
}

bool plausible(const ThreeCutEndpoints& e) {
  if (!e.converged) return false;
  const double s = std::abs(e.a3) + std::abs(e.b3) + std::abs(e.c3);
  if (!(s > 1e-8) || !(s < 1e3)) return false;
  // Distinct squared endpoints.
  const Complex a2 = e.a3 * e.a3, b2 = e.b3 * e.b3, c2 = e.c3 * e.c3;
  return std::abs(a2 - b2) > 1e-8 && std::abs(b2 - c2) > 1e-8 &&
         std::abs(a2 - c2) > 1e-8;
}

std::vector<ThreeCutEndpoints> builtin_seeds(SigmaPoint sigma) {
  std::vector<ThreeCutEndpoints> seeds;
  // Birth of a cut at the origin: continue from the two-cut endpoints.
  try {
    const TwoCutEndpoints tc = two_cut(sigma);
    ThreeCutEndpoints s;
    s.a3 = Complex(1e-3, 0.0);
    s.b3 = tc.a2;
    s.c3 = tc.b2;
    seeds.push_back(s);
  } catch (const DegenerateEndpoint&) {
  }
  // Split of the one-cut support at +-z0.
  try {
    const OneCutEndpoints oc = one_cut(sigma);
    const Complex qp = 4.0 * oc.z0 * oc.z0 * (oc.z0 * oc.z0 - oc.b1 * oc.b1);
    const double base = (M_PI - std::arg(qp)) / 4.0;
    const double delta = 0.05 * std::abs(oc.z0) + 1e-3;
    for (int k = 0; k < 4; ++k) {
      const Complex dir = std::polar(delta, base + k * M_PI / 2.0);
      ThreeCutEndpoints s;
      s.a3 = oc.z0 - dir;
      s.b3 = oc.z0 + dir;
      s.c3 = oc.b1;
      seeds.push_back(s);
    }
  } catch (const model::OnBranchCut&) {
  }
  return seeds;
}

}  // namespace

OneCutEndpoints one_cut(SigmaPoint sigma, double kappa) {
  const Complex s = model::branch::sqrt12(sigma, kappa);
  OneCutEndpoints e;
  e.kappa = kappa;
  e.b1 = std::sqrt(2.0 / 3.0 * (-sigma + s));
  e.z0 = model::branch::sqrt_upper(1.0 / 3.0 * (-2.0 * sigma - s));
  return e;
}

TwoCutEndpoints two_cut(SigmaPoint sigma) {
  if (std::abs(sigma - Complex(-2.0, 0.0)) < 1e-14 ||
      std::abs(sigma - Complex(2.0, 0.0)) < 1e-14)
    throw DegenerateEndpoint("two_cut: sigma at +-2");
  TwoCutEndpoints e;
  e.a2 = std::sqrt(-2.0 - sigma);
  e.b2 = std::sqrt(2.0 - sigma);
  return e;
}

ThreeCutEndpoints three_cut(SigmaPoint sigma, std::optional<ThreeCutEndpoints> seed) {
  if (seed) return newton(sigma, *seed);
  ThreeCutEndpoints best;
  best.residual = 1e300;
  for (const auto& s : builtin_seeds(sigma)) {
    ThreeCutEndpoints r = newton(sigma, s);
    if (plausible(r)) return r;
    if (r.residual < best.residual) best = r;
  }
  return best;
}

ThreeCutEndpoints three_cut_continued(SigmaPoint sigma) {
  if (sigma.imag() < 0.0) {
    ThreeCutEndpoints r = three_cut_continued(std::conj(sigma));
    r.a3 = std::conj(r.a3);
    r.b3 = std::conj(r.b3);
    r.c3 = std::conj(r.c3);
    return r;
  }
  // Bootstrap anchor just past the two-to-three birth along Re sigma = -3.
  const SigmaPoint anchor(-3.0, 1.7);
  ThreeCutEndpoints cur = three_cut(anchor);
  if (!plausible(cur)) throw NoConvergence("three_cut_continued: anchor failed");
  if (std::abs(sigma - anchor) < 1e-14) return cur;
  double t = 0.0;
  double step = 0.25;
  while (t < 1.0) {
    const double tn = std::min(1.0, t + step);
    const SigmaPoint target = anchor + (sigma - anchor) * tn;
    ThreeCutEndpoints next = newton(target, cur);
    if (plausible(next)) {
      cur = next;
      t = tn;
      step = std::min(0.25, step * 1.6);
    } else {
      step /= 2.0;
      if (step < 1e-4) throw NoConvergence("three_cut_continued: step underflow");
    }
  }
  return cur;
}

LagrangeConstant lagrange_constant(SigmaPoint sigma, const model::PhaseRegime& regime) {
  LagrangeConstant lc;
  switch (regime.kind) {
    case model::RegimeKind::OneCut: {
      const Complex s = model::branch::sqrt12(sigma);
      lc.ellStar = (sigma * sigma - sigma * s) / 12.0 + std::log(-sigma + s) - 0.5 -
                   std::log(6.0);
      break;
    }
    case model::RegimeKind::TwoCut:
      lc.ellStar = sigma * sigma / 4.0 - 0.5;
      break;
    case model::RegimeKind::ThreeCut: {
      const ThreeCutEndpoints e = three_cut_continued(sigma);
      lc.ellStar = gfun::ell3_numeric(sigma, e);
      break;
    }
    default:
      throw std::invalid_argument("lagrange_constant: regime without a constant");
  }
  lc.ell = -lc.ellStar.real() / 2.0;
  return lc;
}

double one_cut_residual(SigmaPoint sigma, const OneCutEndpoints& e) {
  const Complex b2 = e.b1 * e.b1, z2 = e.z0 * e.z0;
  const double r1 = std::abs(b2 + 2.0 * z2 + 2.0 * sigma);
  const double r2 = std::abs(b2 * (b2 - 4.0 * z2) - 16.0 * e.kappa);
  return std::max(r1, r2);
}

double two_cut_residual(SigmaPoint sigma, const TwoCutEndpoints& e) {
  const Complex a2 = e.a2 * e.a2, b2 = e.b2 * e.b2;
  const double r1 = std::abs(a2 + b2 + 2.0 * sigma);
  const Complex d = a2 - b2;
  const double r2 = std::abs(d * d - 16.0);
  return std::max(r1, r2);
}

double ThreeCutResiduals::max_abs() const {
  return std::max(std::max(alg1, alg2), std::max(gap1, gap2));
}

ThreeCutResiduals three_cut_residuals(SigmaPoint sigma, const ThreeCutEndpoints& e) {
  const Complex a2 = e.a3 * e.a3, b2 = e.b3 * e.b3, c2 = e.c3 * e.c3;
  ThreeCutResiduals r;
  r.alg1 = std::abs(a2 + b2 + c2 + 2.0 * sigma);
  r.alg2 = std::abs(a2 * a2 + b2 * b2 + c2 * c2 -
                    2.0 * (a2 * b2 + b2 * c2 + a2 * c2) - 16.0);
  r.gap1 = std::abs(gap_integral_ab(e).real());
  r.gap2 = std::abs(gap_integral_bc(e).real());
  return r;
}

Complex gap_integral_ab(const ThreeCutEndpoints& e) {
  return SqrtPoly6(e.a3, e.b3, e.c3).integrate_root_to_root(e.a3, e.b3);
}

Complex gap_integral_bc(const ThreeCutEndpoints& e) {
  return SqrtPoly6(e.a3, e.b3, e.c3).integrate_root_to_root(e.b3, e.c3);
}

}  // namespace quartic::endpoints
