#include "quartic/quaddiff.hpp"

#include <cmath>

#include "quartic/detail/quad.hpp"
#include "quartic/gfunction.hpp"

namespace quartic::quaddiff {

namespace {
constexpr Complex kI(0.0, 1.0);
}

Complex QuadraticDifferential::q(Complex z) const {
  Complex acc(0.0, 0.0);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    acc = acc * z + coeffs[k];
  return acc;
}

Complex QuadraticDifferential::dq(Complex z) const {
  Complex acc(0.0, 0.0);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k)
    acc = acc * z + coeffs[k] * static_cast<double>(k);
  return acc;
}

Complex QuadraticDifferential::d2q(Complex z) const {
  Complex acc(0.0, 0.0);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 2; --k)
    acc = acc * z + coeffs[k] * static_cast<double>(k * (k - 1));
  return acc;
}

QuadraticDifferential build_qd(SigmaPoint sigma, const model::PhaseRegime& regime) {
  QuadraticDifferential qd;
  qd.regime = regime;
  qd.sigma = sigma;
  qd.coeffs.assign(7, Complex(0.0, 0.0));
  switch (regime.kind) {
    case model::RegimeKind::OneCut: {
      const auto e = endpoints::one_cut(sigma);
      const Complex z2 = e.z0 * e.z0, b2 = e.b1 * e.b1;
      // (z^2 - z0^2)^2 (z^2 - b1^2)
      qd.coeffs[6] = 1.0;
      qd.coeffs[4] = -(2.0 * z2 + b2);
      qd.coeffs[2] = z2 * z2 + 2.0 * z2 * b2;
      qd.coeffs[0] = -z2 * z2 * b2;
      qd.points = {{e.b1, 1}, {-e.b1, 1}, {e.z0, 2}, {-e.z0, 2}};
      break;
    }
    case model::RegimeKind::TwoCut: {
      const auto e = endpoints::two_cut(sigma);
      const Complex a2 = e.a2 * e.a2, b2 = e.b2 * e.b2;
      // z^2 (z^2 - a2^2)(z^2 - b2^2)
      qd.coeffs[6] = 1.0;
      qd.coeffs[4] = -(a2 + b2);
      qd.coeffs[2] = a2 * b2;
      qd.points = {{e.a2, 1}, {-e.a2, 1}, {e.b2, 1}, {-e.b2, 1}, {Complex(0, 0), 2}};
      break;
    }
    case model::RegimeKind::ThreeCut: {
      const auto e = endpoints::three_cut_continued(sigma);
      const Complex a2 = e.a3 * e.a3, b2 = e.b3 * e.b3, c2 = e.c3 * e.c3;
      qd.coeffs[6] = 1.0;
      qd.coeffs[4] = -(a2 + b2 + c2);
      qd.coeffs[2] = a2 * b2 + b2 * c2 + a2 * c2;
      qd.coeffs[0] = -a2 * b2 * c2;
      qd.points = {{e.a3, 1}, {-e.a3, 1}, {e.b3, 1}, {-e.b3, 1}, {e.c3, 1}, {-e.c3, 1}};
      break;
    }
    default:
      throw std::invalid_argument("build_qd: bulk regime required");
  }
  return qd;
}

namespace detail_engine {

LevelTracer::Result LevelTracer::run(Complex z0, Complex dir0, Complex eta0,
                                     Complex rotate, Complex mu) const {
  Result res;
  Complex z = z0;
  Complex eta = eta0;
  const double level = levelFun ? levelFun(z0) : (mu * eta0).real();
  Complex sq = std::sqrt(Q(z0));
  // Align the branch so that the tangent rotate/sq points along dir0.
  {
    Complex t = rotate / sq;
    if ((t * std::conj(dir0)).real() < 0.0) sq = -sq;
  }
  Complex prevTan = dir0;
  double h = hmax / 4.0;
  res.samples.push_back(z);

  auto tangent = [&](Complex at, Complex ref) -> std::pair<Complex, Complex> {
    Complex s = detail::sqrt_near(Q(at), ref);
    Complex t = rotate / s;
    t /= std::abs(t);
    return {t, s};
  };

  for (int step = 0; step < maxSteps; ++step) {
    // RK4 predictor with branch continuity across stages.
    auto [t1, s1] = tangent(z, sq);
    if ((t1 * std::conj(prevTan)).real() < 0.0) {
      t1 = -t1;
      s1 = -s1;
    }
    bool accepted = false;
    Complex zNew, sqNew, tanNew;
    while (!accepted) {
      auto stage = [&](Complex at, Complex refSq, Complex refTan)
          -> std::pair<Complex, Complex> {
        auto [t, s] = tangent(at, refSq);
        if ((t * std::conj(refTan)).real() < 0.0) {
          t = -t;
          s = -s;
        }
        return {t, s};
      };
      auto rk = [&](Complex zs, Complex ss, Complex ts,
                    double hh) -> std::tuple<Complex, Complex, Complex> {
        Complex k1 = ts;
        auto [k2t, k2s] = stage(zs + 0.5 * hh * k1, ss, k1);
        auto [k3t, k3s] = stage(zs + 0.5 * hh * k2t, k2s, k2t);
        auto [k4t, k4s] = stage(zs + hh * k3t, k3s, k3t);
        (void)k2s;
        Complex zn = zs + hh / 6.0 * (k1 + 2.0 * k2t + 2.0 * k3t + k4t);
        auto [tn, sn] = stage(zn, k4s, k4t);
        return {zn, sn, tn};
      };
      auto [zFull, sFull, tFull] = rk(z, s1, t1, h);
      (void)sFull;
      (void)tFull;
      // Step-doubling error estimate.
      auto [zHalf, sHalf, tHalf] = rk(z, s1, t1, h / 2.0);
      auto [zTwo, sTwo, tTwo] = rk(zHalf, sHalf, tHalf, h / 2.0);
      const double err = std::abs(zFull - zTwo);
      if (err < 1e-10 * (1.0 + std::abs(z)) || h <= hmin * 1.0001) {
        zNew = zTwo;
        sqNew = sTwo;
        tanNew = tTwo;
        accepted = true;
        if (err < 1e-12 * (1.0 + std::abs(z))) h = std::min(h * 1.7, hmax);
      } else {
        h = std::max(h / 2.0, hmin);
      }
    }
    // Accumulate eta along the accepted step; eta is path independent, so a
    // 7-point Gauss rule on the chord keeps the cumulative drift below the
    // corrector tolerance even over 1e5 steps.
    {
      const Complex dz = zNew - z;
      static const double gx[7] = {-0.9491079123427585, -0.7415311855993945,
                                   -0.4058451513773972, 0.0,
                                   0.4058451513773972,  0.7415311855993945,
                                   0.9491079123427585};
      static const double gw[7] = {0.1294849661688697, 0.2797053914892766,
                                   0.3818300505051189, 0.4179591836734694,
                                   0.3818300505051189, 0.2797053914892766,
                                   0.1294849661688697};
      Complex acc(0.0, 0.0);
      Complex ref = sq;
      for (int i = 0; i < 7; ++i) {
        const Complex at = z + dz * (0.5 + 0.5 * gx[i]);
        ref = detail::sqrt_near(Q(at), ref);
        acc += gw[i] * ref;
      }
      eta -= 0.5 * dz * acc;
    }
    z = zNew;
    sq = sqNew;
    prevTan = tanNew;
    // Corrector: pull the level value back to its seed.
    double mis = 0.0;
    for (int it = 0; it < 5; ++it) {
      mis = (levelFun ? levelFun(z) : (mu * eta).real()) - level;
      if (std::abs(mis) < traceTol * 0.5) break;
      const Complex etaPrime = -sq;
      const Complex muEp = mu * etaPrime;
      const Complex dzc = -mis * std::conj(muEp) / std::norm(muEp);
      eta += etaPrime * dzc;
      z += dzc;
      sq = detail::sqrt_near(Q(z), sq);
    }
    if (levelFun && std::abs(mis) > 1e4 * traceTol) {
      // The closed-form level jumped across one of its convention cuts; the
      // samples up to the previous step are valid.
      res.levelLost = true;
      return res;
    }
    res.samples.push_back(z);
    // Terminations.
    if (std::abs(z) > rmax) {
      res.escaped = true;
      return res;
    }
    if (innerStop > 0.0 && std::abs(z) < innerStop) {
      res.hitInner = true;
      return res;
    }
    double dmin = 1e300;
    for (size_t i = 0; i < captureAt.size(); ++i) {
      const double d = std::abs(z - captureAt[i]);
      if (d < dmin) dmin = d;
      if (d < capture) {
        res.hitIndex = static_cast<int>(i);
        res.samples.push_back(captureAt[i]);
        return res;
      }
    }
    // Keep steps small while passing near a critical point, and resolve the
    // field's variation scale when a pole sits at the origin.
    if (dmin < 1e-3) h = std::max(std::min(h, dmin / 4.0), hmin);
    if (innerStop > 0.0) h = std::max(std::min(h, std::abs(z) / 8.0), hmin);
  }
  res.stepLimit = true;
  return res;
}

}  // namespace detail_engine

std::vector<double> seed_angles(const QuadraticDifferential& qd, int pointIndex,
                                TraceKind kind) {
  const auto& p = qd.points.at(pointIndex);
  const int m = p.order;
  // Local coefficient of (z - p)^m in Q.
  const Complex c = (m == 1) ? qd.dq(p.z) : qd.d2q(p.z) / 2.0;
  const double base = (kind == TraceKind::Critical) ? M_PI : 0.0;
  std::vector<double> out;
  const int n = m + 2;
  for (int k = 0; k < n; ++k)
    out.push_back(std::remainder((base - std::arg(c) + 2.0 * M_PI * k) / n +
                                     0.0,
                                 2.0 * M_PI));
  return out;
}

Trajectory trace(const QuadraticDifferential& qd, int pointIndex, int direction,
                 TraceKind kind, const TraceOptions& opts) {
  const auto& p = qd.points.at(pointIndex);
  if (std::abs(qd.q(p.z)) > 1e-8)
    throw SeedNotCritical("trace: seed is not a critical point");
  auto angles = seed_angles(qd, pointIndex, kind);
  const double theta = angles.at(direction);

  detail_engine::LevelTracer tracer;
  tracer.Q = [&qd](Complex z) { return qd.q(z); };
  tracer.rmax = opts.rmax;
  tracer.traceTol = opts.traceTol;
  tracer.hmin = opts.hmin;
  tracer.hmax = opts.hmax;
  tracer.maxSteps = opts.maxSteps;
  tracer.capture = opts.capture;
  for (const auto& cp : qd.points)
    if (std::abs(cp.z - p.z) > 1e-12) tracer.captureAt.push_back(cp.z);

  const double r0 = 1e-6;
  const Complex dir = std::polar(1.0, theta);
  const Complex z0 = p.z + r0 * dir;
  // eta seed: local model increment; its level part vanishes on an exact ray.
  const int n = p.order + 2;
  const Complex c = (p.order == 1) ? qd.dq(p.z) : qd.d2q(p.z) / 2.0;
  Complex inc = -2.0 / n * std::sqrt(c * std::pow(z0 - p.z, n));
  if (kind == TraceKind::Critical)
    inc = Complex(0.0, inc.imag());
  else
    inc = Complex(inc.real(), 0.0);
  const Complex rotate = (kind == TraceKind::Critical) ? kI : Complex(1.0, 0.0);
  const Complex mu = (kind == TraceKind::Critical) ? Complex(1.0, 0.0) : kI;

  auto res = tracer.run(z0, dir, inc, rotate, mu);

  Trajectory t;
  t.seedPoint = p.z;
  t.seedDirection = direction;
  t.kind = kind;
  t.samples.reserve(res.samples.size() + 1);
  t.samples.push_back(p.z);
  for (const auto& s : res.samples) t.samples.push_back(s);
  if (res.hitIndex >= 0) {
    t.terminal.kind = Terminal::HitsCriticalPoint;
    const Complex hit = tracer.captureAt[res.hitIndex];
    for (size_t i = 0; i < qd.points.size(); ++i)
      if (std::abs(qd.points[i].z - hit) < 1e-12)
        t.terminal.pointIndex = static_cast<int>(i);
  } else if (res.escaped) {
    t.terminal.kind = Terminal::Asymptotic;
    t.terminal.angle = std::arg(t.samples.back());
  } else {
    t.terminal.kind = Terminal::StepLimit;
  }
  return t;
}

CriticalGraph critical_graph(const QuadraticDifferential& qd,
                             const TraceOptions& opts) {
  CriticalGraph g;
  g.qd = qd;
  g.rmax = opts.rmax;
  for (size_t i = 0; i < qd.points.size(); ++i) {
    const int n = qd.points[i].order + 2;
    for (int d = 0; d < n; ++d) {
      g.trajectories.push_back(trace(qd, static_cast<int>(i), d,
                                     TraceKind::Critical, opts));
      const auto& t = g.trajectories.back();
      if (t.terminal.kind == Terminal::HitsCriticalPoint) {
        int a = static_cast<int>(i), b = t.terminal.pointIndex;
        if (a > b) std::swap(a, b);
        bool seen = false;
        for (const auto& c : g.connections)
          if (c.first == a && c.second == b) seen = true;
        if (!seen) g.connections.emplace_back(a, b);
      }
    }
  }
  // Refined asymptotic census: zeros of Re eta on the circle |z| = R.
  const double R = opts.censusRadius;
  std::function<double(double)> reEta;
  switch (qd.regime.kind) {
    case model::RegimeKind::OneCut: {
      const auto e = endpoints::one_cut(qd.sigma);
      reEta = [R, e, s = qd.sigma](double th) {
        return gfun::eta1(std::polar(R, th), s, e).value.real();
      };
      break;
    }
    case model::RegimeKind::TwoCut: {
      const auto e = endpoints::two_cut(qd.sigma);
      reEta = [R, e, s = qd.sigma](double th) {
        return gfun::eta2(std::polar(R, th), s, e).value.real();
      };
      break;
    }
    case model::RegimeKind::ThreeCut: {
      endpoints::ThreeCutEndpoints e;
      e.a3 = qd.points[0].z;
      e.b3 = qd.points[2].z;
      e.c3 = qd.points[4].z;
      reEta = [R, e, s = qd.sigma](double th) {
        return gfun::eta3(std::polar(R, th), s, e).value.real();
      };
      break;
    }
    default:
      throw std::invalid_argument("critical_graph: bulk regime required");
  }
  // Each sector (k pi/4, (k+1) pi/4) carries exactly one genuine zero of
  // Re eta. The computed value can also jump sign where the quadrature path
  // sweeps across a branch point; those spots keep |Re eta| large and are
  // rejected after bisection.
  for (int k = 0; k < 8; ++k) {
    const double a = k * M_PI / 4.0 + 1e-9;
    const double b = (k + 1) * M_PI / 4.0 - 1e-9;
    const int scan = 64;
    std::vector<double> th(scan + 1), fv(scan + 1);
    for (int i = 0; i <= scan; ++i) {
      th[i] = a + (b - a) * i / scan;
      fv[i] = reEta(th[i]);
    }
    bool found = false;
    for (int i = 1; i <= scan && !found; ++i) {
      if (fv[i - 1] * fv[i] > 0.0) continue;
      double lo = th[i - 1], hi = th[i], flo = fv[i - 1];
      for (int it = 0; it < 60; ++it) {
        const double mid = (lo + hi) / 2.0;
        const double fm = reEta(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      const double mid = (lo + hi) / 2.0;
      if (std::abs(reEta(mid)) < 1.0) {  // genuine zero, not a path jump
        g.censusAngles.push_back(std::remainder(mid, 2.0 * M_PI));
        found = true;
      }
    }
    if (!found) {
      // A quadrature-path jump can flip the sign exactly at the crossing so
      // no sign change is visible; the zero survives as a V-shaped dip of
      // |Re eta|. Minimize |Re eta| around the smallest scanned value.
      int imin = 0;
      for (int i = 1; i <= scan; ++i)
        if (std::abs(fv[i]) < std::abs(fv[imin])) imin = i;
      double lo = th[std::max(0, imin - 1)], hi = th[std::min(scan, imin + 1)];
      for (int it = 0; it < 80; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (std::abs(reEta(m1)) < std::abs(reEta(m2)))
          hi = m2;
        else
          lo = m1;
      }
      const double mid = (lo + hi) / 2.0;
      if (std::abs(reEta(mid)) < 1.0)
        g.censusAngles.push_back(std::remainder(mid, 2.0 * M_PI));
    }
  }
  return g;
}

int stable_sign(SigmaPoint sigma, Complex z, const model::PhaseRegime& regime,
                double band) {
  const double re = gfun::eta_value(z, sigma, regime).real();
  const double scale = 1.0 + std::pow(std::abs(z), 4);
  if (std::abs(re) < band * scale) throw OnGraph("stable_sign: on the level set");
  return re < 0.0 ? -1 : 1;
}

double polyline_distance(const std::vector<Complex>& pts, Complex z) {
  double best = 1e300;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const Complex a = pts[i], b = pts[i + 1];
    const Complex ab = b - a;
    double t = ((z - a) * std::conj(ab)).real() / std::norm(ab);
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(z - (a + t * ab)));
  }
  if (pts.size() == 1) best = std::min(best, std::abs(z - pts[0]));
  return best;
}

double graph_distance(const CriticalGraph& g, Complex z) {
  double best = 1e300;
  for (const auto& t : g.trajectories)
    best = std::min(best, polyline_distance(t.samples, z));
  return best;
}

}  // namespace quartic::quaddiff
