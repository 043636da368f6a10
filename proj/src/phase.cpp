#include "quartic/phase.hpp"

#include <algorithm>
#include <cmath>

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "quartic/gfunction.hpp"
#include "quartic/quaddiff.hpp"

namespace quartic::phase {

namespace {

constexpr Complex kI(0.0, 1.0);
const Complex kBeta3(0.0, 4.0 / 1.7320508075688772);   // +4i/sqrt(3)
const Complex kBeta4(0.0, -4.0 / 1.7320508075688772);  // -4i/sqrt(3)

double reduce_mod_2pi(double x) {
  double r = std::remainder(x, 2.0 * M_PI);
  if (r <= -M_PI) r += 2.0 * M_PI;
  return r;
}

// Coefficient of (z - p)^m in Q near a zero p of order m.
Complex local_coefficient(const std::function<Complex(Complex)>& Q, Complex p,
                          int m) {
  const double h = 1e-4;
  Complex acc(0.0, 0.0);
  for (int k = 0; k < 4; ++k) {
    const Complex d = std::polar(h, 2.0 * M_PI * k / 4.0 + 0.3);
    acc += Q(p + d) / std::pow(d, m);
  }
  return acc / 4.0;
}

// One critical trajectory of Q dz^2 from the zero p (order m, direction k).
// The corrector works against the exact primitive's real part.
quaddiff::detail_engine::LevelTracer::Result trace_aux(
    const std::function<Complex(Complex)>& Q, Complex p, int m, int k,
    const std::vector<Complex>& captureAt, double rmax, double innerStop,
    std::vector<Complex>* samplesOut,
    const std::function<double(Complex)>& levelFun) {
  quaddiff::detail_engine::LevelTracer tracer;
  tracer.Q = Q;
  tracer.rmax = rmax;
  tracer.innerStop = innerStop;
  for (const auto& q : captureAt)
    if (std::abs(q - p) > 1e-3) tracer.captureAt.push_back(q);
  // The level set crosses itself at the multi-zeros and the corrector's
  // positional resolution degrades like traceTol/|sqrt(Q)| there; capture
  // well before the junction (every same-level point this close lies on an
  // incident line, so no false captures).
  tracer.capture = 1e-3;
  tracer.hmax = 0.04;
  tracer.levelFun = levelFun;
  const Complex c = local_coefficient(Q, p, m);
  const int n = m + 2;
  const double theta = (M_PI - std::arg(c) + 2.0 * M_PI * k) / n;
  const double r0 = 1e-6;
  const Complex dir = std::polar(1.0, theta);
  const Complex z0 = p + r0 * dir;
  Complex inc = -2.0 / n * std::sqrt(c * std::pow(z0 - p, n));
  inc = Complex(0.0, inc.imag());
  auto res = tracer.run(z0, dir, inc, kI, Complex(1.0, 0.0));
  if (samplesOut) {
    samplesOut->clear();
    samplesOut->push_back(p);
    for (const auto& z : res.samples) samplesOut->push_back(z);
  }
  return res;
}

std::vector<Complex> conj_points(const std::vector<Complex>& pts) {
  std::vector<Complex> out;
  out.reserve(pts.size());
  for (const auto& z : pts) out.push_back(std::conj(z));
  return out;
}

}  // namespace

Complex psi_raw(SigmaPoint sigma) {
  const auto e = endpoints::one_cut(sigma);
  return gfun::eta1(e.z0, sigma, e).value;
}

Complex psi(SigmaPoint sigma) {
  Complex v = psi_raw(sigma);
  return Complex(v.real(), reduce_mod_2pi(v.imag()));
}

Complex phi(SigmaPoint sigma) {
  const Complex sq = gfun::sqrt_pair(sigma);
  return -sigma * sq / 4.0 + std::log((sigma + sq) / 2.0);
}

Complex xi(Complex beta) {
  if (beta == Complex(0.0, 0.0)) throw PoleAtZero("xi: pole at beta = 0");
  const Complex b2 = beta * beta;
  const Complex f = 16.0 + 3.0 * b2;
  return (16.0 - b2) * f * f * f / (1024.0 * std::pow(beta, 6));
}

Complex upsilon(SigmaPoint s) { return s * s / 4.0 - 1.0; }

Complex joukowski(Complex beta) {
  if (beta == Complex(0.0, 0.0)) throw ZeroBeta("joukowski: beta = 0");
  return -0.75 * beta + 4.0 / beta;
}

std::pair<Complex, Complex> inverse_joukowski(SigmaPoint sigma) {
  const Complex s = model::branch::sqrt12(sigma);
  return {2.0 / 3.0 * (-sigma + s), 2.0 / 3.0 * (-sigma - s)};
}

BoundaryCurve trace_boundary(BoundaryId id) {
  // Lower-half-plane curves by conjugation symmetry.
  switch (id) {
    case BoundaryId::Gamma2:
    case BoundaryId::Gamma4:
    case BoundaryId::Gamma6:
    case BoundaryId::FakeVIII: {
      BoundaryId up = id == BoundaryId::Gamma2   ? BoundaryId::Gamma1
                      : id == BoundaryId::Gamma4 ? BoundaryId::Gamma3
                      : id == BoundaryId::Gamma6 ? BoundaryId::Gamma5
                                                 : BoundaryId::FakeVI;
      BoundaryCurve c = trace_boundary(up);
      c.id = id;
      c.points = conj_points(c.points);
      if (!std::isnan(c.asymptoticAngle)) c.asymptoticAngle = -c.asymptoticAngle;
      return c;
    }
    default:
      break;
  }

  BoundaryCurve out;
  out.id = id;
  auto levelPhi = [](Complex s) { return phi(s).real(); };
  auto levelPsi = [](Complex b) { return psi_raw(joukowski(b)).real(); };
  if (id == BoundaryId::Gamma5) {
    // Upsilon trajectory from sigma = -2 into the upper left.
    std::vector<Complex> samples;
    trace_aux([](Complex s) { return upsilon(s); }, Complex(-2.0, 0.0), 1, 1,
              {Complex(2.0, 0.0)}, 40.0, 0.0, &samples, levelPhi);
    if (samples.size() > 4 && samples[4].imag() < 0.0)
      trace_aux([](Complex s) { return upsilon(s); }, Complex(-2.0, 0.0), 1, 2,
                {Complex(2.0, 0.0)}, 40.0, 0.0, &samples, levelPhi);
    out.points = samples;
    out.asymptoticAngle = 3.0 * M_PI / 4.0;
    out.isBoundary = true;
    return out;
  }
  if (id == BoundaryId::FakeXI) {
    // Re Psi vanishes identically on the real ray left of -2 (real endpoint
    // data make the defining integral purely imaginary there).
    for (double x = -2.0; x >= -40.0; x -= 0.05)
      out.points.emplace_back(x, 0.0);
    out.isBoundary = false;
    out.asymptoticAngle = M_PI;
    return out;
  }

  // Xi-plane tracing for gamma1/gamma3/XI/VI.
  auto Q = [](Complex b) { return xi(b); };
  const std::vector<Complex> zeros{Complex(4, 0), Complex(-4, 0), kBeta3, kBeta4};
  auto to_sigma = [](const std::vector<Complex>& bs) {
    std::vector<Complex> out;
    out.reserve(bs.size());
    for (const auto& b : bs) {
      if (std::abs(b) < 1e-12) continue;
      Complex s = joukowski(b);
      if (std::abs(s) <= 40.0) out.push_back(s);
    }
    return out;
  };

  if (id == BoundaryId::Gamma1) {
    // From beta = 4 (simple zero): one direction reaches -4i/sqrt(3)
    // (gamma1 once mapped), one reaches +4i/sqrt(3), one escapes (XI).
    for (int k = 0; k < 3; ++k) {
      std::vector<Complex> samples;
      auto res = trace_aux(Q, Complex(4, 0), 1, k, zeros, 64.0, 0.05, &samples,
                           levelPsi);
      if (res.hitIndex >= 0 && std::abs(samples.back() - kBeta4) < 1e-6) {
        samples.back() = kBeta4;  // land exactly on the zero
        out.points = to_sigma(samples);
        out.isBoundary = true;
        return out;
      }
    }
    throw std::runtime_error("trace_boundary: gamma1 trace not found");
  }

  if (id == BoundaryId::Gamma3 || id == BoundaryId::FakeVI) {
    // From beta = -4i/sqrt(3) (order-3 zero): two directions reach the pole
    // at 0; the sigma-images escape along 3 pi/4 (gamma3 = VII) and pi/4
    // (the fake transition VI).
    for (int k = 0; k < 5; ++k) {
      std::vector<Complex> samples;
      auto res = trace_aux(Q, kBeta4, 3, k, zeros, 64.0, 0.02, &samples, levelPsi);
      // VII reaches the pole cleanly; VI is cut short where z0 crosses the
      // straight-chord convention cut of Psi. Identify by the sigma image.
      if (!res.hitInner && !res.levelLost) continue;
      auto sig = to_sigma(samples);
      if (sig.size() < 8) continue;
      const double ang = std::arg(sig.back());
      const bool upLeft = ang > 1.9 && ang < 2.9;
      const bool upRight = ang > 0.2 && ang < 1.4;
      if (id == BoundaryId::Gamma3 && res.hitInner && upLeft) {
        out.points = std::move(sig);
        out.isBoundary = true;
        out.asymptoticAngle = 3.0 * M_PI / 4.0;
        return out;
      }
      if (id == BoundaryId::FakeVI && upRight) {
        out.points = std::move(sig);
        out.isBoundary = false;
        out.asymptoticAngle = M_PI / 4.0;
        return out;
      }
    }
    throw std::runtime_error("trace_boundary: gamma3/VI trace not found");
  }
  throw std::invalid_argument("trace_boundary: unknown id");
}

// --- Classifier -----------------------------------------------------------

namespace {

// Crossing count of the horizontal ray {x' > x, y' = y} with a polyline.
int crossings_right(const std::vector<Complex>& pts, Complex sigma) {
  int n = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const Complex a = pts[i], b = pts[i + 1];
    const double ya = a.imag(), yb = b.imag(), y = sigma.imag();
    if ((ya <= y && yb > y) || (yb <= y && ya > y)) {
      const double t = (y - ya) / (yb - ya);
      const double xc = a.real() + t * (b.real() - a.real());
      if (xc > sigma.real()) ++n;
    }
  }
  return n;
}

std::vector<Complex> with_asymptote(std::vector<Complex> pts, double angle) {
  if (!std::isnan(angle) && !pts.empty())
    pts.push_back(pts.back() + std::polar(1e6, angle));
  return pts;
}

}  // namespace

const Classifier& Classifier::instance() {
  static const Classifier c;
  return c;
}

namespace {

// Optional disk cache for traced boundary polylines (QUARTIC_CACHE_DIR).
std::string cache_path() {
  const char* dir = std::getenv("QUARTIC_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/boundary-curves.json";
}

bool load_curves(std::vector<BoundaryCurve>& curves,
                 const std::vector<BoundaryId>& ids) {
  const std::string path = cache_path();
  if (path.empty()) return false;
  std::ifstream is(path);
  if (!is) return false;
  nlohmann::json j;
  try {
    is >> j;
    if (j.at("schemaVersion") != 1) return false;
    const auto& arr = j.at("curves");
    if (arr.size() != ids.size()) return false;
    for (size_t i = 0; i < ids.size(); ++i) {
      BoundaryCurve c;
      c.id = ids[i];
      if (arr[i].at("id") != model::to_string(ids[i])) return false;
      c.isBoundary = arr[i].at("isBoundary");
      c.asymptoticAngle = arr[i].value("asymptoticAngle",
                                       std::numeric_limits<double>::quiet_NaN());
      for (const auto& p : arr[i].at("points"))
        c.points.emplace_back(p[0].get<double>(), p[1].get<double>());
      curves.push_back(std::move(c));
    }
    return true;
  } catch (...) {
    curves.clear();
    return false;
  }
}

void save_curves(const std::vector<BoundaryCurve>& curves) {
  const std::string path = cache_path();
  if (path.empty()) return;
  nlohmann::json j;
  j["schemaVersion"] = 1;
  auto& arr = j["curves"] = nlohmann::json::array();
  for (const auto& c : curves) {
    nlohmann::json cj;
    cj["id"] = model::to_string(c.id);
    cj["isBoundary"] = c.isBoundary;
    if (!std::isnan(c.asymptoticAngle)) cj["asymptoticAngle"] = c.asymptoticAngle;
    auto& pts = cj["points"] = nlohmann::json::array();
    for (const auto& z : c.points) pts.push_back({z.real(), z.imag()});
    arr.push_back(std::move(cj));
  }
  std::ofstream os(path);
  if (os) os << j.dump();
}

}  // namespace

Classifier::Classifier() {
  const std::vector<BoundaryId> ids = {
      BoundaryId::Gamma1, BoundaryId::Gamma2,   BoundaryId::Gamma3,
      BoundaryId::Gamma4, BoundaryId::Gamma5,   BoundaryId::Gamma6,
      BoundaryId::FakeVI, BoundaryId::FakeVIII, BoundaryId::FakeXI};
  if (!load_curves(curves_, ids)) {
    for (auto id : ids) curves_.push_back(trace_boundary(id));
    save_curves(curves_);
  }
  // One-cut boundary chain: gamma1 (-2 up to i sqrt 12) then gamma3 off to
  // infinity along 3 pi/4.
  oneCutBoundary_ = curves_[0].points;
  {
    const auto& g3 = curves_[2].points;
    oneCutBoundary_.insert(oneCutBoundary_.end(), g3.begin(), g3.end());
    oneCutBoundary_ = with_asymptote(oneCutBoundary_, 3.0 * M_PI / 4.0);
  }
  twoThreeBoundary_ = with_asymptote(curves_[4].points, 3.0 * M_PI / 4.0);
}

double Classifier::nearest_boundary(SigmaPoint sigma, BoundaryId* which) const {
  double best = 1e300;
  BoundaryId bestId = BoundaryId::Gamma1;
  for (const auto& c : curves_) {
    if (!c.isBoundary) continue;
    std::vector<Complex> pts = with_asymptote(c.points, c.asymptoticAngle);
    const double d = quaddiff::polyline_distance(pts, sigma);
    if (d < best) {
      best = d;
      bestId = c.id;
    }
  }
  // Refine via the level residual when close: distance ~ |Re F|/|grad Re F|.
  if (best < 1e-3) {
    const bool g56 = bestId == BoundaryId::Gamma5 || bestId == BoundaryId::Gamma6;
    auto F = [&](SigmaPoint s) { return g56 ? phi(s).real() : psi(s).real(); };
    const double f0 = F(sigma);
    const double h = 1e-6;
    const double gx = (F(sigma + h) - F(sigma - h)) / (2.0 * h);
    const double gy = (F(sigma + h * kI) - F(sigma - h * kI)) / (2.0 * h);
    const double grad = std::hypot(gx, gy);
    if (grad > 1e-12) best = std::abs(f0) / grad;
  }
  if (which) *which = bestId;
  return best;
}

model::PhaseRegime Classifier::classify_fast(SigmaPoint sigma) const {
  if (model::is_multicritical(sigma, 1e-6)) {
    Complex anchor(-2.0, 0.0);
    for (const auto& p : model::multicritical_points())
      if (std::abs(sigma - p) <= 1e-6) anchor = p;
    return model::PhaseRegime::multicritical(anchor);
  }
  BoundaryId nearId;
  if (nearest_boundary(sigma, &nearId) <= 1e-6)
    return model::PhaseRegime::on_boundary(nearId);

  const SigmaPoint s = sigma.imag() >= 0.0 ? sigma : std::conj(sigma);
  if (s.imag() == 0.0)
    return s.real() > -2.0 ? model::PhaseRegime::one_cut()
                           : model::PhaseRegime::two_cut();
  if (crossings_right(oneCutBoundary_, s) % 2 == 0)
    return model::PhaseRegime::one_cut();
  // Not one-cut: gamma5 separates two- from three-cut.
  if (crossings_right(twoThreeBoundary_, s) % 2 == 1)
    return model::PhaseRegime::two_cut();
  return model::PhaseRegime::three_cut();
}

model::PhaseRegime Classifier::classify(SigmaPoint sigma, bool verify) const {
  model::PhaseRegime r = classify_fast(sigma);
  if (verify &&
      (r.kind == model::RegimeKind::OneCut || r.kind == model::RegimeKind::TwoCut ||
       r.kind == model::RegimeKind::ThreeCut))
    verify_regime(sigma, r);
  return r;
}

void Classifier::verify_regime(SigmaPoint sigma,
                               const model::PhaseRegime& regime) const {
  auto qd = quaddiff::build_qd(sigma, regime);
  auto graph = quaddiff::critical_graph(qd);
  auto connected = [&](int a, int b) {
    for (auto c : graph.connections)
      if ((c.first == a && c.second == b) || (c.first == b && c.second == a))
        return true;
    return false;
  };
  if (graph.censusAngles.size() != 8)
    throw VerificationMismatch("verify: census does not have 8 rays");

  // Stable-land reachability on a coarse grid (resolution-limited check).
  double hull = 0.0;
  for (const auto& p : qd.points) hull = std::max(hull, std::abs(p.z));
  const double L = 1.5 * hull + 1.0;
  const int n = 96;
  const double cell = 2.0 * L / n;
  std::vector<int> stable(n * n, 0);
  auto etaRe = [&](Complex z) {
    switch (regime.kind) {
      case model::RegimeKind::OneCut:
        return gfun::eta1(z, sigma, endpoints::one_cut(sigma)).value.real();
      case model::RegimeKind::TwoCut:
        return gfun::eta2(z, sigma, endpoints::two_cut(sigma)).value.real();
      default: {
        endpoints::ThreeCutEndpoints e;
        e.a3 = qd.points[0].z;
        e.b3 = qd.points[2].z;
        e.c3 = qd.points[4].z;
        // Route around the support through the far field so the quadrature
        // path cannot cross an arc (Re eta3 is only sign-correct along
        // cut-avoiding paths).
        double hull3 = 0.0;
        for (const auto& p : qd.points) hull3 = std::max(hull3, std::abs(p.z));
        const double Rout = 2.5 * hull3 + 0.5;
        std::vector<Complex> way;
        way.push_back(e.c3 * (Rout / std::abs(e.c3)));
        const double a0 = std::arg(e.c3);
        double a1 = std::arg(z);
        while (a1 - a0 > M_PI) a1 -= 2.0 * M_PI;
        while (a1 - a0 < -M_PI) a1 += 2.0 * M_PI;
        const int steps = std::max(1, static_cast<int>(std::abs(a1 - a0) / 0.4));
        for (int i = 1; i <= steps; ++i)
          way.push_back(std::polar(Rout, a0 + (a1 - a0) * i / steps));
        return gfun::eta3(z, sigma, e, way).value.real();
      }
    }
  };
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const Complex z(-L + (ix + 0.5) * cell, -L + (iy + 0.5) * cell);
      stable[iy * n + ix] = etaRe(z) < 0.0 ? 1 : 0;
    }
  auto cellOf = [&](Complex z) {
    int ix = static_cast<int>((z.real() + L) / cell);
    int iy = static_cast<int>((z.imag() + L) / cell);
    ix = std::clamp(ix, 0, n - 1);
    iy = std::clamp(iy, 0, n - 1);
    return iy * n + ix;
  };
  auto flood_connected = [&](Complex from, Complex to) {
    const int start = cellOf(from), goal = cellOf(to);
    if (!stable[start] || !stable[goal]) return false;
    std::vector<int> mark(n * n, 0), queue{start};
    mark[start] = 1;
    while (!queue.empty()) {
      const int cur = queue.back();
      queue.pop_back();
      if (cur == goal) return true;
      const int cx = cur % n, cy = cur / n;
      const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        const int nx = cx + dx[d], ny = cy + dy[d];
        if (nx < 0 || ny < 0 || nx >= n || ny >= n) continue;
        const int id = ny * n + nx;
        if (!mark[id] && stable[id]) {
          mark[id] = 1;
          queue.push_back(id);
        }
      }
    }
    return false;
  };
  const Complex farRight(L - 0.6 * cell, 0.5 * cell);

  switch (regime.kind) {
    case model::RegimeKind::OneCut: {
      if (!connected(0, 1))
        throw VerificationMismatch("verify: one-cut support arc missing");
      if (std::abs(psi(sigma).real()) < 1e-7)
        throw VerificationMismatch("verify: z0 on the critical graph");
      const Complex b1 = qd.points[0].z;
      if (!flood_connected(b1 * (1.0 + 0.2 / std::abs(b1)), farRight))
        throw VerificationMismatch("verify: no stable arc from b1 to +inf");
      break;
    }
    case model::RegimeKind::TwoCut: {
      if (!connected(0, 2) || !connected(1, 3))
        throw VerificationMismatch("verify: two-cut support arcs missing");
      if (phi(sigma).real() >= 0.0)
        throw VerificationMismatch("verify: origin not in a stable land");
      const Complex a2 = qd.points[0].z, b2 = qd.points[2].z;
      const Complex inward = a2 / std::abs(a2);
      if (!flood_connected(Complex(0, 0), a2 - 0.2 * inward) ||
          !flood_connected(Complex(0, 0), -a2 + 0.2 * inward))
        throw VerificationMismatch("verify: gap arc not in a stable land");
      if (!flood_connected(b2 * (1.0 + 0.2 / std::abs(b2)), farRight))
        throw VerificationMismatch("verify: no stable arc from b2 to +inf");
      break;
    }
    case model::RegimeKind::ThreeCut: {
      if (!connected(0, 1) || !connected(2, 4) || !connected(3, 5))
        throw VerificationMismatch("verify: three-cut support arcs missing");
      const Complex a3 = qd.points[0].z, b3 = qd.points[2].z, c3 = qd.points[4].z;
      if (etaRe((a3 + b3) / 2.0) >= 0.0)
        throw VerificationMismatch("verify: (a3,b3) gap not stable");
      if (!flood_connected(c3 * (1.0 + 0.2 / std::abs(c3)), farRight))
        throw VerificationMismatch("verify: no stable arc from c3 to +inf");
      break;
    }
    default:
      break;
  }
}

}  // namespace quartic::phase
