// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "quartic/gfunction.hpp"
#include "quartic/maps.hpp"
#include "quartic/model.hpp"
#include "quartic/phase.hpp"
#include "quartic/quaddiff.hpp"
#include "quartic/detail/quad.hpp"
#include "quartic/topo.hpp"

using Complex = quartic::model::Complex;
using quartic::model::PhaseRegime;
using quartic::model::RegimeKind;
namespace ep = quartic::endpoints;
namespace gf = quartic::gfun;
namespace qd = quartic::quaddiff;
namespace ph = quartic::phase;
namespace mp = quartic::maps;
namespace tp = quartic::topo;
using quartic::algebra::BigInt;
using quartic::algebra::Rational;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int criterion, const char* name, bool pass, double seconds,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL",
              criterion, name, seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// ---- helpers --------------------------------------------------------------

// Support arcs of a critical graph. Only the designated endpoint pairs count:
// the level set also carries gap-bridge arcs (e.g. a3 to b3 in the three-cut
// regime) that are not part of the measure's support.
std::vector<std::vector<Complex>> support_arcs(const qd::CriticalGraph& g) {
  // (start, end) index pairs in contour order (from the -infinity side).
  std::vector<std::pair<int, int>> want;
  switch (g.qd.regime.kind) {
    case RegimeKind::OneCut:
      want = {{1, 0}};  // -b1 -> b1
      break;
    case RegimeKind::TwoCut:
      want = {{3, 1}, {0, 2}};  // -b2 -> -a2, a2 -> b2
      break;
    default:
      want = {{5, 3}, {1, 0}, {2, 4}};  // -c3 -> -b3, -a3 -> a3, b3 -> c3
      break;
  }
  std::vector<std::vector<Complex>> arcs;
  for (auto [wa, wb] : want) {
    for (const auto& t : g.trajectories) {
      if (t.terminal.kind != qd::Terminal::HitsCriticalPoint) continue;
      int a = -1;
      for (size_t i = 0; i < g.qd.points.size(); ++i)
        if (std::abs(g.qd.points[i].z - t.seedPoint) < 1e-12)
          a = static_cast<int>(i);
      const int b = t.terminal.pointIndex;
      if ((a == wa && b == wb) || (a == wb && b == wa)) {
        arcs.push_back(t.samples);
        if (a == wb)  // reverse into contour order
          std::reverse(arcs.back().begin(), arcs.back().end());
        break;
      }
    }
  }
  return arcs;
}

// Line integral of the equilibrium density along a traced arc, using the
// endpoint-resolving cos(theta) re-parametrization of cumulative arclength.
struct MassResult {
  double mass = 0.0;
  double worstIm = 0.0;
  double minRe = 1e300;
};

MassResult arc_mass(const qd::QuadraticDifferential& qdiff,
                    const std::vector<Complex>& arc, Complex sigma,
                    const PhaseRegime& regime,
                    const ep::ThreeCutEndpoints* three) {
  // The + boundary branch of Q^{1/2} continues analytically off the arc, so
  // the mass integral (1/pi i) int Q_+^{1/2} dz can be taken along the chord
  // polygon of the traced samples with a branch chained from one anchored
  // value; the cos(theta) substitution absorbs the square-root endpoints.
  std::vector<double> cum(arc.size(), 0.0);
  for (size_t i = 1; i < arc.size(); ++i)
    cum[i] = cum[i - 1] + std::abs(arc[i] - arc[i - 1]);
  const double S = cum.back();
  auto position = [&](double s) {
    auto it = std::lower_bound(cum.begin(), cum.end(), s);
    size_t i = std::min<size_t>(std::max<long>(1, it - cum.begin()), arc.size() - 1);
    const double t = (s - cum[i - 1]) / (cum[i] - cum[i - 1]);
    Complex z = arc[i - 1] + t * (arc[i] - arc[i - 1]);
    Complex tan = (arc[i] - arc[i - 1]) / std::abs(arc[i] - arc[i - 1]);
    return std::pair{z, tan};
  };
  // Gauss-Legendre nodes in theta, ascending.
  const int panels = 8, order = 24;
  const auto& rule = quartic::detail::gauss_rule(order);
  struct Node {
    double weight;  // includes (S/2) sin(theta) dtheta
    Complex z, tan;
  };
  std::vector<Node> nodes;
  for (int p = 0; p < panels; ++p) {
    const double a = M_PI * p / panels, w2 = M_PI / (2.0 * panels);
    for (int i = order - 1; i >= 0; --i) {
      const double th = a + (rule.x[i] + 1.0) * w2;
      const double s = S * (1.0 - std::cos(th)) / 2.0;
      auto [z, tan] = position(s);
      nodes.push_back({rule.w[i] * w2 * (S / 2.0) * std::sin(th), z, tan});
    }
  }
  // Anchor the branch at a mid-arc node and chain outward both ways. The
  // stored polynomial is 4 Q (no 1/4 factor), so the anchored value doubles
  // and the total halves at the end.
  const size_t mid = nodes.size() / 2;
  std::vector<Complex> qh(nodes.size());
  qh[mid] = 2.0 * gf::qhalf_plus(nodes[mid].z, sigma, regime, nodes[mid].tan, three);
  for (size_t i = mid + 1; i < nodes.size(); ++i)
    qh[i] = quartic::detail::sqrt_near(qdiff.q(nodes[i].z), qh[i - 1]);
  for (size_t i = mid; i-- > 0;)
    qh[i] = quartic::detail::sqrt_near(qdiff.q(nodes[i].z), qh[i + 1]);
  MassResult out;
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < nodes.size(); ++i)
    acc += nodes[i].weight * qh[i] * nodes[i].tan;
  const Complex mass = acc / (2.0 * M_PI * Complex(0.0, 1.0));
  out.mass = mass.real();
  // Positivity and realness of the density, checked at the traced on-arc
  // samples with the + branch anchored once mid-arc and chained along the
  // offset polyline (the chain never leaves the arc's neighborhood, so it
  // cannot cross another support arc).
  std::vector<Complex> tanAt(arc.size());
  for (size_t i = 0; i < arc.size(); ++i) {
    const size_t i0 = i == 0 ? 0 : i - 1;
    const size_t i1 = std::min(i + 1, arc.size() - 1);
    tanAt[i] = (arc[i1] - arc[i0]) / std::abs(arc[i1] - arc[i0]);
  }
  auto offset = [&](size_t i) {
    return arc[i] + Complex(0, 1) * tanAt[i] * (1e-9 * (1.0 + std::abs(arc[i])));
  };
  const size_t midArc = arc.size() / 2;
  std::vector<Complex> qhArc(arc.size());
  qhArc[midArc] =
      2.0 * gf::qhalf_plus(arc[midArc], sigma, regime, tanAt[midArc], three);
  for (size_t i = midArc + 1; i < arc.size(); ++i)
    qhArc[i] = quartic::detail::sqrt_near(qdiff.q(offset(i)), qhArc[i - 1]);
  for (size_t i = midArc; i-- > 0;)
    qhArc[i] = quartic::detail::sqrt_near(qdiff.q(offset(i)), qhArc[i + 1]);
  // Check interior samples only: within ~1e-3 arclength of a branch point the
  // density vanishes like sqrt and a fixed side offset loses meaning. The
  // trajectory tangent comes from the field itself (t ~ i/sqrt(Q)), oriented
  // by the sample chord; chord tangents carry first-order error wherever the
  // adaptive step length changes.
  const size_t stride = std::max<size_t>(1, arc.size() / 48);
  for (size_t i = stride; i + 1 < arc.size(); i += stride) {
    if (cum[i] < 1e-3 * S || S - cum[i] < 1e-3 * S) continue;
    Complex t = Complex(0, 1) / qhArc[i];
    t /= std::abs(t);
    if ((t * std::conj(tanAt[i])).real() < 0.0) t = -t;
    const Complex dens = qhArc[i] * t / (2.0 * M_PI * Complex(0, 1));
    out.worstIm = std::max(out.worstIm, std::abs(dens.imag()));
    out.minRe = std::min(out.minRe, dens.real());
  }
  return out;
}

// ---- criteria -------------------------------------------------------------

void criterion1() {
  Timer t;
  bool ok = true;
  std::string detail;
  const std::vector<std::vector<unsigned long>> expect = {
      {2, 1}, {36, 60}, {1728, 6336, 1440, 0}, {145152, 964224, 770688, 0}};
  const std::vector<unsigned long> totals = {3, 96, 9504, 1880064};
  for (int j = 1; j <= 4; ++j) {
    auto mc = mp::enumerate_census(j);
    if (mc.totalConnected != totals[j - 1]) ok = false;
    for (int g = 0; g <= 3; ++g) {
      unsigned long want =
          g < static_cast<int>(expect[j - 1].size()) ? expect[j - 1][g] : 0;
      unsigned long got = g < static_cast<int>(mc.counts.size()) ? mc.counts[g] : 0;
      if (want != got) ok = false;
      BigInt closed = mp::closed_form_count(j, g);
      if (closed != BigInt(static_cast<unsigned long>(got))) ok = false;
    }
  }
  if (t.seconds() > 10.0) {
    ok = false;
    detail = "runtime above 10 s";
  }
  report(1, "map-count oracle equals closed forms (j <= 4)", ok, t.seconds(), detail);
}

void criterion2() {
  Timer t;
  bool ok = true;
  auto fs = tp::free_energy_series(3, 16);
  for (int g = 0; g <= 3 && ok; ++g)
    for (int j = 1; j <= 16; ++j)
      if (fs.coeff[g][j] != tp::closed_form_f_coeff(g, j)) {
        ok = false;
        break;
      }
  report(2, "string-equation series equals closed forms (j <= 16, g <= 3)", ok,
         t.seconds());
}

void criterion3() {
  Timer t;
  bool ok = true;
  auto c = mp::c2g_constants(4);
  using quartic::algebra::Sqrt3;
  ok = ok && c[1] == Sqrt3(Rational(1, 1728));
  ok = ok && c[2] == Sqrt3(Rational(0), Rational(49, 71663616));
  ok = ok && c[3] == Sqrt3(Rational(25L * 49, 2097152L * 59049));
  auto k2 = mp::kg_constant(2);
  auto k3 = mp::kg_constant(3);
  ok = ok && k2.value == Rational(7, 1080) && k2.overSqrtPi;
  ok = ok && k3.value == Rational(245, 995328) && !k3.overSqrtPi;
  auto table = tp::string_recursion_u(4);
  for (int g = 1; g <= 4; ++g) {
    auto s = tp::singular_structure(table, g);
    ok = ok && s.twiceExponent == 1 - 5L * g && s.c2g == c[g];
  }
  report(3, "constants C_2g, K_g and singular structure", ok, t.seconds());
}

void criterion4() {
  Timer t;
  bool ok = true;
  for (int g = 0; g <= 3; ++g)
    for (int j : {50, 100, 200}) {
      const double ratio = mp::asymptotic_ratio(j, g);
      if (!(std::abs(ratio - 1.0) <= 5.0 / std::sqrt(static_cast<double>(j))))
        ok = false;
    }
  const double corr = mp::asymptotic_ratio(200, 1) - 1.0;
  const double expect = -1.0 / std::sqrt(M_PI * 200.0);
  if (!(std::abs(corr - expect) <= 0.2 * std::abs(expect))) ok = false;
  report(4, "map-count asymptotics and the g=1 correction", ok, t.seconds());
}

void criterion5() {
  Timer t;
  bool ok = true;
  std::string detail;
  auto flip = [&](Complex base, Complex dir, double lo, double hi, RegimeKind from) {
    for (int it = 0; it < 50; ++it) {
      const double mid = (lo + hi) / 2.0;
      if (ph::classify(base + mid * dir).kind == from)
        lo = mid;
      else
        hi = mid;
    }
    return (lo + hi) / 2.0;
  };
  const double y1 = flip(Complex(-1, 0), Complex(0, 1), 1.0, 2.5, RegimeKind::OneCut);
  if (!(std::abs(y1 - 1.7795) <= 0.005)) ok = false;
  const double y2 = flip(Complex(-3, 0), Complex(0, 1), 1.0, 2.5, RegimeKind::TwoCut);
  if (!(std::abs(y2 - 1.5025) <= 0.005)) ok = false;
  const double x3 =
      flip(Complex(0, 4), Complex(1, 0), -2.0, 0.5, RegimeKind::ThreeCut);
  if (!(std::abs(x3 - (-1.15)) <= 0.02)) ok = false;
  // Fake transition: the reference value 1+3.92i rounds the crossing of the
  // non-boundary component VI on Re sigma = 1 to two decimals; locate the
  // crossing, require it within that rounding, check |Re Psi| < 5e-4 at the
  // located point, and confirm the classification stays one-cut around it.
  const bool fakeOne = ph::classify(Complex(1, 3.92)).kind == RegimeKind::OneCut &&
                       ph::classify(Complex(1, 3.90)).kind == RegimeKind::OneCut &&
                       ph::classify(Complex(1, 3.94)).kind == RegimeKind::OneCut;
  double lo = 3.85, hi = 3.97;
  double flo = ph::psi(Complex(1, lo)).real();
  for (int it = 0; it < 60; ++it) {
    const double mid = (lo + hi) / 2.0;
    const double fm = ph::psi(Complex(1, mid)).real();
    if (flo * fm <= 0.0)
      hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  const double yFake = (lo + hi) / 2.0;
  const bool fakeLevel = std::abs(yFake - 3.92) <= 0.005 &&
                         std::abs(ph::psi(Complex(1, yFake)).real()) < 5e-4;
  if (!fakeOne || !fakeLevel) ok = false;
  char buf[160];
  std::snprintf(buf, sizeof buf, "flips at y=%.4f, y=%.4f, x=%.4f; fake at y=%.4f",
                y1, y2, x3, yFake);
  detail = buf;
  report(5, "phase boundaries at the reference crossings", ok, t.seconds(), detail);
}

void criterion6() {
  Timer t;
  bool ok = true;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  // one-cut box
  for (int i = 0; i < 200 && ok; ++i) {
    Complex s(-1.0 + 4.0 * u01(rng), -1.0 + 2.0 * u01(rng));
    if (ep::one_cut_residual(s, ep::one_cut(s)) > 1e-12) ok = false;
  }
  // two-cut box
  for (int i = 0; i < 200 && ok; ++i) {
    Complex s(-8.0 + 4.0 * u01(rng), -1.0 + 2.0 * u01(rng));
    if (ep::two_cut_residual(s, ep::two_cut(s)) > 1e-12) ok = false;
  }
  // three-cut box, continuation sweep ordered by distance from the anchor
  std::vector<Complex> samples;
  for (int i = 0; i < 200; ++i)
    samples.emplace_back(-2.8 + 1.5 * u01(rng), 2.2 + 1.0 * u01(rng));
  std::sort(samples.begin(), samples.end(), [](Complex a, Complex b) {
    return std::abs(a - Complex(-3.0, 1.7)) < std::abs(b - Complex(-3.0, 1.7));
  });
  ep::ThreeCutEndpoints prev;
  bool havePrev = false;
  for (const auto& s : samples) {
    ep::ThreeCutEndpoints e =
        havePrev ? ep::three_cut(s, prev) : ep::three_cut_continued(s);
    if (!e.converged) e = ep::three_cut_continued(s);
    auto r = ep::three_cut_residuals(s, e);
    if (!e.converged || r.alg1 > 1e-10 || r.alg2 > 1e-10 || r.gap1 > 1e-8 ||
        r.gap2 > 1e-8) {
      ok = false;
      break;
    }
    prev = e;
    havePrev = true;
  }
  // sigma = -2 degeneration across solvers
  auto oc = ep::one_cut(Complex(-2, 0));
  auto tc = ep::two_cut(Complex(-2 + 1e-10, 0));
  if (std::abs(oc.b1 - Complex(2, 0)) > 1e-9 || std::abs(tc.b2 - Complex(2, 0)) > 1e-9 ||
      std::abs(tc.a2) > 1e-4 || std::abs(oc.z0) > 1e-4)
    ok = false;
  report(6, "endpoint identities on 200 random couplings per regime", ok,
         t.seconds());
}

void criterion7() {
  Timer t;
  bool ok = true;
  std::string detail;
  char buf[200];
  std::string masses;
  for (Complex sigma : {Complex(1, 0), Complex(-3, 0), Complex(-1, 2)}) {
    PhaseRegime regime = ph::classify(sigma);
    ep::ThreeCutEndpoints e3;
    const ep::ThreeCutEndpoints* e3p = nullptr;
    if (regime.kind == RegimeKind::ThreeCut) {
      e3 = ep::three_cut_continued(sigma);
      e3p = &e3;
    }
    auto graph = qd::critical_graph(qd::build_qd(sigma, regime));
    auto arcs = support_arcs(graph);
    const size_t wantArcs = regime.kind == RegimeKind::OneCut   ? 1
                            : regime.kind == RegimeKind::TwoCut ? 2
                                                                : 3;
    if (arcs.size() != wantArcs) {
      ok = false;
      continue;
    }
    double mass = 0.0;
    for (const auto& arc : arcs) {
      auto m = arc_mass(graph.qd, arc, sigma, regime, e3p);
      mass += m.mass;
      if (m.worstIm > 1e-8 || m.minRe < -1e-8) {
        ok = false;
        char dbuf[120];
        std::snprintf(dbuf, sizeof dbuf, " [im=%.2e minRe=%.2e]", m.worstIm, m.minRe);
        masses += dbuf;
      }
    }
    if (std::abs(mass - 1.0) > 1e-6) ok = false;
    std::snprintf(buf, sizeof buf, "%smass(%g%+gi)=%.9f", masses.empty() ? "" : ", ",
                  sigma.real(), sigma.imag(), mass);
    masses += buf;
    // Variational equality at interior support points: the side limits carry
    // an O(delta) unstable-land term, so extrapolate delta -> 0 from two
    // offsets (g+ + g- - V - ell* collapses to (eta+ + eta-)/2).
    for (const auto& arc : arcs) {
      std::vector<double> cum(arc.size(), 0.0);
      for (size_t i = 1; i < arc.size(); ++i)
        cum[i] = cum[i - 1] + std::abs(arc[i] - arc[i - 1]);
      for (double frac : {0.25, 0.5, 0.75}) {
        size_t i = 1;
        while (i + 1 < arc.size() && cum[i] < frac * cum.back()) ++i;
        const Complex z = arc[i];
        const Complex tan = (arc[i + 1] - arc[i - 1]) / std::abs(arc[i + 1] - arc[i - 1]);
        auto avg = [&](double delta) {
          const Complex off = Complex(0, 1) * tan * delta;
          switch (regime.kind) {
            case RegimeKind::ThreeCut:
              return (gf::eta3(z + off, sigma, e3).value.real() +
                      gf::eta3(z - off, sigma, e3).value.real()) /
                     2.0;
            case RegimeKind::TwoCut:
              return (gf::eta2(z + off, sigma).value.real() +
                      gf::eta2(z - off, sigma).value.real()) /
                     2.0;
            default:
              return (gf::eta1(z + off, sigma).value.real() +
                      gf::eta1(z - off, sigma).value.real()) /
                     2.0;
          }
        };
        const double delta = 1e-6 * (1.0 + std::abs(z));
        const double re = 2.0 * avg(delta / 2.0) - avg(delta);
        if (std::abs(re) > 1e-8) {
          ok = false;
          char dbuf[96];
          std::snprintf(dbuf, sizeof dbuf, " [variational=%.2e at %g]", re, frac);
          masses += dbuf;
        }
      }
    }
  }
  report(7, "equilibrium density: positivity, unit mass, variational equality",
         ok, t.seconds(), masses);
}

void criterion8() {
  Timer t;
  bool ok = true;
  auto table = tp::string_recursion_u(8);
  auto tabs = tp::expansion_tables(table);
  if (!tp::string_residual_u(table, tabs).ok) ok = false;
  for (const auto& c : tabs.Codd)
    if (!c.is_zero()) ok = false;
  for (int g = 0; g <= 4; ++g)
    if (!tp::verify_ode_identity(g, 12).exact) ok = false;
  report(8, "exact series identities (string residual to N^-16, ODE to u^12)",
         ok, t.seconds());
}

void criterion9() {
  Timer t;
  bool ok = true;
  std::string detail;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  auto census_ok = [&](const qd::CriticalGraph& g) {
    if (g.censusAngles.size() != 8) return false;
    for (double a : g.censusAngles) {
      double best = 1e9;
      for (int k = 0; k < 8; ++k)
        best = std::min(best, std::abs(std::remainder(
                                  a - (M_PI / 8 + k * M_PI / 4), 2 * M_PI)));
      if (best > 1e-3) return false;
    }
    return true;
  };
  auto symmetry_ok = [&](const qd::CriticalGraph& g) {
    for (const auto& tr : g.trajectories) {
      const size_t stride = std::max<size_t>(1, tr.samples.size() / 6);
      for (size_t i = 0; i < tr.samples.size(); i += stride) {
        if (std::abs(tr.samples[i]) > 19.0) continue;
        if (qd::graph_distance(g, -tr.samples[i]) > 1e-6) return false;
      }
    }
    return true;
  };

  auto run_box = [&](const char* name, PhaseRegime regime, double x0, double dx,
                     double y0, double dy) {
    for (int i = 0; i < 10 && ok; ++i) {
      Complex s(x0 + dx * u01(rng), y0 + dy * u01(rng));
      auto g = qd::critical_graph(qd::build_qd(s, regime));
      if (!census_ok(g) || !symmetry_ok(g)) {
        ok = false;
        char buf[120];
        std::snprintf(buf, sizeof buf, "%s sample (%.3f,%.3f): census=%zu", name,
                      s.real(), s.imag(), g.censusAngles.size());
        detail = buf;
      }
    }
  };
  run_box("one-cut", PhaseRegime::one_cut(), 0.2, 2.5, -0.8, 1.6);
  run_box("two-cut", PhaseRegime::two_cut(), -7.0, 3.0, -0.8, 1.6);
  run_box("three-cut", PhaseRegime::three_cut(), -2.6, 1.2, 2.3, 0.8);
  // sigma = 1 support trajectory real to 1e-8
  {
    auto g = qd::critical_graph(qd::build_qd(Complex(1, 0), PhaseRegime::one_cut()));
    for (const auto& tr : g.trajectories) {
      if (tr.terminal.kind != qd::Terminal::HitsCriticalPoint) continue;
      for (const auto& z : tr.samples)
        if (std::abs(z.imag()) > 1e-8) ok = false;
    }
  }
  report(9, "tracer: 8-ray census, real support at sigma=1, z -> -z symmetry",
         ok, t.seconds(), detail);
}

}  // namespace

void optional_j5() {
  if (!std::getenv("QUARTIC_ACCEPT_J5")) {
    std::printf("[----] optional j=5 census skipped (set QUARTIC_ACCEPT_J5=1)\n");
    return;
  }
  Timer t;
  auto mc = mp::enumerate_census(5);
  bool ok = mc.totalPairings == 654729075ULL;
  for (int g = 0; g <= 3; ++g)
    ok = ok && mp::closed_form_count(5, g) ==
                   BigInt(static_cast<unsigned long>(mc.counts[g]));
  ok = ok && t.seconds() < 600.0;
  report(1, "optional j=5 census equals closed forms", ok, t.seconds());
}

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  optional_j5();
  if (g_failures == 0)
    std::printf("acceptance: all criteria PASSED\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
