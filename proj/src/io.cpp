#include "quartic/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include <functional>

#include "quartic/gfunction.hpp"

namespace quartic::io {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::json complex_json(model::Complex z) {
  return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json terminal_json(const quaddiff::Terminal& t) {
  nlohmann::json j;
  switch (t.kind) {
    case quaddiff::Terminal::HitsCriticalPoint:
      j["kind"] = "hitsCriticalPoint";
      j["pointIndex"] = t.pointIndex;
      break;
    case quaddiff::Terminal::Asymptotic:
      j["kind"] = "asymptotic";
      j["angle"] = t.angle;
      break;
    case quaddiff::Terminal::StepLimit:
      j["kind"] = "stepLimit";
      break;
  }
  return j;
}

}  // namespace

std::string trajectory_csv(const quaddiff::Trajectory& t) {
  return polyline_csv(t.samples);
}

std::string polyline_csv(const std::vector<model::Complex>& pts) {
  std::ostringstream os;
  os << "re,im\n";
  for (const auto& z : pts) os << fmt(z.real()) << "," << fmt(z.imag()) << "\n";
  return os.str();
}

std::string trajectory_json(const quaddiff::Trajectory& t) {
  nlohmann::json j;
  j["schemaVersion"] = kSchemaVersion;
  j["seedPoint"] = complex_json(t.seedPoint);
  j["seedDirection"] = t.seedDirection;
  j["kind"] = (t.kind == quaddiff::TraceKind::Critical) ? "critical" : "orthogonal";
  j["terminal"] = terminal_json(t.terminal);
  auto& samples = j["samples"] = nlohmann::json::array();
  for (const auto& z : t.samples) samples.push_back({z.real(), z.imag()});
  return j.dump(2);
}

std::string graph_json(const quaddiff::CriticalGraph& g) {
  nlohmann::json j;
  j["schemaVersion"] = kSchemaVersion;
  j["sigma"] = complex_json(g.qd.sigma);
  j["regime"] = model::to_string(g.qd.regime);
  j["M"] = g.rmax;  // radius standing in for the far-field reach checks
  auto& pts = j["criticalPoints"] = nlohmann::json::array();
  for (const auto& p : g.qd.points)
    pts.push_back({{"z", complex_json(p.z)}, {"order", p.order}});
  auto& cons = j["connections"] = nlohmann::json::array();
  for (const auto& c : g.connections) cons.push_back({c.first, c.second});
  auto& census = j["censusAngles"] = nlohmann::json::array();
  for (double a : g.censusAngles) census.push_back(a);
  auto& trajs = j["trajectories"] = nlohmann::json::array();
  for (const auto& t : g.trajectories) {
    nlohmann::json tj;
    tj["seedPoint"] = complex_json(t.seedPoint);
    tj["seedDirection"] = t.seedDirection;
    tj["terminal"] = terminal_json(t.terminal);
    auto& samples = tj["samples"] = nlohmann::json::array();
    for (const auto& z : t.samples) samples.push_back({z.real(), z.imag()});
    trajs.push_back(std::move(tj));
  }
  return j.dump(2);
}

namespace {

struct Mapper {
  double half;
  int px;
  double x(double re) const { return (re + half) / (2 * half) * px; }
  double y(double im) const { return (half - im) / (2 * half) * px; }
};

void polyline_path(std::ostringstream& os, const std::vector<model::Complex>& pts,
                   const Mapper& m, const char* color, double width,
                   bool dashed = false) {
  if (pts.size() < 2) return;
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
     << "\"";
  if (dashed) os << " stroke-dasharray=\"6,4\"";
  os << " points=\"";
  // Thin out dense sample lists.
  const size_t stride = std::max<size_t>(1, pts.size() / 4000);
  for (size_t i = 0; i < pts.size(); i += stride)
    os << fmt(m.x(pts[i].real())) << "," << fmt(m.y(pts[i].imag())) << " ";
  const auto& last = pts.back();
  os << fmt(m.x(last.real())) << "," << fmt(m.y(last.imag()));
  os << "\"/>\n";
}

}  // namespace

std::string graph_svg(const quaddiff::CriticalGraph& g, const SvgOptions& opts) {
  double half = opts.halfWidth;
  if (half <= 0.0) {
    for (const auto& p : g.qd.points) half = std::max(half, std::abs(p.z));
    half = std::max(1.0, half * 1.8);
  }
  Mapper m{half, opts.pixels};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.pixels
     << "\" height=\"" << opts.pixels << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Stable lands (Re eta < 0) shaded light blue on a coarse grid. The eta
  // evaluator reuses the graph's own critical points so no endpoint solving
  // happens per cell.
  if (opts.shadeGrid > 0) {
    std::function<double(model::Complex)> reEta;
    switch (g.qd.regime.kind) {
      case model::RegimeKind::OneCut: {
        const auto e = quartic::endpoints::one_cut(g.qd.sigma);
        reEta = [e, s = g.qd.sigma](model::Complex z) {
          return gfun::eta1(z, s, e).value.real();
        };
        break;
      }
      case model::RegimeKind::TwoCut: {
        const auto e = quartic::endpoints::two_cut(g.qd.sigma);
        reEta = [e, s = g.qd.sigma](model::Complex z) {
          return gfun::eta2(z, s, e).value.real();
        };
        break;
      }
      default: {
        quartic::endpoints::ThreeCutEndpoints e;
        e.a3 = g.qd.points[0].z;
        e.b3 = g.qd.points[2].z;
        e.c3 = g.qd.points[4].z;
        reEta = [e, s = g.qd.sigma](model::Complex z) {
          return gfun::eta3(z, s, e).value.real();
        };
        break;
      }
    }
    const int n = opts.shadeGrid;
    const double cell = 2.0 * half / n;
    const double cellPx = static_cast<double>(opts.pixels) / n;
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const model::Complex z(-half + (ix + 0.5) * cell, half - (iy + 0.5) * cell);
        double re;
        try {
          re = reEta(z);
        } catch (...) {
          continue;
        }
        if (re < 0.0)
          os << "<rect x=\"" << fmt(ix * cellPx) << "\" y=\"" << fmt(iy * cellPx)
             << "\" width=\"" << fmt(cellPx + 0.5) << "\" height=\"" << fmt(cellPx + 0.5)
             << "\" fill=\"#cfe8ff\"/>\n";
      }
    }
  }
  for (const auto& t : g.trajectories) polyline_path(os, t.samples, m, "#aa1111", 1.6);
  for (const auto& p : g.qd.points)
    os << "<circle cx=\"" << fmt(m.x(p.z.real())) << "\" cy=\"" << fmt(m.y(p.z.imag()))
       << "\" r=\"3.5\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string curves_svg(const std::vector<CurveForSvg>& curves, double halfWidth,
                       int pixels) {
  Mapper m{halfWidth, pixels};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\""
     << pixels << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  os << "<line x1=\"0\" y1=\"" << fmt(m.y(0)) << "\" x2=\"" << pixels << "\" y2=\""
     << fmt(m.y(0)) << "\" stroke=\"#cccccc\"/>\n";
  os << "<line x1=\"" << fmt(m.x(0)) << "\" y1=\"0\" x2=\"" << fmt(m.x(0)) << "\" y2=\""
     << pixels << "\" stroke=\"#cccccc\"/>\n";
  const char* colors[] = {"#aa1111", "#1144aa", "#118833", "#886611"};
  int ci = 0;
  for (const auto& c : curves) {
    polyline_path(os, c.pts, m, colors[ci % 4], 1.8, c.dashed);
    if (!c.pts.empty())
      os << "<text x=\"" << fmt(m.x(c.pts[c.pts.size() / 2].real()) + 4) << "\" y=\""
         << fmt(m.y(c.pts[c.pts.size() / 2].imag())) << "\" font-size=\"12\">" << c.label
         << "</text>\n";
    ++ci;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace quartic::io
