#pragma once

#include <string>
#include <vector>

#include "quartic/quaddiff.hpp"

namespace quartic::io {

inline constexpr int kSchemaVersion = 1;

// CSV with a "re,im" header, one sample per row.
std::string trajectory_csv(const quaddiff::Trajectory& t);
std::string polyline_csv(const std::vector<model::Complex>& pts);

std::string trajectory_json(const quaddiff::Trajectory& t);
std::string graph_json(const quaddiff::CriticalGraph& g);

// SVG rendering of a critical graph with stable lands shaded.
struct SvgOptions {
  double halfWidth = 0.0;  // 0: auto from the endpoint hull
  int pixels = 720;
  int shadeGrid = 96;  // stable-land sampling resolution (0 disables)
};
std::string graph_svg(const quaddiff::CriticalGraph& g, const SvgOptions& opts = {});

// Phase-diagram SVG from boundary polylines (curves in the sigma plane).
struct CurveForSvg {
  std::string label;
  std::vector<model::Complex> pts;
  bool dashed = false;
};
std::string curves_svg(const std::vector<CurveForSvg>& curves, double halfWidth,
                       int pixels = 720);

}  // namespace quartic::io
