#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "quartic/endpoints.hpp"
#include "quartic/model.hpp"

namespace quartic::quaddiff {

using model::Complex;
using model::SigmaPoint;

struct SeedNotCritical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BranchLost : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OnGraph : std::domain_error {
  using std::domain_error::domain_error;
};

struct CriticalPoint {
  Complex z;
  int order = 1;  // 1 = simple zero, 2 = double zero
};

// Even degree-6 polynomial Q(z) with the regime's critical points.
struct QuadraticDifferential {
  model::PhaseRegime regime;
  SigmaPoint sigma;
  std::vector<Complex> coeffs;  // Q(z) = sum coeffs[k] z^k, k = 0..6
  std::vector<CriticalPoint> points;

  Complex q(Complex z) const;
  Complex dq(Complex z) const;
  Complex d2q(Complex z) const;
};

QuadraticDifferential build_qd(SigmaPoint sigma, const model::PhaseRegime& regime);

enum class TraceKind { Critical, Orthogonal };

struct Terminal {
  enum Kind { HitsCriticalPoint, Asymptotic, StepLimit } kind = StepLimit;
  int pointIndex = -1;  // valid for HitsCriticalPoint
  double angle = 0.0;   // valid for Asymptotic
};

struct Trajectory {
  std::vector<Complex> samples;
  Complex seedPoint;
  int seedDirection = 0;
  TraceKind kind = TraceKind::Critical;
  Terminal terminal;
};

struct TraceOptions {
  double rmax = 20.0;
  double traceTol = 1e-9;
  double hmin = 1e-6;
  double hmax = 0.05;
  int maxSteps = 100000;
  double capture = 1e-6;        // termination distance at a critical point
  double censusRadius = 100.0;  // radius for refined asymptotic angles
};

// Local seed directions (critical trajectories) at a critical point.
std::vector<double> seed_angles(const QuadraticDifferential& qd, int pointIndex,
                                TraceKind kind = TraceKind::Critical);

Trajectory trace(const QuadraticDifferential& qd, int pointIndex, int direction,
                 TraceKind kind = TraceKind::Critical,
                 const TraceOptions& opts = {});

struct CriticalGraph {
  QuadraticDifferential qd;
  std::vector<Trajectory> trajectories;
  std::vector<std::pair<int, int>> connections;  // joined critical points
  std::vector<double> censusAngles;  // refined level-set rays at infinity
  double rmax = 0.0;                 // escape radius used by the traces
};

CriticalGraph critical_graph(const QuadraticDifferential& qd,
                             const TraceOptions& opts = {});

// Sign of Re eta at z: -1 stable, +1 unstable; OnGraph inside the tolerance
// band around the level set.
int stable_sign(SigmaPoint sigma, Complex z, const model::PhaseRegime& regime,
                double band = 1e-9);

double graph_distance(const CriticalGraph& g, Complex z);
double polyline_distance(const std::vector<Complex>& pts, Complex z);

namespace detail_engine {
// Generic level-set tracer shared with the phase-boundary module.
struct LevelTracer {
  std::function<Complex(Complex)> Q;
  double rmax = 20.0;
  double traceTol = 1e-9;
  double hmin = 1e-6, hmax = 0.05;
  int maxSteps = 100000;
  double capture = 1e-6;
  std::vector<Complex> captureAt;   // points that terminate a trace
  double innerStop = 0.0;           // |z| < innerStop terminates (poles)
  // Optional closed-form level function; when set the corrector restores
  // levelFun(z) to its seed value instead of the accumulated integral (used
  // for the auxiliary differentials whose primitives are known exactly).
  std::function<double(Complex)> levelFun;

  struct Result {
    std::vector<Complex> samples;
    int hitIndex = -1;     // index into captureAt
    bool hitInner = false;
    bool escaped = false;   // |z| > rmax
    bool stepLimit = false;
    bool levelLost = false;  // levelFun jumped (a convention cut was crossed)
  };
  // Start at z0 with initial tangent direction dir0 (unit) and eta seed value
  // eta0. Critical traces follow Re(eta) = const (rotate = i, mu = 1);
  // orthogonal traces follow Im(eta) = const (rotate = 1, mu = i).
  Result run(Complex z0, Complex dir0, Complex eta0, Complex rotate,
             Complex mu) const;
};
}  // namespace detail_engine

}  // namespace quartic::quaddiff
