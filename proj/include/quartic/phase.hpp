#pragma once

#include <utility>
#include <vector>

#include "quartic/model.hpp"

namespace quartic::phase {

using model::BoundaryId;
using model::Complex;
using model::SigmaPoint;

struct PoleAtZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct ZeroBeta : std::domain_error {
  using std::domain_error::domain_error;
};
struct VerificationMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Psi(sigma) = eta1(z0(sigma); sigma); vanishes on the one-to-three-cut
// critical curves. The imaginary part is reduced mod 2 pi into (-pi, pi].
Complex psi(SigmaPoint sigma);
// Raw value without the mod-2pi reduction (used for differentiation).
Complex psi_raw(SigmaPoint sigma);

// Phi(sigma) = eta2(0; sigma); vanishes on the two-to-three-cut curves.
Complex phi(SigmaPoint sigma);

// Auxiliary quadratic differentials.
Complex xi(Complex beta);        // (16 - b^2)(16 + 3 b^2)^3 / (1024 b^6)
Complex upsilon(SigmaPoint s);   // s^2/4 - 1

// Scaled Joukowski correspondence between the beta and sigma planes.
Complex joukowski(Complex beta);
std::pair<Complex, Complex> inverse_joukowski(SigmaPoint sigma);  // beta+, beta-

struct BoundaryCurve {
  BoundaryId id;
  std::vector<Complex> points;  // sigma-plane polyline
  bool isBoundary = true;       // false for VI/VIII/XI
  double asymptoticAngle = std::numeric_limits<double>::quiet_NaN();
};

BoundaryCurve trace_boundary(BoundaryId id);

// Cached phase classifier; curve tracing happens once on first use.
class Classifier {
 public:
  static const Classifier& instance();

  model::PhaseRegime classify(SigmaPoint sigma, bool verify = false) const;
  // Distance to the nearest true boundary curve (refined near the curves).
  double nearest_boundary(SigmaPoint sigma, BoundaryId* which = nullptr) const;
  const std::vector<BoundaryCurve>& curves() const { return curves_; }

 private:
  Classifier();
  model::PhaseRegime classify_fast(SigmaPoint sigma) const;
  void verify_regime(SigmaPoint sigma, const model::PhaseRegime& regime) const;

  std::vector<BoundaryCurve> curves_;       // gamma1..gamma6 + fakes
  std::vector<Complex> oneCutBoundary_;     // gamma1 + gamma3 chain (upper)
  std::vector<Complex> twoThreeBoundary_;   // gamma5 chain (upper)
};

inline model::PhaseRegime classify(SigmaPoint sigma, bool verify = false) {
  return Classifier::instance().classify(sigma, verify);
}

}  // namespace quartic::phase
