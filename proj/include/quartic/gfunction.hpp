#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartic/endpoints.hpp"
#include "quartic/model.hpp"

namespace quartic::gfun {

using model::Complex;
using model::SigmaPoint;

struct OnCut : std::domain_error {
  using std::domain_error::domain_error;
};
struct PathCrossesCut : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotOnSupport : std::domain_error {
  using std::domain_error::domain_error;
};

struct EtaValue {
  Complex value;
  std::string branchPath;
};

// sqrt(z^2 - b^2) with the branch cut exactly on the segment [-b, b].
Complex sqrt_segment(Complex z, Complex b);
// sqrt(zeta^2 - 4) with the cut on [-2, 2] (Joukowski-type).
Complex sqrt_pair(Complex zeta);

// One-cut eta: closed form with eta1(b1) = 0, cuts only on the support
// segment plus the leftward continuation through -b1.
EtaValue eta1(Complex z, SigmaPoint sigma);
EtaValue eta1(Complex z, SigmaPoint sigma, const endpoints::OneCutEndpoints& e);

// Two-cut eta: closed form with eta2(b2) = 0. The imaginary part carries
// 2 pi i jumps across the gap's level curves; the real part is globally
// consistent.
EtaValue eta2(Complex z, SigmaPoint sigma);
EtaValue eta2(Complex z, SigmaPoint sigma, const endpoints::TwoCutEndpoints& e);

// Three-cut eta by quadrature from c3 along [c3, waypoints..., z]; branch
// fixed by Re eta3 -> -infinity along the positive real direction.
EtaValue eta3(Complex z, SigmaPoint sigma, const endpoints::ThreeCutEndpoints& e,
              const std::vector<Complex>& waypoints = {});

// Regime dispatch used by the tracers/classifiers.
Complex eta_value(Complex z, SigmaPoint sigma, const model::PhaseRegime& regime);

// g(z) = (V + ellStar)/2 + eta/2 for the regime.
Complex g_value(Complex z, SigmaPoint sigma, const model::PhaseRegime& regime);

// g(z) - log z, evaluated through cancellation-free rationalized forms far
// from the support (one- and two-cut regimes); needed at |z| >> 1 where the
// direct difference loses all precision.
Complex g_minus_log(Complex z, SigmaPoint sigma, const model::PhaseRegime& regime);

struct DensitySample {
  Complex point;
  Complex density;  // line density against arclength
};
// Equilibrium density at a support point s; tangentHint orients the arc (it
// is estimated from the quadratic differential when absent). Passing the
// solved three-cut endpoints avoids re-running the continuation solver.
DensitySample density(Complex s, SigmaPoint sigma, const model::PhaseRegime& regime,
                      std::optional<Complex> tangentHint = std::nullopt,
                      const endpoints::ThreeCutEndpoints* three = nullptr);

// + boundary value of Q^{1/2} at a support point (left of the oriented arc);
// the branch agrees with the resolvent's +z^3 behavior at infinity.
Complex qhalf_plus(Complex s, SigmaPoint sigma, const model::PhaseRegime& regime,
                   Complex tangent, const endpoints::ThreeCutEndpoints* three = nullptr);

// Numeric ell* of the three-cut regime from g(z) - log z -> 0.
Complex ell3_numeric(SigmaPoint sigma, const endpoints::ThreeCutEndpoints& e);

}  // namespace quartic::gfun
