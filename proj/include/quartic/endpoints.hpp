#pragma once

#include <optional>

#include "quartic/model.hpp"

namespace quartic::endpoints {

using model::Complex;
using model::SigmaPoint;

struct DegenerateEndpoint : std::domain_error {
  using std::domain_error::domain_error;
};
struct BadSeed : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Support [-b1, b1] with double zeros at +-z0; b1^2 + 2 z0^2 = -2 sigma and
// b1^2 (b1^2 - 4 z0^2) = 16 kappa^2-scaled by the potential V/kappa.
struct OneCutEndpoints {
  Complex b1;
  Complex z0;
  double kappa = 1.0;
};

// Supports [-b2, -a2] and [a2, b2]; a2^2 + b2^2 = -2 sigma, (a2^2 - b2^2)^2 = 16.
struct TwoCutEndpoints {
  Complex a2;
  Complex b2;
};

// Supports [-c3, -b3], [-a3, a3], [b3, c3] plus two real gap conditions.
struct ThreeCutEndpoints {
  Complex a3;
  Complex b3;
  Complex c3;
  double residual = 0.0;  // max-norm of the 6 defining equations
  bool converged = false;
};

struct LagrangeConstant {
  Complex ellStar;
  double ell = 0.0;  // -Re(ellStar)/2
};

OneCutEndpoints one_cut(SigmaPoint sigma, double kappa = 1.0);
TwoCutEndpoints two_cut(SigmaPoint sigma);

// Newton solve of the 6 real equations; uses built-in continuation seeds when
// none is supplied. A non-converged result is returned with its residual.
ThreeCutEndpoints three_cut(SigmaPoint sigma,
                            std::optional<ThreeCutEndpoints> seed = std::nullopt);

// Continuation walk from a converged anchor toward sigma (upper or lower
// three-cut component); more robust deep inside the region.
ThreeCutEndpoints three_cut_continued(SigmaPoint sigma);

LagrangeConstant lagrange_constant(SigmaPoint sigma, const model::PhaseRegime& regime);

// Residuals of the defining algebraic identities (tests and acceptance).
double one_cut_residual(SigmaPoint sigma, const OneCutEndpoints& e);
double two_cut_residual(SigmaPoint sigma, const TwoCutEndpoints& e);
struct ThreeCutResiduals {
  double alg1 = 0, alg2 = 0, gap1 = 0, gap2 = 0;
  double max_abs() const;
};
ThreeCutResiduals three_cut_residuals(SigmaPoint sigma, const ThreeCutEndpoints& e);

// Re of the two gap integrals (exposed for gfunction cross-checks).
Complex gap_integral_ab(const ThreeCutEndpoints& e);  // int_{a3}^{b3} sqrt(R)
Complex gap_integral_bc(const ThreeCutEndpoints& e);  // int_{b3}^{c3} sqrt(R)

}  // namespace quartic::endpoints
