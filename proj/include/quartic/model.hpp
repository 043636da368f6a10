#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic::model {

using Complex = std::complex<double>;
using SigmaPoint = Complex;  // dimensionless coupling of the scaled model
using UPoint = Complex;      // coupling of the unscaled model, u = sigma^{-2}

struct ZeroParameter : std::domain_error {
  using std::domain_error::domain_error;
};
struct OnBranchCut : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr double kSqrt12 = 3.4641016151377545870548926830117;

// V(z; sigma) = sigma z^2/2 + z^4/4.
inline Complex potential(Complex z, SigmaPoint sigma) {
  const Complex z2 = z * z;
  return sigma * z2 / 2.0 + z2 * z2 / 4.0;
}

// Parameter map u = sigma^{-2} and its principal-sheet inverse.
SigmaPoint sigma_from_u(UPoint u);
UPoint u_from_sigma(SigmaPoint sigma);

// The three multi-critical couplings: -2 and +- i sqrt(12).
std::vector<SigmaPoint> multicritical_points();
bool is_multicritical(SigmaPoint sigma, double tol = 1e-9);

// Branch conventions shared by every multivalued map downstream.
//
// Cuts: L+- from +-i sqrt(12 kappa) horizontally to Re -> -infinity, and (for
// z0 only) L from -2 sqrt(kappa) to -infinity along the real axis. Points on a
// cut evaluate as limits from the im -> 0+ side of the cut ray.
namespace branch {

// sqrt(12 kappa + sigma^2) cut along L+-, positive on the real axis.
Complex sqrt12(SigmaPoint sigma, double kappa = 1.0);

// Square root with arg(zz) taken in [0, 2 pi); used for z0 = sqrt(z0^2).
Complex sqrt_upper(Complex zz);

// True when sigma lies within tol of L+, L- or L.
bool on_branch_cut(SigmaPoint sigma, double kappa = 1.0, double tol = 1e-12);

}  // namespace branch

enum class RegimeKind { OneCut, TwoCut, ThreeCut, Boundary, MultiCritical };

enum class BoundaryId {
  Gamma1,  // C[-2, +i sqrt 12], split of the cut
  Gamma2,  // C[-2, -i sqrt 12]
  Gamma3,  // C[+i sqrt 12, e^{3 i pi/4} inf], birth of two cuts
  Gamma4,  // C[-i sqrt 12, e^{-3 i pi/4} inf]
  Gamma5,  // C[-2, e^{3 i pi/4} inf], birth of a cut at the origin
  Gamma6,  // C[-2, e^{-3 i pi/4} inf]
  FakeVI,  // sign flip of Re Psi that is not a phase boundary
  FakeVIII,
  FakeXI,
};

std::string to_string(BoundaryId id);

struct PhaseRegime {
  RegimeKind kind = RegimeKind::OneCut;
  BoundaryId boundary = BoundaryId::Gamma1;  // valid when kind == Boundary
  SigmaPoint anchor{};                       // valid when kind == MultiCritical

  static PhaseRegime one_cut() { return {RegimeKind::OneCut, {}, {}}; }
  static PhaseRegime two_cut() { return {RegimeKind::TwoCut, {}, {}}; }
  static PhaseRegime three_cut() { return {RegimeKind::ThreeCut, {}, {}}; }
  static PhaseRegime on_boundary(BoundaryId id) {
    return {RegimeKind::Boundary, id, {}};
  }
  static PhaseRegime multicritical(SigmaPoint p) {
    return {RegimeKind::MultiCritical, {}, p};
  }
};

std::string to_string(const PhaseRegime& r);

}  // namespace quartic::model
