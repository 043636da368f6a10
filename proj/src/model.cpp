#include "quartic/model.hpp"

#include <cmath>
#include <sstream>

namespace quartic::model {

SigmaPoint sigma_from_u(UPoint u) {
  if (u == Complex(0.0, 0.0)) throw ZeroParameter("sigma_from_u: u = 0");
  return 1.0 / std::sqrt(u);
}

UPoint u_from_sigma(SigmaPoint sigma) {
  if (sigma == Complex(0.0, 0.0)) throw ZeroParameter("u_from_sigma: sigma = 0");
  return 1.0 / (sigma * sigma);
}

std::vector<SigmaPoint> multicritical_points() {
  return {Complex(-2.0, 0.0), Complex(0.0, kSqrt12), Complex(0.0, -kSqrt12)};
}

bool is_multicritical(SigmaPoint sigma, double tol) {
  for (const auto& p : multicritical_points())
    if (std::abs(sigma - p) <= tol) return true;
  return false;
}

namespace branch {

Complex sqrt12(SigmaPoint sigma, double kappa) {
  // sqrt(sigma - i s12) sqrt(sigma + i s12), each factor principal, puts the
  // cuts exactly on the leftward rays from +-i s12.
  const double s12 = std::sqrt(12.0 * kappa);
  return std::sqrt(sigma - Complex(0.0, s12)) * std::sqrt(sigma + Complex(0.0, s12));
}

Complex sqrt_upper(Complex zz) {
  double a = std::arg(zz);  // (-pi, pi]
  if (a < 0) a += 2.0 * M_PI;
  return std::polar(std::sqrt(std::abs(zz)), a / 2.0);
}

bool on_branch_cut(SigmaPoint sigma, double kappa, double tol) {
  const double s12 = std::sqrt(12.0 * kappa);
  if (std::abs(std::abs(sigma.imag()) - s12) <= tol && sigma.real() <= tol) return true;
  if (std::abs(sigma.imag()) <= tol && sigma.real() <= -2.0 * std::sqrt(kappa) + tol)
    return true;
  return false;
}

}  // namespace branch

std::string to_string(BoundaryId id) {
  switch (id) {
    case BoundaryId::Gamma1: return "gamma1";
    case BoundaryId::Gamma2: return "gamma2";
    case BoundaryId::Gamma3: return "gamma3";
    case BoundaryId::Gamma4: return "gamma4";
    case BoundaryId::Gamma5: return "gamma5";
    case BoundaryId::Gamma6: return "gamma6";
    case BoundaryId::FakeVI: return "VI";
    case BoundaryId::FakeVIII: return "VIII";
    case BoundaryId::FakeXI: return "XI";
  }
  return "?";
}

std::string to_string(const PhaseRegime& r) {
  switch (r.kind) {
    case RegimeKind::OneCut: return "OneCut";
    case RegimeKind::TwoCut: return "TwoCut";
    case RegimeKind::ThreeCut: return "ThreeCut";
    case RegimeKind::Boundary: return "Boundary(" + to_string(r.boundary) + ")";
    case RegimeKind::MultiCritical: {
      std::ostringstream os;
      if (std::abs(r.anchor - Complex(-2.0, 0.0)) < 1e-6) {
        os << "MultiCritical(-2)";
      } else if (r.anchor.imag() > 0) {
        os << "MultiCritical(+i*sqrt(12))";
      } else {
        os << "MultiCritical(-i*sqrt(12))";
      }
      return os.str();
    }
  }
  return "?";
}

}  // namespace quartic::model
