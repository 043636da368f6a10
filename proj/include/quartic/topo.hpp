#pragma once

#include <complex>
#include <vector>

#include "quartic/algebra/field.hpp"

namespace quartic::topo {

using algebra::FieldContext;
using algebra::FieldElement;
using algebra::Rational;
using algebra::Series;
using algebra::Sqrt3;

struct CapExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Side { Sigma, U };

// Genus table of recurrence-coefficient expansion terms r_{2g} together with
// their kappa-derivatives (filled lazily).
class GenusCoeffTable {
 public:
  GenusCoeffTable(Side side, std::vector<FieldElement> r);

  Side side() const { return side_; }
  int maxGenus() const { return static_cast<int>(r_.size()) - 1; }
  const FieldElement& r(int g) const { return r_.at(g); }
  // d^l/dkappa^l r_{2g}
  const FieldElement& deriv(int g, int l) const;
  void append(FieldElement rg);

 private:
  Side side_;
  std::vector<FieldElement> r_;
  mutable std::vector<std::vector<FieldElement>> dcache_;
};

// u-side recursion: r_0 = (-1 + w)/(6u), r_{2g} = -u A_{2g}/w.
GenusCoeffTable string_recursion_u(int G);
// sigma-side recursion: r_0 = (w - sigma)/6, r_{2j} = -Lambda_{2j}/(sigma + 6 r_0).
GenusCoeffTable string_recursion_sigma(int G);

// Shift/product/free-energy-derivative coefficient tables built from a genus
// table. For the u side, E holds the coefficients of F'(u); for the sigma
// side, those of F'(sigma). A2ode (u side only) is the source term of the
// second-order ODE satisfied by the genus coefficients.
struct ExpansionTables {
  Side side;
  std::vector<FieldElement> A, B;   // shift tables, index m = 0..2G
  std::vector<FieldElement> Codd;   // odd product coefficients (must vanish)
  std::vector<FieldElement> C2;     // C_{2k}, k = 0..G
  std::vector<FieldElement> D2;     // sigma side: D_0 = C_0 + kappa, else C_{2j}
  std::vector<FieldElement> E;      // E_{2g}, g = 0..G
  std::vector<FieldElement> A2ode;  // u side, g = 0..G
};
ExpansionTables expansion_tables(const GenusCoeffTable& table);

// Taylor coefficients of the genus-g free energies at kappa = 1:
// coeff[g][j] is the u^j coefficient of f_{2g}(u), j = 0..J.
struct FreeEnergySeries {
  int G = 0, J = 0;
  std::vector<std::vector<Rational>> coeff;
};
FreeEnergySeries free_energy_series(int G, int J);

// Closed-form u^j coefficient of f_{2g}(u) for g <= 3 (the series oracles).
Rational closed_form_f_coeff(int g, int j);

// Exact check of 4u^2 f'' + 6u f' (+ 1/2 when g = 0) = A_{2g}/(2 kappa^2) at
// kappa = 1 through order u^J.
struct OdeReport {
  int g = 0;
  bool exact = false;
  int firstBadOrder = -1;
};
OdeReport verify_ode_identity(int g, int J);

// Substitutes the truncated table into the string equation and checks the
// N^{-m} coefficients: m = 0 must equal kappa, m = 1..2G must vanish.
struct StringResidualReport {
  bool ok = false;
  int firstBadOrder = -1;
};
StringResidualReport string_residual_u(const GenusCoeffTable& table,
                                       const ExpansionTables& tables);

// Leading singular data of r_{2g} (and of E_{2g}) at u = -1/12, kappa = 1.
struct SingularStructure {
  long twiceExponent = 0;  // exponent is twiceExponent/2
  Sqrt3 c2g;               // C_{2g}(1)
};
SingularStructure singular_structure(const GenusCoeffTable& uTable, int g);
SingularStructure singular_structure_E(const ExpansionTables& uTables, int g);

}  // namespace quartic::topo
