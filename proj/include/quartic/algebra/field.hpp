#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>

#include "quartic/algebra/poly2.hpp"
#include "quartic/algebra/quadext.hpp"
#include "quartic/algebra/series.hpp"

namespace quartic::algebra {

struct DivisionByZeroElement : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnexpectedStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational-function field Q(x, y) with an adjoined element w, w^2 = A(x, y).
// All elements carry a pointer to their context; mixing contexts is an error.
struct FieldContext {
  Poly2 A;
  static const FieldContext& u_side();      // A = 1 + 12 x y   (y = u)
  static const FieldContext& sigma_side();  // A = 12 x + y^2   (y = sigma)
};

// (P + Q w) / (den * x^dx * y^dy * A^dA * Dext), P, Q, Dext over Z.
class FieldElement {
 public:
  FieldElement() : ctx_(&FieldContext::u_side()) {}
  explicit FieldElement(const FieldContext& ctx) : ctx_(&ctx) {}

  static FieldElement constant(const FieldContext& ctx, const Rational& v);
  static FieldElement x(const FieldContext& ctx);  // kappa
  static FieldElement y(const FieldContext& ctx);  // u or sigma
  static FieldElement w(const FieldContext& ctx);
  static FieldElement from_parts(const FieldContext& ctx, Poly2 P, Poly2 Q,
                                 BigInt den, int dx, int dy, int dA);

  const FieldContext& ctx() const { return *ctx_; }
  bool is_zero() const { return P_.is_zero() && Q_.is_zero(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rational& k) const;
  FieldElement operator/(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const { return (*this - o).is_zero(); }

  FieldElement dkappa() const;  // d/dx
  FieldElement dvar() const;    // d/dy

  // Numeric evaluation; w0 must satisfy w0^2 = A(x0, y0) (caller picks branch).
  std::complex<double> eval(std::complex<double> x0, std::complex<double> y0,
                            std::complex<double> w0) const;

  // Taylor expansion in y around y = 0 after substituting x = x0.
  // Requires A(x0, 0) to be the square of a rational (so w has a rational
  // series); removable y-powers are cancelled, a genuine pole throws.
  Series expand_at_zero(const Rational& x0, int order) const;

  // Laurent data in half powers of (y - y_c) where A(x0, y_c) = 0.
  struct Singular {
    // twiceExponent/2 is the leading exponent; coefficient of
    // (y - y_c)^{(twiceExponent + k)/2} is coeff[k] (in Q(sqrt(3))).
    long twiceExponent = 0;
    std::vector<Sqrt3> coeff;
    bool regular = false;  // no singular part (leading exponent >= 0)
    Sqrt3 leading() const { return coeff.empty() ? Sqrt3() : coeff.front(); }
  };
  // Implemented for the u-side context at rational x0 with 12*x0 = 3*r^2.
  Singular expand_at_singularity(const Rational& x0, int extraOrder = 8) const;

  std::string to_string() const;

  // Largest polynomial degree appearing in the representation (guard).
  int max_degree() const;

 private:
  void normalize();
  void match(const FieldElement& o) const;
  Poly2 full_den() const;  // den * x^dx * y^dy * A^dA * Dext as Poly2

  const FieldContext* ctx_;
  Poly2 P_, Q_;
  BigInt den_{1};
  int dx_ = 0, dy_ = 0, dA_ = 0;
  Poly2 Dext_{1};
};

}  // namespace quartic::algebra
