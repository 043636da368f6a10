#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "quartic/algebra/rational.hpp"

namespace quartic::algebra {

// Dense bivariate polynomial over Z: sum c[i][j] x^i y^j.
// x is the kappa slot; y is the model variable (u or sigma).
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(long v);
  explicit Poly2(const BigInt& v);

  static Poly2 x(int e = 1);       // x^e
  static Poly2 y(int e = 1);       // y^e
  static Poly2 mono(const BigInt& c, int ex, int ey);

  bool is_zero() const { return c_.empty(); }
  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int deg_y() const;

  const BigInt& coeff(int i, int j) const;  // 0 outside stored range
  void set_coeff(int i, int j, const BigInt& v);

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const BigInt& k) const;
  bool operator==(const Poly2& o) const;

  Poly2 dx() const;  // d/dx
  Poly2 dy() const;  // d/dy

  // gcd of all coefficients (positive; 0 for the zero polynomial)
  BigInt content() const;
  void div_content_exact(const BigInt& g);

  // Largest (ex, ey) with x^ex y^ey dividing every term.
  std::pair<int, int> monomial_content() const;
  void shift_down(int ex, int ey);  // divide by x^ex y^ey (must divide)

  // Exact division; nullopt when the division has a remainder.
  std::optional<Poly2> divide_exact(const Poly2& d) const;

  // Substitute x = x0: univariate polynomial in y (rational coefficients).
  std::vector<Rational> eval_x(const Rational& x0) const;

  std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;

  std::string to_string() const;  // for diagnostics

 private:
  void trim();
  std::vector<std::vector<BigInt>> c_;
};

}  // namespace quartic::algebra
