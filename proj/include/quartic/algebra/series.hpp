#pragma once

#include <stdexcept>
#include <vector>

#include "quartic/algebra/rational.hpp"

namespace quartic::algebra {

struct SeriesPole : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated power series sum c[j] t^j, exact through order() inclusive.
class Series {
 public:
  Series() = default;
  explicit Series(int order) : c_(order + 1, Rational(0)) {}
  Series(std::vector<Rational> c) : c_(std::move(c)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int j) const { return c_.at(j); }
  Rational& operator[](int j) { return c_.at(j); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Series truncated(int order) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series operator*(const Rational& k) const;
  bool operator==(const Series& o) const;

  // 1/this; requires nonzero constant term.
  Series inverse() const;
  Series operator/(const Series& o) const { return *this * o.inverse(); }

  // Divide by t^k; the k lowest coefficients must vanish (else SeriesPole).
  Series shift_down(int k) const;

  Series derivative() const;           // d/dt, order drops by 1
  Series antiderivative() const;       // from 0, order grows by 1

  // sqrt of a series with constant term 1.
  Series sqrt1() const;

  static Series geometric(const Rational& a, int order);  // 1/(1 - a t)

 private:
  std::vector<Rational> c_;
};

}  // namespace quartic::algebra
