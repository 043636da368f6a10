#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "quartic/algebra/rational.hpp"

namespace quartic::algebra {

// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
template <int D>
struct QuadExt {
  Rational a{0};
  Rational b{0};

  QuadExt() = default;
  QuadExt(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QuadExt(long v) : a(v) {}

  static QuadExt sqrtd() { return QuadExt(Rational(0), Rational(1)); }

  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b}; }
  QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b}; }
  QuadExt operator-() const { return {-a, -b}; }
  QuadExt operator*(const QuadExt& o) const {
    return {a * o.a + Rational(D) * b * o.b, a * o.b + b * o.a};
  }
  QuadExt operator/(const QuadExt& o) const {
    Rational n = o.a * o.a - Rational(D) * o.b * o.b;
    if (n == 0) throw std::domain_error("QuadExt: division by zero element");
    return {(a * o.a - Rational(D) * b * o.b) / n, (b * o.a - a * o.b) / n};
  }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  double value() const {
    return to_double(a) + to_double(b) * std::sqrt(static_cast<double>(D));
  }
};

using Sqrt3 = QuadExt<3>;
using Sqrt6 = QuadExt<6>;

// "a+b*sqrt(D)" with pure terms collapsed, e.g. "49*sqrt(3)/71663616".
template <int D>
std::string to_string(const QuadExt<D>& x) {
  const std::string root = "sqrt(" + std::to_string(D) + ")";
  auto term = [&](const Rational& r) {
    std::string num = r.get_num().get_str() + "*" + root;
    if (r.get_den() != 1) num += "/" + r.get_den().get_str();
    return num;
  };
  if (x.b == 0) return to_string(x.a);
  if (x.a == 0) return term(x.b);
  std::string s = to_string(x.a);
  if (x.b > 0) s += "+";
  return s + term(x.b);
}

}  // namespace quartic::algebra
