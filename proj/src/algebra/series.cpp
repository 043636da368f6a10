#include "quartic/algebra/series.hpp"

#include <algorithm>

namespace quartic::algebra {

Series Series::truncated(int order) const {
  Series r(order);
  for (int j = 0; j <= std::min(order, this->order()); ++j) r[j] = c_[j];
  return r;
}

Series Series::operator+(const Series& o) const {
  const int n = std::min(order(), o.order());
  Series r(n);
  for (int j = 0; j <= n; ++j) r[j] = c_[j] + o.c_[j];
  return r;
}

Series Series::operator-(const Series& o) const {
  const int n = std::min(order(), o.order());
  Series r(n);
  for (int j = 0; j <= n; ++j) r[j] = c_[j] - o.c_[j];
  return r;
}

Series Series::operator-() const {
  Series r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

Series Series::operator*(const Series& o) const {
  const int n = std::min(order(), o.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (i > order() || c_[i] == 0) continue;
    for (int j = 0; i + j <= n && j <= o.order(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Series Series::operator*(const Rational& k) const {
  Series r(*this);
  for (auto& v : r.c_) v *= k;
  return r;
}

bool Series::operator==(const Series& o) const {
  const int n = std::min(order(), o.order());
  for (int j = 0; j <= n; ++j)
    if (c_[j] != o.c_[j]) return false;
  return true;
}

Series Series::inverse() const {
  if (c_.empty() || c_[0] == 0) throw SeriesPole("Series::inverse: zero constant term");
  const int n = order();
  Series r(n);
  r[0] = Rational(1) / c_[0];
  for (int j = 1; j <= n; ++j) {
    Rational acc(0);
    for (int k = 1; k <= j; ++k) acc += c_[k] * r[j - k];
    r[j] = -acc / c_[0];
  }
  return r;
}

Series Series::shift_down(int k) const {
  for (int j = 0; j < k && j <= order(); ++j)
    if (c_[j] != 0) throw SeriesPole("Series::shift_down: pole");
  if (k > order()) return Series(0);
  Series r(order() - k);
  for (int j = k; j <= order(); ++j) r[j - k] = c_[j];
  return r;
}

Series Series::derivative() const {
  if (order() < 1) return Series(0);
  Series r(order() - 1);
  for (int j = 1; j <= order(); ++j) r[j - 1] = c_[j] * Rational(j);
  return r;
}

Series Series::antiderivative() const {
  Series r(order() + 1);
  for (int j = 0; j <= order(); ++j) r[j + 1] = c_[j] / Rational(j + 1);
  return r;
}

Series Series::sqrt1() const {
  if (c_.empty() || c_[0] != 1) throw SeriesPole("Series::sqrt1: constant term must be 1");
  const int n = order();
  Series r(n);
  r[0] = Rational(1);
  // Newton-free: r[j] from (r*r)[j] = c[j].
  for (int j = 1; j <= n; ++j) {
    Rational acc(0);
    for (int k = 1; k < j; ++k) acc += r[k] * r[j - k];
    r[j] = (c_[j] - acc) / Rational(2);
  }
  return r;
}

Series Series::geometric(const Rational& a, int order) {
  Series r(order);
  Rational p(1);
  for (int j = 0; j <= order; ++j) {
    r[j] = p;
    p *= a;
  }
  return r;
}

}  // namespace quartic::algebra
