#include "quartic/algebra/poly2.hpp"

#include <sstream>
#include <stdexcept>

namespace quartic::algebra {

namespace {
const BigInt kZero(0);
}

Poly2::Poly2(long v) {
  if (v != 0) c_ = {{BigInt(v)}};
}

Poly2::Poly2(const BigInt& v) {
  if (v != 0) c_ = {{v}};
}

Poly2 Poly2::x(int e) { return mono(BigInt(1), e, 0); }
Poly2 Poly2::y(int e) { return mono(BigInt(1), 0, e); }

Poly2 Poly2::mono(const BigInt& c, int ex, int ey) {
  Poly2 p;
  if (c == 0) return p;
  p.c_.resize(ex + 1);
  p.c_[ex].resize(ey + 1, kZero);
  p.c_[ex][ey] = c;
  return p;
}

int Poly2::deg_y() const {
  int d = -1;
  for (const auto& row : c_) d = std::max<int>(d, static_cast<int>(row.size()) - 1);
  return d;
}

const BigInt& Poly2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return kZero;
  if (j >= static_cast<int>(c_[i].size())) return kZero;
  return c_[i][j];
}

void Poly2::set_coeff(int i, int j, const BigInt& v) {
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
  if (j >= static_cast<int>(c_[i].size())) c_[i].resize(j + 1, kZero);
  c_[i][j] = v;
  trim();
}

void Poly2::trim() {
  for (auto& row : c_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    size_t n = 0;
    if (i < c_.size()) n = std::max(n, c_[i].size());
    if (i < o.c_.size()) n = std::max(n, o.c_[i].size());
    r.c_[i].assign(n, kZero);
    for (size_t j = 0; j < n; ++j) {
      if (i < c_.size() && j < c_[i].size()) r.c_[i][j] += c_[i][j];
      if (i < o.c_.size() && j < o.c_[i].size()) r.c_[i][j] += o.c_[i][j];
    }
  }
  r.trim();
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r(*this);
  for (auto& row : r.c_)
    for (auto& v : row) v = -v;
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
  if (is_zero() || o.is_zero()) return {};
  Poly2 r;
  r.c_.resize(c_.size() + o.c_.size() - 1);
  const int dy1 = deg_y(), dy2 = o.deg_y();
  for (auto& row : r.c_) row.assign(dy1 + dy2 + 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i) {
    for (size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0) continue;
      for (size_t k = 0; k < o.c_.size(); ++k) {
        for (size_t l = 0; l < o.c_[k].size(); ++l) {
          if (o.c_[k][l] == 0) continue;
          r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
        }
      }
    }
  }
  r.trim();
  return r;
}

Poly2 Poly2::operator*(const BigInt& k) const {
  if (k == 0) return {};
  Poly2 r(*this);
  for (auto& row : r.c_)
    for (auto& v : row) v *= k;
  return r;
}

bool Poly2::operator==(const Poly2& o) const {
  return (*this - o).is_zero();
}

Poly2 Poly2::dx() const {
  Poly2 r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    r.c_[i - 1].resize(c_[i].size(), kZero);
    for (size_t j = 0; j < c_[i].size(); ++j) r.c_[i - 1][j] = c_[i][j] * BigInt(static_cast<long>(i));
  }
  r.trim();
  return r;
}

Poly2 Poly2::dy() const {
  Poly2 r;
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].size() <= 1) continue;
    r.c_[i].resize(c_[i].size() - 1, kZero);
    for (size_t j = 1; j < c_[i].size(); ++j) r.c_[i][j - 1] = c_[i][j] * BigInt(static_cast<long>(j));
  }
  r.trim();
  return r;
}

BigInt Poly2::content() const {
  BigInt g(0);
  for (const auto& row : c_)
    for (const auto& v : row) {
      if (v == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return g;
    }
  return g;
}

void Poly2::div_content_exact(const BigInt& g) {
  if (g == 1) return;
  for (auto& row : c_)
    for (auto& v : row)
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::pair<int, int> Poly2::monomial_content() const {
  if (is_zero()) return {0, 0};
  int mx = 1 << 30, my = 1 << 30;
  for (size_t i = 0; i < c_.size(); ++i) {
    bool nonzero_row = false;
    for (size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] != 0) {
        my = std::min<int>(my, static_cast<int>(j));
        nonzero_row = true;
      }
    }
    if (nonzero_row) mx = std::min<int>(mx, static_cast<int>(i));
  }
  return {mx, my};
}

void Poly2::shift_down(int ex, int ey) {
  if (is_zero() || (ex == 0 && ey == 0)) return;
  std::vector<std::vector<BigInt>> nc(c_.size() - ex);
  for (size_t i = ex; i < c_.size(); ++i) {
    if (static_cast<int>(c_[i].size()) > ey)
      nc[i - ex].assign(c_[i].begin() + ey, c_[i].end());
  }
  c_ = std::move(nc);
  trim();
}

namespace {
// Exact division of univariate (x-only) polynomials over Z.
std::optional<Poly2> divide_exact_x(const Poly2& n, const Poly2& d) {
  if (n.is_zero()) return Poly2();
  const int dxd = d.deg_x();
  Poly2 rem(n), quo;
  while (!rem.is_zero() && rem.deg_x() >= dxd) {
    const int dxr = rem.deg_x();
    BigInt q;
    BigInt r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.coeff(dxr, 0).get_mpz_t(),
                d.coeff(dxd, 0).get_mpz_t());
    if (r != 0) return std::nullopt;
    Poly2 qterm = Poly2::mono(q, dxr - dxd, 0);
    quo = quo + qterm;
    rem = rem - qterm * d;
    if (!rem.is_zero() && rem.deg_x() >= dxr) return std::nullopt;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}
}  // namespace

std::optional<Poly2> Poly2::divide_exact(const Poly2& d) const {
  if (d.is_zero()) throw std::domain_error("Poly2: division by zero polynomial");
  if (is_zero()) return Poly2();
  if (d.deg_y() == 0 && deg_y() == 0) return divide_exact_x(*this, d);
  // Long division in y, coefficients in Z[x]; works whenever it is exact.
  const int dyd = d.deg_y();
  // Leading coefficient of d in y, as a polynomial in x.
  Poly2 lead;
  for (int i = 0; i <= d.deg_x(); ++i)
    if (d.coeff(i, dyd) != 0) lead.set_coeff(i, 0, d.coeff(i, dyd));
  Poly2 rem(*this), quo;
  while (!rem.is_zero() && rem.deg_y() >= dyd) {
    const int dyr = rem.deg_y();
    // Top slice of rem in y as a polynomial in x.
    Poly2 top;
    for (int i = 0; i <= rem.deg_x(); ++i)
      if (rem.coeff(i, dyr) != 0) top.set_coeff(i, 0, rem.coeff(i, dyr));
    auto q = divide_exact_x(top, lead);
    if (!q) return std::nullopt;
    Poly2 qterm = *q * Poly2::y(dyr - dyd);
    quo = quo + qterm;
    rem = rem - qterm * d;
    if (!rem.is_zero() && rem.deg_y() >= dyr) return std::nullopt;  // no progress
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}

std::vector<Rational> Poly2::eval_x(const Rational& x0) const {
  std::vector<Rational> out(static_cast<size_t>(std::max(0, deg_y() + 1)), Rational(0));
  // Horner in x per y-degree.
  for (int j = 0; j <= deg_y(); ++j) {
    Rational acc(0);
    for (int i = deg_x(); i >= 0; --i) acc = acc * x0 + Rational(coeff(i, j));
    out[j] = acc;
  }
  return out;
}

std::complex<double> Poly2::eval(std::complex<double> x, std::complex<double> y) const {
  std::complex<double> acc(0.0, 0.0);
  for (int i = deg_x(); i >= 0; --i) {
    std::complex<double> row(0.0, 0.0);
    if (i < static_cast<int>(c_.size()))
      for (int j = static_cast<int>(c_[i].size()) - 1; j >= 0; --j)
        row = row * y + std::complex<double>(c_[i][j].get_d(), 0.0);
    acc = acc * x + row;
  }
  return acc;
}

std::string Poly2::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0) continue;
      if (!first) os << " + ";
      os << c_[i][j].get_str();
      if (i) os << "*x^" << i;
      if (j) os << "*y^" << j;
      first = false;
    }
  return os.str();
}

}  // namespace quartic::algebra
