#include "quartic/algebra/field.hpp"

#include <sstream>

namespace quartic::algebra {

const FieldContext& FieldContext::u_side() {
  static const FieldContext ctx = [] {
    FieldContext c;
    c.A = Poly2(1) + Poly2::mono(BigInt(12), 1, 1);  // 1 + 12 x y
    return c;
  }();
  return ctx;
}

const FieldContext& FieldContext::sigma_side() {
  static const FieldContext ctx = [] {
    FieldContext c;
    c.A = Poly2::mono(BigInt(12), 1, 0) + Poly2::y(2);  // 12 x + y^2
    return c;
  }();
  return ctx;
}

FieldElement FieldElement::constant(const FieldContext& ctx, const Rational& v) {
  FieldElement e(ctx);
  e.P_ = Poly2(BigInt(v.get_num()));
  e.den_ = v.get_den();
  e.normalize();
  return e;
}

FieldElement FieldElement::x(const FieldContext& ctx) {
  FieldElement e(ctx);
  e.P_ = Poly2::x();
  return e;
}

FieldElement FieldElement::y(const FieldContext& ctx) {
  FieldElement e(ctx);
  e.P_ = Poly2::y();
  return e;
}

FieldElement FieldElement::w(const FieldContext& ctx) {
  FieldElement e(ctx);
  e.Q_ = Poly2(1);
  return e;
}

FieldElement FieldElement::from_parts(const FieldContext& ctx, Poly2 P, Poly2 Q,
                                      BigInt den, int dx, int dy, int dA) {
  FieldElement e(ctx);
  e.P_ = std::move(P);
  e.Q_ = std::move(Q);
  e.den_ = std::move(den);
  e.dx_ = dx;
  e.dy_ = dy;
  e.dA_ = dA;
  e.normalize();
  return e;
}

void FieldElement::match(const FieldElement& o) const {
  if (ctx_ != o.ctx_) throw std::logic_error("FieldElement: mixed contexts");
}

void FieldElement::normalize() {
  if (P_.is_zero() && Q_.is_zero()) {
    den_ = 1;
    dx_ = dy_ = dA_ = 0;
    Dext_ = Poly2(1);
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    P_ = -P_;
    Q_ = -Q_;
  }
  // Fold a constant Dext into den.
  if (Dext_.deg_x() == 0 && Dext_.deg_y() == 0 && !Dext_.is_zero()) {
    BigInt c = Dext_.coeff(0, 0);
    if (c != 1) {
      den_ *= c;
      Dext_ = Poly2(1);
      if (den_ < 0) {
        den_ = -den_;
        P_ = -P_;
        Q_ = -Q_;
      }
    }
  }
  // Integer content.
  BigInt g = P_.content();
  if (!Q_.is_zero()) {
    BigInt gq = Q_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gq.get_mpz_t());
  }
  if (g != 0) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
      P_.div_content_exact(g);
      Q_.div_content_exact(g);
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }
  // Monomial content against x^dx y^dy.
  auto [mxp, myp] = P_.monomial_content();
  int mx = P_.is_zero() ? 1 << 30 : mxp;
  int my = P_.is_zero() ? 1 << 30 : myp;
  if (!Q_.is_zero()) {
    auto [mxq, myq] = Q_.monomial_content();
    mx = std::min(mx, mxq);
    my = std::min(my, myq);
  }
  const int cx = std::min(mx, dx_), cy = std::min(my, dy_);
  if (cx > 0 || cy > 0) {
    P_.shift_down(cx, cy);
    Q_.shift_down(cx, cy);
    dx_ -= cx;
    dy_ -= cy;
  }
  // Cancel powers of A.
  while (dA_ > 0) {
    auto p = P_.divide_exact(ctx_->A);
    if (!p) break;
    auto q = Q_.divide_exact(ctx_->A);
    if (!q) break;
    P_ = std::move(*p);
    Q_ = std::move(*q);
    --dA_;
  }
}

Poly2 FieldElement::full_den() const {
  Poly2 d(den_);
  if (dx_) d = d * Poly2::x(dx_);
  if (dy_) d = d * Poly2::y(dy_);
  for (int i = 0; i < dA_; ++i) d = d * ctx_->A;
  if (!(Dext_.deg_x() == 0 && Dext_.deg_y() == 0 && Dext_.coeff(0, 0) == 1))
    d = d * Dext_;
  return d;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  match(o);
  FieldElement r(*ctx_);
  const int dx = std::max(dx_, o.dx_), dy = std::max(dy_, o.dy_), dA = std::max(dA_, o.dA_);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  BigInt den = den_ / g * o.den_;
  const bool sameD = Dext_ == o.Dext_;

  auto scale = [&](const FieldElement& e, const FieldElement& other) {
    Poly2 f(den / e.den_);
    if (dx - e.dx_) f = f * Poly2::x(dx - e.dx_);
    if (dy - e.dy_) f = f * Poly2::y(dy - e.dy_);
    for (int i = 0; i < dA - e.dA_; ++i) f = f * ctx_->A;
    if (!sameD) f = f * other.Dext_;
    return f;
  };
  Poly2 f1 = scale(*this, o), f2 = scale(o, *this);
  r.P_ = P_ * f1 + o.P_ * f2;
  r.Q_ = Q_ * f1 + o.Q_ * f2;
  r.den_ = den;
  r.dx_ = dx;
  r.dy_ = dy;
  r.dA_ = dA;
  r.Dext_ = sameD ? Dext_ : Dext_ * o.Dext_;
  r.normalize();
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  r.P_ = -r.P_;
  r.Q_ = -r.Q_;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  match(o);
  FieldElement r(*ctx_);
  r.P_ = P_ * o.P_ + (Q_ * o.Q_) * ctx_->A;
  r.Q_ = P_ * o.Q_ + Q_ * o.P_;
  r.den_ = den_ * o.den_;
  r.dx_ = dx_ + o.dx_;
  r.dy_ = dy_ + o.dy_;
  r.dA_ = dA_ + o.dA_;
  r.Dext_ = Dext_ * o.Dext_;
  r.normalize();
  return r;
}

FieldElement FieldElement::operator*(const Rational& k) const {
  FieldElement r(*this);
  r.P_ = r.P_ * BigInt(k.get_num());
  r.Q_ = r.Q_ * BigInt(k.get_num());
  r.den_ *= k.get_den();
  r.normalize();
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  match(o);
  if (o.is_zero()) throw DivisionByZeroElement("FieldElement: division by zero");
  // 1/(P2 + Q2 w) = (P2 - Q2 w) / (P2^2 - Q2^2 A); o's denominator moves up.
  Poly2 norm = o.P_ * o.P_ - (o.Q_ * o.Q_) * ctx_->A;
  if (norm.is_zero()) throw DivisionByZeroElement("FieldElement: zero norm");
  FieldElement r(*ctx_);
  Poly2 up(o.den_);
  if (o.dx_) up = up * Poly2::x(o.dx_);
  if (o.dy_) up = up * Poly2::y(o.dy_);
  for (int i = 0; i < o.dA_; ++i) up = up * ctx_->A;
  up = up * o.Dext_;
  r.P_ = (P_ * o.P_ - (Q_ * o.Q_) * ctx_->A) * up;
  r.Q_ = (Q_ * o.P_ - P_ * o.Q_) * up;
  r.den_ = den_;
  r.dx_ = dx_;
  r.dy_ = dy_;
  r.dA_ = dA_;
  r.Dext_ = Dext_;
  // Absorb `norm` into the structured denominator when possible.
  BigInt c = norm.content();
  if (c > 1) {
    norm.div_content_exact(c);
    r.den_ *= c;
  }
  if (!norm.is_zero()) {
    auto [mx, my] = norm.monomial_content();
    if (mx || my) {
      norm.shift_down(mx, my);
      r.dx_ += mx;
      r.dy_ += my;
    }
  }
  while (true) {
    auto q = norm.divide_exact(ctx_->A);
    if (!q) break;
    norm = std::move(*q);
    r.dA_ += 1;
  }
  // Negative constant leftovers fold into den with sign flip in normalize().
  if (!(norm.deg_x() == 0 && norm.deg_y() == 0 && norm.coeff(0, 0) == 1))
    r.Dext_ = r.Dext_ * norm;
  r.normalize();
  return r;
}

FieldElement FieldElement::dkappa() const {
  // d/dx of (P + Q w)/(den x^a y^b A^e D) with w' = A_x w / (2A).
  FieldElement r(*ctx_);
  const Poly2& A = ctx_->A;
  const Poly2 Ax = A.dx();
  const Poly2& D = Dext_;
  const Poly2 Dx = D.dx();
  const Poly2 X = Poly2::x();
  const BigInt a(static_cast<long>(dx_)), e(static_cast<long>(dA_));
  // common factor of the subtracted terms: 2aAD + 2e x Ax D + 2 x A Dx
  Poly2 sub = (A * D) * (BigInt(2) * a) + (X * Ax * D) * (BigInt(2) * e) + (X * A * Dx) * BigInt(2);
  Poly2 lead = X * A * D * BigInt(2);
  r.P_ = lead * P_.dx() - P_ * sub;
  r.Q_ = lead * Q_.dx() + X * D * Ax * Q_ - Q_ * sub;
  r.den_ = den_ * 2;
  r.dx_ = dx_ + 1;
  r.dy_ = dy_;
  r.dA_ = dA_ + 1;
  r.Dext_ = D * D;
  r.normalize();
  return r;
}

FieldElement FieldElement::dvar() const {
  FieldElement r(*ctx_);
  const Poly2& A = ctx_->A;
  const Poly2 Ay = A.dy();
  const Poly2& D = Dext_;
  const Poly2 Dy = D.dy();
  const Poly2 Y = Poly2::y();
  const BigInt b(static_cast<long>(dy_)), e(static_cast<long>(dA_));
  Poly2 sub = (A * D) * (BigInt(2) * b) + (Y * Ay * D) * (BigInt(2) * e) + (Y * A * Dy) * BigInt(2);
  Poly2 lead = Y * A * D * BigInt(2);
  r.P_ = lead * P_.dy() - P_ * sub;
  r.Q_ = lead * Q_.dy() + Y * D * Ay * Q_ - Q_ * sub;
  r.den_ = den_ * 2;
  r.dx_ = dx_;
  r.dy_ = dy_ + 1;
  r.dA_ = dA_ + 1;
  r.Dext_ = D * D;
  r.normalize();
  return r;
}

std::complex<double> FieldElement::eval(std::complex<double> x0, std::complex<double> y0,
                                        std::complex<double> w0) const {
  std::complex<double> num = P_.eval(x0, y0) + Q_.eval(x0, y0) * w0;
  std::complex<double> den = den_.get_d();
  den *= std::pow(x0, dx_) * std::pow(y0, dy_) * std::pow(ctx_->A.eval(x0, y0), dA_);
  den *= Dext_.eval(x0, y0);
  return num / den;
}

Series FieldElement::expand_at_zero(const Rational& x0, int order) const {
  if (is_zero()) return Series(order);
  if (dx_ > 0 && x0 == 0) throw SeriesPole("expand_at_zero: pole in x at 0");
  const int J = order + dy_ + 2;

  auto mk = [&](const Poly2& p) {
    Series s(J);
    auto v = p.eval_x(x0);
    for (int j = 0; j <= J && j < static_cast<int>(v.size()); ++j) s[j] = v[j];
    return s;
  };
  Series Aser = mk(ctx_->A);
  const Rational a0 = Aser[0];
  // w = sqrt(A): need A(x0,0) to be a rational square.
  if (a0 <= 0) throw UnexpectedStructure("expand_at_zero: A(x0,0) not positive");
  BigInt sn, sd;
  if (!mpz_perfect_square_p(a0.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(a0.get_den().get_mpz_t()))
    throw UnexpectedStructure("expand_at_zero: A(x0,0) not a rational square");
  mpz_sqrt(sn.get_mpz_t(), a0.get_num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), a0.get_den().get_mpz_t());
  Rational w0(sn, sd);
  w0.canonicalize();
  Series wser = (Aser * (Rational(1) / a0)).sqrt1() * w0;

  Series num = mk(P_) + mk(Q_) * wser;
  num = num.shift_down(dy_);  // throws SeriesPole on a genuine pole

  Series den(J);
  den[0] = Rational(1);
  for (int i = 0; i < dA_; ++i) den = den * Aser;
  den = den * mk(Dext_);
  Series res = num * den.inverse();
  Rational scale = Rational(1) / (Rational(den_) * pow_rat(x0 == 0 ? Rational(1) : x0, dx_));
  return (res * scale).truncated(order);
}

FieldElement::Singular FieldElement::expand_at_singularity(const Rational& x0,
                                                           int extraOrder) const {
  Singular out;
  if (is_zero()) {
    out.regular = true;
    return out;
  }
  // A(x0, y) must be linear in y: A = a1 (y - y_c).
  auto av = ctx_->A.eval_x(x0);
  if (av.size() != 2 || av[1] == 0)
    throw UnexpectedStructure("expand_at_singularity: A(x0, y) not linear in y");
  const Rational a1 = av[1];
  const Rational yc = -av[0] / av[1];
  if (yc == 0) throw UnexpectedStructure("expand_at_singularity: singularity at y = 0");
  // sqrt(a1) must live in Q(sqrt 3): a1 = 3 r^2.
  Rational r2 = a1 / Rational(3);
  if (r2 <= 0 || !mpz_perfect_square_p(r2.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(r2.get_den().get_mpz_t()))
    throw UnexpectedStructure("expand_at_singularity: sqrt(A-slope) not in Q(sqrt 3)");
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), r2.get_num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), r2.get_den().get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();

  const int degP = std::max(0, std::max(P_.deg_y(), Q_.deg_y()));
  const int M = dA_ + extraOrder + degP + 2;

  // Shift a univariate polynomial p(y) to q(tau) = p(yc + tau).
  auto shift = [&](const Poly2& p) {
    auto v = p.eval_x(x0);
    Series s(M);
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      for (size_t k = 0; k <= j && static_cast<int>(k) <= M; ++k) {
        s[k] += binom_rat(Rational(static_cast<long>(j)), k) *
                pow_rat(yc, static_cast<long>(j - k)) * v[j];
      }
    }
    return s;
  };
  Series Pt = shift(P_), Qt = shift(Q_);
  Series denSer = shift(Poly2::y(1));  // yc + tau
  // (yc + tau)^dy * Dext(yc + tau)
  Series dfull(M);
  dfull[0] = Rational(1);
  for (int i = 0; i < dy_; ++i) dfull = dfull * denSer;
  dfull = dfull * shift(Dext_);
  Series inv = dfull.inverse();
  const Rational scale = Rational(1) / (Rational(den_) * pow_rat(x0, dx_) *
                                        pow_rat(a1, dA_));
  Series SP = Pt * inv * scale;
  Series SQ = Qt * inv * (scale * r);

  // Coefficient of tau^{(t2)/2}: even slots from SP (rational), odd from SQ*sqrt3.
  const long t2min = -2L * dA_;
  out.coeff.assign(2 * std::min(SP.order(), SQ.order()) + 2, Sqrt3());
  for (int k = 0; 2 * k < static_cast<int>(out.coeff.size()); ++k)
    if (k <= SP.order()) out.coeff[2 * k] = Sqrt3(SP[k], Rational(0));
  for (int k = 0; 2 * k + 1 < static_cast<int>(out.coeff.size()); ++k)
    if (k <= SQ.order()) out.coeff[2 * k + 1] = Sqrt3(Rational(0), SQ[k]);
  // Trim leading zeros to find the leading exponent.
  size_t lead = 0;
  while (lead < out.coeff.size() && out.coeff[lead].is_zero()) ++lead;
  if (lead == out.coeff.size())
    throw UnexpectedStructure("expand_at_singularity: truncation exhausted");
  out.coeff.erase(out.coeff.begin(), out.coeff.begin() + lead);
  out.twiceExponent = t2min + static_cast<long>(lead);
  out.regular = out.twiceExponent >= 0;
  return out;
}

int FieldElement::max_degree() const {
  int d = 0;
  for (const Poly2* p : {&P_, &Q_, &Dext_})
    d = std::max(d, std::max(p->deg_x(), p->deg_y()));
  return std::max(d, dA_ + std::max(dx_, dy_));
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << "[(" << P_.to_string() << ") + (" << Q_.to_string() << ")*w] / (" << den_.get_str();
  if (dx_) os << " x^" << dx_;
  if (dy_) os << " y^" << dy_;
  if (dA_) os << " A^" << dA_;
  if (!(Dext_.deg_x() == 0 && Dext_.deg_y() == 0 && Dext_.coeff(0, 0) == 1))
    os << " (" << Dext_.to_string() << ")";
  os << ")";
  return os.str();
}

}  // namespace quartic::algebra
