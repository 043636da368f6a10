#include "quartic/topo.hpp"

#include <stdexcept>

namespace quartic::topo {

namespace {
constexpr int kGenusCap = 12;

Rational inv_factorial(int n) { return Rational(1) / Rational(algebra::factorial(n)); }
}  // namespace

GenusCoeffTable::GenusCoeffTable(Side side, std::vector<FieldElement> r)
    : side_(side), r_(std::move(r)), dcache_(r_.size()) {
  for (size_t g = 0; g < r_.size(); ++g) dcache_[g].push_back(r_[g]);
}

const FieldElement& GenusCoeffTable::deriv(int g, int l) const {
  auto& row = dcache_.at(g);
  while (static_cast<int>(row.size()) <= l) row.push_back(row.back().dkappa());
  return row[l];
}

void GenusCoeffTable::append(FieldElement rg) {
  r_.push_back(std::move(rg));
  dcache_.emplace_back();
  dcache_.back().push_back(r_.back());
}

GenusCoeffTable string_recursion_u(int G) {
  if (G < 0 || G > kGenusCap) throw CapExceeded("string_recursion_u: genus cap");
  const FieldContext& ctx = FieldContext::u_side();
  const FieldElement u = FieldElement::y(ctx);
  const FieldElement w = FieldElement::w(ctx);
  const FieldElement one = FieldElement::constant(ctx, Rational(1));

  GenusCoeffTable table(Side::U, {(w - one) / (u * Rational(6))});
  for (int g = 1; g <= G; ++g) {
    FieldElement acc(ctx);
    for (int l = 1; l <= g - 1; ++l) acc = acc + table.r(g - l) * table.r(l) * Rational(3);
    for (int l = 1; l <= g; ++l) {
      FieldElement inner(ctx);
      for (int k = 0; k <= l - 1; ++k)
        inner = inner + table.deriv(k, 2 * l - 2 * k) * inv_factorial(2 * l - 2 * k);
      acc = acc + table.r(g - l) * inner * Rational(2);
    }
    table.append(-(u * acc) / w);
    // guard against representation blow-up, not a mathematical bound
    if (table.r(g).max_degree() > 80 * g + 80)
      throw CapExceeded("string_recursion_u: degree growth bound exceeded");
  }
  return table;
}

GenusCoeffTable string_recursion_sigma(int G) {
  if (G < 0 || G > kGenusCap) throw CapExceeded("string_recursion_sigma: genus cap");
  const FieldContext& ctx = FieldContext::sigma_side();
  const FieldElement sig = FieldElement::y(ctx);
  const FieldElement w = FieldElement::w(ctx);  // sqrt(12 kappa + sigma^2)

  // r_0 = b^2/4 = (-sigma + w)/6, and sigma + 6 r_0 = w.
  GenusCoeffTable table(Side::Sigma, {(w - sig) * Rational(1, 6)});
  for (int j = 1; j <= G; ++j) {
    FieldElement lam(ctx);
    for (int l = 1; l <= j - 1; ++l) lam = lam + table.r(l) * table.r(j - l) * Rational(3);
    for (int l = 0; l <= j - 1; ++l) {
      FieldElement inner(ctx);
      for (int m = 0; m <= j - l - 1; ++m)
        inner = inner +
                table.deriv(m, 2 * j - 2 * l - 2 * m) * inv_factorial(2 * j - 2 * l - 2 * m);
      lam = lam + table.r(l) * inner * Rational(2);
    }
    table.append(-(lam / w));
  }
  return table;
}

ExpansionTables expansion_tables(const GenusCoeffTable& table) {
  const int G = table.maxGenus();
  const FieldContext& ctx = table.r(0).ctx();
  const FieldElement kap = FieldElement::x(ctx);
  const FieldElement var = FieldElement::y(ctx);

  ExpansionTables t;
  t.side = table.side();
  // Shift tables: A_m = sum_{2j + l = m} r_{2j}^{(l)}/l!, B_m with (-1)^l.
  for (int m = 0; m <= 2 * G; ++m) {
    FieldElement a(ctx), b(ctx);
    for (int j = 0; 2 * j <= m && j <= G; ++j) {
      const int l = m - 2 * j;
      FieldElement term = table.deriv(j, l) * inv_factorial(l);
      a = a + term;
      b = (l % 2 == 0) ? b + term : b - term;
    }
    t.A.push_back(a);
    t.B.push_back(b);
  }
  // C_j = sum_{m + k = j} A_m B_k; odd entries must vanish identically.
  for (int j = 0; j <= 2 * G; ++j) {
    FieldElement c(ctx);
    for (int m = 0; m <= j; ++m) c = c + t.A[m] * t.B[j - m];
    if (j % 2 == 0)
      t.C2.push_back(c);
    else
      t.Codd.push_back(c);
  }
  const FieldElement kap2inv4 = FieldElement::constant(ctx, Rational(1, 4)) / (kap * kap);
  if (table.side() == Side::U) {
    // E_0 = (r0^2 + kappa/u) r0/(4 kappa^2) - 1/(4u),
    // E_{2g} = [(r0^2 + kappa/u) r_{2g} + sum_{k=1}^{g} C_{2k} r_{2g-2k}]/(4 kappa^2).
    const FieldElement head = table.r(0) * table.r(0) + kap / var;
    for (int g = 0; g <= G; ++g) {
      FieldElement e = head * table.r(g);
      for (int k = 1; k <= g; ++k) e = e + t.C2[k] * table.r(g - k);
      e = e * kap2inv4;
      if (g == 0) e = e - FieldElement::constant(ctx, Rational(1, 4)) / var;
      t.E.push_back(e);
    }
    // ODE source A_{2g} = sum_{k<=g} r_{2g-2k} sum_{l<=k} r_{2k-2l}^{(2l)}/(2l)!.
    for (int g = 0; g <= G; ++g) {
      FieldElement a(ctx);
      for (int k = 0; k <= g; ++k) {
        FieldElement inner(ctx);
        for (int l = 0; l <= k; ++l)
          inner = inner + table.deriv(k - l, 2 * l) * inv_factorial(2 * l);
        a = a + table.r(g - k) * inner;
      }
      t.A2ode.push_back(a);
    }
  } else {
    // D_0 = C_0 + kappa, D_{2j} = C_{2j}; E_{2g} = -sum r_{2k} D_{2g-2k}/(2 kappa^2).
    for (int k = 0; k <= G; ++k) t.D2.push_back(k == 0 ? t.C2[0] + kap : t.C2[k]);
    const FieldElement mhalf = FieldElement::constant(ctx, Rational(-1, 2)) / (kap * kap);
    for (int g = 0; g <= G; ++g) {
      FieldElement e(ctx);
      for (int k = 0; k <= g; ++k) e = e + table.r(k) * t.D2[g - k];
      t.E.push_back(e * mhalf);
    }
  }
  return t;
}

FreeEnergySeries free_energy_series(int G, int J) {
  auto table = string_recursion_u(G);
  auto tabs = expansion_tables(table);
  FreeEnergySeries fs;
  fs.G = G;
  fs.J = J;
  fs.coeff.assign(G + 1, std::vector<Rational>(J + 1, Rational(0)));
  for (int g = 0; g <= G; ++g) {
    Series e = tabs.E[g].expand_at_zero(Rational(1), J - 1);
    for (int j = 1; j <= J; ++j) fs.coeff[g][j] = e[j - 1] / Rational(j);
  }
  return fs;
}

Rational closed_form_f_coeff(int g, int j) {
  using algebra::BigInt;
  using algebra::factorial;
  using algebra::frac;
  using algebra::pow_int;
  if (j < 1) return Rational(0);
  const Rational sgn = (j % 2 == 0) ? Rational(1) : Rational(-1);
  switch (g) {
    case 0:
      return sgn * frac(pow_int(BigInt(3), j) * factorial(2 * j - 1),
                         factorial(j) * factorial(j + 2));
    case 1: {
      Rational bracket =
          Rational(1) - frac(factorial(2 * j),
                             pow_int(BigInt(4), j) * factorial(j) * factorial(j));
      return Rational(1, 24) * sgn * Rational(pow_int(BigInt(12), j)) / Rational(j) *
             bracket;
    }
    case 2: {
      if (j < 3) return Rational(0);
      Rational br = Rational(8 * (28L * j + 9)) * Rational(factorial(2 * j)) /
                        (Rational(15) * Rational(pow_int(BigInt(4), j)) *
                         Rational(factorial(j - 2)) * Rational(factorial(j))) -
                    Rational(13L * j * (j - 1));
      return sgn * Rational(pow_int(BigInt(12), j)) / Rational(2304L * j) * br;
    }
    case 3: {
      if (j <= 4) return Rational(0);
      const int i = j - 4;
      const Rational s = (i % 2 == 0) ? Rational(1) : Rational(-1);
      Rational brace = Rational(32892) / Rational(i) *
                           (frac(factorial(i + 5), factorial(5)) -
                            Rational(factorial(2 * i + 9)) /
                                (Rational(15120) * Rational(pow_int(BigInt(4), i)) *
                                 Rational(factorial(i + 4)))) -
                       Rational(291, 10) * Rational(factorial(i + 4)) -
                       Rational(292) * Rational(factorial(2 * i + 7)) /
                           (Rational(315) * Rational(pow_int(BigInt(4), i)) *
                            Rational(factorial(i + 3)));
      return Rational(1, 48) * s * Rational(pow_int(BigInt(12), i)) /
             (Rational(factorial(i - 1)) * Rational(i + 4)) * brace;
    }
    default:
      throw std::invalid_argument("closed_form_f_coeff: only g <= 3");
  }
}

OdeReport verify_ode_identity(int g, int J) {
  auto table = string_recursion_u(g);
  auto tabs = expansion_tables(table);
  OdeReport rep;
  rep.g = g;
  // f' = E as a series; LHS = 4u^2 f'' + 6u f' (+1/2 at g = 0).
  Series e = tabs.E[g].expand_at_zero(Rational(1), J + 1);
  Series lhs(J + 1);
  for (int j = 0; j + 1 <= J + 1; ++j) lhs[j + 1] = Rational(4 * j + 6) * e[j];
  if (g == 0) lhs[0] = Rational(1, 2);
  Series rhs = tabs.A2ode[g].expand_at_zero(Rational(1), J + 1) * Rational(1, 2);
  rep.exact = true;
  for (int j = 0; j <= J; ++j) {
    if (lhs[j] != rhs[j]) {
      rep.exact = false;
      rep.firstBadOrder = j;
      break;
    }
  }
  return rep;
}

StringResidualReport string_residual_u(const GenusCoeffTable& table,
                                       const ExpansionTables& tabs) {
  const int G = table.maxGenus();
  const FieldContext& ctx = table.r(0).ctx();
  const FieldElement u = FieldElement::y(ctx);
  const FieldElement kap = FieldElement::x(ctx);
  const FieldElement one = FieldElement::constant(ctx, Rational(1));

  auto R = [&](int m) {
    return (m % 2 == 0 && m / 2 <= G) ? table.r(m / 2) : FieldElement(ctx);
  };
  // N^{-b} coefficient of 1 + u (R_{n-1} + R_n + R_{n+1}).
  auto T = [&](int b) {
    FieldElement t = (tabs.A[b] + tabs.B[b] + R(b)) * u;
    if (b == 0) t = t + one;
    return t;
  };
  StringResidualReport rep;
  rep.ok = true;
  for (int m = 0; m <= 2 * G; ++m) {
    FieldElement L(ctx);
    for (int a = 0; a <= m; a += 2) L = L + R(a) * T(m - a);
    const bool good = (m == 0) ? (L == kap) : L.is_zero();
    if (!good) {
      rep.ok = false;
      rep.firstBadOrder = m;
      return rep;
    }
  }
  return rep;
}

SingularStructure singular_structure(const GenusCoeffTable& uTable, int g) {
  if (uTable.side() != Side::U)
    throw std::invalid_argument("singular_structure: u-side table required");
  auto s = uTable.r(g).expand_at_singularity(Rational(1));
  if (s.twiceExponent != 1 - 5L * g)
    throw algebra::UnexpectedStructure("singular_structure: unexpected exponent");
  return {s.twiceExponent, s.leading()};
}

SingularStructure singular_structure_E(const ExpansionTables& tabs, int g) {
  if (tabs.side != Side::U || g < 1)
    throw std::invalid_argument("singular_structure_E: u-side table, g >= 1");
  auto s = tabs.E[g].expand_at_singularity(Rational(1));
  if (s.twiceExponent != 3 - 5L * g)
    throw algebra::UnexpectedStructure("singular_structure_E: unexpected exponent");
  // Leading coefficient of E_{2g} is 2^4 3^2/(3 - 5g) C_{2g}.
  Sqrt3 c = s.leading() * Sqrt3(algebra::frac(3 - 5L * g, 144));
  return {s.twiceExponent, c};
}

}  // namespace quartic::topo
