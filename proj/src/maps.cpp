#include "quartic/maps.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace quartic::maps {

namespace {

struct Counter {
  std::vector<std::uint64_t> byGenus;
  std::uint64_t connected = 0;
  std::uint64_t pairings = 0;
};

// Enumerates perfect matchings of half-edges [0, n): always match the smallest
// unmatched half-edge, so each matching is produced exactly once.
class Enumerator {
 public:
  Enumerator(int j, Counter& out) : j_(j), n_(4 * j), match_(n_, -1), out_(out) {}

  // Restrict the very first partner choice (used to parallelize).
  void run(int firstPartner = -1) {
    if (firstPartner >= 0) {
      match_[0] = firstPartner;
      match_[firstPartner] = 0;
      recurse(1);
      match_[firstPartner] = -1;
      match_[0] = -1;
    } else {
      recurse(0);
    }
  }

 private:
  void recurse(int lo) {
    while (lo < n_ && match_[lo] >= 0) ++lo;
    if (lo == n_) {
      finish();
      return;
    }
    match_[lo] = lo;  // mark busy
    for (int p = lo + 1; p < n_; ++p) {
      if (match_[p] >= 0) continue;
      match_[lo] = p;
      match_[p] = lo;
      recurse(lo + 1);
      match_[p] = -1;
    }
    match_[lo] = -1;
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void finish() {
    ++out_.pairings;
    // Union-find over vertices.
    parent_.resize(j_);
    for (int v = 0; v < j_; ++v) parent_[v] = v;
    int comps = j_;
    for (int h = 0; h < n_; ++h) {
      if (match_[h] < h) continue;
      int a = find(h / 4), b = find(match_[h] / 4);
      if (a != b) {
        parent_[a] = b;
        --comps;
      }
    }
    if (comps != 1) return;
    // Faces: orbits of h -> rotation(match(h)).
    visited_.assign(n_, false);
    int faces = 0;
    for (int h = 0; h < n_; ++h) {
      if (visited_[h]) continue;
      ++faces;
      int c = h;
      while (!visited_[c]) {
        visited_[c] = true;
        int m = match_[c];
        c = 4 * (m / 4) + ((m % 4) + 1) % 4;
      }
    }
    // V - E + F = 2 - 2g with V = j, E = 2j.
    int genus = (2 + j_ - faces) / 2;
    ++out_.connected;
    ++out_.byGenus[genus];
  }

  int j_, n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<char> visited_;
  Counter& out_;
};

}  // namespace

MapCensus enumerate_census(int j, bool allowSix, int threads) {
  if (j < 1 || j > 6 || (j == 6 && !allowSix))
    throw CapExceeded("enumerate_census: vertex count out of range");
  const int n = 4 * j;
  MapCensus mc;
  mc.vertices = j;
  mc.counts.assign(2 * j + 1, 0);

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  threads = std::min(threads, n - 1);

  // One subtree per first partner of half-edge 0.
  std::vector<Counter> parts(n - 1);
  for (auto& c : parts) c.byGenus.assign(2 * j + 1, 0);
  if (threads <= 1 || j <= 3) {
    for (int p = 1; p < n; ++p) Enumerator(j, parts[p - 1]).run(p);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{1};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int p = next++; p < n; p = next++) Enumerator(j, parts[p - 1]).run(p);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& c : parts) {
    mc.totalPairings += c.pairings;
    mc.totalConnected += c.connected;
    for (size_t g = 0; g < c.byGenus.size(); ++g) mc.counts[g] += c.byGenus[g];
  }
  return mc;
}

BigInt closed_form_count(int j, int g) {
  using algebra::factorial;
  using algebra::pow_int;
  if (j < 1) throw std::invalid_argument("closed_form_count: j must be positive");
  if (g < 0 || g > 3) throw UnsupportedGenus("closed_form_count: only g <= 3");
  const BigInt twelve_j = pow_int(BigInt(12), j);
  switch (g) {
    case 0:
      return twelve_j * factorial(2 * j - 1) / factorial(j + 2);
    case 1: {
      BigInt num = pow_int(BigInt(4), j) * factorial(j) * factorial(j) - factorial(2 * j);
      return twelve_j * num / (BigInt(24) * j * factorial(j));
    }
    case 2: {
      if (j == 1) return BigInt(0);
      const int i = j - 1;  // formula indexed as N_{i+1}(2)
      BigInt a = pow_int(BigInt(12), i) * factorial(2 * i + 2) * BigInt(28 * i + 37);
      a /= BigInt(360) * BigInt(i + 1) * factorial(i - 1);
      BigInt b = BigInt(13) * i * (i + 1) * factorial(i) * pow_int(BigInt(48), i - 1);
      return a - b;
    }
    case 3: {
      if (j <= 4) return BigInt(0);
      const int i = j - 4;  // formula indexed as N_{i+4}(3)
      Rational inner = Rational(2741, 10) * Rational(factorial(i + 5)) -
                       Rational(291, 10) * Rational(i) * Rational(factorial(i + 4)) -
                       Rational(2741, 1260) * Rational(factorial(2 * i + 9)) /
                           (Rational(pow_int(BigInt(4), i)) * Rational(factorial(i + 4))) -
                       algebra::frac(292L * i, 315) * Rational(factorial(2 * i + 7)) /
                           (Rational(pow_int(BigInt(4), i)) * Rational(factorial(i + 3)));
      Rational pre(BigInt(16) * pow_int(BigInt(48), i) * factorial(i + 3),
                   BigInt(3) * factorial(i));
      pre.canonicalize();
      Rational res = pre * inner;
      res.canonicalize();
      if (res.get_den() != 1)
        throw std::logic_error("closed_form_count: non-integer genus-3 value");
      return res.get_num();
    }
  }
  return BigInt(0);
}

std::vector<Sqrt3> c2g_constants(int G) {
  std::vector<Sqrt3> c;
  c.reserve(G + 1);
  c.push_back(Sqrt3(Rational(0), Rational(-4)));  // C_0 = -4 sqrt(3)
  for (int g = 1; g <= G; ++g) {
    Sqrt3 sum;
    for (int l = 1; l <= g - 1; ++l) sum += c[g - l] * c[l];
    // 1/(2^3 sqrt 3) = sqrt(3)/24
    Sqrt3 term1 = sum * Sqrt3(Rational(0), Rational(1, 24));
    // (5g-6)(5g-4)/(2^8 3^{7/2}) = (5g-6)(5g-4) sqrt(3)/(2^8 3^4)
    Sqrt3 term2 =
        c[g - 1] * Sqrt3(Rational(0), algebra::frac((5L * g - 6) * (5L * g - 4), 256L * 81));
    c.push_back(term1 + term2);
  }
  return c;
}

KgValue kg_constant(int g) {
  using algebra::factorial;
  using algebra::pow_int;
  KgValue out;
  if (g < 0) throw std::invalid_argument("kg_constant: g >= 0");
  if (g == 0) {
    out.value = Rational(1, 2);
    out.overSqrtPi = true;
    return out;
  }
  if (g == 1) {
    out.value = Rational(1, 24);
    return out;
  }
  const Sqrt3 c2g = c2g_constants(g).back();
  if (g % 2 == 1) {
    // 12^{(5g-1)/2} / ((5g-5)/2)! / (5g-3) * C_{2g}; all exponents integral.
    Rational pre(pow_int(BigInt(12), (5 * g - 1) / 2), factorial((5 * g - 5) / 2));
    pre /= Rational(5 * g - 3);
    pre.canonicalize();
    Sqrt3 v = c2g * Sqrt3(pre);
    if (!v.is_rational()) throw std::logic_error("kg_constant: odd-g value not rational");
    out.value = v.a;
    return out;
  }
  // Even g: 12^{(5g-1)/2} = 12^{(5g-2)/2} * 2 sqrt(3).
  Sqrt3 pre12(Rational(0), Rational(2) * Rational(pow_int(BigInt(12), (5 * g - 2) / 2)));
  Rational pre(pow_int(BigInt(2), 5 * g - 4) * factorial((5 * g - 4) / 2),
               factorial(5 * g - 3));
  pre.canonicalize();
  Sqrt3 v = c2g * pre12 * Sqrt3(pre);
  if (!v.is_rational()) throw std::logic_error("kg_constant: even-g value not rational");
  out.value = v.a;
  out.overSqrtPi = true;
  return out;
}

double KgValue::numeric() const {
  double v = algebra::to_double(value);
  if (overSqrtPi) v /= std::sqrt(M_PI);
  return v;
}

double asymptotic_ratio(int j, int g) {
  using algebra::factorial;
  using algebra::log_bigint;
  using algebra::log_rational;
  const BigInt n = closed_form_count(j, g);
  if (n <= 0) return 0.0;
  const KgValue kg = kg_constant(g);
  double logDen = log_rational(kg.value) + j * std::log(48.0) +
                  log_bigint(factorial(j)) +
                  (5.0 * g - 7.0) / 2.0 * std::log(static_cast<double>(j));
  if (kg.overSqrtPi) logDen -= 0.5 * std::log(M_PI);
  return std::exp(log_bigint(n) - logDen);
}

std::vector<Sqrt6> painleve_a(int K) {
  std::vector<Sqrt6> a;
  a.reserve(K + 1);
  a.push_back(Sqrt6(Rational(1)));
  for (int k = 0; k < K; ++k) {
    // a_{k+1} = (25k^2 - 1)/(8 sqrt 6) a_k - 1/2 sum_{m=1}^{k} a_m a_{k+1-m}
    // 1/(8 sqrt 6) = sqrt(6)/48
    Sqrt6 lin = a[k] * Sqrt6(Rational(0), algebra::frac(25L * k * k - 1, 48));
    Sqrt6 sum;
    for (int m = 1; m <= k; ++m) sum += a[m] * a[k + 1 - m];
    a.push_back(lin - sum * Sqrt6(Rational(1, 2)));
  }
  return a;
}

}  // namespace quartic::maps
