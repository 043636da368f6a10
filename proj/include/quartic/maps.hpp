#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quartic/algebra/quadext.hpp"
#include "quartic/algebra/rational.hpp"

namespace quartic::maps {

using algebra::BigInt;
using algebra::Rational;
using algebra::Sqrt3;
using algebra::Sqrt6;

struct CapExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedGenus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Genus-resolved counts of connected labeled 4-valent ribbon graphs with j
// vertices. Half-edge h belongs to vertex h/4; the vertex rotation sends h to
// 4*(h/4) + (h%4 + 1)%4; faces are orbits of rotation followed by the pairing.
struct MapCensus {
  int vertices = 0;
  std::vector<std::uint64_t> counts;  // counts[g], g = 0 .. 2j
  std::uint64_t totalConnected = 0;
  std::uint64_t totalPairings = 0;  // (4j-1)!!
};

// Exhaustive pairing enumeration; j <= 5 unless allowSix (j = 6 is slow).
MapCensus enumerate_census(int j, bool allowSix = false, int threads = 0);

// Closed-form N_j(g) for g <= 3.
BigInt closed_form_count(int j, int g);

// C_{2g} at kappa = 1, g = 0..G, exact in Q(sqrt 3); C_0 = -4 sqrt 3.
std::vector<Sqrt3> c2g_constants(int G);

// K_g: rational for odd g; even g carries an implicit 1/sqrt(pi) factor.
struct KgValue {
  Rational value;
  bool overSqrtPi = false;
  double numeric() const;
};
KgValue kg_constant(int g);

// N_j(g) / (K_g 48^j j! j^{(5g-7)/2}).
double asymptotic_ratio(int j, int g);

// Boutroux coefficients a_0..a_K of the Painleve-I tronquee expansion.
std::vector<Sqrt6> painleve_a(int K);

}  // namespace quartic::maps
