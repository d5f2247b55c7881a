#pragma once

#include <nlohmann/json.hpp>

#include <vector>

namespace eisenlab {

struct LatticeVector {
  long x = 0;
  long y = 0;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

inline long determinant(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }

/// Boundary vectors of the convex hull of the nonzero first-quadrant points of
/// the sublattice {(x, y) : x = S*y mod N}, ordered from (N, 0) to (0, N).
/// Collinear boundary points are kept, so consecutive determinants equal N.
struct HullChain {
  long level = 1;
  long shear = 0;  // reduced to [0, N)
  std::vector<LatticeVector> vectors;

  friend bool operator==(const HullChain&, const HullChain&) = default;
};

/// Throws NonCoprimeShear when gcd(S, N) > 1.
HullChain hull_chain(long n, long s);

/// Endpoints, sublattice membership, monotonicity and determinants.
bool is_valid_chain(const HullChain& chain);

/// Checks on the finite group ((N^-1 Z / Z)^2)^2 that
/// (v, w) -> (a v + b w, c v + d w) vanishes exactly on {S v + w = 0}, which has
/// N^2 elements, and that ad - bc = N; together these make the map a bijection
/// from the shifted lattice onto Z^4. Throws NotConsecutive on a bad pair.
bool verify_pair_bijection(long n, long s, const LatticeVector& first, const LatticeVector& second);

/// JSON list of [x, y] pairs.
nlohmann::json chain_to_json(const HullChain& chain);
std::vector<LatticeVector> chain_vectors_from_json(const nlohmann::json& j);

}  // namespace eisenlab
