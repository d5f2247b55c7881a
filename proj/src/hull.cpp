#include "eisenlab/hull.hpp"

#include "eisenlab/errors.hpp"
#include "eisenlab/rational.hpp"

namespace eisenlab {

namespace {

long cross(const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

long dist2(const LatticeVector& a, const LatticeVector& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

}  // namespace

HullChain hull_chain(long n, long s) {
  if (n < 1) throw Error("hull_chain: level must be positive");
  if (gcd_long(mod_floor(s, n), n) != 1) throw NonCoprimeShear(n, s);
  HullChain chain{n, mod_floor(s, n), {}};

  std::vector<LatticeVector> points;
  for (long y = 0; y <= n; ++y) {
    for (long x = 0; x <= n; ++x) {
      if ((x == 0 && y == 0) || mod_floor(x - chain.shear * y, n) != 0) continue;
      points.push_back({x, y});
    }
  }

  // Gift-wrap from (N, 0) keeping the origin on the left; ties go to the
  // nearest point so collinear lattice points stay on the chain.
  LatticeVector cur{n, 0};
  chain.vectors.push_back(cur);
  while (!(cur == LatticeVector{0, n})) {
    const LatticeVector* best = nullptr;
    for (const auto& cand : points) {
      if (cand.y <= cur.y) continue;
      if (best == nullptr) {
        best = &cand;
        continue;
      }
      long turn = cross(cur, *best, cand);
      if (turn > 0 || (turn == 0 && dist2(cur, cand) < dist2(cur, *best))) best = &cand;
    }
    cur = *best;
    chain.vectors.push_back(cur);
  }
  return chain;
}

bool is_valid_chain(const HullChain& chain) {
  const long n = chain.level;
  const auto& v = chain.vectors;
  if (n < 1 || v.size() < 2) return false;
  if (!(v.front() == LatticeVector{n, 0}) || !(v.back() == LatticeVector{0, n})) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mod_floor(v[i].x - chain.shear * v[i].y, n) != 0) return false;
    if (i + 1 < v.size()) {
      if (v[i + 1].x >= v[i].x || v[i + 1].y <= v[i].y) return false;
      if (determinant(v[i], v[i + 1]) != n) return false;
    }
  }
  return true;
}

bool verify_pair_bijection(long n, long s, const LatticeVector& first, const LatticeVector& second) {
  const long det = determinant(first, second);
  if (det != n) {
    throw NotConsecutive("determinant " + std::to_string(det) + " != " + std::to_string(n));
  }
  auto in_lattice = [&](const LatticeVector& v) { return mod_floor(v.x - s * v.y, n) == 0; };
  if (!in_lattice(first) || !in_lattice(second)) throw NotConsecutive("vector outside the sublattice");

  // Elements of N^-1 Z / Z are represented by their numerators mod N.
  long kernel_size = 0;
  bool kernel_matches = true;
  for (long v1 = 0; v1 < n; ++v1)
    for (long v2 = 0; v2 < n; ++v2)
      for (long w1 = 0; w1 < n; ++w1)
        for (long w2 = 0; w2 < n; ++w2) {
          const bool in_bar = mod_floor(s * v1 + w1, n) == 0 && mod_floor(s * v2 + w2, n) == 0;
          const bool maps_to_zero = mod_floor(first.x * v1 + first.y * w1, n) == 0 &&
                                    mod_floor(first.x * v2 + first.y * w2, n) == 0 &&
                                    mod_floor(second.x * v1 + second.y * w1, n) == 0 &&
                                    mod_floor(second.x * v2 + second.y * w2, n) == 0;
          if (in_bar) ++kernel_size;
          if (in_bar != maps_to_zero) kernel_matches = false;
        }
  return kernel_matches && kernel_size == n * n;
}

nlohmann::json chain_to_json(const HullChain& chain) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : chain.vectors) out.push_back({v.x, v.y});
  return out;
}

std::vector<LatticeVector> chain_vectors_from_json(const nlohmann::json& j) {
  std::vector<LatticeVector> out;
  for (const auto& pair : j) out.push_back({pair.at(0).get<long>(), pair.at(1).get<long>()});
  return out;
}

}  // namespace eisenlab
