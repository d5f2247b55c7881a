#include "eisenlab/kernels.hpp"

#include "eisenlab/errors.hpp"

namespace eisenlab {

using namespace sym;

KernelId parse_kernel_id(std::string_view id) {
  if (id == "K16") return KernelId::K16;
  if (id == "K23") return KernelId::K23;
  if (id == "K24") return KernelId::K24;
  if (id == "K32") return KernelId::K32;
  if (id == "K33") return KernelId::K33;
  if (id == "K34") return KernelId::K34;
  throw UnknownIdentity(std::string(id));
}

std::string to_string(KernelId id) {
  switch (id) {
    case KernelId::K16: return "K16";
    case KernelId::K23: return "K23";
    case KernelId::K24: return "K24";
    case KernelId::K32: return "K32";
    case KernelId::K33: return "K33";
    case KernelId::K34: return "K34";
  }
  return "?";
}

namespace {

Expr linear_ab(const LatticeVector& v) { return Expr(v.x) * A() + Expr(v.y) * B(); }
Expr linear_pq(const LatticeVector& v) { return Expr(v.x) * p() + Expr(v.y) * q(); }

KernelCheck result(KernelId id, RatFunc witness) {
  KernelCheck out{id, witness.is_zero(), std::move(witness)};
  return out;
}

/// First nonzero witness among several sub-identities, or zero.
KernelCheck first_failure(KernelId id, const std::vector<Expr>& differences) {
  for (const auto& d : differences) {
    RatFunc w = ratfunc_normalize(d);
    if (!w.is_zero()) return result(id, std::move(w));
  }
  return result(id, RatFunc());
}

void require_weight(int k) {
  if (k < 2) throw Error("kernel weight k must be at least 2");
}

Expr partial_fraction_difference(const LatticeVector& u, const LatticeVector& v) {
  Expr det(determinant(u, v));
  return Expr(1) / (linear_ab(u) * linear_ab(v)) - (Expr(u.x) / (det * B())) / linear_ab(u) +
         (Expr(v.x) / (det * B())) / linear_ab(v);
}

KernelCheck check_k34(int k, const HullChain& chain) {
  const auto& v = chain.vectors;
  std::vector<Expr> pair_identities;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Expr cross = linear_pq(v[i]) * linear_ab(v[i + 1]) - linear_pq(v[i + 1]) * linear_ab(v[i]);
    pair_identities.push_back(cross - Expr(determinant(v[i], v[i + 1])) * (p() * B() - q() * A()));
  }
  KernelCheck pairs = first_failure(KernelId::K34, pair_identities);
  if (!pairs.holds) return pairs;

  Expr sum(0);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Expr x0 = linear_pq(v[i]) / linear_ab(v[i]);
    Expr x1 = linear_pq(v[i + 1]) / linear_ab(v[i + 1]);
    Expr den = linear_pq(v[i]) * linear_ab(v[i + 1]) - linear_pq(v[i + 1]) * linear_ab(v[i]);
    sum = sum + (pow(x0, k - 1) - pow(x1, k - 1)) / den;
  }
  Expr target = (pow(p() / A(), k - 1) - pow(q() / B(), k - 1)) /
                (Expr(chain.level) * (p() * B() - q() * A()));
  return result(KernelId::K34, ratfunc_normalize(sum - target));
}

}  // namespace

KernelCheck check_kernel(KernelId id, int k, const std::optional<HullChain>& chain_arg) {
  const HullChain chain = chain_arg ? *chain_arg : hull_chain(5, 3);
  const auto& v = chain.vectors;
  switch (id) {
    case KernelId::K16:
      return result(id, ratfunc_normalize(Expr(1) / (A() * B()) + Expr(1) / (B() * C()) +
                                          Expr(1) / (C() * A())));
    case KernelId::K23: {
      require_weight(k);
      Expr lhs(0);
      for (int l = 1; l < k; ++l) {
        const int m = k - l;
        lhs = lhs + pow(p(), l - 1) * pow(q(), m - 1) / (pow(A(), l) * pow(B(), m));
      }
      Expr rhs = (pow(p() / A(), k - 1) - pow(q() / B(), k - 1)) / (p() * B() - q() * A());
      return result(id, ratfunc_normalize(lhs - rhs));
    }
    case KernelId::K24: {
      Expr first = p() * B() - q() * A();
      Expr second = q() * C() - r() * B();
      Expr third = r() * A() - p() * C();
      return first_failure(id, {first - second, second - third});
    }
    case KernelId::K32: {
      Expr sum(0);
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        sum = sum + Expr(1) / (linear_ab(v[i]) * linear_ab(v[i + 1]));
      }
      return result(id, ratfunc_normalize(sum - Expr(1) / (Expr(chain.level) * A() * B())));
    }
    case KernelId::K33: {
      std::vector<Expr> diffs;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        diffs.push_back(partial_fraction_difference(v[i], v[i + 1]));
      }
      return first_failure(id, diffs);
    }
    case KernelId::K34:
      require_weight(k);
      return check_k34(k, chain);
  }
  throw UnknownIdentity("?");
}

KernelCheck check_kernel(std::string_view id, int k, const std::optional<HullChain>& chain) {
  return check_kernel(parse_kernel_id(id), k, chain);
}

KernelCheck check_partial_fraction(long a, long b, long c, long d) {
  return result(KernelId::K33, ratfunc_normalize(partial_fraction_difference({a, b}, {c, d})));
}

}  // namespace eisenlab
