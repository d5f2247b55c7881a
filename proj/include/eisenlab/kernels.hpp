#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eisenlab/expr.hpp"
#include "eisenlab/hull.hpp"

namespace eisenlab {

/// The rational-function identities behind the formal manipulations:
///   K16  1/(AB) + 1/(BC) + 1/(CA) = 0
///   K23  sum_{l+m=k} p^(l-1) q^(m-1) / (A^l B^m) = ((p/A)^(k-1) - (q/B)^(k-1)) / (pB - qA)
///   K24  pB - qA = qC - rB = rA - pC
///   K32  sum over consecutive chain vectors of 1/((aA+bB)(cA+dB)) = 1/(N A B)
///   K33  1/((aA+bB)(cA+dB)) = a/((ad-bc)B (aA+bB)) - c/((ad-bc)B (cA+dB)), per chain pair
///   K34  per-pair denominators equal det*(pB - qA), and the chain sum of the
///        weight-k terms equals ((p/A)^(k-1) - (q/B)^(k-1)) / (N (pB - qA))
enum class KernelId { K16, K23, K24, K32, K33, K34 };

/// Throws UnknownIdentity.
KernelId parse_kernel_id(std::string_view id);
std::string to_string(KernelId id);

struct KernelCheck {
  KernelId id;
  bool holds = false;
  /// Normalized difference of the two sides; zero exactly when the identity holds.
  RatFunc witness;
};

/// `k` is used by K23 and K34 (k >= 2); `chain` by K32, K33 and K34 and
/// defaults to hull_chain(5, 3). Throws ZeroDenominator for degenerate chains.
KernelCheck check_kernel(KernelId id, int k = 2, const std::optional<HullChain>& chain = std::nullopt);
KernelCheck check_kernel(std::string_view id, int k = 2,
                         const std::optional<HullChain>& chain = std::nullopt);

/// K33 for arbitrary integers (a, b, c, d) with ad - bc != 0.
KernelCheck check_partial_fraction(long a, long b, long c, long d);

}  // namespace eisenlab
