#pragma once

#include <cstdint>

namespace llt {

/// Exact binomial coefficient in integer arithmetic, saturating at 2^62.
/// Values below the saturation point are exact, so comparisons against
/// moderate operands are always decided correctly.
std::uint64_t binomial(int n, int k);

constexpr std::uint64_t kBinomialSaturated = std::uint64_t(1) << 62;

struct FactCheck {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
};

/// sum_{k=i}^{h} C(k,i) == C(h+1,i+1), for 0 <= i <= h.
FactCheck hockey_stick_identity(int h, int i);

/// (k+1) * C(n,k+1) == (n-k) * C(n,k), for 0 <= k < n.
FactCheck binomial_ratio_identity(int n, int k);

/// 2 * sum_{i=0}^{k} C(n,i) < 3 * C(n,k), valid for k <= floor(n/4).
FactCheck binomial_prefix_bound(int n, int k);

}  // namespace llt
