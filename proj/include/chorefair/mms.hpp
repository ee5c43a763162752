#pragma once

#include <vector>

#include "chorefair/instance.hpp"
#include "chorefair/rational.hpp"

namespace chorefair {

/// Exhaustive-search ceiling. Shares and packings are NP-hard in general;
/// everything here targets desk scale and refuses larger inputs explicitly.
struct Budget {
  int max_items = 16;
  int max_bundles = 8;
};

/// Which agent's share, over how many hypothetical bundles.
struct MmsQuery {
  int agent = 0;
  int d = 1;
};

struct MmsResult {
  Value value = 0;                          // <= 0
  std::vector<std::vector<int>> witness;    // optimal d-partition of chore indices
};

/// Exact 1-out-of-d maximin share by branch and bound over assignments of
/// chores (descending magnitude) to bundles, with equal-load symmetry
/// breaking and bound pruning. Bundles may be empty, so d > m is fine and
/// short-circuits to the worst single chore.
MmsResult mms_exact(const ChoreInstance& inst, MmsQuery q, const Budget& budget = {});

/// v_i(M)/d as an exact rational.
Rational proportional_share(const ChoreInstance& inst, int agent, int d);

/// Sum of the k+1 consecutive ordered chores ending at 1-based position kd+1.
/// Lower-bounds nothing by itself; its guarantee (>= the agent's 1-out-of-d
/// share) is exercised by the test suite.
Value counting_bound(const OrderedInstance& inst, int agent, int k, int d);

/// One non-positive bag-filling target per agent.
struct ThresholdVector {
  std::vector<Value> beta;
};

/// Per-agent threshold for the 1-out-of-floor(2n/3) pipeline:
///   min(v(c1), v({c_d,c_{d+1}}), v({c_{2d-1},c_{2d},c_{2d+1}}), floor(v(M)/d))
/// with d = floor(2n/3). Requires the instance padded to m >= 2d+1.
/// The proportional term is floored toward -inf so thresholds stay integral.
ThresholdVector threshold_two_thirds(const OrderedInstance& inst);

/// floor(a/b) toward -inf for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace chorefair
