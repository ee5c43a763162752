#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chorefair/instance.hpp"
#include "chorefair/mms.hpp"

namespace chorefair {

/// Positive item sizes (absolute chore disutilities) and a bin capacity.
struct PackingInstance {
  std::vector<std::int64_t> sizes;  // each >= 1
  std::int64_t bin_capacity = 1;    // >= 1
};

struct PackingResult {
  std::vector<std::vector<int>> bins;  // item indices, partitioning the item set
  int bin_count = 0;
};

/// First-Fit-Decreasing: items sorted by descending size (stable), each
/// placed in the first bin that fits, opening a new bin otherwise.
PackingResult ffd_pack(const PackingInstance& p);

/// Capacity-feasibility decision: do the items fit into at most max_bins
/// bins? Branch and bound with descending sizes, equal-residual bin
/// deduplication, perfect-fit dominance and a usable-capacity prune.
struct PackDecision {
  bool feasible = false;
  std::optional<PackingResult> packing;  // witness when feasible
};
PackDecision exact_pack(const PackingInstance& p, int max_bins, const Budget& budget = {});

/// Pluggable bin-packing back-end plus its stated guarantees. `fits` decides
/// capacity feasibility (items larger than the capacity simply do not fit,
/// so any such query is infeasible rather than an error). `ordinal_factor`
/// maps the requested bundle count d to the certified g(d) with
/// MMS^{g(d)} <= beta <= MMS^d; `bin_count_bound` bounds the back-end's bin
/// usage in terms of the optimal count.
struct Packer {
  std::string name;
  std::function<bool(const std::vector<std::int64_t>& sizes, std::int64_t capacity,
                     int max_bins)> fits;
  std::function<int(int d)> ordinal_factor;
  std::function<std::int64_t(std::int64_t opt)> bin_count_bound;
};

/// g(d) = d; bin usage equals OPT.
Packer exact_packer(const Budget& budget = {});

/// FFD satisfies FFD(I) <= (11*OPT(I) + 6)/9, which yields the ordinal
/// factor g(d) = ceil((9d+3)/11) - 1 (derivation in the README).
Packer ffd_packer();

int ffd_ordinal_factor(int d);

/// Loop diagnostics for the capacity binary search.
struct ApproxSearchStats {
  int iterations = 0;
  std::int64_t initial_upper = 0;
};

/// Binary search over bin capacities: builds S = {-v_i(c)} minus zeros,
/// starts from L=0 and U = sum(S) rounded up to a power of two (midpoints
/// stay integral), shrinks until U = L+1 and returns -U. If every chore is
/// worth 0 to the agent the answer is 0 immediately. The three loop
/// invariants (U > L >= 0, feasible at U, infeasible at L) are re-checked on
/// every iteration and on exit; a violation throws std::logic_error.
Value approx_mms_threshold(const ChoreInstance& inst, int agent, int d, const Packer& packer,
                           ApproxSearchStats* stats = nullptr);

}  // namespace chorefair
