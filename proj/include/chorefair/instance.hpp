#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chorefair/errors.hpp"

namespace chorefair {

using Value = std::int64_t;

/// Agents x chores matrix of non-positive integer disutilities.
struct ChoreInstance {
  int n = 0;  // agents, >= 1
  int m = 0;  // chores, >= 0
  std::vector<std::vector<Value>> values;  // n rows of m entries, each <= 0

  Value value(int agent, int chore) const { return values[agent][chore]; }
  Value bundle_value(int agent, const std::vector<int>& bundle) const;
  Value total_value(int agent) const;
};

/// Checks signs and dimensions and wraps the raw matrix.
ChoreInstance validate_instance(std::vector<std::vector<Value>> raw);

/// Instance whose columns all agents rank in the same descending-magnitude
/// order: column k of row i holds agent i's k-th largest-magnitude value.
/// source_perm[i][k], when present, is the original chore that value came
/// from (each row a bijection on 0..m-1); absent for natively ordered input.
struct OrderedInstance {
  ChoreInstance inner;
  std::optional<std::vector<std::vector<int>>> source_perm;

  int n() const { return inner.n; }
  int m() const { return inner.m; }

  /// Wraps an instance that is already ordered; verifies the row invariant.
  static OrderedInstance adopt(ChoreInstance inst);
};

/// Sorts each agent's row by descending magnitude (stable, so equal
/// magnitudes keep their original index order) and records the per-agent
/// permutation back to the source instance.
OrderedInstance order_instance(const ChoreInstance& inst);

/// n disjoint bundles of chore indices; complete iff the union is all chores.
struct Allocation {
  std::vector<std::vector<int>> bundles;
  bool complete = false;

  Value agent_value(const ChoreInstance& inst, int agent) const {
    return inst.bundle_value(agent, bundles[agent]);
  }
};

/// Validates disjointness and index bounds against a chore count of m;
/// bundle contents are stored sorted ascending.
Allocation make_allocation(std::vector<std::vector<int>> bundles, int m);

/// Turn order over ordered chore positions: turns[k] is the agent owning
/// ordered chore k. Replays grant picks from the last slot (easiest chore)
/// to the first (hardest).
struct PickingSequence {
  std::vector<int> turns;
};

/// Reads the owner of each ordered position off a complete ordered allocation.
PickingSequence picking_sequence(const Allocation& ordered_alloc, int m);

/// Replays the picking sequence of `ordered_alloc` on the original instance:
/// the owner of the easiest ordered slot picks first, each pick taking the
/// agent's highest-valued remaining chore (ties: lowest original index).
/// Every agent's lifted bundle is worth at least its ordered-instance bundle.
Allocation lift_allocation(const ChoreInstance& original, const Allocation& ordered_alloc);

/// Appends zero-valued chores until m >= 2d+1 (identity when already large enough).
OrderedInstance pad_with_dummies(const OrderedInstance& inst, int d);

/// For m < 2d the largest-magnitude chore can sit in a bundle by itself:
/// removes ordered column 0 and returns the reduced instance plus the removed
/// ordered position. Callers must keep d-1 >= 1 for follow-up share queries.
std::pair<OrderedInstance, int> reduce_singleton(const OrderedInstance& inst, int d);

/// Multiplies one agent's row by num/den; every entry must stay integral.
ChoreInstance scale_valuations(const ChoreInstance& inst, std::int64_t num, std::int64_t den,
                               int agent);

}  // namespace chorefair
