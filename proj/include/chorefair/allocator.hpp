#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chorefair/instance.hpp"
#include "chorefair/mms.hpp"
#include "chorefair/packing.hpp"

namespace chorefair {

/// Audit trail of one bag-filling run. Chore indices are positions in the
/// ordered instance the run consumed.
struct BagFillInsertion {
  int chore = -1;
  std::vector<int> accepting;  // remaining agents that tolerated the insertion
};

struct BagFillBundle {
  std::vector<BagFillInsertion> inserts;
  int assignee = -1;
};

struct BagFillTrace {
  std::vector<BagFillBundle> bundles;
  std::vector<int> leftover;

  /// One line per insertion plus hand-off and leftover lines.
  std::vector<std::string> log_lines(const OrderedInstance& inst) const;
};

/// Threshold bag filling: repeatedly grow a bundle by scanning the remaining
/// chores from hardest to easiest, adding a chore whenever some remaining
/// agent still tolerates the bundle, then hand the bundle to the
/// lowest-indexed agent whose threshold it meets. Runs exactly n rounds;
/// chores no bundle could absorb are reported as leftovers, never dropped.
std::pair<Allocation, BagFillTrace> bag_fill(const OrderedInstance& inst,
                                             const ThresholdVector& beta);

struct AgentCheck {
  Value value = 0;    // what the agent's bundle is worth to the agent
  Value target = 0;   // threshold or share target the run promised
  bool satisfied = false;
};

struct VerificationReport {
  bool complete = false;
  std::vector<AgentCheck> per_agent;
  int guarantee_level = 0;  // the d being certified
  std::string certificate;  // how the targets were obtained

  bool certified() const;
};

/// Full pipeline output: the lifted allocation plus audit material.
struct PipelineResult {
  Allocation allocation;
  VerificationReport report;
  BagFillTrace trace;
  PickingSequence sequence;
  ThresholdVector thresholds;
};

/// order -> pad to 2d+1 -> counting-bound thresholds -> bag fill -> strip
/// dummies -> lift, with d = floor(2n/3). Always complete.
PipelineResult allocate_two_thirds(const ChoreInstance& inst);

/// Thresholds are each agent's exact 1-out-of-floor(3n/4) share; the bag
/// fill then provably allocates every chore.
PipelineResult allocate_three_fourths_exact(const ChoreInstance& inst, const Budget& budget = {});

/// Thresholds from the capacity binary search at d = floor(3n/4); the report
/// certifies the packer's ordinal factor g(d).
PipelineResult allocate_approx(const ChoreInstance& inst, const Packer& packer);

/// Runs bag filling with caller-supplied thresholds (no completeness
/// promise) and lifts whatever was allocated only if complete; incomplete
/// runs return the ordered-instance allocation as-is with its leftovers.
PipelineResult allocate_with_thresholds(const ChoreInstance& inst, const ThresholdVector& beta);

/// Checks structure, completeness and per-agent value against the exact
/// 1-out-of-d share of each agent.
VerificationReport verify_allocation(const ChoreInstance& inst, const Allocation& alloc, int d,
                                     const Budget& budget = {});

/// Exploratory harness: random identical-valuation instances, escalating d,
/// reports the first (n, d, seed) where bag filling at exact-share
/// thresholds leaves a chore over. Makes no claim; exists for poking at the
/// gap between the floor(3n/4) guarantee and observed behaviour.
struct TightnessProbeResult {
  bool found = false;
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
};
TightnessProbeResult bagfill_tightness_probe(std::uint64_t base_seed, int trials, int n, int m,
                                             const Budget& budget = {});

}  // namespace chorefair
