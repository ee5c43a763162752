#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorefair/instance.hpp"
#include "chorefair/mms.hpp"
#include "chorefair/rational.hpp"

namespace chorefair {

enum class FairnessNotion { EFc, EFx, PropC };

/// Outcome of one checker run. `witness` names a violating pair when the
/// notion fails: (envier, envied) for envy notions, (agent, -1) for
/// proportionality.
struct FairnessVerdict {
  FairnessNotion notion = FairnessNotion::EFc;
  int c = 0;  // removal budget for EFc / PropC
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
};

/// Chores semantics throughout: removals come from the ENVIER's own bundle.
/// EF-c: after dropping up to c of its own chores (best drops are the most
/// burdensome ones), the envier must not prefer any other bundle.
FairnessVerdict check_ef_c(const ChoreInstance& inst, const Allocation& alloc, int c);
FairnessVerdict check_ef1(const ChoreInstance& inst, const Allocation& alloc);

/// EFx: the weakest removal must already kill envy — dropping the chore with
/// the smallest |v_i| from the envier's bundle.
FairnessVerdict check_efx(const ChoreInstance& inst, const Allocation& alloc);

/// Proportionality up to c items: removing some <= c chores from the
/// agent's bundle reaches v_i(M)/n (exact rational comparison).
FairnessVerdict check_prop_c(const ChoreInstance& inst, const Allocation& alloc, int c);

/// v_i(A_i) / MMS_i^n per agent, the multiplicative factor attained. When an
/// agent's share is 0 the ratio is undefined and `satisfied_exactly` tells
/// whether the bundle still meets the (zero) share.
struct MmsRatio {
  bool share_is_zero = false;
  bool satisfied_exactly = false;
  Rational ratio{0, 1};
};
std::vector<MmsRatio> mult_mms_ratio(const ChoreInstance& inst, const Allocation& alloc,
                                     const Budget& budget = {});

/// Largest d <= m+n for which every agent meets its 1-out-of-d share
/// (scanned downward; shares are weakly increasing in d). Always >= 1 for a
/// complete allocation since the 1-bundle share is v_i(M). `saturated`
/// marks hitting the scan cap, past which the share no longer moves.
struct OrdinalLevel {
  int level = 1;
  bool saturated = false;
};
OrdinalLevel ordinal_mms_level(const ChoreInstance& inst, const Allocation& alloc,
                               const Budget& budget = {});

/// Canonical counterexample families used by the relation table:
///   B1: identical agents, one hard chore (-k) and k easy (-1); the hard
///       chore plus one easy go to agent 0, the rest round-robin.
///   B2: B1 with k = n (the EF1/PROP1-but-low-ordinal-level allocation).
///   B3: B1 with k = 3c+3; agent 0 takes the hard chore, agent 1 all easies.
///   B4: qd+1 unit chores for a single agent (factor-tightness instance).
///   B5: n+1 unit chores; agent 0 takes two, everyone else one (EFx).
enum class FixtureKind { B1, B2, B3, B4, B5 };

struct FixtureParams {
  int n = 3;
  int k = 2;
  int c = 1;
  int q = 2;
  int d = 2;
};

std::pair<ChoreInstance, Allocation> build_fixture(FixtureKind kind, const FixtureParams& params);

/// Robustness demonstration on the fixed 4-agent instance with one agent row
/// (-1,-5,-7,-9), everything scaled by eps_den so eps = eps_num/eps_den stays
/// integral. Evaluates bundle {c2,c3} against (4/3) * (1-out-of-4 share) and
/// bundle {c4} against the 1-out-of-3 share, before and after the fourth
/// chore moves to -9 + 3*eps.
struct PerturbationReport {
  std::int64_t scale = 1;  // = eps_den
  std::vector<Value> base_values;
  std::vector<Value> perturbed_values;
  Value share_n_before = 0, share_n_after = 0;       // 1-out-of-4, scaled
  Value share_ord_before = 0, share_ord_after = 0;   // 1-out-of-3, scaled
  bool cardinal_before = false, cardinal_after = false;  // {c2,c3} vs 4/3 factor
  bool ordinal_before = false, ordinal_after = false;    // {c4} vs 1-out-of-3
  bool cardinal_flipped = false;
  bool ordinal_flipped = false;
};
PerturbationReport perturbation_demo(std::int64_t eps_num, std::int64_t eps_den);

}  // namespace chorefair
