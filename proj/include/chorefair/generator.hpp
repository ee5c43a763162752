#pragma once

#include <cstdint>

#include "chorefair/instance.hpp"

namespace chorefair {

/// The 2x4 unordered walkthrough instance used by the ordering/lifting docs.
ChoreInstance ordering_demo_instance();

/// 7 identical agents, 20 chores (4x -201, 4x -102, 4x -101, 8x -98): the
/// regression instance where exact-share bag filling at 6 bundles strands a
/// -98 chore.
ChoreInstance tight_seven_instance();

/// n agents, m chores, every value -1.
ChoreInstance unit_instance(int n, int m);

/// Seeded uniform instance with values in [min_value, 0]. Determinism is
/// byte-exact across platforms: draws come straight from mt19937_64 with
/// modulo reduction, not from distribution objects.
ChoreInstance random_instance(std::uint64_t seed, int n, int m, Value min_value = -50);

}  // namespace chorefair
