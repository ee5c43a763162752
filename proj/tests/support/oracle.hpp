#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "chorefair/instance.hpp"

namespace chorefair::testing {

/// Exhaustive 1-out-of-d share by enumerating every assignment vector.
/// Deliberately naive and kept independent of the library's branch-and-bound
/// so the two can cross-check each other. Only for tiny inputs (d^m states).
inline Value naive_mms(const ChoreInstance& inst, int agent, int d) {
  const int m = inst.m;
  Value best = std::numeric_limits<Value>::min();
  std::vector<int> assign(m, 0);
  while (true) {
    std::vector<Value> load(d, 0);
    for (int c = 0; c < m; ++c) load[assign[c]] += inst.values[agent][c];
    best = std::max(best, *std::min_element(load.begin(), load.end()));
    int pos = 0;
    while (pos < m && ++assign[pos] == d) assign[pos++] = 0;
    if (pos == m) break;
  }
  return best;
}

}  // namespace chorefair::testing
