#include "chorefair/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace chorefair {

Value ChoreInstance::bundle_value(int agent, const std::vector<int>& bundle) const {
  Value sum = 0;
  for (int c : bundle) sum += values[agent][c];
  return sum;
}

Value ChoreInstance::total_value(int agent) const {
  Value sum = 0;
  for (Value v : values[agent]) sum += v;
  return sum;
}

ChoreInstance validate_instance(std::vector<std::vector<Value>> raw) {
  if (raw.empty()) throw DimensionMismatchError("instance needs at least one agent row");
  const int n = static_cast<int>(raw.size());
  const int m = static_cast<int>(raw[0].size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != m)
      throw DimensionMismatchError("row " + std::to_string(i) + " has " +
                                   std::to_string(raw[i].size()) + " entries, expected " +
                                   std::to_string(m));
    for (int c = 0; c < m; ++c)
      if (raw[i][c] > 0) throw PositiveValueError(i, c);
  }
  return ChoreInstance{n, m, std::move(raw)};
}

namespace {

bool row_is_ordered(const std::vector<Value>& row) {
  for (std::size_t k = 0; k + 1 < row.size(); ++k)
    if (std::llabs(row[k]) < std::llabs(row[k + 1])) return false;
  return true;
}

}  // namespace

OrderedInstance OrderedInstance::adopt(ChoreInstance inst) {
  for (int i = 0; i < inst.n; ++i)
    if (!row_is_ordered(inst.values[i]))
      throw DimensionMismatchError("row " + std::to_string(i) +
                                   " is not in descending magnitude order");
  return OrderedInstance{std::move(inst), std::nullopt};
}

OrderedInstance order_instance(const ChoreInstance& inst) {
  std::vector<std::vector<Value>> rows(inst.n);
  std::vector<std::vector<int>> perm(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    std::vector<int> idx(inst.m);
    std::iota(idx.begin(), idx.end(), 0);
    const auto& row = inst.values[i];
    std::stable_sort(idx.begin(), idx.end(),
                     [&row](int a, int b) { return std::llabs(row[a]) > std::llabs(row[b]); });
    rows[i].reserve(inst.m);
    for (int k : idx) rows[i].push_back(row[k]);
    perm[i] = std::move(idx);
  }
  ChoreInstance ordered{inst.n, inst.m, std::move(rows)};
  return OrderedInstance{std::move(ordered), std::move(perm)};
}

Allocation make_allocation(std::vector<std::vector<int>> bundles, int m) {
  std::vector<char> seen(m, 0);
  int assigned = 0;
  for (auto& bundle : bundles) {
    std::sort(bundle.begin(), bundle.end());
    for (int c : bundle) {
      if (c < 0 || c >= m)
        throw InvalidParamsError("chore index " + std::to_string(c) + " out of range");
      if (seen[c])
        throw InvalidParamsError("chore " + std::to_string(c) + " assigned twice");
      seen[c] = 1;
      ++assigned;
    }
  }
  return Allocation{std::move(bundles), assigned == m};
}

PickingSequence picking_sequence(const Allocation& ordered_alloc, int m) {
  if (!ordered_alloc.complete)
    throw IncompleteSourceError("picking sequence requires a complete ordered allocation");
  std::vector<int> owner(m, -1);
  for (int i = 0; i < static_cast<int>(ordered_alloc.bundles.size()); ++i)
    for (int c : ordered_alloc.bundles[i]) {
      if (c < 0 || c >= m) throw IncompleteSourceError("ordered chore index out of range");
      owner[c] = i;
    }
  for (int k = 0; k < m; ++k)
    if (owner[k] < 0) throw IncompleteSourceError("ordered chore " + std::to_string(k) + " unowned");
  return PickingSequence{std::move(owner)};
}

Allocation lift_allocation(const ChoreInstance& original, const Allocation& ordered_alloc) {
  const int m = original.m;
  const PickingSequence seq = picking_sequence(ordered_alloc, m);

  std::vector<char> taken(m, 0);
  std::vector<std::vector<int>> bundles(original.n);
  // Easiest ordered slot first; at each turn the acting agent takes its
  // highest-valued remaining chore, lowest index on ties.
  for (int t = m - 1; t >= 0; --t) {
    const int agent = seq.turns[t];
    int pick = -1;
    for (int c = 0; c < m; ++c) {
      if (taken[c]) continue;
      if (pick < 0 || original.values[agent][c] > original.values[agent][pick]) pick = c;
    }
    taken[pick] = 1;
    bundles[agent].push_back(pick);
  }
  return make_allocation(std::move(bundles), m);
}

OrderedInstance pad_with_dummies(const OrderedInstance& inst, int d) {
  if (d < 1) throw InvalidParamsError("pad_with_dummies requires d >= 1");
  const int target = 2 * d + 1;
  if (inst.m() >= target) return inst;

  OrderedInstance padded = inst;
  padded.inner.m = target;
  for (auto& row : padded.inner.values) row.resize(target, 0);
  if (padded.source_perm) {
    // Dummies count as extra source chores appended past the original m.
    for (auto& row : *padded.source_perm)
      for (int c = inst.m(); c < target; ++c) row.push_back(c);
  }
  return padded;
}

std::pair<OrderedInstance, int> reduce_singleton(const OrderedInstance& inst, int d) {
  if (d < 1) throw InvalidParamsError("reduce_singleton requires d >= 1");
  if (inst.m() < 1) throw NotApplicableError("no chore to remove");
  if (inst.m() >= 2 * d)
    throw NotApplicableError("m >= 2d: largest chore is not guaranteed a singleton bundle");

  OrderedInstance reduced = inst;
  reduced.inner.m = inst.m() - 1;
  for (auto& row : reduced.inner.values) row.erase(row.begin());
  if (reduced.source_perm)
    for (auto& row : *reduced.source_perm) row.erase(row.begin());
  return {std::move(reduced), 0};
}

ChoreInstance scale_valuations(const ChoreInstance& inst, std::int64_t num, std::int64_t den,
                               int agent) {
  if (num < 1 || den < 1) throw InvalidParamsError("scale factor must be positive");
  if (agent < 0 || agent >= inst.n) throw InvalidParamsError("agent index out of range");

  ChoreInstance scaled = inst;
  for (Value& v : scaled.values[agent]) {
    const __int128 prod = static_cast<__int128>(v) * num;
    if (prod % den != 0)
      throw NonIntegerResultError("scaling by " + std::to_string(num) + "/" +
                                  std::to_string(den) + " leaves a non-integer value");
    v = static_cast<Value>(prod / den);
  }
  return scaled;
}

}  // namespace chorefair
