#include "chorefair/mms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace chorefair {

namespace {

// Minimize the maximum bundle magnitude of `weights` split into d bundles.
// Weights are non-negative, sorted descending.
struct MakespanSearch {
  const std::vector<std::int64_t>& weights;
  int d;
  std::int64_t lower_bound;
  std::int64_t best;
  std::vector<int> assign;
  std::vector<int> best_assign;
  std::vector<std::int64_t> loads;
  bool done = false;

  MakespanSearch(const std::vector<std::int64_t>& w, int d_, std::int64_t lb)
      : weights(w), d(d_), lower_bound(lb), best(0), assign(w.size(), 0),
        best_assign(w.size(), 0), loads(d_, 0) {}

  void seed_greedy() {
    // Longest-processing-time greedy supplies the incumbent.
    std::vector<std::int64_t> l(d, 0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      int j = static_cast<int>(std::min_element(l.begin(), l.end()) - l.begin());
      l[j] += weights[i];
      best_assign[i] = j;
    }
    best = *std::max_element(l.begin(), l.end());
    if (best == lower_bound) done = true;
  }

  void dfs(std::size_t item) {
    if (done) return;
    if (item == weights.size()) {
      // Pruning guarantees all loads < best here.
      best = *std::max_element(loads.begin(), loads.end());
      best_assign = assign;
      if (best == lower_bound) done = true;
      return;
    }
    for (int j = 0; j < d; ++j) {
      bool duplicate = false;  // bins with equal load are interchangeable
      for (int t = 0; t < j && !duplicate; ++t) duplicate = loads[t] == loads[j];
      if (duplicate) continue;
      const std::int64_t next = loads[j] + weights[item];
      if (next >= best) continue;  // cannot strictly improve the incumbent
      loads[j] = next;
      assign[item] = j;
      dfs(item + 1);
      loads[j] = next - weights[item];
      if (done) return;
    }
  }
};

}  // namespace

MmsResult mms_exact(const ChoreInstance& inst, MmsQuery q, const Budget& budget) {
  if (q.d < 1) throw InvalidQueryError("share queries need d >= 1");
  if (q.agent < 0 || q.agent >= inst.n) throw InvalidQueryError("agent index out of range");
  const int m = inst.m;
  const auto& row = inst.values[q.agent];

  if (m == 0) return MmsResult{0, std::vector<std::vector<int>>(q.d)};

  if (q.d >= m) {
    // Singletons are optimal: the minimum bundle is the worst single chore.
    MmsResult res;
    res.witness.assign(q.d, {});
    Value worst = 0;
    for (int c = 0; c < m; ++c) {
      res.witness[c] = {c};
      worst = std::min(worst, row[c]);
    }
    res.value = worst;
    return res;
  }

  if (m > budget.max_items || q.d > budget.max_bundles)
    throw BudgetExceededError("share search limited to " + std::to_string(budget.max_items) +
                              " chores and " + std::to_string(budget.max_bundles) + " bundles");

  // Order chores by descending magnitude; zero-valued chores never move the
  // optimum and are appended to the first bundle afterwards.
  std::vector<int> idx;
  for (int c = 0; c < m; ++c)
    if (row[c] != 0) idx.push_back(c);
  std::stable_sort(idx.begin(), idx.end(),
                   [&row](int a, int b) { return std::llabs(row[a]) > std::llabs(row[b]); });

  std::vector<std::int64_t> weights;
  weights.reserve(idx.size());
  std::int64_t total = 0;
  for (int c : idx) {
    weights.push_back(-row[c]);
    total += -row[c];
  }

  MmsResult res;
  res.witness.assign(q.d, {});
  if (weights.empty()) {
    for (int c = 0; c < m; ++c) res.witness[0].push_back(c);
    res.value = 0;
    return res;
  }

  const std::int64_t lb = std::max(weights[0], (total + q.d - 1) / q.d);
  MakespanSearch search(weights, q.d, lb);
  search.seed_greedy();
  if (!search.done) search.dfs(0);

  for (std::size_t i = 0; i < idx.size(); ++i)
    res.witness[search.best_assign[i]].push_back(idx[i]);
  for (int c = 0; c < m; ++c)
    if (row[c] == 0) res.witness[0].push_back(c);
  for (auto& bundle : res.witness) std::sort(bundle.begin(), bundle.end());
  res.value = -search.best;
  return res;
}

Rational proportional_share(const ChoreInstance& inst, int agent, int d) {
  if (d < 1) throw InvalidQueryError("proportional share needs d >= 1");
  if (agent < 0 || agent >= inst.n) throw InvalidQueryError("agent index out of range");
  return Rational::of(inst.total_value(agent), d);
}

Value counting_bound(const OrderedInstance& inst, int agent, int k, int d) {
  if (k < 0 || d < 1) throw InvalidQueryError("counting bound needs k >= 0 and d >= 1");
  if (agent < 0 || agent >= inst.n()) throw InvalidQueryError("agent index out of range");
  const std::int64_t last = static_cast<std::int64_t>(k) * d;  // 0-based position of c_{kd+1}
  if (last + 1 > inst.m())
    throw OutOfRangeError("counting bound needs kd+1 <= m");
  Value sum = 0;
  for (std::int64_t pos = last - k; pos <= last; ++pos)
    sum += inst.inner.values[agent][static_cast<int>(pos)];
  return sum;
}

ThresholdVector threshold_two_thirds(const OrderedInstance& inst) {
  const int n = inst.n();
  const int d = (2 * n) / 3;
  if (d < 1) throw TooFewAgentsError("threshold needs floor(2n/3) >= 1, i.e. n >= 2");
  if (inst.m() < 2 * d + 1)
    throw OutOfRangeError("instance must be padded to m >= 2d+1 before computing thresholds");

  ThresholdVector out;
  out.beta.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = inst.inner.values[i];
    const Value largest = row[0];
    const Value mid_pair = row[d - 1] + row[d];
    const Value small_triple = row[2 * d - 2] + row[2 * d - 1] + row[2 * d];
    const Value prop = floor_div(inst.inner.total_value(i), d);
    out.beta.push_back(std::min(std::min(largest, mid_pair), std::min(small_triple, prop)));
  }
  return out;
}

}  // namespace chorefair
