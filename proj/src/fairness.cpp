#include "chorefair/fairness.hpp"

#include <algorithm>
#include <cstdlib>

namespace chorefair {

namespace {

void require_complete(const Allocation& alloc) {
  if (!alloc.complete) throw IncompleteAllocationError("checker needs a complete allocation");
}

// Value of agent's own bundle after dropping its `c` most burdensome chores.
Value trimmed_own_value(const ChoreInstance& inst, const std::vector<int>& bundle, int agent,
                        int c) {
  std::vector<Value> vals;
  vals.reserve(bundle.size());
  for (int ch : bundle) vals.push_back(inst.values[agent][ch]);
  std::sort(vals.begin(), vals.end());  // most negative first
  Value sum = 0;
  for (std::size_t t = 0; t < vals.size(); ++t)
    if (t >= static_cast<std::size_t>(c)) sum += vals[t];
  return sum;
}

}  // namespace

FairnessVerdict check_ef_c(const ChoreInstance& inst, const Allocation& alloc, int c) {
  require_complete(alloc);
  if (c < 0) throw InvalidParamsError("removal budget must be >= 0");
  FairnessVerdict verdict{FairnessNotion::EFc, c, true, std::nullopt};
  for (int i = 0; i < inst.n; ++i) {
    const Value own = alloc.agent_value(inst, i);
    const Value trimmed = trimmed_own_value(inst, alloc.bundles[i], i, c);
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      const Value other = inst.bundle_value(i, alloc.bundles[j]);  // i's view of j's bundle
      if (own >= other) continue;  // no envy to begin with
      if (trimmed >= other) continue;
      verdict.holds = false;
      verdict.witness = {i, j};
      return verdict;
    }
  }
  return verdict;
}

FairnessVerdict check_ef1(const ChoreInstance& inst, const Allocation& alloc) {
  return check_ef_c(inst, alloc, 1);
}

FairnessVerdict check_efx(const ChoreInstance& inst, const Allocation& alloc) {
  require_complete(alloc);
  FairnessVerdict verdict{FairnessNotion::EFx, 0, true, std::nullopt};
  for (int i = 0; i < inst.n; ++i) {
    const Value own = alloc.agent_value(inst, i);
    // Weakest removal: the chore with the smallest magnitude for the envier.
    Value weakest = 0;
    bool have = false;
    for (int ch : alloc.bundles[i]) {
      const Value v = inst.values[i][ch];
      if (!have || v > weakest) {
        weakest = v;
        have = true;
      }
    }
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      const Value other = inst.bundle_value(i, alloc.bundles[j]);
      if (own >= other) continue;
      if (have && own - weakest >= other) continue;
      verdict.holds = false;
      verdict.witness = {i, j};
      return verdict;
    }
  }
  return verdict;
}

FairnessVerdict check_prop_c(const ChoreInstance& inst, const Allocation& alloc, int c) {
  require_complete(alloc);
  if (c < 0) throw InvalidParamsError("removal budget must be >= 0");
  FairnessVerdict verdict{FairnessNotion::PropC, c, true, std::nullopt};
  for (int i = 0; i < inst.n; ++i) {
    const Value trimmed = trimmed_own_value(inst, alloc.bundles[i], i, c);
    // trimmed >= v_i(M)/n  <=>  n * trimmed >= v_i(M), exactly.
    if (static_cast<__int128>(inst.n) * trimmed >= static_cast<__int128>(inst.total_value(i)))
      continue;
    verdict.holds = false;
    verdict.witness = {i, -1};
    return verdict;
  }
  return verdict;
}

std::vector<MmsRatio> mult_mms_ratio(const ChoreInstance& inst, const Allocation& alloc,
                                     const Budget& budget) {
  std::vector<MmsRatio> out;
  out.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    const Value share = mms_exact(inst, MmsQuery{i, inst.n}, budget).value;
    const Value v = alloc.agent_value(inst, i);
    MmsRatio entry;
    if (share == 0) {
      entry.share_is_zero = true;
      entry.satisfied_exactly = v >= 0;
    } else {
      entry.ratio = Rational::of(v, share);  // both <= 0, so the ratio is >= 0
      entry.satisfied_exactly = v >= share;
    }
    out.push_back(entry);
  }
  return out;
}

OrdinalLevel ordinal_mms_level(const ChoreInstance& inst, const Allocation& alloc,
                               const Budget& budget) {
  const int cap = inst.m + inst.n;
  for (int d = cap; d >= 1; --d) {
    bool all_ok = true;
    for (int i = 0; i < inst.n && all_ok; ++i) {
      const Value share = mms_exact(inst, MmsQuery{i, d}, budget).value;
      all_ok = alloc.agent_value(inst, i) >= share;
    }
    if (all_ok) return OrdinalLevel{d, d == cap};
  }
  // Unreachable for complete allocations: the 1-bundle share is v_i(M).
  return OrdinalLevel{0, false};
}

std::pair<ChoreInstance, Allocation> build_fixture(FixtureKind kind, const FixtureParams& params) {
  const auto hard_easy = [](int n, int k) {
    std::vector<Value> row(1 + k, -1);
    row[0] = -k;
    return validate_instance(std::vector<std::vector<Value>>(n, row));
  };
  const auto spread_allocation = [](int n, int k, int m) {
    // Agent 0 takes the hard chore and the first easy; the remaining k-1
    // easies go round-robin to agents 1..n-1.
    std::vector<std::vector<int>> bundles(n);
    bundles[0] = {0, 1};
    for (int e = 2; e <= k; ++e) bundles[1 + (e - 2) % (n - 1)].push_back(e);
    return make_allocation(std::move(bundles), m);
  };

  switch (kind) {
    case FixtureKind::B1: {
      if (params.n < 2 || params.k < 2) throw InvalidParamsError("B1 needs n >= 2 and k >= 2");
      ChoreInstance inst = hard_easy(params.n, params.k);
      Allocation alloc = spread_allocation(params.n, params.k, inst.m);
      return {std::move(inst), std::move(alloc)};
    }
    case FixtureKind::B2: {
      if (params.n < 2) throw InvalidParamsError("B2 needs n >= 2");
      const int k = params.n;
      ChoreInstance inst = hard_easy(params.n, k);
      Allocation alloc = spread_allocation(params.n, k, inst.m);
      return {std::move(inst), std::move(alloc)};
    }
    case FixtureKind::B3: {
      if (params.n < 3 || params.c < 1) throw InvalidParamsError("B3 needs n >= 3 and c >= 1");
      const int k = 3 * params.c + 3;
      ChoreInstance inst = hard_easy(params.n, k);
      std::vector<std::vector<int>> bundles(params.n);
      bundles[0] = {0};
      for (int e = 1; e <= k; ++e) bundles[1].push_back(e);
      Allocation alloc = make_allocation(std::move(bundles), inst.m);
      return {std::move(inst), std::move(alloc)};
    }
    case FixtureKind::B4: {
      if (params.q < 1 || params.d < 1) throw InvalidParamsError("B4 needs q >= 1 and d >= 1");
      const int m = params.q * params.d + 1;
      ChoreInstance inst =
          validate_instance({std::vector<Value>(static_cast<std::size_t>(m), -1)});
      std::vector<int> everything(m);
      for (int c = 0; c < m; ++c) everything[c] = c;
      Allocation alloc = make_allocation({everything}, m);
      return {std::move(inst), std::move(alloc)};
    }
    case FixtureKind::B5: {
      if (params.n < 2) throw InvalidParamsError("B5 needs n >= 2");
      // Two hard unit chores plus the easy mass discretized into n-1 units.
      const int m = params.n + 1;
      ChoreInstance inst = validate_instance(std::vector<std::vector<Value>>(
          params.n, std::vector<Value>(static_cast<std::size_t>(m), -1)));
      std::vector<std::vector<int>> bundles(params.n);
      bundles[0] = {0, 1};
      for (int a = 1; a < params.n; ++a) bundles[a] = {a + 1};
      Allocation alloc = make_allocation(std::move(bundles), m);
      return {std::move(inst), std::move(alloc)};
    }
  }
  throw InvalidParamsError("unknown fixture kind");
}

PerturbationReport perturbation_demo(std::int64_t eps_num, std::int64_t eps_den) {
  if (eps_den < 1 || eps_num < 1 || eps_num >= eps_den)
    throw InvalidEpsilonError("epsilon must be a rational in (0, 1)");

  PerturbationReport report;
  report.scale = eps_den;
  report.base_values = {-1 * eps_den, -5 * eps_den, -7 * eps_den, -9 * eps_den};
  report.perturbed_values = report.base_values;
  report.perturbed_values[3] = -9 * eps_den + 3 * eps_num;

  const auto four_agents = [](const std::vector<Value>& row) {
    return validate_instance(std::vector<std::vector<Value>>(4, row));
  };
  const ChoreInstance before = four_agents(report.base_values);
  const ChoreInstance after = four_agents(report.perturbed_values);

  const Budget budget;  // four chores, trivially inside
  report.share_n_before = mms_exact(before, MmsQuery{0, 4}, budget).value;
  report.share_n_after = mms_exact(after, MmsQuery{0, 4}, budget).value;
  report.share_ord_before = mms_exact(before, MmsQuery{0, 3}, budget).value;
  report.share_ord_after = mms_exact(after, MmsQuery{0, 3}, budget).value;

  // Bundle {c2,c3} against the 4/3 multiplicative factor: 3*v >= 4*share.
  const auto cardinal_ok = [](const ChoreInstance& inst, Value share) {
    const Value v = inst.values[0][1] + inst.values[0][2];
    return 3 * v >= 4 * share;
  };
  // Bundle {c4} against the 1-out-of-3 share.
  const auto ordinal_ok = [](const ChoreInstance& inst, Value share) {
    return inst.values[0][3] >= share;
  };

  report.cardinal_before = cardinal_ok(before, report.share_n_before);
  report.cardinal_after = cardinal_ok(after, report.share_n_after);
  report.ordinal_before = ordinal_ok(before, report.share_ord_before);
  report.ordinal_after = ordinal_ok(after, report.share_ord_after);
  report.cardinal_flipped = report.cardinal_before != report.cardinal_after;
  report.ordinal_flipped = report.ordinal_before != report.ordinal_after;
  return report;
}

}  // namespace chorefair
