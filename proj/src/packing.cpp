#include "chorefair/packing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace chorefair {

namespace {

void check_packing_instance(const PackingInstance& p) {
  if (p.bin_capacity < 1) throw InvalidParamsError("bin capacity must be >= 1");
  for (std::size_t i = 0; i < p.sizes.size(); ++i)
    if (p.sizes[i] < 1)
      throw InvalidParamsError("item " + std::to_string(i) + " has non-positive size");
}

std::vector<int> descending_order(const std::vector<std::int64_t>& sizes) {
  std::vector<int> idx(sizes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&sizes](int a, int b) { return sizes[a] > sizes[b]; });
  return idx;
}

// Feasibility search state over items presorted by descending size.
struct FitSearch {
  const std::vector<std::int64_t>& weights;
  std::int64_t capacity;
  int max_bins;
  std::vector<std::int64_t> loads;
  std::vector<std::int64_t> suffix;  // suffix[i] = sum of weights[i..]
  std::vector<int> assign;
  bool found = false;

  FitSearch(const std::vector<std::int64_t>& w, std::int64_t cap, int bins)
      : weights(w), capacity(cap), max_bins(bins), loads(bins, 0), suffix(w.size() + 1, 0),
        assign(w.size(), 0) {
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + w[i];
  }

  bool usable_capacity_ok(std::size_t item) const {
    // Bins too full for even the smallest remaining item are dead weight.
    const std::int64_t smallest = weights.back();
    std::int64_t usable = 0;
    for (std::int64_t l : loads) {
      const std::int64_t room = capacity - l;
      if (room >= smallest) usable += room;
    }
    return usable >= suffix[item];
  }

  bool place(std::size_t item, int bin) {
    loads[bin] += weights[item];
    assign[item] = bin;
    const bool ok = dfs(item + 1);
    loads[bin] -= weights[item];
    return ok;
  }

  bool dfs(std::size_t item) {
    if (item == weights.size()) {
      found = true;
      return true;
    }
    if (!usable_capacity_ok(item)) return false;

    // Perfect fit: filling a bin exactly is never a mistake.
    for (int j = 0; j < max_bins; ++j)
      if (loads[j] > 0 && capacity - loads[j] == weights[item]) return place(item, j);

    for (int j = 0; j < max_bins; ++j) {
      bool duplicate = false;  // equal-load bins are interchangeable
      for (int t = 0; t < j && !duplicate; ++t) duplicate = loads[t] == loads[j];
      if (duplicate) continue;
      if (loads[j] + weights[item] > capacity) continue;
      if (place(item, j)) return true;
    }
    return false;
  }
};

}  // namespace

PackingResult ffd_pack(const PackingInstance& p) {
  check_packing_instance(p);
  for (std::size_t i = 0; i < p.sizes.size(); ++i)
    if (p.sizes[i] > p.bin_capacity) throw ItemTooLargeError(static_cast<int>(i));

  const std::vector<int> order = descending_order(p.sizes);
  std::vector<std::vector<int>> bins;
  std::vector<std::int64_t> loads;
  for (int item : order) {
    const std::int64_t size = p.sizes[item];
    bool placed = false;
    for (std::size_t b = 0; b < bins.size() && !placed; ++b) {
      if (loads[b] + size <= p.bin_capacity) {
        loads[b] += size;
        bins[b].push_back(item);
        placed = true;
      }
    }
    if (!placed) {
      bins.push_back({item});
      loads.push_back(size);
    }
  }
  const int count = static_cast<int>(bins.size());
  return PackingResult{std::move(bins), count};
}

PackDecision exact_pack(const PackingInstance& p, int max_bins, const Budget& budget) {
  check_packing_instance(p);
  if (max_bins < 1) throw InvalidParamsError("max_bins must be >= 1");
  if (static_cast<int>(p.sizes.size()) > budget.max_items)
    throw BudgetExceededError("exact packing limited to " + std::to_string(budget.max_items) +
                              " items");

  if (p.sizes.empty()) return PackDecision{true, PackingResult{{}, 0}};

  std::int64_t total = 0;
  for (std::int64_t s : p.sizes) {
    if (s > p.bin_capacity) return PackDecision{false, std::nullopt};
    total += s;
  }
  if (total > p.bin_capacity * static_cast<std::int64_t>(max_bins))
    return PackDecision{false, std::nullopt};

  const std::vector<int> order = descending_order(p.sizes);
  std::vector<std::int64_t> weights;
  weights.reserve(order.size());
  for (int i : order) weights.push_back(p.sizes[i]);

  FitSearch search(weights, p.bin_capacity, max_bins);
  if (!search.dfs(0)) return PackDecision{false, std::nullopt};

  std::vector<std::vector<int>> bins(max_bins);
  for (std::size_t i = 0; i < order.size(); ++i) bins[search.assign[i]].push_back(order[i]);
  PackingResult result;
  for (auto& bin : bins)
    if (!bin.empty()) {
      std::sort(bin.begin(), bin.end());
      result.bins.push_back(std::move(bin));
    }
  result.bin_count = static_cast<int>(result.bins.size());
  return PackDecision{true, std::move(result)};
}

int ffd_ordinal_factor(int d) {
  // FFD(I) >= d+1 forces OPT(I) >= ceil((9d+3)/11); one bundle fewer is
  // therefore infeasible at the failing capacity.
  return (9 * d + 3 + 10) / 11 - 1;
}

Packer exact_packer(const Budget& budget) {
  Packer packer;
  packer.name = "exact";
  packer.fits = [budget](const std::vector<std::int64_t>& sizes, std::int64_t capacity,
                         int max_bins) {
    return exact_pack(PackingInstance{sizes, capacity}, max_bins, budget).feasible;
  };
  packer.ordinal_factor = [](int d) { return d; };
  packer.bin_count_bound = [](std::int64_t opt) { return opt; };
  return packer;
}

Packer ffd_packer() {
  Packer packer;
  packer.name = "ffd";
  packer.fits = [](const std::vector<std::int64_t>& sizes, std::int64_t capacity, int max_bins) {
    for (std::int64_t s : sizes)
      if (s > capacity) return false;
    return ffd_pack(PackingInstance{sizes, capacity}).bin_count <= max_bins;
  };
  packer.ordinal_factor = ffd_ordinal_factor;
  packer.bin_count_bound = [](std::int64_t opt) { return (11 * opt + 6) / 9; };
  return packer;
}

Value approx_mms_threshold(const ChoreInstance& inst, int agent, int d, const Packer& packer,
                           ApproxSearchStats* stats) {
  if (d < 1) throw InvalidQueryError("threshold search needs d >= 1");
  if (agent < 0 || agent >= inst.n) throw InvalidQueryError("agent index out of range");

  std::vector<std::int64_t> sizes;
  std::int64_t sum = 0;
  for (Value v : inst.values[agent])
    if (v < 0) {
      sizes.push_back(-v);
      sum += -v;
    }
  if (stats) *stats = ApproxSearchStats{};
  if (sum == 0) return 0;  // nothing the agent cares about; zero chores fit anywhere

  std::int64_t upper = static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(sum)));
  std::int64_t lower = 0;
  if (stats) stats->initial_upper = upper;
  // Capacity `upper` >= sum holds everything in one bin, so it is feasible;
  // capacity 0 fits no item of size >= 1. Both ends start on the right side.

  while (upper > lower + 1) {
    if (lower < 0 || upper <= lower || !std::has_single_bit(static_cast<std::uint64_t>(upper - lower)))
      throw std::logic_error("capacity search bounds corrupted");
    if ((upper + lower) % 2 != 0) throw std::logic_error("capacity midpoint not integral");
    const std::int64_t mid = (upper + lower) / 2;
    if (stats) ++stats->iterations;
    if (packer.fits(sizes, mid, d))
      upper = mid;
    else
      lower = mid;
  }

  // Exit audit: U must still pack into <= d bins and L must not.
  if (!packer.fits(sizes, upper, d))
    throw std::logic_error("capacity search ended with infeasible upper bound");
  if (lower > 0 && packer.fits(sizes, lower, d))
    throw std::logic_error("capacity search ended with feasible lower bound");
  return -upper;
}

}  // namespace chorefair
