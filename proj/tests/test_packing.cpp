#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "chorefair/generator.hpp"
#include "chorefair/packing.hpp"
#include "support/oracle.hpp"

using namespace chorefair;
using chorefair::testing::naive_mms;

namespace {

std::vector<std::int64_t> tight_seven_sizes() {
  std::vector<std::int64_t> sizes;
  for (int i = 0; i < 4; ++i) sizes.push_back(201);
  for (int i = 0; i < 4; ++i) sizes.push_back(102);
  for (int i = 0; i < 4; ++i) sizes.push_back(101);
  for (int i = 0; i < 8; ++i) sizes.push_back(98);
  return sizes;
}

std::multiset<std::int64_t> bin_sizes(const PackingInstance& p, const std::vector<int>& bin) {
  std::multiset<std::int64_t> out;
  for (int item : bin) out.insert(p.sizes[item]);
  return out;
}

void check_feasible(const PackingInstance& p, const PackingResult& result) {
  std::set<int> seen;
  for (const auto& bin : result.bins) {
    std::int64_t load = 0;
    for (int item : bin) {
      CHECK(seen.insert(item).second);
      load += p.sizes[item];
    }
    CHECK(load <= p.bin_capacity);
  }
  CHECK(seen.size() == p.sizes.size());
  CHECK(result.bin_count == static_cast<int>(result.bins.size()));
}

int optimal_bins(const PackingInstance& p, const Budget& budget) {
  for (int bins = 1;; ++bins)
    if (exact_pack(p, bins, budget).feasible) return bins;
}

}  // namespace

TEST_CASE("first fit decreasing reproduces the tight-instance bins") {
  const PackingInstance p{tight_seven_sizes(), 400};
  const PackingResult result = ffd_pack(p);
  check_feasible(p, result);
  REQUIRE(result.bin_count == 8);
  for (int b = 0; b < 4; ++b)
    CHECK(bin_sizes(p, result.bins[b]) == std::multiset<std::int64_t>{201, 102});
  CHECK(bin_sizes(p, result.bins[4]) == std::multiset<std::int64_t>{101, 101, 101});
  CHECK(bin_sizes(p, result.bins[5]) == std::multiset<std::int64_t>{101, 98, 98, 98});
  CHECK(bin_sizes(p, result.bins[6]) == std::multiset<std::int64_t>{98, 98, 98, 98});
  CHECK(bin_sizes(p, result.bins[7]) == std::multiset<std::int64_t>{98});
}

TEST_CASE("first fit decreasing edge cases") {
  const PackingResult one = ffd_pack(PackingInstance{{1}, 1});
  CHECK(one.bin_count == 1);

  CHECK_THROWS_AS(ffd_pack(PackingInstance{{5, 3}, 4}), ItemTooLargeError);
  try {
    ffd_pack(PackingInstance{{3, 5}, 4});
  } catch (const ItemTooLargeError& e) {
    CHECK(e.item == 1);
  }
  CHECK_THROWS_AS(ffd_pack(PackingInstance{{0}, 4}), InvalidParamsError);
  CHECK_THROWS_AS(ffd_pack(PackingInstance{{1}, 0}), InvalidParamsError);
}

TEST_CASE("exact packing decides the tight instance at its exact capacity") {
  const Budget budget{20, 8};
  const PackingInstance at{tight_seven_sizes(), 400};
  const PackDecision yes = exact_pack(at, 6, budget);
  CHECK(yes.feasible);
  REQUIRE(yes.packing.has_value());
  check_feasible(at, *yes.packing);
  CHECK(yes.packing->bin_count <= 6);

  const PackingInstance below{tight_seven_sizes(), 399};
  CHECK_FALSE(exact_pack(below, 6, budget).feasible);
}

TEST_CASE("exact packing basics") {
  // One bin per item is always enough.
  const PackingInstance p{{7, 5, 3}, 7};
  const PackDecision spread = exact_pack(p, 3);
  CHECK(spread.feasible);

  CHECK_FALSE(exact_pack(PackingInstance{{9}, 8}, 4).feasible);  // oversized item
  CHECK(exact_pack(PackingInstance{{}, 5}, 1).feasible);

  CHECK_THROWS_AS(exact_pack(PackingInstance{std::vector<std::int64_t>(17, 1), 4}, 5),
                  BudgetExceededError);
}

TEST_CASE("exact packing agrees with first fit on random instances") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 60; ++trial) {
    const int count = 1 + rng() % 10;
    std::vector<std::int64_t> sizes;
    std::int64_t largest = 1;
    for (int i = 0; i < count; ++i) {
      sizes.push_back(1 + rng() % 30);
      largest = std::max(largest, sizes.back());
    }
    const PackingInstance p{sizes, largest + static_cast<std::int64_t>(rng() % 30)};
    const PackingResult ffd = ffd_pack(p);
    check_feasible(p, ffd);
    // FFD's bin count certifies feasibility at that count.
    CHECK(exact_pack(p, ffd.bin_count).feasible);
  }
}

TEST_CASE("first fit decreasing stays within its bin-count bound") {
  std::mt19937_64 rng(223);
  const Packer ffd = ffd_packer();
  for (int trial = 0; trial < 80; ++trial) {
    const int count = 1 + rng() % 12;
    std::vector<std::int64_t> sizes;
    std::int64_t largest = 1;
    for (int i = 0; i < count; ++i) {
      sizes.push_back(1 + rng() % 40);
      largest = std::max(largest, sizes.back());
    }
    const PackingInstance p{sizes, largest + static_cast<std::int64_t>(rng() % 40)};
    const int opt = optimal_bins(p, Budget{});
    const int used = ffd_pack(p).bin_count;
    CHECK(9 * used <= 11 * opt + 6);
    CHECK(used <= ffd.bin_count_bound(opt));
    CHECK(used >= opt);
  }
}

TEST_CASE("capacity search with the exact packer equals the exact share") {
  std::mt19937_64 rng(227);
  const Packer packer = exact_packer();
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + rng() % 9;
    const ChoreInstance inst = random_instance(rng(), 1, m, -9);
    const int d = 1 + rng() % 4;
    ApproxSearchStats stats;
    const Value beta = approx_mms_threshold(inst, 0, d, packer, &stats);
    CHECK(beta == naive_mms(inst, 0, d));

    std::int64_t sum = 0;
    for (Value v : inst.values[0]) sum += -v;
    if (sum > 0) {
      const auto upper = static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(sum)));
      CHECK(stats.initial_upper == upper);
      CHECK(stats.iterations == std::bit_width(static_cast<std::uint64_t>(upper)) - 1);
    }
  }
}

TEST_CASE("capacity search on the tight instance") {
  const ChoreInstance inst = tight_seven_instance();
  const Packer packer = exact_packer(Budget{20, 8});
  CHECK(approx_mms_threshold(inst, 0, 6, packer) == -400);
}

TEST_CASE("capacity search returns zero when the agent values nothing") {
  const ChoreInstance zeros = validate_instance({{0, 0, 0}});
  ApproxSearchStats stats;
  CHECK(approx_mms_threshold(zeros, 0, 2, exact_packer(), &stats) == 0);
  CHECK(stats.iterations == 0);
  CHECK(approx_mms_threshold(validate_instance({{}}), 0, 2, ffd_packer()) == 0);
}

TEST_CASE("first-fit thresholds sit between the two shares") {
  std::mt19937_64 rng(229);
  const Packer ffd = ffd_packer();
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + rng() % 9;
    const ChoreInstance inst = random_instance(rng(), 1, m, -12);
    const int d = 1 + rng() % 4;
    const int g = ffd.ordinal_factor(d);
    const Value beta = approx_mms_threshold(inst, 0, d, ffd);
    CHECK(beta >= naive_mms(inst, 0, g));
    CHECK(beta <= naive_mms(inst, 0, d));
  }
}

TEST_CASE("first-fit ordinal factor table") {
  CHECK(ffd_ordinal_factor(1) == 1);
  CHECK(ffd_ordinal_factor(2) == 1);
  CHECK(ffd_ordinal_factor(3) == 2);
  CHECK(ffd_ordinal_factor(4) == 3);
  CHECK(ffd_ordinal_factor(5) == 4);
  CHECK(ffd_ordinal_factor(6) == 5);
  CHECK(ffd_ordinal_factor(11) == 9);
}
