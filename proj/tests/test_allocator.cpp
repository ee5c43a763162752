#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "chorefair/allocator.hpp"
#include "chorefair/generator.hpp"
#include "support/oracle.hpp"

using namespace chorefair;
using chorefair::testing::naive_mms;

namespace {

void check_trace_consistency(const OrderedInstance& inst, const Allocation& alloc,
                             const BagFillTrace& trace) {
  std::set<int> traced;
  for (const auto& bundle : trace.bundles) {
    int prev = -1;
    for (const auto& ins : bundle.inserts) {
      CHECK(ins.chore > prev);  // scan goes hardest to easiest within a bundle
      prev = ins.chore;
      CHECK_FALSE(ins.accepting.empty());
      CHECK(traced.insert(ins.chore).second);
    }
    CHECK(bundle.assignee >= 0);
  }
  for (int c : trace.leftover) CHECK(traced.insert(c).second);
  CHECK(static_cast<int>(traced.size()) == inst.m());
  // Trace bundles and allocation bundles carry the same chores.
  std::set<int> allocated;
  for (const auto& bundle : alloc.bundles)
    for (int c : bundle) allocated.insert(c);
  CHECK(static_cast<int>(allocated.size()) + static_cast<int>(trace.leftover.size()) == inst.m());
}

}  // namespace

TEST_CASE("bag filling reproduces the tight-instance rounds and leftover") {
  const ChoreInstance inst = tight_seven_instance();
  const OrderedInstance ord = order_instance(inst);
  ThresholdVector beta;
  beta.beta.assign(7, -400);

  const auto [alloc, trace] = bag_fill(ord, beta);
  CHECK_FALSE(alloc.complete);

  // Ordered positions: 0-3 are -201, 4-7 are -102, 8-11 are -101, 12-19 are -98.
  CHECK(alloc.bundles[0] == std::vector<int>{0, 4});
  CHECK(alloc.bundles[1] == std::vector<int>{1, 5});
  CHECK(alloc.bundles[2] == std::vector<int>{2, 6});
  CHECK(alloc.bundles[3] == std::vector<int>{3, 7});
  CHECK(alloc.bundles[4] == std::vector<int>{8, 9, 10});
  CHECK(alloc.bundles[5] == std::vector<int>{11, 12, 13, 14});
  CHECK(alloc.bundles[6] == std::vector<int>{15, 16, 17, 18});
  REQUIRE(trace.leftover == std::vector<int>{19});
  CHECK(ord.inner.values[0][19] == -98);
  check_trace_consistency(ord, alloc, trace);
}

TEST_CASE("bag filling with zero thresholds leaves strictly negative chores over") {
  const OrderedInstance ord = OrderedInstance::adopt(validate_instance(
      std::vector<std::vector<Value>>(3, {-9, -7, -4, -2, -1})));
  ThresholdVector beta;
  beta.beta.assign(3, 0);
  const auto [alloc, trace] = bag_fill(ord, beta);
  CHECK_FALSE(alloc.complete);
  for (const auto& bundle : alloc.bundles) CHECK(bundle.empty());
  CHECK(static_cast<int>(trace.leftover.size()) == 5);
}

TEST_CASE("bag filling three chores between two agents") {
  const OrderedInstance ord = OrderedInstance::adopt(validate_instance({{-3, -2, -1},
                                                                        {-3, -2, -1}}));
  ThresholdVector beta;
  beta.beta = {-3, -3};
  const auto [alloc, trace] = bag_fill(ord, beta);
  CHECK(alloc.complete);
  CHECK(alloc.bundles[0] == std::vector<int>{0});
  CHECK(alloc.bundles[1] == std::vector<int>{1, 2});
  CHECK(alloc.agent_value(ord.inner, 0) == -3);
  CHECK(alloc.agent_value(ord.inner, 1) == -3);
  check_trace_consistency(ord, alloc, trace);
}

TEST_CASE("bag filling always hands every agent exactly one bundle") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + rng() % 5;
    const int m = 1 + rng() % 10;
    const ChoreInstance inst = random_instance(rng(), n, m, -20);
    const OrderedInstance ord = order_instance(inst);
    ThresholdVector beta;
    for (int i = 0; i < n; ++i) beta.beta.push_back(-static_cast<Value>(rng() % 40));
    const auto [alloc, trace] = bag_fill(ord, beta);
    CHECK(static_cast<int>(alloc.bundles.size()) == n);
    for (int i = 0; i < n; ++i)
      CHECK(alloc.agent_value(ord.inner, i) >= beta.beta[i]);
    check_trace_consistency(ord, alloc, trace);
  }
}

TEST_CASE("lowering thresholds never breaks completeness") {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + rng() % 4;
    const int m = 2 + rng() % 8;
    const ChoreInstance inst = random_instance(rng(), n, m, -15);
    const OrderedInstance ord = order_instance(inst);
    ThresholdVector beta;
    for (int i = 0; i < n; ++i) beta.beta.push_back(mms_exact(inst, MmsQuery{i, n}).value);
    const auto [alloc, trace] = bag_fill(ord, beta);
    if (!alloc.complete) continue;
    ThresholdVector lower = beta;
    lower.beta[rng() % n] -= 1 + rng() % 10;
    const auto [alloc2, trace2] = bag_fill(ord, lower);
    CHECK(alloc2.complete);
  }
}

TEST_CASE("two-thirds pipeline on the walkthrough and unit instances") {
  const PipelineResult walkthrough = allocate_two_thirds(ordering_demo_instance());
  CHECK(walkthrough.allocation.complete);
  CHECK(walkthrough.report.certified());
  CHECK(walkthrough.report.guarantee_level == 1);

  const PipelineResult units = allocate_two_thirds(unit_instance(3, 6));
  CHECK(units.allocation.complete);
  CHECK(units.report.guarantee_level == 2);
  for (int i = 0; i < 3; ++i)
    CHECK(units.allocation.agent_value(unit_instance(3, 6), i) >= -3);  // exact share at d=2

  const ChoreInstance zeros = validate_instance(
      std::vector<std::vector<Value>>(4, std::vector<Value>(5, 0)));
  const PipelineResult zero_run = allocate_two_thirds(zeros);
  CHECK(zero_run.allocation.complete);
  for (const auto& check : zero_run.report.per_agent) CHECK(check.value == 0);
}

TEST_CASE("two-thirds pipeline is complete and share-safe on random instances") {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + rng() % 5;  // d = floor(2n/3) in 1..4
    const int m = n + rng() % std::min(4, 10 - n);
    const ChoreInstance inst = random_instance(rng(), n, m, -25);
    const PipelineResult result = allocate_two_thirds(inst);
    CHECK(result.allocation.complete);
    const int d = (2 * n) / 3;
    for (int i = 0; i < n; ++i)
      CHECK(result.allocation.agent_value(inst, i) >= naive_mms(inst, i, d));
  }
}

TEST_CASE("three-fourths pipeline allocates the tight instance completely") {
  const ChoreInstance inst = tight_seven_instance();
  const PipelineResult result = allocate_three_fourths_exact(inst, Budget{20, 8});
  CHECK(result.allocation.complete);
  CHECK(result.report.guarantee_level == 5);
  CHECK(result.report.certified());
}

TEST_CASE("three-fourths pipeline spreads sparse chores") {
  const ChoreInstance inst = unit_instance(4, 3);
  const PipelineResult result = allocate_three_fourths_exact(inst);
  CHECK(result.allocation.complete);
  int empty = 0;
  for (const auto& bundle : result.allocation.bundles) {
    CHECK(bundle.size() <= 1);
    empty += bundle.empty();
  }
  CHECK(empty == 1);
}

TEST_CASE("three-fourths pipeline is complete and share-safe on random instances") {
  std::mt19937_64 rng(313);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + rng() % 5;
    const int m = n + rng() % std::min(4, 10 - n);
    const ChoreInstance inst = random_instance(rng(), n, m, -25);
    const PipelineResult result = allocate_three_fourths_exact(inst);
    CHECK(result.allocation.complete);
    const int d = (3 * n) / 4;
    for (int i = 0; i < n; ++i)
      CHECK(result.allocation.agent_value(inst, i) >= naive_mms(inst, i, d));
  }
}

TEST_CASE("approx pipeline with the exact packer matches exact thresholds") {
  std::mt19937_64 rng(317);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + rng() % 4;
    const int m = n + rng() % 4;
    const ChoreInstance inst = random_instance(rng(), n, m, -20);
    const PipelineResult approx = allocate_approx(inst, exact_packer());
    const PipelineResult exact = allocate_three_fourths_exact(inst);
    CHECK(approx.thresholds.beta == exact.thresholds.beta);
    CHECK(approx.allocation.complete);
    CHECK(approx.report.guarantee_level == exact.report.guarantee_level);
  }
}

TEST_CASE("approx pipeline with first fit certifies the weaker factor") {
  const ChoreInstance inst = tight_seven_instance();
  const PipelineResult result = allocate_approx(inst, ffd_packer());
  CHECK(result.allocation.complete);
  CHECK(result.report.guarantee_level == 4);  // g(5) for the first-fit back-end
  CHECK(result.report.certified());

  const ChoreInstance zeros = validate_instance(
      std::vector<std::vector<Value>>(4, std::vector<Value>(4, 0)));
  const PipelineResult zero_run = allocate_approx(zeros, ffd_packer());
  CHECK(zero_run.allocation.complete);
  for (Value b : zero_run.thresholds.beta) CHECK(b == 0);
}

TEST_CASE("verification certifies the walkthrough allocation") {
  const ChoreInstance inst = ordering_demo_instance();
  const Allocation alloc = make_allocation({{1, 3}, {0, 2}}, 4);
  const VerificationReport report = verify_allocation(inst, alloc, 2);
  CHECK(report.complete);
  CHECK(report.certified());
  CHECK(report.per_agent[0].value == -6);
  CHECK(report.per_agent[0].target == -8);
  CHECK(report.per_agent[1].value == -6);
  CHECK(report.per_agent[1].target == -12);
}

TEST_CASE("verification refutes dumping everything on one agent") {
  const ChoreInstance inst = unit_instance(2, 4);
  const Allocation alloc = make_allocation({{0, 1, 2, 3}, {}}, 4);
  const VerificationReport report = verify_allocation(inst, alloc, 4);
  CHECK(report.complete);
  CHECK_FALSE(report.certified());
  CHECK_FALSE(report.per_agent[0].satisfied);
  CHECK(report.per_agent[1].satisfied);
}

TEST_CASE("pipeline outputs verify at their guarantee level") {
  std::mt19937_64 rng(331);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + rng() % 4;
    const int m = n + rng() % 4;
    const ChoreInstance inst = random_instance(rng(), n, m, -20);
    const PipelineResult result = allocate_two_thirds(inst);
    const VerificationReport report =
        verify_allocation(inst, result.allocation, (2 * n) / 3);
    CHECK(report.certified());
  }
}

TEST_CASE("caller-supplied thresholds can strand chores without failing") {
  const ChoreInstance inst = tight_seven_instance();
  ThresholdVector beta;
  beta.beta.assign(7, -400);
  const PipelineResult result = allocate_with_thresholds(inst, beta);
  CHECK_FALSE(result.allocation.complete);
  CHECK(result.trace.leftover.size() == 1);
  CHECK_FALSE(result.report.certified());
  CHECK(result.report.guarantee_level == 0);
}

TEST_CASE("tightness probe runs without claiming anything") {
  const TightnessProbeResult probe = bagfill_tightness_probe(7, 3, 4, 8);
  if (probe.found) {
    CHECK(probe.n == 4);
    CHECK(probe.d >= 3);
  }
}
