#include "chorefair/allocator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace chorefair {

std::vector<std::string> BagFillTrace::log_lines(const OrderedInstance& inst) const {
  std::vector<std::string> lines;
  for (std::size_t b = 0; b < bundles.size(); ++b) {
    for (const auto& ins : bundles[b].inserts) {
      std::string accepting;
      for (std::size_t t = 0; t < ins.accepting.size(); ++t) {
        if (t) accepting += ",";
        accepting += std::to_string(ins.accepting[t]);
      }
      lines.push_back("bundle " + std::to_string(b) + " insert chore " +
                      std::to_string(ins.chore) + " value " +
                      std::to_string(inst.inner.values[bundles[b].assignee][ins.chore]) +
                      " accepting " + accepting);
    }
    lines.push_back("bundle " + std::to_string(b) + " assigned agent " +
                    std::to_string(bundles[b].assignee));
  }
  for (int c : leftover) lines.push_back("leftover chore " + std::to_string(c));
  return lines;
}

bool VerificationReport::certified() const {
  if (!complete) return false;
  for (const auto& check : per_agent)
    if (!check.satisfied) return false;
  return true;
}

std::pair<Allocation, BagFillTrace> bag_fill(const OrderedInstance& inst,
                                             const ThresholdVector& beta) {
  const int n = inst.n();
  const int m = inst.m();
  if (static_cast<int>(beta.beta.size()) != n)
    throw InvalidParamsError("one threshold per agent required");
  for (Value b : beta.beta)
    if (b > 0) throw InvalidParamsError("thresholds must be <= 0");

  std::vector<char> agent_remaining(n, 1);
  std::vector<char> chore_remaining(m, 1);
  std::vector<std::vector<int>> bundles(n);
  BagFillTrace trace;
  trace.bundles.resize(n);

  for (int round = 0; round < n; ++round) {
    std::vector<int> bag;
    std::vector<Value> bag_value(n, 0);  // per remaining agent

    for (int c = 0; c < m; ++c) {
      if (!chore_remaining[c]) continue;
      std::vector<int> accepting;
      for (int i = 0; i < n; ++i) {
        if (!agent_remaining[i]) continue;
        if (bag_value[i] + inst.inner.values[i][c] >= beta.beta[i]) accepting.push_back(i);
      }
      if (accepting.empty()) continue;
      bag.push_back(c);
      chore_remaining[c] = 0;
      for (int i = 0; i < n; ++i)
        if (agent_remaining[i]) bag_value[i] += inst.inner.values[i][c];
      trace.bundles[round].inserts.push_back(BagFillInsertion{c, std::move(accepting)});
    }

    int assignee = -1;
    for (int i = 0; i < n && assignee < 0; ++i)
      if (agent_remaining[i] && bag_value[i] >= beta.beta[i]) assignee = i;
    // An empty bag is worth 0 >= beta to everyone, and every insertion kept
    // some agent at or above threshold, so a taker always exists.
    if (assignee < 0) throw std::logic_error("bag filling produced an unassignable bundle");

    bundles[assignee] = std::move(bag);
    trace.bundles[round].assignee = assignee;
    agent_remaining[assignee] = 0;
  }

  for (int c = 0; c < m; ++c)
    if (chore_remaining[c]) trace.leftover.push_back(c);
  return {make_allocation(std::move(bundles), m), std::move(trace)};
}

namespace {

int two_thirds_level(int n) { return (2 * n) / 3; }
int three_fourths_level(int n) { return (3 * n) / 4; }

VerificationReport report_against_thresholds(const ChoreInstance& inst, const Allocation& lifted,
                                             const ThresholdVector& beta, int level,
                                             std::string certificate) {
  VerificationReport report;
  report.complete = lifted.complete;
  report.guarantee_level = level;
  report.certificate = std::move(certificate);
  for (int i = 0; i < inst.n; ++i) {
    const Value v = lifted.agent_value(inst, i);
    report.per_agent.push_back(AgentCheck{v, beta.beta[i], v >= beta.beta[i]});
  }
  return report;
}

Allocation strip_dummies(const Allocation& padded_alloc, int real_m) {
  std::vector<std::vector<int>> bundles(padded_alloc.bundles.size());
  for (std::size_t i = 0; i < padded_alloc.bundles.size(); ++i)
    for (int c : padded_alloc.bundles[i])
      if (c < real_m) bundles[i].push_back(c);
  return make_allocation(std::move(bundles), real_m);
}

PipelineResult finish_pipeline(const ChoreInstance& inst, const OrderedInstance& ordered,
                               const ThresholdVector& beta, int level, std::string certificate) {
  auto [ordered_alloc, trace] = bag_fill(ordered, beta);
  if (!ordered_alloc.complete)
    throw std::logic_error("pipeline thresholds must allocate every chore");
  PipelineResult out;
  out.sequence = picking_sequence(ordered_alloc, inst.m);
  out.allocation = lift_allocation(inst, ordered_alloc);
  out.trace = std::move(trace);
  out.thresholds = beta;
  out.report =
      report_against_thresholds(inst, out.allocation, beta, level, std::move(certificate));
  return out;
}

}  // namespace

PipelineResult allocate_two_thirds(const ChoreInstance& inst) {
  const int d = two_thirds_level(inst.n);
  if (d < 1) throw TooFewAgentsError("needs floor(2n/3) >= 1, i.e. n >= 2");

  const OrderedInstance ordered = order_instance(inst);
  const OrderedInstance padded = pad_with_dummies(ordered, d);
  const ThresholdVector beta = threshold_two_thirds(padded);

  auto [padded_alloc, trace] = bag_fill(padded, beta);
  if (!padded_alloc.complete)
    throw std::logic_error("two-thirds thresholds must allocate every chore");

  const Allocation stripped = strip_dummies(padded_alloc, inst.m);
  PipelineResult out;
  out.sequence = picking_sequence(stripped, inst.m);
  out.allocation = lift_allocation(inst, stripped);
  out.trace = std::move(trace);
  out.thresholds = beta;
  out.report = report_against_thresholds(
      inst, out.allocation, beta, d,
      "counting-bound thresholds (largest chore, middle pair, small triple) with floored "
      "proportional share at d = floor(2n/3)");
  return out;
}

PipelineResult allocate_three_fourths_exact(const ChoreInstance& inst, const Budget& budget) {
  const int d = three_fourths_level(inst.n);
  if (d < 1) throw TooFewAgentsError("needs floor(3n/4) >= 1, i.e. n >= 2");

  ThresholdVector beta;
  for (int i = 0; i < inst.n; ++i)
    beta.beta.push_back(mms_exact(inst, MmsQuery{i, d}, budget).value);

  return finish_pipeline(inst, order_instance(inst), beta, d,
                         "exact 1-out-of-" + std::to_string(d) + " share thresholds");
}

PipelineResult allocate_approx(const ChoreInstance& inst, const Packer& packer) {
  const int d = three_fourths_level(inst.n);
  if (d < 1) throw TooFewAgentsError("needs floor(3n/4) >= 1, i.e. n >= 2");

  ThresholdVector beta;
  for (int i = 0; i < inst.n; ++i)
    beta.beta.push_back(approx_mms_threshold(inst, i, d, packer));

  const int g = packer.ordinal_factor(d);
  return finish_pipeline(inst, order_instance(inst), beta, g,
                         "capacity binary search (" + packer.name + " packer) at d = " +
                             std::to_string(d) + ", certified g(d) = " + std::to_string(g));
}

PipelineResult allocate_with_thresholds(const ChoreInstance& inst, const ThresholdVector& beta) {
  const OrderedInstance ordered = order_instance(inst);
  auto [ordered_alloc, trace] = bag_fill(ordered, beta);

  PipelineResult out;
  out.trace = std::move(trace);
  out.thresholds = beta;
  if (ordered_alloc.complete) {
    out.sequence = picking_sequence(ordered_alloc, inst.m);
    out.allocation = lift_allocation(inst, ordered_alloc);
    out.report = report_against_thresholds(inst, out.allocation, beta, 0,
                                           "caller-supplied thresholds (no guarantee certified)");
  } else {
    // Bundles stay in ordered-position coordinates; lifting needs completeness.
    out.allocation = ordered_alloc;
    out.report = report_against_thresholds(
        ordered.inner, out.allocation, beta, 0,
        "caller-supplied thresholds (no guarantee certified); bundles are ordered positions");
  }
  return out;
}

VerificationReport verify_allocation(const ChoreInstance& inst, const Allocation& alloc, int d,
                                     const Budget& budget) {
  if (d < 1) throw InvalidQueryError("verification needs d >= 1");
  if (static_cast<int>(alloc.bundles.size()) != inst.n)
    throw InvalidParamsError("allocation must have one bundle per agent");
  // Re-validates disjointness/bounds and recomputes completeness.
  const Allocation checked = make_allocation(alloc.bundles, inst.m);

  VerificationReport report;
  report.complete = checked.complete;
  report.guarantee_level = d;
  report.certificate = "exact 1-out-of-" + std::to_string(d) + " share oracle";
  for (int i = 0; i < inst.n; ++i) {
    const Value target = mms_exact(inst, MmsQuery{i, d}, budget).value;
    const Value v = checked.agent_value(inst, i);
    report.per_agent.push_back(AgentCheck{v, target, v >= target});
  }
  return report;
}

TightnessProbeResult bagfill_tightness_probe(std::uint64_t base_seed, int trials, int n, int m,
                                             const Budget& budget) {
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(seed);
    std::vector<Value> row(m);
    for (Value& v : row) v = -static_cast<Value>(rng() % 50 + 1);
    std::vector<std::vector<Value>> rows(n, row);
    const ChoreInstance inst = validate_instance(std::move(rows));
    const OrderedInstance ordered = order_instance(inst);

    for (int d = three_fourths_level(n); d <= n; ++d) {
      if (d < 1) continue;
      ThresholdVector beta;
      beta.beta.assign(n, mms_exact(inst, MmsQuery{0, d}, budget).value);
      auto [alloc, trace] = bag_fill(ordered, beta);
      if (!alloc.complete) return TightnessProbeResult{true, n, d, seed};
    }
  }
  return TightnessProbeResult{};
}

}  // namespace chorefair
