#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chorefair/allocator.hpp"
#include "chorefair/fairness.hpp"
#include "chorefair/generator.hpp"
#include "chorefair/io.hpp"
#include "chorefair/mms.hpp"
#include "chorefair/packing.hpp"

using namespace chorefair;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotSatisfied = 2;  // incomplete allocation / refuted / infeasible

std::string bundle_str(const std::vector<int>& bundle) {
  std::string out = "{";
  for (std::size_t i = 0; i < bundle.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(bundle[i]);
  }
  return out + "}";
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) throw ParseError("cannot write " + output_path);
    out << text;
  }
}

ojson report_json(const VerificationReport& report, const Allocation& alloc) {
  ojson agents = ojson::array();
  for (std::size_t i = 0; i < report.per_agent.size(); ++i) {
    const auto& check = report.per_agent[i];
    agents.push_back({{"agent", i},
                      {"value", check.value},
                      {"target", check.target},
                      {"satisfied", check.satisfied},
                      {"bundle", alloc.bundles[i]}});
  }
  ojson out;
  out["guarantee_level"] = report.guarantee_level;
  out["certificate"] = report.certificate;
  out["complete"] = report.complete;
  out["certified"] = report.certified();
  out["agents"] = std::move(agents);
  return out;
}

void print_report_text(std::ostream& os, const VerificationReport& report,
                       const Allocation& alloc) {
  os << "guarantee level d = " << report.guarantee_level << "\n";
  os << "certificate: " << report.certificate << "\n";
  os << "complete: " << (report.complete ? "yes" : "no") << "\n";
  os << "agent  value  target  ok  bundle\n";
  for (std::size_t i = 0; i < report.per_agent.size(); ++i) {
    const auto& check = report.per_agent[i];
    char line[64];
    std::snprintf(line, sizeof(line), "%5zu %6lld %7lld %3s  ", i,
                  static_cast<long long>(check.value), static_cast<long long>(check.target),
                  check.satisfied ? "yes" : "no");
    os << line << bundle_str(alloc.bundles[i]) << "\n";
  }
}

struct AllocateOptions {
  std::string instance_path;
  std::string method = "twothirds";
  std::string packer = "exact";
  std::string beta_path;
  std::string output_path;
  std::string trace_path;
  std::string format = "text";
  Budget budget;
};

int run_allocate(const AllocateOptions& opt) {
  const InstanceDocument doc = load_instance(opt.instance_path);
  const ChoreInstance& inst = doc.instance;

  PipelineResult result;
  std::string method = opt.method;
  if (!opt.beta_path.empty()) {
    ThresholdVector beta;
    beta.beta = load_beta(opt.beta_path, inst.n);
    result = allocate_with_thresholds(inst, beta);
    method = "thresholds";
  } else if (opt.method == "twothirds") {
    result = allocate_two_thirds(inst);
  } else if (opt.method == "threefourths") {
    result = allocate_three_fourths_exact(inst, opt.budget);
  } else if (opt.method == "approx") {
    result = allocate_approx(inst, opt.packer == "ffd" ? ffd_packer() : exact_packer(opt.budget));
  } else {
    throw InvalidParamsError("unknown method " + opt.method);
  }

  if (!opt.output_path.empty()) save_allocation(result.allocation, inst, opt.output_path);
  if (!opt.trace_path.empty()) {
    std::ofstream trace_out(opt.trace_path);
    if (!trace_out) throw ParseError("cannot write " + opt.trace_path);
    const OrderedInstance ordered = order_instance(inst);
    for (const auto& line : result.trace.log_lines(ordered)) trace_out << line << "\n";
  }

  if (opt.format == "json") {
    ojson out;
    out["method"] = method;
    out["report"] = report_json(result.report, result.allocation);
    out["allocation"] = ojson::parse(allocation_to_json(result.allocation, inst));
    out["picking_sequence"] = result.sequence.turns;
    out["thresholds"] = result.thresholds.beta;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "method: " << method << "\n";
    print_report_text(std::cout, result.report, result.allocation);
    if (!result.allocation.complete) {
      std::cout << "leftover ordered positions: ";
      for (std::size_t i = 0; i < result.trace.leftover.size(); ++i)
        std::cout << (i ? "," : "") << result.trace.leftover[i];
      std::cout << "\n";
    } else if (!result.sequence.turns.empty()) {
      std::cout << "picking sequence (owners of ordered positions, hardest first):";
      for (int t : result.sequence.turns) std::cout << " " << t;
      std::cout << "\n";
    }
  }
  return result.allocation.complete ? kExitOk : kExitNotSatisfied;
}

int run_verify(const std::string& instance_path, const std::string& alloc_path, int d,
               const std::string& format, const Budget& budget) {
  const InstanceDocument doc = load_instance(instance_path);
  const Allocation alloc = load_allocation(alloc_path, doc.instance.m);
  const VerificationReport report = verify_allocation(doc.instance, alloc, d, budget);

  if (format == "json") {
    std::cout << report_json(report, alloc).dump(2) << "\n";
  } else {
    print_report_text(std::cout, report, alloc);
    std::cout << (report.certified() ? "certified" : "refuted") << " at d = " << d << "\n";
  }
  return report.certified() ? kExitOk : kExitNotSatisfied;
}

struct AnalyzeOptions {
  std::string instance_path;
  std::vector<int> d_values;
  std::string format = "text";
  Budget budget;
};

int run_analyze(const AnalyzeOptions& opt) {
  const InstanceDocument doc = load_instance(opt.instance_path);
  const ChoreInstance& inst = doc.instance;
  const OrderedInstance ordered = order_instance(inst);

  std::vector<int> ds = opt.d_values;
  if (ds.empty()) ds.push_back(inst.n);

  const Packer exact = exact_packer(opt.budget);
  const Packer ffd = ffd_packer();

  ojson sections = ojson::array();
  for (int d : ds) {
    if (d < 1) throw InvalidParamsError("analysis needs d >= 1");
    ojson rows = ojson::array();
    for (int i = 0; i < inst.n; ++i) {
      ojson row;
      row["agent"] = i;
      try {
        row["mms"] = mms_exact(inst, MmsQuery{i, d}, opt.budget).value;
      } catch (const BudgetExceededError&) {
        row["mms"] = "budget";
      }
      for (int k = 0; k <= 2; ++k) {
        const std::string key = "bound_k" + std::to_string(k);
        try {
          row[key] = counting_bound(ordered, i, k, d);
        } catch (const OutOfRangeError&) {
          row[key] = "n/a";
        }
      }
      row["proportional"] = proportional_share(inst, i, d).str();
      try {
        row["beta_exact"] = approx_mms_threshold(inst, i, d, exact);
      } catch (const BudgetExceededError&) {
        row["beta_exact"] = "budget";
      }
      row["beta_ffd"] = approx_mms_threshold(inst, i, d, ffd);
      rows.push_back(std::move(row));
    }
    ojson section;
    section["d"] = d;
    section["g_exact"] = exact.ordinal_factor(d);
    section["g_ffd"] = ffd.ordinal_factor(d);
    section["agents"] = std::move(rows);
    sections.push_back(std::move(section));
  }

  if (opt.format == "json") {
    ojson out;
    out["instance"] = opt.instance_path;
    out["sections"] = std::move(sections);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  for (const auto& section : sections) {
    std::cout << "d = " << section["d"] << "  (beta_exact certifies g = " << section["g_exact"]
              << ", beta_ffd certifies g = " << section["g_ffd"] << ")\n";
    std::cout << "agent  mms  bound_k0  bound_k1  bound_k2  proportional  beta_exact  beta_ffd\n";
    for (const auto& row : section["agents"]) {
      std::cout << "  " << row["agent"].get<int>();
      for (const char* key :
           {"mms", "bound_k0", "bound_k1", "bound_k2", "proportional", "beta_exact", "beta_ffd"}) {
        const auto& cell = row[key];
        std::cout << "  " << (cell.is_string() ? cell.get<std::string>() : cell.dump());
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

struct GenerateOptions {
  std::string kind;
  int n = 3;
  int m = 6;
  std::uint64_t seed = 0;
  Value vmin = -50;
  std::string output_path;
};

int run_generate(const GenerateOptions& opt) {
  InstanceDocument doc;
  if (opt.kind == "ordering") {
    doc.instance = ordering_demo_instance();
  } else if (opt.kind == "tight7") {
    doc.instance = tight_seven_instance();
  } else if (opt.kind == "unit") {
    doc.instance = unit_instance(opt.n, opt.m);
  } else if (opt.kind == "random") {
    doc.instance = random_instance(opt.seed, opt.n, opt.m, opt.vmin);
  } else {
    throw InvalidParamsError("unknown kind " + opt.kind);
  }
  emit(instance_to_json(doc), opt.output_path);
  return kExitOk;
}

struct FairnessOptions {
  std::string fixture;
  bool all = false;
  FixtureParams params;
  std::string format = "text";
  Budget budget;
};

ojson fairness_row(const std::string& label, const ChoreInstance& inst, const Allocation& alloc,
                   int c, const Budget& budget) {
  const FairnessVerdict ef1 = check_ef1(inst, alloc);
  const FairnessVerdict efx = check_efx(inst, alloc);
  const FairnessVerdict efc = check_ef_c(inst, alloc, c);
  const FairnessVerdict prop = check_prop_c(inst, alloc, c);
  const std::vector<MmsRatio> ratios = mult_mms_ratio(inst, alloc, budget);
  const OrdinalLevel level = ordinal_mms_level(inst, alloc, budget);

  std::string worst_ratio = "exact";
  Rational worst{0, 1};
  bool have = false;
  for (const auto& r : ratios)
    if (!r.share_is_zero && (!have || r.ratio > worst)) {
      worst = r.ratio;
      have = true;
    }
  if (have) worst_ratio = worst.str();

  ojson row;
  row["fixture"] = label;
  row["ef1"] = ef1.holds;
  row["efx"] = efx.holds;
  row["ef_c"] = efc.holds;
  row["prop_c"] = prop.holds;
  row["c"] = c;
  row["max_mult_ratio"] = worst_ratio;
  row["ordinal_level"] = level.level;
  row["level_saturated"] = level.saturated;
  return row;
}

int run_compare_fairness(const FairnessOptions& opt) {
  struct Entry {
    std::string label;
    FixtureKind kind;
    FixtureParams params;
    int c;
  };
  std::vector<Entry> entries;
  const auto parse_kind = [](const std::string& name) {
    if (name == "B1") return FixtureKind::B1;
    if (name == "B2") return FixtureKind::B2;
    if (name == "B3") return FixtureKind::B3;
    if (name == "B4") return FixtureKind::B4;
    if (name == "B5") return FixtureKind::B5;
    throw InvalidParamsError("unknown fixture " + name);
  };

  if (opt.all) {
    for (int k = 2; k <= 4; ++k)
      entries.push_back({"B1(n=3,k=" + std::to_string(k) + ")", FixtureKind::B1,
                         FixtureParams{3, k, 1, 2, 2}, 1});
    entries.push_back({"B2(n=3)", FixtureKind::B2, FixtureParams{3, 3, 1, 2, 2}, 1});
    entries.push_back({"B3(n=3,c=1)", FixtureKind::B3, FixtureParams{3, 6, 1, 2, 2}, 1});
    entries.push_back({"B4(q=2,d=2)", FixtureKind::B4, FixtureParams{1, 2, 1, 2, 2}, 1});
    entries.push_back({"B5(n=5)", FixtureKind::B5, FixtureParams{5, 2, 1, 2, 2}, 1});
  } else {
    if (opt.fixture.empty()) throw InvalidParamsError("pass --fixture B1|B2|B3|B4|B5 or --all");
    entries.push_back({opt.fixture, parse_kind(opt.fixture), opt.params, opt.params.c});
  }

  ojson rows = ojson::array();
  for (const auto& entry : entries) {
    const auto [inst, alloc] = build_fixture(entry.kind, entry.params);
    rows.push_back(fairness_row(entry.label, inst, alloc, entry.c, opt.budget));
  }

  if (opt.format == "json") {
    std::cout << rows.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& row : rows) {
    std::cout << row["fixture"].get<std::string>() << ": "
              << "EF1 " << (row["ef1"].get<bool>() ? "holds" : "fails") << "; "
              << "EFx " << (row["efx"].get<bool>() ? "holds" : "fails") << "; "
              << "EF-" << row["c"] << " " << (row["ef_c"].get<bool>() ? "holds" : "fails") << "; "
              << "PROP-" << row["c"] << " " << (row["prop_c"].get<bool>() ? "holds" : "fails")
              << "; mult " << row["max_mult_ratio"].get<std::string>() << "; ordinal level "
              << row["ordinal_level"] << (row["level_saturated"].get<bool>() ? " (saturated)" : "")
              << "\n";
  }
  return kExitOk;
}

struct PackOptions {
  std::string sizes_path;
  std::int64_t capacity = 1;
  std::string packer = "ffd";
  int max_bins = 0;
  std::string format = "text";
  Budget budget;
};

int run_pack(const PackOptions& opt) {
  const std::vector<std::int64_t> sizes = load_sizes(opt.sizes_path);
  const PackingInstance p{sizes, opt.capacity};

  std::optional<PackingResult> result;
  bool feasible = true;
  if (opt.packer == "exact") {
    if (opt.max_bins < 1) throw InvalidParamsError("exact packing needs --max-bins");
    PackDecision decision = exact_pack(p, opt.max_bins, opt.budget);
    feasible = decision.feasible;
    result = std::move(decision.packing);
  } else if (opt.packer == "ffd") {
    result = ffd_pack(p);
  } else {
    throw InvalidParamsError("unknown packer " + opt.packer);
  }

  if (opt.format == "json") {
    ojson out;
    out["items"] = sizes.size();
    out["capacity"] = opt.capacity;
    out["packer"] = opt.packer;
    out["feasible"] = feasible;
    if (result) {
      out["bin_count"] = result->bin_count;
      out["bins"] = result->bins;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "items: " << sizes.size() << ", capacity: " << opt.capacity
              << ", packer: " << opt.packer << "\n";
    if (!feasible) {
      std::cout << "infeasible with at most " << opt.max_bins << " bins\n";
    } else if (result) {
      std::cout << "bins: " << result->bin_count << "\n";
      for (std::size_t b = 0; b < result->bins.size(); ++b) {
        std::int64_t load = 0;
        std::string contents;
        for (int item : result->bins[b]) {
          if (!contents.empty()) contents += ",";
          contents += std::to_string(sizes[item]);
          load += sizes[item];
        }
        std::cout << "bin " << b << ": sizes {" << contents << "} load " << load << "\n";
      }
    }
  }
  return feasible ? kExitOk : kExitNotSatisfied;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximin-share chore allocation toolkit"};
  app.require_subcommand(1);

  AllocateOptions alloc_opt;
  CLI::App* allocate = app.add_subcommand("allocate", "compute a share-safe allocation");
  allocate->add_option("instance", alloc_opt.instance_path, "instance file")->required();
  allocate->add_option("--method", alloc_opt.method, "twothirds | threefourths | approx");
  allocate->add_option("--packer", alloc_opt.packer, "exact | ffd (approx only)");
  allocate->add_option("--beta-file", alloc_opt.beta_path, "raw thresholds, one per agent");
  allocate->add_option("--output,-o", alloc_opt.output_path, "allocation file to write");
  allocate->add_option("--trace", alloc_opt.trace_path, "bag-fill trace log to write");
  allocate->add_option("--format", alloc_opt.format, "text | json");
  allocate->add_option("--max-items", alloc_opt.budget.max_items, "search budget: chores");
  allocate->add_option("--max-bundles", alloc_opt.budget.max_bundles, "search budget: bundles");

  std::string verify_instance, verify_alloc, verify_format = "text";
  int verify_d = 1;
  Budget verify_budget;
  CLI::App* verify = app.add_subcommand("verify", "certify an allocation against exact shares");
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("allocation", verify_alloc, "allocation file")->required();
  verify->add_option("--d", verify_d, "share level to certify")->required();
  verify->add_option("--format", verify_format, "text | json");
  verify->add_option("--max-items", verify_budget.max_items, "search budget: chores");
  verify->add_option("--max-bundles", verify_budget.max_bundles, "search budget: bundles");

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand("analyze", "per-agent share table");
  analyze->add_option("instance", analyze_opt.instance_path, "instance file")->required();
  analyze->add_option("--d", analyze_opt.d_values, "share levels to tabulate");
  analyze->add_option("--format", analyze_opt.format, "text | json");
  analyze->add_option("--max-items", analyze_opt.budget.max_items, "search budget: chores");
  analyze->add_option("--max-bundles", analyze_opt.budget.max_bundles, "search budget: bundles");

  GenerateOptions gen_opt;
  CLI::App* generate = app.add_subcommand("generate", "emit named or random instances");
  generate->add_option("--kind", gen_opt.kind, "ordering | tight7 | unit | random")->required();
  generate->add_option("--n", gen_opt.n, "agents");
  generate->add_option("--m", gen_opt.m, "chores");
  generate->add_option("--seed", gen_opt.seed, "random seed");
  generate->add_option("--vmin", gen_opt.vmin, "most negative value (random kind)");
  generate->add_option("--output,-o", gen_opt.output_path, "write here instead of stdout");

  FairnessOptions fair_opt;
  CLI::App* fairness = app.add_subcommand("compare-fairness", "evaluate notions on fixtures");
  fairness->add_option("--fixture", fair_opt.fixture, "B1 | B2 | B3 | B4 | B5");
  fairness->add_flag("--all", fair_opt.all, "run the whole fixture battery");
  fairness->add_option("--n", fair_opt.params.n, "agents");
  fairness->add_option("--k", fair_opt.params.k, "easy chore count (B1)");
  fairness->add_option("--c", fair_opt.params.c, "removal budget (B3 and checkers)");
  fairness->add_option("--q", fair_opt.params.q, "grouping factor (B4)");
  fairness->add_option("--d", fair_opt.params.d, "bundle count (B4)");
  fairness->add_option("--format", fair_opt.format, "text | json");
  fairness->add_option("--max-items", fair_opt.budget.max_items, "search budget: chores");
  fairness->add_option("--max-bundles", fair_opt.budget.max_bundles, "search budget: bundles");

  PackOptions pack_opt;
  CLI::App* pack = app.add_subcommand("pack", "bin-pack a list of sizes");
  pack->add_option("sizes", pack_opt.sizes_path, "whitespace-separated sizes file")->required();
  pack->add_option("--capacity", pack_opt.capacity, "bin capacity")->required();
  pack->add_option("--packer", pack_opt.packer, "ffd | exact");
  pack->add_option("--max-bins", pack_opt.max_bins, "bin limit (exact decision)");
  pack->add_option("--format", pack_opt.format, "text | json");
  pack->add_option("--max-items", pack_opt.budget.max_items, "search budget: items");

  CLI11_PARSE(app, argc, argv);

  try {
    if (allocate->parsed()) return run_allocate(alloc_opt);
    if (verify->parsed())
      return run_verify(verify_instance, verify_alloc, verify_d, verify_format, verify_budget);
    if (analyze->parsed()) return run_analyze(analyze_opt);
    if (generate->parsed()) return run_generate(gen_opt);
    if (fairness->parsed()) return run_compare_fairness(fair_opt);
    if (pack->parsed()) return run_pack(pack_opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
