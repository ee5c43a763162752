#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chorefair/instance.hpp"

namespace chorefair {

/// Optional display names carried by instance files.
struct InstanceNames {
  std::vector<std::string> agents;
  std::vector<std::string> chores;
};

/// Instance document: the matrix plus optional names. `version` is fixed at 1.
struct InstanceDocument {
  ChoreInstance instance;
  std::optional<InstanceNames> names;
};

std::string instance_to_json(const InstanceDocument& doc);
InstanceDocument instance_from_json(const std::string& text);

InstanceDocument load_instance(const std::string& path);
void save_instance(const InstanceDocument& doc, const std::string& path);

/// Allocation files carry bundles, the completeness flag and per-agent values.
std::string allocation_to_json(const Allocation& alloc, const ChoreInstance& inst);
/// `m` validates chore indices; the completeness flag is recomputed.
Allocation allocation_from_json(const std::string& text, int m);

Allocation load_allocation(const std::string& path, int m);
void save_allocation(const Allocation& alloc, const ChoreInstance& inst, const std::string& path);

/// Whitespace-separated positive integers (packing item sizes).
std::vector<std::int64_t> load_sizes(const std::string& path);

/// Threshold file: JSON array of n integers <= 0.
std::vector<Value> load_beta(const std::string& path, int n);

}  // namespace chorefair
