#include "chorefair/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chorefair {

namespace {

using json = nlohmann::ordered_json;

// Keeps every sum/product the library forms comfortably inside int64.
constexpr std::int64_t kMaxMagnitude = 1'000'000'000'000;  // 10^12

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("not valid JSON");
  return doc;
}

}  // namespace

std::string instance_to_json(const InstanceDocument& doc) {
  json out;
  out["version"] = 1;
  out["agents"] = doc.instance.n;
  out["chores"] = doc.instance.m;
  out["values"] = doc.instance.values;
  if (doc.names) {
    out["names"] = json::object();
    out["names"]["agents"] = doc.names->agents;
    out["names"]["chores"] = doc.names->chores;
  }
  return out.dump(2) + "\n";
}

InstanceDocument instance_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    throw ParseError("field 'version' must be the integer 1");
  for (const char* field : {"agents", "chores", "values"})
    if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  if (!doc["agents"].is_number_integer() || !doc["chores"].is_number_integer())
    throw ParseError("fields 'agents'/'chores' must be integers");
  const int n = doc["agents"].get<int>();
  const int m = doc["chores"].get<int>();
  if (!doc["values"].is_array() || static_cast<int>(doc["values"].size()) != n)
    throw ParseError("field 'values' must be an array of 'agents' rows");

  std::vector<std::vector<Value>> values;
  values.reserve(n);
  for (const auto& row : doc["values"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw ParseError("each row of 'values' must hold 'chores' integers");
    std::vector<Value> r;
    r.reserve(m);
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw ParseError("values must be integers");
      const Value v = cell.get<Value>();
      if (v < -kMaxMagnitude)
        throw ParseError("value magnitude exceeds the documented limit of 10^12");
      r.push_back(v);
    }
    values.push_back(std::move(r));
  }

  InstanceDocument out;
  out.instance = validate_instance(std::move(values));  // sign/shape checks

  if (doc.contains("names")) {
    const auto& names = doc["names"];
    if (!names.is_object()) throw ParseError("field 'names' must be an object");
    InstanceNames nm;
    if (names.contains("agents")) nm.agents = names["agents"].get<std::vector<std::string>>();
    if (names.contains("chores")) nm.chores = names["chores"].get<std::vector<std::string>>();
    if (!nm.agents.empty() && static_cast<int>(nm.agents.size()) != n)
      throw ParseError("names.agents length mismatch");
    if (!nm.chores.empty() && static_cast<int>(nm.chores.size()) != m)
      throw ParseError("names.chores length mismatch");
    out.names = std::move(nm);
  }
  return out;
}

InstanceDocument load_instance(const std::string& path) {
  try {
    return instance_from_json(read_file(path));
  } catch (const PositiveValueError&) {
    throw;
  } catch (const DimensionMismatchError&) {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_instance(const InstanceDocument& doc, const std::string& path) {
  write_file(path, instance_to_json(doc));
}

std::string allocation_to_json(const Allocation& alloc, const ChoreInstance& inst) {
  json out;
  out["bundles"] = alloc.bundles;
  out["complete"] = alloc.complete;
  std::vector<Value> per_agent;
  per_agent.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i) per_agent.push_back(alloc.agent_value(inst, i));
  out["per_agent_value"] = per_agent;
  return out.dump(2) + "\n";
}

Allocation allocation_from_json(const std::string& text, int m) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("bundles") || !doc["bundles"].is_array())
    throw ParseError("allocation document must carry a 'bundles' array");
  std::vector<std::vector<int>> bundles;
  for (const auto& b : doc["bundles"]) {
    if (!b.is_array()) throw ParseError("each bundle must be an array of chore indices");
    bundles.push_back(b.get<std::vector<int>>());
  }
  try {
    return make_allocation(std::move(bundles), m);
  } catch (const InvalidParamsError& e) {
    throw ParseError(e.what());
  }
}

Allocation load_allocation(const std::string& path, int m) {
  try {
    return allocation_from_json(read_file(path), m);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_allocation(const Allocation& alloc, const ChoreInstance& inst, const std::string& path) {
  write_file(path, allocation_to_json(alloc, inst));
}

std::vector<std::int64_t> load_sizes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<std::int64_t> sizes;
  std::int64_t v;
  while (in >> v) {
    if (v < 1 || v > kMaxMagnitude) throw ParseError(path + ": sizes must be in [1, 10^12]");
    sizes.push_back(v);
  }
  if (!in.eof()) throw ParseError(path + ": sizes must be whitespace-separated integers");
  return sizes;
}

std::vector<Value> load_beta(const std::string& path, int n) {
  const json doc = parse(read_file(path));
  if (!doc.is_array() || static_cast<int>(doc.size()) != n)
    throw ParseError(path + ": expected a JSON array of " + std::to_string(n) + " thresholds");
  std::vector<Value> beta;
  for (const auto& cell : doc) {
    if (!cell.is_number_integer()) throw ParseError(path + ": thresholds must be integers");
    const Value b = cell.get<Value>();
    if (b > 0) throw ParseError(path + ": thresholds must be <= 0");
    beta.push_back(b);
  }
  return beta;
}

}  // namespace chorefair
