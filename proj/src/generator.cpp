#include "chorefair/generator.hpp"

#include <random>

namespace chorefair {

ChoreInstance ordering_demo_instance() {
  return validate_instance({{-3, -5, -6, -1}, {-2, -8, -4, -9}});
}

ChoreInstance tight_seven_instance() {
  std::vector<Value> row;
  for (int i = 0; i < 4; ++i) row.push_back(-201);
  for (int i = 0; i < 4; ++i) row.push_back(-102);
  for (int i = 0; i < 4; ++i) row.push_back(-101);
  for (int i = 0; i < 8; ++i) row.push_back(-98);
  return validate_instance(std::vector<std::vector<Value>>(7, row));
}

ChoreInstance unit_instance(int n, int m) {
  if (n < 1 || m < 0) throw InvalidParamsError("unit instance needs n >= 1 and m >= 0");
  return validate_instance(
      std::vector<std::vector<Value>>(n, std::vector<Value>(static_cast<std::size_t>(m), -1)));
}

ChoreInstance random_instance(std::uint64_t seed, int n, int m, Value min_value) {
  if (n < 1 || m < 0) throw InvalidParamsError("random instance needs n >= 1 and m >= 0");
  if (min_value > 0) throw InvalidParamsError("min_value must be <= 0");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(-min_value) + 1;
  std::vector<std::vector<Value>> rows(n, std::vector<Value>(static_cast<std::size_t>(m)));
  for (auto& row : rows)
    for (auto& v : row) v = -static_cast<Value>(rng() % span);
  return validate_instance(std::move(rows));
}

}  // namespace chorefair
