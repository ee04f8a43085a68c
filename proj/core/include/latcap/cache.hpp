#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "latcap/bigint.hpp"
#include "latcap/enumerate.hpp"

namespace latcap {

// Append-only disk cache of triangulation counts.  One record per line:
//   kind m n profile flags count_decimal
// with kind in {rect, trap4, trap5}, profile "-" or comma-separated integers,
// flags "x" when side-to-side edges are excluded and "-" otherwise.  Lines
// starting with '#' are comments; a version header is written on creation.
class CountCache {
public:
  // Binds the cache to a file; loads any existing records.
  explicit CountCache(std::string path);

  // In-memory only.
  CountCache() = default;

  static std::string key_for(const RegionSpec& spec);

  std::optional<BigCount> lookup(const RegionSpec& spec) const;

  // Records the value, appending to the backing file when one is bound.
  // Re-storing an existing key with the same value is a no-op; a different
  // value reports corruption.
  void store(const RegionSpec& spec, const BigCount& value);

  // Cached value if present, else computes with count_rectangle /
  // count_trapezoid and stores the result.
  BigCount get_or_compute(const RegionSpec& spec, const CountBudget& budget = {});

  std::size_t size() const { return map_.size(); }
  const std::string& path() const { return path_; }

private:
  std::string path_; // empty when unbound
  std::unordered_map<std::string, BigCount> map_;
};

} // namespace latcap
