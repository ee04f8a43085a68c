#include "latcap/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latcap {

static const char* kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::rectangle: return "rect";
    case RegionKind::trapezoid4: return "trap4";
    case RegionKind::trapezoid5: return "trap5";
  }
  return "?";
}

std::string CountCache::key_for(const RegionSpec& spec) {
  std::ostringstream os;
  int m = spec.m, n = spec.n;
  std::string profile = "-";
  if (spec.kind == RegionKind::trapezoid4) {
    m = 4;
    n = spec.profile.at(0) + spec.profile.at(1);
    profile = std::to_string(spec.profile[0]) + "," + std::to_string(spec.profile[1]);
  } else if (spec.kind == RegionKind::trapezoid5) {
    m = 5;
    n = spec.profile.at(1) + spec.profile.at(2);
    profile = std::to_string(spec.profile[0]) + "," + std::to_string(spec.profile[1]) +
              "," + std::to_string(spec.profile[2]);
  }
  os << kind_name(spec.kind) << ' ' << m << ' ' << n << ' ' << profile << ' '
     << (spec.forbid_side_to_side ? "x" : "-");
  return os.str();
}

CountCache::CountCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string kind, profile, flags, count;
    int m, n;
    if (!(is >> kind >> m >> n >> profile >> flags >> count))
      throw std::runtime_error("malformed cache line: " + line);
    std::ostringstream key;
    key << kind << ' ' << m << ' ' << n << ' ' << profile << ' ' << flags;
    map_[key.str()] = BigCount(count);
  }
}

std::optional<BigCount> CountCache::lookup(const RegionSpec& spec) const {
  auto it = map_.find(key_for(spec));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(const RegionSpec& spec, const BigCount& value) {
  std::string key = key_for(spec);
  auto it = map_.find(key);
  if (it != map_.end()) {
    if (it->second != value)
      throw std::runtime_error("cache value mismatch for key: " + key);
    return;
  }
  map_.emplace(key, value);
  if (path_.empty()) return;
  bool fresh = false;
  {
    std::ifstream probe(path_);
    fresh = !probe.good();
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file: " + path_);
  if (fresh) out << "#latcap-cache v1\n";
  out << key << ' ' << value.str() << '\n';
}

BigCount CountCache::get_or_compute(const RegionSpec& spec, const CountBudget& budget) {
  if (auto hit = lookup(spec)) return *hit;
  BigCount v = count_spec(spec, budget);
  store(spec, v);
  return v;
}

} // namespace latcap
