// Command-line front end for the lattice strip capacity library.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latcap/cache.hpp"
#include "latcap/enumerate.hpp"
#include "latcap/errors.hpp"

namespace {

std::string cache_path_from_env() {
  const char* dir = std::getenv("LATCAP_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/counts.txt";
}

int run_count(const std::string& kind, int m, int n, std::vector<int> profile,
              bool no_s2s, bool use_brute, const latcap::CountBudget& budget) {
  latcap::RegionSpec spec;
  if (kind == "rect") {
    spec.kind = latcap::RegionKind::rectangle;
    spec.m = m;
    spec.n = n;
  } else if (kind == "trap4") {
    spec.kind = latcap::RegionKind::trapezoid4;
    spec.profile = profile;
  } else if (kind == "trap5") {
    spec.kind = latcap::RegionKind::trapezoid5;
    spec.profile = profile;
  } else {
    std::cerr << "unknown kind: " << kind << "\n";
    return 1;
  }
  spec.forbid_side_to_side = no_s2s;

  try {
    latcap::BigCount value;
    if (use_brute) {
      value = latcap::enumerate_brute(spec);
    } else {
      std::string path = cache_path_from_env();
      if (path.empty()) {
        value = latcap::count_spec(spec, budget);
      } else {
        latcap::CountCache cache(path);
        value = cache.get_or_compute(spec, budget);
      }
    }
    std::cout << value.str() << "\n";
  } catch (const latcap::BudgetExceeded& e) {
    std::cerr << "budget exceeded (peak states " << e.peak_states << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice strip capacity toolkit"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "exact triangulation counts");
  std::string kind = "rect";
  int m = 1, n = 1;
  std::vector<int> profile;
  bool no_s2s = false, use_brute = false;
  count->add_option("--kind", kind, "rect|trap4|trap5")->required();
  count->add_option("--m", m, "strip width (rect)");
  count->add_option("--n", n, "strip length (rect)");
  count->add_option("--profile", profile,
                    "trap4: a e; trap5: lambda a0 a5");
  count->add_flag("--no-s2s", no_s2s, "exclude interior side-to-side edges");
  count->add_flag("--brute", use_brute, "use the brute-force engine");
  latcap::CountBudget budget;
  count->add_option("--max-states", budget.max_states, "DP state budget");
  count->add_option("--max-nodes", budget.max_nodes, "DP node budget");
  count->add_option("--reserve-states", budget.reserve_states,
                    "pre-size the DP memo for large runs");

  CLI11_PARSE(app, argc, argv);

  if (count->parsed()) return run_count(kind, m, n, profile, no_s2s, use_brute, budget);
  return 1;
}
