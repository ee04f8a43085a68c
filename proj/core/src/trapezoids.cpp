#include "latcap/trapezoids.hpp"

namespace latcap {

static BigCount fetch(const RegionSpec& spec, const CountBudget& budget,
                      CountCache* cache) {
  if (cache) return cache->get_or_compute(spec, budget);
  return count_spec(spec, budget);
}

std::vector<BigCount> trapezoid4_coeffs(int nmax, bool all_edges,
                                        const CountBudget& budget,
                                        CountCache* cache) {
  std::vector<BigCount> out((std::size_t)nmax + 1, BigCount(0));
  for (int n = 0; n <= nmax; n += 2) {
    for (int a = 0; a <= n; ++a) {
      RegionSpec spec;
      spec.kind = RegionKind::trapezoid4;
      spec.profile = {a, n - a};
      spec.forbid_side_to_side = !all_edges;
      out[(std::size_t)n] += fetch(spec, budget, cache);
    }
  }
  return out;
}

std::vector<LMat> trapezoid5_coeffs(int nmax, bool all_edges,
                                    const CountBudget& budget,
                                    CountCache* cache) {
  std::vector<LMat> out((std::size_t)nmax + 1);
  for (auto& m : out)
    for (auto& row : m)
      for (auto& v : row) v = 0;
  for (int n = 0; n <= nmax; ++n) {
    for (int lam = 1; lam <= 2; ++lam) {
      for (int a0 = 0; a0 <= n; ++a0) {
        int a5 = n - a0;
        int mu = trapezoid5_mu(lam, a0, a5);
        if (mu == 0) continue;
        RegionSpec spec;
        spec.kind = RegionKind::trapezoid5;
        spec.profile = {lam, a0, a5};
        spec.forbid_side_to_side = !all_edges;
        out[(std::size_t)n][lam - 1][mu - 1] += fetch(spec, budget, cache);
      }
    }
  }
  return out;
}

} // namespace latcap
