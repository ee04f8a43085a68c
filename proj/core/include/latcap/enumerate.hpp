#pragma once

#include <cstddef>
#include <vector>

#include "latcap/bigint.hpp"
#include "latcap/region.hpp"

namespace latcap {

enum class RegionKind { rectangle, trapezoid4, trapezoid5 };

struct RegionSpec {
  RegionKind kind = RegionKind::rectangle;
  int m = 1;                  // rectangle width (strip direction is n)
  int n = 0;                  // rectangle length
  std::vector<int> profile;   // trapezoid4: {a,e}; trapezoid5: {lambda,a0,a5}
  bool forbid_side_to_side = false;
};

struct CountBudget {
  std::size_t max_states = 8'000'000;    // DP memo entries
  std::size_t max_nodes = 400'000'000;   // DP recursion expansions
  std::size_t reserve_states = 0;        // pre-size the memo to avoid growth spikes
};

struct CountStats {
  std::size_t states = 0;        // distinct regions memoized
  std::size_t peak_states = 0;   // high-water mark of the memo
  std::size_t nodes = 0;         // recursion expansions
};

// Exact count of primitive triangulations of an explicit region by the
// memoized frontier DP.  strip_height fixes the two side-to-side lines
// y=0 and y=strip_height; pass the full strip height even when the region
// does not reach both lines.
BigCount count_region_dp(const Region& region, bool forbid_s2s, int strip_height,
                         const CountBudget& budget = {}, CountStats* stats = nullptr);

// Brute-force oracle on an explicit region: recursively covers the
// lexicographically first uncovered corner with every admissible primitive
// triangle.  Independent of the DP machinery; refuses regions larger than
// max_triangles.
BigCount count_region_brute(const Region& region, bool forbid_s2s, int strip_height,
                            std::size_t max_triangles = 20);

// Entry points with the degenerate-profile conventions applied.
BigCount enumerate_brute(const RegionSpec& region, std::size_t max_triangles = 20);
BigCount count_spec(const RegionSpec& region, const CountBudget& budget = {},
                    CountStats* stats = nullptr);
BigCount count_rectangle(int m, int n, const CountBudget& budget = {},
                         CountStats* stats = nullptr);
BigCount count_trapezoid(const RegionSpec& region, const CountBudget& budget = {},
                         CountStats* stats = nullptr);

// Class of the right side of T_{5,lambda}(a0,a5): 1 or 2 when
// a0 - lambda = a5 +- mu (mod 5) has a solution with mu in {1,2},
// 0 when the right side is imprimitive (a0 - lambda = a5 mod 5).
int trapezoid5_mu(int lambda, int a0, int a5);

struct ConvexityReport {
  int m = 0;
  int n_lo = 0, n_hi = 0;
  std::vector<int> violations;         // n with f(m,n-1) f(m,n+1) < f(m,n)^2
  std::vector<double> capacity_lower;  // (n+1) c_{m,n+1} - n c_{m,n}, n = n_lo..n_hi
};

// Verifies log-convexity of n -> f(m,n) on n_lo..n_hi and tabulates the
// capacity lower bounds it implies.  `values` holds f(m,n) for
// n = n_lo-1 .. n_hi+1 inclusive.
ConvexityReport check_convexity(int m, int n_lo, int n_hi,
                                const std::vector<BigCount>& values);

} // namespace latcap
