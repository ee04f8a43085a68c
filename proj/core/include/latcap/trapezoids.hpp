#pragma once

#include <array>
#include <vector>

#include "latcap/bigint.hpp"
#include "latcap/cache.hpp"
#include "latcap/enumerate.hpp"

namespace latcap {

// Coefficients of the width-4 trapezoid series up to x^nmax: the coefficient
// of x^n sums the counts of T4(a,e) with a+e = n.  all_edges selects between
// every primitive triangulation and the ones without border-joining interior
// edges; odd-degree coefficients vanish.
std::vector<BigCount> trapezoid4_coeffs(int nmax, bool all_edges,
                                        const CountBudget& budget = {},
                                        CountCache* cache = nullptr);

// Degree-n coefficient matrices of the width-5 series: entry [lam-1][mu-1]
// sums the counts of T5(lam; a0, a5) with a0+a5 = n whose right edge falls in
// class mu.  lam and mu run over {1,2}.
using LMat = std::array<std::array<BigCount, 2>, 2>;
std::vector<LMat> trapezoid5_coeffs(int nmax, bool all_edges,
                                    const CountBudget& budget = {},
                                    CountCache* cache = nullptr);

} // namespace latcap
