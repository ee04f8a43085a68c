#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "latcap/bigint.hpp"

namespace latcap {

// ============================================================
//  Truncated power series in x with Laurent-polynomial
//  coefficients in t, s, u, v
// ============================================================

enum class Var : int { t = 0, s = 1, u = 2, v = 3 };

// Exponent vector of a Laurent monomial, packed into 16-bit lanes with a
// +32768 bias.  Keys sort lexicographically by (t,s,u,v) exponent and a
// monomial product is a single addition minus the repeated bias.
using ExpKey = std::uint64_t;

constexpr int kExpBias = 1 << 15;
constexpr ExpKey kKeyOne = (ExpKey(kExpBias) << 48) | (ExpKey(kExpBias) << 32) |
                           (ExpKey(kExpBias) << 16) | ExpKey(kExpBias);

ExpKey pack_exps(int et, int es, int eu, int ev);
std::array<int, 4> unpack_exps(ExpKey key);

inline ExpKey key_mul(ExpKey a, ExpKey b) { return a + b - kKeyOne; }

// One x-coefficient.  No zero values are stored.
using LPoly = std::map<ExpKey, BigCount>;

void lpoly_acc(LPoly& acc, const LPoly& p, int sign = 1);
void lpoly_addmul(LPoly& acc, const LPoly& a, const LPoly& b, int sign = 1);
void lpoly_strip_zeros(LPoly& p);

// c * x^ex * t^ev[0] s^ev[1] u^ev[2] v^ev[3]
struct Monomial {
  BigCount coef = 1;
  int ex = 0;
  std::array<int, 4> ev{0, 0, 0, 0};
};

// The series is known exactly at every x-order <= trunc and operations drop
// higher orders.  x-orders may be negative; coefficient maps hold no zeros.
struct LaurentSeries {
  int trunc = 0;
  std::map<int, LPoly> cx;

  bool is_zero() const { return cx.empty(); }
  int xmin() const;
  // lower bound for the x-valuation that is also valid for the zero series
  int val_floor() const { return cx.empty() ? trunc + 1 : cx.begin()->first; }
  const LPoly* coeff(int xexp) const;
  std::string str() const;
};

LaurentSeries series_zero(int trunc);
LaurentSeries series_monomial(const Monomial& m, int trunc);
LaurentSeries series_of(std::initializer_list<Monomial> terms, int trunc);

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_neg(const LaurentSeries& a);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

// Requires the lowest x-coefficient of b to be a single monomial with
// coefficient +-1; the result is exact through b.trunc - val(b).
LaurentSeries series_inverse(const LaurentSeries& b);
LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries series_shift_x(const LaurentSeries& a, int shift);
LaurentSeries series_truncate(const LaurentSeries& a, int trunc);

// Coefficient of var^exponent; the variable is dropped from the result.
LaurentSeries cf_extract(const LaurentSeries& a, Var var, int exponent);

// Replaces each variable by a monomial.  Unlisted variables stay fixed.
// Sound under truncation only when the assignments cannot push orders above
// trunc back below it; pure variable renames always qualify.
LaurentSeries substitute_monomial(const LaurentSeries& a,
                                  const std::map<Var, Monomial>& assign);

bool series_equal(const LaurentSeries& a, const LaurentSeries& b);

// Per-x-order sum of Laurent coefficients (evaluation at t=s=u=v=1).
std::map<int, BigCount> series_profile(const LaurentSeries& a);

// geometric unit 1/(1 - x/w) = sum_i x^i w^-i, exact through N
LaurentSeries series_geom(Var w, int N);

// ============================================================
//  Strip recurrence systems
// ============================================================

// All generating series of one strip system, solved to a common order.
// Width 4 has members f, g1, g2, h1, h2, h3, j1 in variables (t,s,u);
// width 5 adds h4, h5, j2..j4, l1, l2 in (t,s,u,v) and depends on the
// bottom class lambda.
struct SeriesFamily {
  int width = 4;
  int lambda = 0;
  int trunc = 0;
  std::map<std::string, LaurentSeries> members;

  const LaurentSeries& member(const std::string& name) const;
};

SeriesFamily solve_width4(int N);
SeriesFamily solve_width5(int N, int lambda);

// Coefficients of the width-4 trapezoid series J, recovered from j1 by the
// x^4 re-indexing.  Entry k is the x^k coefficient of J.
std::vector<BigCount> width4_J_coeffs(const SeriesFamily& fam);

// Coefficients of the width-5 trapezoid series L_{lambda,1} and L_{lambda,2},
// recovered from l1, l2 by the x^5 re-indexing.
std::array<std::vector<BigCount>, 2> width5_L_coeffs(const SeriesFamily& fam);

// System polynomials q, p, r after the change of variables.
LaurentSeries width4_q(int N);
LaurentSeries width4_p(int N);   // p(s,u)
LaurentSeries width4_r(int N);   // r(t,u)
LaurentSeries width5_q(int N);
LaurentSeries width5_p1(int N);  // p1(s,u,v)
LaurentSeries width5_p2(int N);  // p2(t,u,v)
LaurentSeries width5_r1(int N);  // r1(u,v)
LaurentSeries width5_r2(int N);  // r2(t,v)

// Kernel series: phi_k = cf(..., monomial/q) and the associated psi_k,
// which carry the elimination structure of each system.
LaurentSeries width4_phi(int k, int N);  // k = 1,2,3
LaurentSeries width4_psi(int k, int N);

// ============================================================
//  Identity catalog
// ============================================================

// Residual (left minus right) of one catalogued relation, evaluated on a
// solved family; the zero series certifies the identity to the residual's
// trunc.  Unknown ids throw.
LaurentSeries verify_identity(const SeriesFamily& fam, const std::string& id);

// All residuals for the family's width, sharing the kernel construction.
std::map<std::string, LaurentSeries> verify_identities(const SeriesFamily& fam);

std::vector<std::string> identity_catalog(int width);

} // namespace latcap
