#pragma once

// Order-by-order driver for the strip recurrence systems.  Every right-hand
// side term carries a prefactor of x-valuation >= 1, so the coefficient of
// x^k in each unknown only needs orders < k of the others; one sweep per
// x-order over all unknowns and their derived streams solves the system.

#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

#include "latcap/series.hpp"

namespace latcap {
namespace solver {

// A series kept in lockstep with the round counter: either one of the
// unknowns (extended by its Node) or a rename/extraction of another stream.
struct Stream {
  LaurentSeries s;
  std::function<LPoly(int)> make;  // coefficient at x-order k, empty for unknowns

  explicit Stream(int kmin) { s.trunc = kmin - 1; }

  void extend(int k) {
    if (make) {
      LPoly p = make(k);
      if (!p.empty()) s.cx.emplace(k, std::move(p));
    }
    s.trunc = k;
  }
};

inline Stream rename_stream(const Stream& base, const std::map<Var, Monomial>& assign,
                            int kmin) {
  Stream r(kmin);
  r.make = [&base, assign](int k) {
    const LPoly* p = base.s.coeff(k);
    if (!p) return LPoly{};
    LaurentSeries tmp{k, {{k, *p}}};
    LaurentSeries sub = substitute_monomial(tmp, assign);
    const LPoly* q = sub.coeff(k);
    return q ? *q : LPoly{};
  };
  return r;
}

inline Stream extract_stream(const Stream& base, std::vector<std::pair<Var, int>> what,
                             int kmin) {
  Stream r(kmin);
  r.make = [&base, what](int k) {
    const LPoly* p = base.s.coeff(k);
    if (!p) return LPoly{};
    LaurentSeries tmp{k, {{k, *p}}};
    for (auto [var, e] : what) tmp = cf_extract(tmp, var, e);
    const LPoly* q = tmp.coeff(k);
    return q ? *q : LPoly{};
  };
  return r;
}

struct Term {
  LaurentSeries pre;   // x-valuation >= 1
  const Stream* src;
};

// One unknown with its defining relation  fn * unit = inhom + sum pre * src.
struct Node {
  Stream* fn;
  LaurentSeries unit;   // x^0 coefficient must be the constant 1
  std::vector<Term> terms;
  LaurentSeries inhom;

  void check() const {
    if (unit.val_floor() != 0 || unit.cx.begin()->second != LPoly{{kKeyOne, 1}})
      throw std::logic_error("series solver: left multiplier is not a unit");
    for (const Term& tm : terms)
      if (!tm.pre.is_zero() && tm.pre.xmin() < 1)
        throw std::logic_error("series solver: prefactor valuation below 1");
  }

  void solve_order(int k) {
    LPoly acc;
    if (const LPoly* p = inhom.coeff(k)) lpoly_acc(acc, *p);
    for (const Term& tm : terms)
      for (const auto& [xe, poly] : tm.pre.cx) {
        const LPoly* c = tm.src->s.coeff(k - xe);
        if (c) lpoly_addmul(acc, poly, *c);
      }
    // move the known part of fn * unit across
    for (const auto& [xe, poly] : fn->s.cx) {
      auto itu = unit.cx.find(k - xe);
      if (itu != unit.cx.end() && k - xe > 0) lpoly_addmul(acc, poly, itu->second, -1);
    }
    if (!acc.empty()) fn->s.cx.emplace(k, std::move(acc));
  }
};

// Streams extend after the unknowns each round; prefactor valuations make
// the order within a round irrelevant for the nodes themselves.
inline void run(std::vector<Node>& nodes, std::vector<Stream*>& streams, int kmin, int N) {
  for (Node& nd : nodes) nd.check();
  for (int k = kmin; k <= N; ++k) {
    for (Node& nd : nodes) nd.solve_order(k);
    for (Stream* st : streams) st->extend(k);
  }
}

} // namespace solver
} // namespace latcap
