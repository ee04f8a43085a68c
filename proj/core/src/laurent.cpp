#include "latcap/series.hpp"

#include <sstream>
#include <stdexcept>

namespace latcap {

ExpKey pack_exps(int et, int es, int eu, int ev) {
  auto lane = [](int e) {
    int b = e + kExpBias;
    if (b < 0 || b > 0xffff) throw std::overflow_error("series: exponent out of range");
    return ExpKey(b);
  };
  return (lane(et) << 48) | (lane(es) << 32) | (lane(eu) << 16) | lane(ev);
}

std::array<int, 4> unpack_exps(ExpKey key) {
  return {int((key >> 48) & 0xffff) - kExpBias, int((key >> 32) & 0xffff) - kExpBias,
          int((key >> 16) & 0xffff) - kExpBias, int(key & 0xffff) - kExpBias};
}

void lpoly_acc(LPoly& acc, const LPoly& p, int sign) {
  for (const auto& [k, c] : p) {
    auto it = acc.try_emplace(k, 0).first;
    if (sign > 0)
      it->second += c;
    else
      it->second -= c;
    if (it->second == 0) acc.erase(it);
  }
}

void lpoly_addmul(LPoly& acc, const LPoly& a, const LPoly& b, int sign) {
  const LPoly& outer = a.size() <= b.size() ? a : b;
  const LPoly& inner = a.size() <= b.size() ? b : a;
  for (const auto& [ka, ca] : outer)
    for (const auto& [kb, cb] : inner) {
      auto it = acc.try_emplace(key_mul(ka, kb), 0).first;
      if (sign > 0)
        it->second += ca * cb;
      else
        it->second -= ca * cb;
      if (it->second == 0) acc.erase(it);
    }
}

void lpoly_strip_zeros(LPoly& p) {
  for (auto it = p.begin(); it != p.end();)
    it = it->second == 0 ? p.erase(it) : std::next(it);
}

int LaurentSeries::xmin() const { return cx.empty() ? 0 : cx.begin()->first; }

const LPoly* LaurentSeries::coeff(int xexp) const {
  auto it = cx.find(xexp);
  return it == cx.end() ? nullptr : &it->second;
}

std::string LaurentSeries::str() const {
  static const char* names[4] = {"t", "s", "u", "v"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [xe, poly] : cx)
    for (const auto& [k, c] : poly) {
      if (!first) os << (c > 0 ? " + " : " - ");
      if (first && c < 0) os << "-";
      first = false;
      BigCount a = abs(c);
      auto e = unpack_exps(k);
      bool unit = a == 1 && xe == 0 && e == std::array<int, 4>{0, 0, 0, 0};
      if (a != 1 || unit) os << a.str();
      if (xe != 0) os << (a != 1 ? "*x" : "x") << (xe != 1 ? "^" + std::to_string(xe) : "");
      for (int i = 0; i < 4; ++i)
        if (e[i] != 0) os << names[i] << (e[i] != 1 ? "^" + std::to_string(e[i]) : "");
    }
  if (first) os << "0";
  os << " + O(x^" << trunc + 1 << ")";
  return os.str();
}

LaurentSeries series_zero(int trunc) { return LaurentSeries{trunc, {}}; }

LaurentSeries series_monomial(const Monomial& m, int trunc) {
  LaurentSeries r{trunc, {}};
  if (m.coef != 0 && m.ex <= trunc)
    r.cx[m.ex][pack_exps(m.ev[0], m.ev[1], m.ev[2], m.ev[3])] = m.coef;
  return r;
}

LaurentSeries series_of(std::initializer_list<Monomial> terms, int trunc) {
  LaurentSeries r{trunc, {}};
  for (const Monomial& m : terms) {
    if (m.coef == 0 || m.ex > trunc) continue;
    auto& poly = r.cx[m.ex];
    ExpKey k = pack_exps(m.ev[0], m.ev[1], m.ev[2], m.ev[3]);
    auto it = poly.try_emplace(k, 0).first;
    it->second += m.coef;
    if (it->second == 0) poly.erase(it);
  }
  for (auto it = r.cx.begin(); it != r.cx.end();)
    it = it->second.empty() ? r.cx.erase(it) : std::next(it);
  return r;
}

static LaurentSeries add_signed(const LaurentSeries& a, const LaurentSeries& b, int sign) {
  LaurentSeries r{std::min(a.trunc, b.trunc), {}};
  for (const auto& [xe, poly] : a.cx)
    if (xe <= r.trunc) r.cx[xe] = poly;
  for (const auto& [xe, poly] : b.cx) {
    if (xe > r.trunc) continue;
    lpoly_acc(r.cx[xe], poly, sign);
  }
  for (auto it = r.cx.begin(); it != r.cx.end();)
    it = it->second.empty() ? r.cx.erase(it) : std::next(it);
  return r;
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
  return add_signed(a, b, 1);
}

LaurentSeries series_sub(const LaurentSeries& a, const LaurentSeries& b) {
  return add_signed(a, b, -1);
}

LaurentSeries series_neg(const LaurentSeries& a) {
  LaurentSeries r{a.trunc, {}};
  for (const auto& [xe, poly] : a.cx) {
    LPoly q;
    for (const auto& [k, c] : poly) q.emplace(k, -c);
    r.cx[xe] = std::move(q);
  }
  return r;
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  int tr = std::min(a.trunc + b.val_floor(), b.trunc + a.val_floor());
  LaurentSeries r{tr, {}};
  for (const auto& [xa, pa] : a.cx)
    for (const auto& [xb, pb] : b.cx) {
      int xe = xa + xb;
      if (xe > tr) continue;
      lpoly_addmul(r.cx[xe], pa, pb);
    }
  for (auto it = r.cx.begin(); it != r.cx.end();)
    it = it->second.empty() ? r.cx.erase(it) : std::next(it);
  return r;
}

LaurentSeries series_inverse(const LaurentSeries& b) {
  if (b.is_zero()) throw std::invalid_argument("series_inverse: zero series");
  int vb = b.xmin();
  const LPoly& lead = b.cx.begin()->second;
  if (lead.size() != 1 || abs(lead.begin()->second) != 1)
    throw std::invalid_argument("series_inverse: leading coefficient is not a unit monomial");
  ExpKey mkey = lead.begin()->first;
  bool negate = lead.begin()->second < 0;
  ExpKey minv = kKeyOne + kKeyOne - mkey;  // reciprocal monomial
  int tr = b.trunc - vb;

  // r * b = 1 solved order by order: the product equation at order n + vb
  // isolates r_n * lead against the already known part of the convolution.
  LaurentSeries r{tr, {}};
  for (int n = -vb; n <= tr; ++n) {
    LPoly acc;
    if (n == -vb) acc[kKeyOne] = 1;
    for (const auto& [xr, pr] : r.cx) {
      auto itb = b.cx.find(n + vb - xr);
      if (itb == b.cx.end()) continue;
      lpoly_addmul(acc, pr, itb->second, -1);
    }
    if (acc.empty()) continue;
    LPoly rn;
    for (const auto& [k, c] : acc) rn.emplace(key_mul(k, minv), negate ? -c : c);
    r.cx[n] = std::move(rn);
  }
  return r;
}

LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b) {
  return series_mul(a, series_inverse(b));
}

LaurentSeries series_shift_x(const LaurentSeries& a, int shift) {
  LaurentSeries r{a.trunc + shift, {}};
  for (const auto& [xe, poly] : a.cx) r.cx[xe + shift] = poly;
  return r;
}

LaurentSeries series_truncate(const LaurentSeries& a, int trunc) {
  LaurentSeries r{trunc, {}};
  for (const auto& [xe, poly] : a.cx)
    if (xe <= trunc) r.cx[xe] = poly;
  return r;
}

LaurentSeries cf_extract(const LaurentSeries& a, Var var, int exponent) {
  int lane = 3 - int(var);
  LaurentSeries r{a.trunc, {}};
  for (const auto& [xe, poly] : a.cx) {
    LPoly q;
    for (const auto& [k, c] : poly) {
      int e = int((k >> (16 * lane)) & 0xffff) - kExpBias;
      if (e != exponent) continue;
      ExpKey stripped =
          (k & ~(ExpKey(0xffff) << (16 * lane))) | (ExpKey(kExpBias) << (16 * lane));
      q.emplace(stripped, c);
    }
    if (!q.empty()) r.cx[xe] = std::move(q);
  }
  return r;
}

LaurentSeries substitute_monomial(const LaurentSeries& a,
                                  const std::map<Var, Monomial>& assign) {
  LaurentSeries r{a.trunc, {}};
  for (const auto& [xe, poly] : a.cx)
    for (const auto& [k, c] : poly) {
      auto e = unpack_exps(k);
      long long nex = xe;
      long long nev[4] = {0, 0, 0, 0};
      BigCount coef = c;
      for (int i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        auto it = assign.find(Var(i));
        if (it == assign.end()) {
          nev[i] += e[i];
          continue;
        }
        const Monomial& m = it->second;
        if (m.coef == 1) {
          ;
        } else if (m.coef == -1) {
          if (e[i] & 1) coef = -coef;
        } else {
          throw std::invalid_argument("substitute_monomial: coefficient must be a unit");
        }
        nex += (long long)m.ex * e[i];
        for (int j = 0; j < 4; ++j) nev[j] += (long long)m.ev[j] * e[i];
      }
      if (nex > r.trunc) continue;
      auto& dst = r.cx[int(nex)];
      ExpKey nk = pack_exps(int(nev[0]), int(nev[1]), int(nev[2]), int(nev[3]));
      auto it = dst.try_emplace(nk, 0).first;
      it->second += coef;
      if (it->second == 0) dst.erase(it);
    }
  for (auto it = r.cx.begin(); it != r.cx.end();)
    it = it->second.empty() ? r.cx.erase(it) : std::next(it);
  return r;
}

bool series_equal(const LaurentSeries& a, const LaurentSeries& b) {
  int tr = std::min(a.trunc, b.trunc);
  auto clip = [tr](const LaurentSeries& s) {
    std::map<int, LPoly> m;
    for (const auto& [xe, poly] : s.cx)
      if (xe <= tr) m.emplace(xe, poly);
    return m;
  };
  return clip(a) == clip(b);
}

std::map<int, BigCount> series_profile(const LaurentSeries& a) {
  std::map<int, BigCount> r;
  for (const auto& [xe, poly] : a.cx) {
    BigCount s = 0;
    for (const auto& [k, c] : poly) s += c;
    if (s != 0) r.emplace(xe, std::move(s));
  }
  return r;
}

LaurentSeries series_geom(Var w, int N) {
  LaurentSeries r{N, {}};
  std::array<int, 4> ev{0, 0, 0, 0};
  for (int i = 0; i <= N; ++i) {
    ev[int(w)] = -i;
    r.cx[i][pack_exps(ev[0], ev[1], ev[2], ev[3])] = 1;
  }
  return r;
}

const LaurentSeries& SeriesFamily::member(const std::string& name) const {
  auto it = members.find(name);
  if (it == members.end()) throw std::invalid_argument("SeriesFamily: no member " + name);
  return it->second;
}

} // namespace latcap
