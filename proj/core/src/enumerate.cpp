#include "latcap/enumerate.hpp"

#include "latcap/errors.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace latcap {

double log2_big(const BigCount& v) {
  if (v <= 0) throw std::domain_error("log2_big needs a positive value");
  unsigned long bits = boost::multiprecision::msb(v);
  if (bits <= 62) return std::log2(v.convert_to<double>());
  unsigned long shift = bits - 62;
  BigCount top = v >> shift;
  return std::log2(top.convert_to<double>()) + (double)shift;
}

namespace {

long long fdiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
long long cdiv(long long a, long long b) { return -fdiv(-a, b); }

// a*u + b*v = gcd(a,b)
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
  if (b == 0) {
    u = (a >= 0) ? 1 : -1;
    v = 0;
    return std::llabs(a);
  }
  long long u1, v1;
  long long g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

// Intersect the solution range of lo <= base + k*step <= hi into [klo, khi].
bool clamp_axis(int lo, int hi, int base, int step, long long& klo, long long& khi) {
  if (step == 0) return base >= lo && base <= hi;
  long long a = cdiv(lo - base, step), b = fdiv(hi - base, step);
  if (step < 0) std::swap(a, b);
  klo = std::max(klo, a);
  khi = std::min(khi, b);
  return true;
}

// Appends the rotation- and translation-normalized encoding of one boundary
// variant: two u16 words per vertex, starting at the lex-least vertex.
void encode_variant(const std::vector<Pt>& v, std::vector<uint16_t>& out) {
  int minx = INT_MAX;
  std::size_t start = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    minx = std::min(minx, v[i].x);
    if (i > 0 && lex_less(v[i], v[start])) start = i;
  }
  out.clear();
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Pt& p = v[(start + k) % v.size()];
    out.push_back((uint16_t)(p.x - minx));
    out.push_back((uint16_t)(p.y + 8192));
  }
}

// Minimum over the four strip symmetries (identity, x-flip, y-flip about the
// strip midline, both) of the normalized encoding.  Reuses caller buffers so
// the hot path stays allocation-free.
struct KeyScratch {
  std::vector<Pt> pts;
  std::vector<uint16_t> best, cand;
};

void canonical_encode(const std::vector<Pt>& c, int strip_h, KeyScratch& ks) {
  const std::size_t K = c.size();
  encode_variant(c, ks.best);
  ks.pts.resize(K);
  for (std::size_t i = 0; i < K; ++i) ks.pts[i] = {-c[K - 1 - i].x, c[K - 1 - i].y};
  encode_variant(ks.pts, ks.cand);
  if (ks.cand < ks.best) ks.best.swap(ks.cand);
  for (std::size_t i = 0; i < K; ++i) ks.pts[i] = {c[K - 1 - i].x, strip_h - c[K - 1 - i].y};
  encode_variant(ks.pts, ks.cand);
  if (ks.cand < ks.best) ks.best.swap(ks.cand);
  for (std::size_t i = 0; i < K; ++i) ks.pts[i] = {-c[i].x, strip_h - c[i].y};
  encode_variant(ks.pts, ks.cand);
  if (ks.cand < ks.best) ks.best.swap(ks.cand);
}

// True when a new edge (a,b) would join the two strip borders.
bool joins_strips(Pt a, Pt b, int strip_h) {
  return (a.y == 0 && b.y == strip_h) || (a.y == strip_h && b.y == 0);
}

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Memo keyed by the exact canonical encoding; counts are arbitrary precision.
struct MapMemo {
  using Count = BigCount;
  using Key = std::string;

  KeyScratch ks;
  std::unordered_map<std::string, BigCount> map;

  explicit MapMemo(std::size_t reserve_states) {
    if (reserve_states > 0) map.reserve(reserve_states);
  }

  Key make_key(const std::vector<Pt>& cyc, int strip_h) {
    canonical_encode(cyc, strip_h, ks);
    return std::string((const char*)ks.best.data(), ks.best.size() * 2);
  }
  bool find(const Key& k, Count& out) const {
    auto it = map.find(k);
    if (it == map.end()) return false;
    out = it->second;
    return true;
  }
  void insert(Key&& k, const Count& v) { map.emplace(std::move(k), v); }
  std::size_t size() const { return map.size(); }
};

// Memo keyed by a 128-bit hash of the canonical encoding, stored in a flat
// open-addressing table: 24 bytes per state plus an overflow pool for counts
// that need more than 63 bits.  Collisions among k states are expected with
// probability about k^2/2^129, which is far below 1e-12 at every budget this
// engine accepts; results on small instances are checked against the exact
// engine in the tests.
struct FlatMemo {
  using Count = unsigned __int128;
  struct Key {
    uint64_t lo, hi;
  };

  struct Slot {
    uint64_t lo, hi, v; // v: top bit set => index into big values
  };

  KeyScratch ks;
  std::vector<Slot> slots;
  std::vector<Count> big;
  std::size_t used = 0;

  explicit FlatMemo(std::size_t reserve_states) {
    std::size_t want = 1u << 16;
    while (want * 3 < reserve_states * 4) want <<= 1;
    slots.resize(want);
    if (reserve_states > 0) big.reserve(reserve_states / 2);
  }

  Key make_key(const std::vector<Pt>& cyc, int strip_h) {
    canonical_encode(cyc, strip_h, ks);
    const uint16_t* p = ks.best.data();
    std::size_t n = ks.best.size();
    uint64_t a = 0x243f6a8885a308d3ULL ^ (n * 0x9e3779b97f4a7c15ULL);
    uint64_t b = 0x13198a2e03707344ULL + n;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      uint64_t w = (uint64_t)p[i] | ((uint64_t)p[i + 1] << 16) |
                   ((uint64_t)p[i + 2] << 32) | ((uint64_t)p[i + 3] << 48);
      a = mix64(a ^ w);
      b = mix64(b + (w * 0xd1b54a32d192ed03ULL));
    }
    uint64_t w = 0;
    for (std::size_t t = 0; i + t < n; ++t) w |= (uint64_t)p[i + t] << (16 * t);
    a = mix64(a ^ w);
    b = mix64(b + (w * 0xd1b54a32d192ed03ULL));
    Key k{a, mix64(b ^ a)};
    if (k.lo == 0 && k.hi == 0) k.lo = 1;
    return k;
  }

  bool find(const Key& k, Count& out) const {
    std::size_t mask = slots.size() - 1;
    for (std::size_t s = k.lo & mask;; s = (s + 1) & mask) {
      const Slot& sl = slots[s];
      if (sl.lo == 0 && sl.hi == 0) return false;
      if (sl.lo == k.lo && sl.hi == k.hi) {
        out = (sl.v >> 63) ? big[sl.v & ~(1ULL << 63)] : (Count)sl.v;
        return true;
      }
    }
  }

  void insert(const Key& k, const Count& v) {
    if (used * 4 >= slots.size() * 3) grow();
    std::size_t mask = slots.size() - 1;
    std::size_t s = k.lo & mask;
    while (!(slots[s].lo == 0 && slots[s].hi == 0)) s = (s + 1) & mask;
    uint64_t enc;
    if (v >> 63) {
      enc = (1ULL << 63) | (uint64_t)big.size();
      big.push_back(v);
    } else {
      enc = (uint64_t)v;
    }
    slots[s] = Slot{k.lo, k.hi, enc};
    ++used;
  }

  std::size_t size() const { return used; }

private:
  void grow() {
    std::vector<Slot> old(slots.size() * 2);
    old.swap(slots);
    std::size_t mask = slots.size() - 1;
    for (const Slot& sl : old) {
      if (sl.lo == 0 && sl.hi == 0) continue;
      std::size_t s = sl.lo & mask;
      while (!(slots[s].lo == 0 && slots[s].hi == 0)) s = (s + 1) & mask;
      slots[s] = sl;
    }
  }
};

// ===========================================================================
// Exact count by recursive ear decomposition with memoization.
//
// At each step the lexicographically least boundary vertex v and its CCW
// successor B are fixed; every triangulation of the region contains exactly
// one unimodular triangle on the edge (v,B), so branching over its apex w
// partitions the count.  Chords created this way may split the region in two;
// both pieces keep the ambient strip height so that border-to-border edges
// stay detectable.
//
// The memo policy decides how states and counts are stored.  MapMemo keeps
// exact keys and arbitrary precision counts; FlatMemo packs states into a
// hash table a tenth the size, for rectangle runs whose counts provably fit
// into 128 bits (every memo value is at most the total for the root region).
// ===========================================================================

template <class Memo>
class PeelEngine {
public:
  using Count = typename Memo::Count;

  PeelEngine(bool forbid_s2s, int strip_h, const CountBudget& budget)
      : forbid_(forbid_s2s), strip_h_(strip_h), budget_(budget),
        memo_(budget.reserve_states) {}

  Count run(const std::vector<Pt>& cycle) { return go(cycle); }

  CountStats stats() const {
    return CountStats{memo_.size(), peak_, nodes_};
  }

private:
  Count go(const std::vector<Pt>& cyc) {
    const std::size_t K = cyc.size();
    if (K < 3) return 1;
    typename Memo::Key key = memo_.make_key(cyc, strip_h_);
    if (Count hit; memo_.find(key, hit)) return hit;
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("node budget exhausted", peak_);

    std::size_t i = 0;
    int minx = cyc[0].x, maxx = cyc[0].x, miny = cyc[0].y, maxy = cyc[0].y;
    for (std::size_t k = 1; k < K; ++k) {
      if (lex_less(cyc[k], cyc[i])) i = k;
      minx = std::min(minx, cyc[k].x);
      maxx = std::max(maxx, cyc[k].x);
      miny = std::min(miny, cyc[k].y);
      maxy = std::max(maxy, cyc[k].y);
    }
    const Pt v = cyc[i];
    const Pt B = cyc[(i + 1) % K];
    const Pt d = sub(B, v);

    long long eu, ev;
    long long g = ext_gcd(d.x, d.y, eu, ev);
    assert(g == 1);
    (void)g;
    // base apex with det(d, w0 - v) = d.x*eu + d.y*ev = 1
    const Pt w0 = {v.x - (int)ev, v.y + (int)eu};

    long long klo = LLONG_MIN / 4, khi = LLONG_MAX / 4;
    bool any = clamp_axis(minx, maxx, w0.x, d.x, klo, khi) &&
               clamp_axis(miny, maxy, w0.y, d.y, klo, khi);

    Count total = 0;
    if (any) {
      for (long long k = klo; k <= khi; ++k) {
        const Pt w = {w0.x + (int)(k * d.x), w0.y + (int)(k * d.y)};
        if (!poly_contains(cyc, w)) continue;

        std::size_t j = K;
        for (std::size_t t = 0; t < K; ++t)
          if (cyc[t] == w) { j = t; break; }

        bool chord_vw = (j != (i + K - 1) % K);
        bool chord_bw = (j != (i + 2) % K);
        if (chord_vw && !chord_ok(cyc, v, w)) continue;
        if (chord_bw && !chord_ok(cyc, B, w)) continue;
        if (forbid_) {
          if (chord_vw && joins_strips(v, w, strip_h_)) continue;
          if (chord_bw && joins_strips(B, w, strip_h_)) continue;
        }

        if (j == K) {
          // Apex interior to the region: the boundary gains w between v and B.
          std::vector<Pt> nc;
          nc.reserve(K + 1);
          for (std::size_t t = 0; t <= i; ++t) nc.push_back(cyc[t]);
          nc.push_back(w);
          for (std::size_t t = i + 1; t < K; ++t) nc.push_back(cyc[t]);
          total += go(nc);
        } else {
          // Apex on the boundary: the triangle splits the region in two.
          std::vector<Pt> p1, p2;
          for (std::size_t t = (i + 1) % K;; t = (t + 1) % K) {
            p1.push_back(cyc[t]);
            if (t == j) break;
          }
          for (std::size_t t = j;; t = (t + 1) % K) {
            p2.push_back(cyc[t]);
            if (t == i) break;
          }
          Count c1 = go(p1);
          if (c1 != 0) total += c1 * go(p2);
        }
      }
    }

    memo_.insert(std::move(key), total);
    peak_ = std::max(peak_, memo_.size());
    if (memo_.size() > budget_.max_states)
      throw BudgetExceeded("state budget exhausted", peak_);
    return total;
  }

  // A candidate chord must not cross the boundary and must run through the
  // region (midpoint test; enough for primitive segments).
  static bool chord_ok(const std::vector<Pt>& cyc, Pt a, Pt b) {
    const std::size_t K = cyc.size();
    for (std::size_t t = 0; t < K; ++t)
      if (properly_cross(a, b, cyc[t], cyc[(t + 1) % K])) return false;
    return poly_contains_scaled(cyc, add(a, b), 2);
  }

  bool forbid_;
  int strip_h_;
  CountBudget budget_;
  Memo memo_;
  std::size_t nodes_ = 0;
  std::size_t peak_ = 0;
};

// ===========================================================================
// Independent brute-force count.  Builds triangulations triangle by triangle:
// find the least lattice point whose surrounding angle is not fully tiled,
// locate the first untiled ray there, and branch over every unimodular
// triangle that starts filling that gap.  No memoization, no ear reasoning;
// shares nothing with the engine above except the point primitives.
// ===========================================================================

uint64_t pack_pt(Pt p) {
  return ((uint64_t)(uint32_t)(p.x + (1 << 20)) << 32) |
         (uint64_t)(uint32_t)(p.y + (1 << 20));
}
uint64_t pack_edge(Pt a, Pt b) {
  if (lex_less(b, a)) std::swap(a, b);
  return pack_pt(a) * 0x9e3779b97f4a7c15ULL ^ pack_pt(b);
}

// CCW order of primitive directions starting just above the +x axis.
int dir_halfplane(Pt d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }
bool dir_less(Pt a, Pt b) {
  int ha = dir_halfplane(a), hb = dir_halfplane(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

class BruteEngine {
public:
  BruteEngine(const Region& region, bool forbid_s2s, int strip_h)
      : cyc_(region.cycle()), forbid_(forbid_s2s), strip_h_(strip_h) {
    minx_ = INT_MAX; maxx_ = INT_MIN; miny_ = INT_MAX; maxy_ = INT_MIN;
    for (const Pt& p : cyc_) {
      minx_ = std::min(minx_, p.x);
      maxx_ = std::max(maxx_, p.x);
      miny_ = std::min(miny_, p.y);
      maxy_ = std::max(maxy_, p.y);
    }
    for (int x = minx_; x <= maxx_; ++x)
      for (int y = miny_; y <= maxy_; ++y)
        if (poly_contains(cyc_, {x, y})) pts_.push_back({x, y});
    std::sort(pts_.begin(), pts_.end(), lex_less);
    for (std::size_t i = 0; i < cyc_.size(); ++i) {
      vindex_[pack_pt(cyc_[i])] = i;
      bedges_.insert(pack_edge(cyc_[i], cyc_[(i + 1) % cyc_.size()]));
    }
    target_ = poly_area2(cyc_);
  }

  BigCount run() { return rec(); }

private:
  struct Tri {
    Pt a, b, c; // CCW
  };

  // Sectors of already-tiled angle at p, as (start,end) direction pairs.
  std::vector<std::pair<Pt, Pt>> sectors_at(Pt p) const {
    std::vector<std::pair<Pt, Pt>> s;
    for (const Tri& t : placed_) {
      Pt q, r;
      if (t.a == p) { q = t.b; r = t.c; }
      else if (t.b == p) { q = t.c; r = t.a; }
      else if (t.c == p) { q = t.a; r = t.b; }
      else continue;
      s.emplace_back(sub(q, p), sub(r, p));
    }
    std::sort(s.begin(), s.end(),
              [](const auto& x, const auto& y) { return dir_less(x.first, y.first); });
    return s;
  }

  // Finds the first untiled ray at p; true when the angle at p is complete.
  bool angle_complete(Pt p, Pt* gap) const {
    *gap = {0, 0};
    auto sec = sectors_at(p);
    Pt cur, stop;
    bool bounded;
    auto it = vindex_.find(pack_pt(p));
    if (it != vindex_.end()) {
      const std::size_t K = cyc_.size(), i = it->second;
      cur = sub(cyc_[(i + 1) % K], p);
      stop = sub(cyc_[(i + K - 1) % K], p);
      bounded = true;
    } else {
      if (sec.empty()) {
        *gap = {0, 0};
        return false; // nothing tiled around an interior point
      }
      cur = sec.front().first;
      stop = cur;
      bounded = false;
    }
    std::size_t used = 0;
    std::vector<bool> done(sec.size(), false);
    for (;;) {
      if (bounded && cur == stop) return used == sec.size();
      bool advanced = false;
      for (std::size_t i = 0; i < sec.size(); ++i) {
        if (!done[i] && sec[i].first == cur) {
          done[i] = true;
          cur = sec[i].second;
          ++used;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        *gap = cur;
        return false;
      }
      if (!bounded && cur == stop) return used == sec.size();
    }
  }

  bool tri_clashes(Pt a, Pt b, Pt c) const {
    for (const Tri& t : placed_) {
      Pt u[3] = {a, b, c}, w[3] = {t.a, t.b, t.c};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (properly_cross(u[i], u[(i + 1) % 3], w[j], w[(j + 1) % 3]))
            return true;
      // identical triangle (same vertex set)
      int match = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (u[i] == w[j]) ++match;
      if (match == 3) return true;
    }
    return false;
  }

  bool edge_allowed(Pt a, Pt b) const {
    if (bedges_.count(pack_edge(a, b))) return true;
    const std::size_t K = cyc_.size();
    for (std::size_t t = 0; t < K; ++t)
      if (properly_cross(a, b, cyc_[t], cyc_[(t + 1) % K])) return false;
    if (!poly_contains_scaled(cyc_, add(a, b), 2)) return false;
    if (forbid_ && joins_strips(a, b, strip_h_)) return false;
    return true;
  }

  BigCount rec() {
    // Each unimodular triangle contributes 1 to twice the area, so the
    // finished triangulation has exactly area2 triangles.
    if ((long long)placed_.size() == target_) return 1;
    // least point with an untiled gap
    Pt p{0, 0}, ray{0, 0};
    bool found = false;
    for (const Pt& q : pts_) {
      Pt gap;
      if (!angle_complete(q, &gap)) {
        p = q;
        ray = gap;
        found = true;
        break;
      }
    }
    if (!found) return 0;
    if (ray == Pt{0, 0})
      throw std::logic_error("untiled point with no usable ray");

    Pt z = add(p, ray);
    long long eu, ev;
    long long g = ext_gcd(ray.x, ray.y, eu, ev);
    assert(g == 1);
    (void)g;
    Pt w0 = {p.x - (int)ev, p.y + (int)eu};
    long long klo = LLONG_MIN / 4, khi = LLONG_MAX / 4;
    if (!clamp_axis(minx_, maxx_, w0.x, ray.x, klo, khi) ||
        !clamp_axis(miny_, maxy_, w0.y, ray.y, klo, khi))
      return 0;

    BigCount total = 0;
    for (long long k = klo; k <= khi; ++k) {
      Pt w = {w0.x + (int)(k * ray.x), w0.y + (int)(k * ray.y)};
      if (!poly_contains(cyc_, w)) continue;
      if (!poly_contains_scaled(cyc_, Pt{p.x + z.x + w.x, p.y + z.y + w.y}, 3))
        continue;
      if (!edge_allowed(p, z) || !edge_allowed(z, w) || !edge_allowed(w, p))
        continue;
      if (tri_clashes(p, z, w)) continue;
      placed_.push_back({p, z, w});
      total += rec();
      placed_.pop_back();
    }
    return total;
  }

  std::vector<Pt> cyc_;
  bool forbid_;
  int strip_h_;
  int minx_, maxx_, miny_, maxy_;
  std::vector<Pt> pts_;
  std::unordered_set<uint64_t> bedges_;
  std::unordered_map<uint64_t, std::size_t> vindex_;
  long long target_ = 0;
  std::vector<Tri> placed_;
};

struct BuiltRegion {
  Region region;
  int strip_h;
};

BuiltRegion build_region(const RegionSpec& spec) {
  switch (spec.kind) {
    case RegionKind::rectangle: {
      if (spec.m < 0 || spec.n < 0)
        throw std::invalid_argument("rectangle sides must be >= 0");
      int h = spec.m, w = spec.n;
      // Counts are transpose-invariant; keep the short side as the height
      // unless border-joining edges matter, where m stays the strip width.
      if (!spec.forbid_side_to_side && h > w) std::swap(h, w);
      return {Region::rectangle(w, h), h};
    }
    case RegionKind::trapezoid4: {
      if (spec.profile.size() != 2)
        throw std::invalid_argument("trapezoid4 profile is {a, e}");
      return {Region::trapezoid4(spec.profile[0], spec.profile[1]), 4};
    }
    case RegionKind::trapezoid5: {
      if (spec.profile.size() != 3)
        throw std::invalid_argument("trapezoid5 profile is {lambda, a0, a5}");
      return {Region::trapezoid5(spec.profile[0], spec.profile[1], spec.profile[2]), 5};
    }
  }
  throw std::logic_error("unknown region kind");
}

// Upper estimates of the per-cell growth log2(f(m,n))/(m n), which increases
// in n toward the strip capacity.  Used to prove that a rectangle count fits
// into 128 bits before routing it to the compact engine.
double width_cap_bits(int m) {
  switch (m) {
    case 1: return 2.01;
    case 2: return 2.06;
    case 3: return 2.09;
    case 4: return 2.11;
    case 5: return 2.13;
    default: return 0.0; // no certified cap; keep arbitrary precision
  }
}

BigCount to_big(unsigned __int128 v) {
  BigCount r = (uint64_t)(v >> 64);
  r <<= 64;
  r += (uint64_t)v;
  return r;
}

// Families whose right edge fails to be primitive are defined to count zero,
// as is the flagged empty trapezoid.
bool convention_zero(const RegionSpec& spec) {
  if (spec.kind == RegionKind::trapezoid4) {
    int a = spec.profile.at(0), e = spec.profile.at(1);
    if ((a + e) % 2 != 0) return true;
    if (a == 0 && e == 0 && spec.forbid_side_to_side) return true;
  } else if (spec.kind == RegionKind::trapezoid5) {
    int a0 = spec.profile.at(1), a5 = spec.profile.at(2);
    if (trapezoid5_mu(spec.profile.at(0), a0, a5) == 0) return true;
    if (a0 == 0 && a5 == 0 && spec.forbid_side_to_side) return true;
  }
  return false;
}

} // namespace

int trapezoid5_mu(int lambda, int a0, int a5) {
  int rho = ((a0 - lambda - a5) % 5 + 5) % 5;
  if (rho == 0) return 0;
  return (rho == 1 || rho == 4) ? 1 : 2;
}

BigCount count_region_dp(const Region& region, bool forbid_s2s, int strip_height,
                         const CountBudget& budget, CountStats* stats) {
  if (region.empty()) {
    if (stats) *stats = CountStats{};
    return 1;
  }
  PeelEngine<MapMemo> eng(forbid_s2s, strip_height, budget);
  BigCount r = eng.run(region.cycle());
  if (stats) *stats = eng.stats();
  return r;
}

BigCount count_region_brute(const Region& region, bool forbid_s2s, int strip_height,
                            std::size_t max_triangles) {
  if (region.empty()) return 1;
  if (region.area2() > (long long)max_triangles)
    throw std::invalid_argument("region too large for the brute-force engine");
  BruteEngine eng(region, forbid_s2s, strip_height);
  return eng.run();
}

BigCount enumerate_brute(const RegionSpec& spec, std::size_t max_triangles) {
  if (convention_zero(spec)) return 0;
  BuiltRegion b = build_region(spec);
  return count_region_brute(b.region, spec.forbid_side_to_side, b.strip_h, max_triangles);
}

BigCount count_spec(const RegionSpec& spec, const CountBudget& budget,
                    CountStats* stats) {
  if (convention_zero(spec)) {
    if (stats) *stats = CountStats{};
    return 0;
  }
  BuiltRegion b = build_region(spec);
  if (spec.kind == RegionKind::rectangle && !b.region.empty()) {
    double bits = width_cap_bits(b.strip_h) * (double)(b.region.area2() / 2);
    if (bits > 0 && bits <= 125.0) {
      PeelEngine<FlatMemo> eng(spec.forbid_side_to_side, b.strip_h, budget);
      unsigned __int128 r = eng.run(b.region.cycle());
      if (stats) *stats = eng.stats();
      return to_big(r);
    }
  }
  return count_region_dp(b.region, spec.forbid_side_to_side, b.strip_h, budget, stats);
}

BigCount count_rectangle(int m, int n, const CountBudget& budget, CountStats* stats) {
  RegionSpec spec;
  spec.kind = RegionKind::rectangle;
  spec.m = m;
  spec.n = n;
  return count_spec(spec, budget, stats);
}

BigCount count_trapezoid(const RegionSpec& spec, const CountBudget& budget,
                         CountStats* stats) {
  if (spec.kind == RegionKind::rectangle)
    throw std::invalid_argument("count_trapezoid wants a trapezoid spec");
  return count_spec(spec, budget, stats);
}

ConvexityReport check_convexity(int m, int n_lo, int n_hi,
                                const std::vector<BigCount>& values) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("need 1 <= n_lo <= n_hi");
  if (values.size() != (std::size_t)(n_hi - n_lo + 3))
    throw std::invalid_argument("values must cover n_lo-1 .. n_hi+1");
  ConvexityReport rep;
  rep.m = m;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  auto at = [&](int n) -> const BigCount& { return values[(std::size_t)(n - n_lo + 1)]; };
  for (int n = n_lo; n <= n_hi; ++n) {
    if (at(n - 1) * at(n + 1) < at(n) * at(n)) rep.violations.push_back(n);
  }
  // (n+1) c_{m,n+1} - n c_{m,n} = (log2 f(m,n+1) - log2 f(m,n)) / m, which is
  // nondecreasing under log-convexity and approaches the capacity from below.
  for (int n = n_lo; n <= n_hi; ++n) {
    double step = log2_big(at(n + 1)) - log2_big(at(n));
    rep.capacity_lower.push_back(step / m);
  }
  return rep;
}

} // namespace latcap
