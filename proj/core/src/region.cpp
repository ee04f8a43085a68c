#include "latcap/region.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace latcap {

static int sgn(long long v) { return (v > 0) - (v < 0); }

bool properly_cross(Pt a, Pt b, Pt c, Pt d) {
  int d1 = sgn(orient(a, b, c));
  int d2 = sgn(orient(a, b, d));
  int d3 = sgn(orient(c, d, a));
  int d4 = sgn(orient(c, d, b));
  return d1 * d2 < 0 && d3 * d4 < 0;
}

long long poly_area2(const std::vector<Pt>& cycle) {
  long long s = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Pt& p = cycle[i];
    const Pt& q = cycle[(i + 1) % cycle.size()];
    s += det(p, q);
  }
  return s;
}

bool poly_contains_scaled(const std::vector<Pt>& cycle, Pt p, int scale) {
  bool inside = false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Pt a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    a.x *= scale; a.y *= scale;
    b.x *= scale; b.y *= scale;
    // On-segment test (boundary counts as inside).
    if (orient(a, b, p) == 0 &&
        (long long)(p.x - a.x) * (p.x - b.x) <= 0 &&
        (long long)(p.y - a.y) * (p.y - b.y) <= 0)
      return true;
    // Crossing-parity ray cast to the right of p.
    if ((a.y > p.y) != (b.y > p.y)) {
      // x-coordinate of edge at height p.y compared with p.x, exactly:
      // a.x + (p.y-a.y)(b.x-a.x)/(b.y-a.y) > p.x
      long long lhs = (long long)(p.y - a.y) * (b.x - a.x);
      long long rhs = (long long)(p.x - a.x) * (b.y - a.y);
      bool strictly_right = (b.y > a.y) ? lhs > rhs : lhs < rhs;
      if (strictly_right) inside = !inside;
    }
  }
  return inside;
}

long long Region::area2() const { return poly_area2(cycle_); }

bool Region::contains_scaled(Pt p, int scale) const {
  return poly_contains_scaled(cycle_, p, scale);
}

Region Region::from_corners(const std::vector<Pt>& corners) {
  std::vector<Pt> dedup;
  for (const Pt& p : corners)
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  if (dedup.size() < 3) return Region{};

  std::vector<Pt> cycle;
  for (std::size_t i = 0; i < dedup.size(); ++i) {
    Pt a = dedup[i], b = dedup[(i + 1) % dedup.size()];
    Pt d = sub(b, a);
    int g = std::gcd(std::abs(d.x), std::abs(d.y));
    for (int k = 0; k < g; ++k)
      cycle.push_back({a.x + d.x / g * k, a.y + d.y / g * k});
  }
  Region r(std::move(cycle));
  if (r.area2() < 0) throw std::invalid_argument("region corners must be CCW");
  if (r.area2() == 0) return Region{};
  return r;
}

Region Region::rectangle(int w, int h) {
  if (w <= 0 || h <= 0) return Region{};
  return from_corners({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

Region Region::trapezoid4(int a, int e) {
  if (a < 0 || e < 0) throw std::invalid_argument("trapezoid4 offsets must be >= 0");
  return from_corners({{0, 0}, {a, 0}, {1 + e, 4}, {1, 4}});
}

Region Region::trapezoid5(int lambda, int a0, int a5) {
  if (lambda < 1 || lambda > 4)
    throw std::invalid_argument("trapezoid5 requires lambda in 1..4");
  if (a0 < 0 || a5 < 0) throw std::invalid_argument("trapezoid5 offsets must be >= 0");
  return from_corners({{0, 0}, {a0, 0}, {lambda + a5, 5}, {lambda, 5}});
}

Region Region::strip_shape(int height, int lam, const std::vector<Pt>& upper) {
  assert(!upper.empty());
  assert(upper.front().y == 0 && upper.back().y == height);
  std::vector<Pt> corners = upper;
  corners.push_back({0, height});
  corners.push_back({-lam, 0});
  return from_corners(corners);
}

} // namespace latcap
