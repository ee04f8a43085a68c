#pragma once

#include <vector>

namespace latcap {

struct Pt {
  int x = 0, y = 0;
};

inline bool operator==(Pt a, Pt b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Pt a, Pt b) { return !(a == b); }

// Lexicographic order, x first.  The sweep of both counting engines advances
// in this order.
inline bool lex_less(Pt a, Pt b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

inline Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
inline Pt add(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }

inline long long det(Pt a, Pt b) {
  return (long long)a.x * b.y - (long long)a.y * b.x;
}

// Twice the signed area of the triangle (a,b,c); positive when CCW.
inline long long orient(Pt a, Pt b, Pt c) { return det(sub(b, a), sub(c, a)); }

// True when the open interiors of segments [a,b] and [c,d] cross in a single
// point interior to both.  Touching at endpoints does not count.  For the
// primitive segments handled here this is the only way two distinct segments
// can overlap (a lattice endpoint cannot sit in the interior of a primitive
// segment, and two collinear primitive segments sharing interior points are
// identical).
bool properly_cross(Pt a, Pt b, Pt c, Pt d);

// Polygon predicates on a raw boundary cycle (CCW, primitive steps).
long long poly_area2(const std::vector<Pt>& cycle);
// Closed-region membership of p_scaled relative to the polygon dilated by
// `scale`; exact integer arithmetic throughout.
bool poly_contains_scaled(const std::vector<Pt>& cycle, Pt p_scaled, int scale);
inline bool poly_contains(const std::vector<Pt>& cycle, Pt p) {
  return poly_contains_scaled(cycle, p, 1);
}

// A polygonal subregion of a horizontal lattice strip, stored as a
// counter-clockwise cycle in which every consecutive pair of points is a
// primitive segment.  All boundary lattice points therefore appear as cycle
// vertices, which makes "edge of the boundary" and "interior edge"
// well-defined notions for primitive triangulations.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Pt> cycle) : cycle_(std::move(cycle)) {}

  const std::vector<Pt>& cycle() const { return cycle_; }
  long long area2() const;  // twice the area
  bool empty() const { return cycle_.size() < 3; }

  // True when p lies in the closed region.  `scale` tests the polygon dilated
  // by that factor, which allows exact queries at rational points with small
  // denominators (midpoints, centroids) without leaving integer arithmetic.
  bool contains(Pt p) const { return contains_scaled(p, 1); }
  bool contains_scaled(Pt p_scaled, int scale) const;

  // Builds the boundary cycle from a corner list: adjacent duplicate corners
  // collapse (degenerate sides of trapezoid and shape families) and each side
  // is subdivided at its interior lattice points.  Corners must be given CCW.
  static Region from_corners(const std::vector<Pt>& corners);

  // [0,w] x [0,h]
  static Region rectangle(int w, int h);
  // Trapezoid spanned by (0,0), (1,4), (1+e,4), (a,0).
  static Region trapezoid4(int a, int e);
  // Trapezoid spanned by (0,0), (lambda,5), (lambda+a5,5), (a0,0).
  static Region trapezoid5(int lambda, int a0, int a5);

  // Shape with a straight bottom: the polygon bounded below by the segment
  // from (-lam,0) to the first upper vertex and by [(0,height),(-lam,0)],
  // and above by the given chain.  `upper` lists the upper-boundary vertices
  // (x_i, y_i) with strictly increasing y_i, y_0 = 0, y_last = height.  This
  // is the common container of all the f/g/h/j shape families once their
  // strip is rotated to run along the x-axis.
  static Region strip_shape(int height, int lam, const std::vector<Pt>& upper);

 private:
  std::vector<Pt> cycle_;
};

} // namespace latcap
