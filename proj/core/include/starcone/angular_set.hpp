#pragma once

#include <utility>
#include <vector>

#include "starcone/geometry.hpp"

namespace starcone {

// Closed arc of directions, 0 <= lo <= hi <= 2*pi. lo == hi is a single
// direction.
struct Arc {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  friend bool operator==(const Arc& a, const Arc& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Finite union of closed arcs on the circle of directions. Canonical form:
// arcs sorted by lo, pairwise disjoint, wrapping arcs split at 0. The full
// circle is stored as the single arc [0, 2*pi].
class AngularSet {
 public:
  AngularSet() = default;

  // Accepts arbitrary (lo, hi) pairs; hi < lo is read as a wrap through 0,
  // width >= 2*pi as the full circle. Arcs whose circular gap is <= merge_gap
  // are fused.
  static AngularSet from_arcs(const std::vector<std::pair<double, double>>& raw,
                              double merge_gap = kAngleWrapTol);
  static AngularSet full_circle();
  static AngularSet empty_set() { return AngularSet(); }

  bool empty() const { return arcs_.empty(); }
  bool full() const { return full_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Sum of arc widths.
  double total_width() const;

  // Circular distance from theta to the nearest covered direction
  // (0 when covered, pi at most). Infinity on the empty set.
  double circular_distance_to(double theta) const;

  bool contains(double theta, double tol = kAngleWrapTol) const;

  // True when some covered direction lies within halfwidth of center.
  bool intersects_window(double center, double halfwidth) const;

  // Widest uncovered gap, returned as the pair (gap start = some arc's hi,
  // gap width). Precondition: not empty and not full.
  std::pair<double, double> largest_gap() const;

  // Maximal circular runs: the canonical split at 0 undone, so a run may have
  // hi > 2*pi. Run endpoints are genuine support boundaries, which makes them
  // stable under rotation. The full circle yields the single run [0, 2*pi].
  std::vector<Arc> runs() const;

  AngularSet rotated(double phi) const;

  friend bool operator==(const AngularSet& a, const AngularSet& b) {
    return a.full_ == b.full_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Arc> arcs_;
  bool full_ = false;
};

}  // namespace starcone
