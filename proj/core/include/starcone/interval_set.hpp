#pragma once

#include <utility>
#include <vector>

namespace starcone {

// Closed interval on the nonnegative half line; hi may be +infinity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Finite union of closed intervals in [0, +inf), sorted and disjoint.
// The degenerate interval {0} is allowed and common: radii sets always hold
// the marked point's own radius.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Validates lo >= 0 and hi >= lo, merges intervals whose gap is <= merge_gap.
  // Throws std::invalid_argument on a malformed interval.
  static IntervalSet from_intervals(std::vector<std::pair<double, double>> raw,
                                    double merge_gap = 0.0);

  bool empty() const { return intervals_.empty(); }
  const std::vector<Interval>& intervals() const { return intervals_; }

  bool contains(double x, double tol = 0.0) const;

  // Smallest covered value; precondition: not empty.
  double min() const { return intervals_.front().lo; }
  // Largest covered value, +infinity for unbounded sets; precondition: not empty.
  double max() const { return intervals_.back().hi; }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.intervals_ == b.intervals_;
  }

 private:
  std::vector<Interval> intervals_;
};

}  // namespace starcone
