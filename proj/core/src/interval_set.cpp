#include "starcone/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace starcone {

IntervalSet IntervalSet::from_intervals(std::vector<std::pair<double, double>> raw,
                                        double merge_gap) {
  for (const auto& [lo, hi] : raw) {
    if (!(lo >= 0.0) || std::isnan(hi) || hi < lo) {
      throw std::invalid_argument("IntervalSet: intervals must satisfy 0 <= lo <= hi");
    }
  }
  std::sort(raw.begin(), raw.end());
  IntervalSet s;
  for (const auto& [lo, hi] : raw) {
    if (!s.intervals_.empty() && lo - s.intervals_.back().hi <= merge_gap) {
      s.intervals_.back().hi = std::max(s.intervals_.back().hi, hi);
    } else {
      s.intervals_.push_back({lo, hi});
    }
  }
  return s;
}

bool IntervalSet::contains(double x, double tol) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const Interval& iv) { return v < iv.lo; });
  if (it != intervals_.begin()) {
    const Interval& prev = *(it - 1);
    if (x <= prev.hi + tol) return true;
  }
  if (it != intervals_.end() && it->lo - x <= tol) return true;
  return false;
}

}  // namespace starcone
