#include "starcone/angular_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace starcone {

AngularSet AngularSet::full_circle() {
  AngularSet s;
  s.arcs_ = {{0.0, kTwoPi}};
  s.full_ = true;
  return s;
}

AngularSet AngularSet::from_arcs(const std::vector<std::pair<double, double>>& raw,
                                 double merge_gap) {
  // Split every input arc into non-wrapping pieces on [0, 2*pi].
  std::vector<Arc> pieces;
  for (const auto& [lo_raw, hi_raw] : raw) {
    double width = hi_raw - lo_raw;
    if (width < 0.0) width += kTwoPi;
    if (width < 0.0 || !std::isfinite(width)) width = 0.0;
    if (width >= kTwoPi - kAngleWrapTol) return full_circle();
    const double lo = normalize_angle(lo_raw);
    const double hi = lo + width;
    if (hi <= kTwoPi) {
      pieces.push_back({lo, hi});
    } else {
      pieces.push_back({lo, kTwoPi});
      pieces.push_back({0.0, hi - kTwoPi});
    }
  }
  if (pieces.empty()) return AngularSet();

  std::sort(pieces.begin(), pieces.end(),
            [](const Arc& a, const Arc& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });

  // Linear merge; the circular gap across the 0 seam is handled afterwards.
  std::vector<Arc> merged;
  for (const Arc& p : pieces) {
    if (!merged.empty() && p.lo - merged.back().hi <= merge_gap) {
      merged.back().hi = std::max(merged.back().hi, p.hi);
    } else {
      merged.push_back(p);
    }
  }
  // Fuse across the seam when the circular gap is within merge_gap but the
  // pieces do not already touch 0 and 2*pi (canonical split stays split).
  if (merged.size() >= 2) {
    const double seam_gap = (kTwoPi - merged.back().hi) + merged.front().lo;
    if (seam_gap <= merge_gap && seam_gap > 0.0) {
      // Extend both pieces to the seam so the union is unchanged up to the
      // merge tolerance.
      merged.back().hi = kTwoPi;
      merged.front().lo = 0.0;
    }
  } else if (merged.size() == 1 && merged[0].lo > 0.0) {
    const double seam_gap = (kTwoPi - merged[0].hi) + merged[0].lo;
    if (seam_gap <= merge_gap) return full_circle();
  }

  AngularSet s;
  s.arcs_ = std::move(merged);
  double covered = 0.0;
  for (const Arc& a : s.arcs_) covered += a.width();
  if (covered >= kTwoPi - kAngleWrapTol) return full_circle();
  return s;
}

double AngularSet::total_width() const {
  double w = 0.0;
  for (const Arc& a : arcs_) w += a.width();
  return w;
}

double AngularSet::circular_distance_to(double theta) const {
  if (full_) return 0.0;
  if (arcs_.empty()) return std::numeric_limits<double>::infinity();
  const double t = normalize_angle(theta);
  double best = std::numeric_limits<double>::infinity();
  for (const Arc& a : arcs_) {
    if (t >= a.lo && t <= a.hi) return 0.0;
    best = std::min({best, angular_distance(t, a.lo), angular_distance(t, a.hi)});
  }
  return best;
}

bool AngularSet::contains(double theta, double tol) const {
  return circular_distance_to(theta) <= tol;
}

bool AngularSet::intersects_window(double center, double halfwidth) const {
  if (halfwidth >= kPi) return !arcs_.empty();
  return circular_distance_to(center) <= halfwidth;
}

std::pair<double, double> AngularSet::largest_gap() const {
  double best_start = 0.0;
  double best_width = -1.0;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const double start = arcs_[i].hi;
    const double next_lo = (i + 1 < arcs_.size()) ? arcs_[i + 1].lo : arcs_[0].lo + kTwoPi;
    const double width = next_lo - start;
    if (width > best_width) {
      best_width = width;
      best_start = start;
    }
  }
  return {normalize_angle(best_start), best_width};
}

std::vector<Arc> AngularSet::runs() const {
  if (full_) return {{0.0, kTwoPi}};
  std::vector<Arc> r = arcs_;
  if (r.size() >= 2 && r.front().lo == 0.0 && r.back().hi == kTwoPi) {
    // Undo the canonical split: [lo, 2*pi] followed by [0, hi] is the single
    // run [lo, hi + 2*pi].
    const Arc first = r.front();
    const Arc last = r.back();
    r.pop_back();
    r.erase(r.begin());
    r.push_back({last.lo, first.hi + kTwoPi});
  }
  return r;
}

AngularSet AngularSet::rotated(double phi) const {
  if (full_) return full_circle();
  std::vector<std::pair<double, double>> raw;
  raw.reserve(arcs_.size());
  for (const Arc& a : runs()) raw.emplace_back(a.lo + phi, a.hi + phi);
  return from_arcs(raw, 0.0);
}

}  // namespace starcone
