#pragma once

#include <stdexcept>
#include <vector>

namespace starcone {

// Geometric sequence of probe scales t0 * ratio^k, k = 0..depth-1, used by
// every limit-along-scales report in the library.
struct ScaleLadder {
  double t0 = 1.0;
  double ratio = 0.5;
  int depth = 12;

  ScaleLadder() = default;
  ScaleLadder(double t0_, double ratio_, int depth_) : t0(t0_), ratio(ratio_), depth(depth_) {
    if (!(t0 > 0.0) || !(ratio > 0.0 && ratio < 1.0) || depth < 1) {
      throw std::invalid_argument("ScaleLadder: need t0 > 0, ratio in (0,1), depth >= 1");
    }
  }

  std::vector<double> scales() const {
    std::vector<double> s;
    s.reserve(static_cast<std::size_t>(depth));
    double t = t0;
    for (int k = 0; k < depth; ++k, t *= ratio) s.push_back(t);
    return s;
  }
};

}  // namespace starcone
