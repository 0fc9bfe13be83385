#pragma once

#include <cmath>

namespace scp {

// Absolute tolerance for Euclidean distance comparisons. Hop counts and
// explicit matrix entries are compared exactly.
inline constexpr double kDistanceEps = 1e-9;

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

inline double euclidean(const Point2D& a, const Point2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace scp
