#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "scp/cover.hpp"
#include "scp/greedy.hpp"
#include "scp/instance.hpp"

namespace scp {

// Axis-aligned grid of half-open square cells anchored at the left-bottom
// extreme of the input; the final column and row are closed so extreme
// points stay inside.
struct SquareGrid {
  Point2D origin;
  double cell_side = 0.0;
  int columns = 0;
  int rows = 0;

  std::pair<int, int> cell_of(const Point2D& p) const;
};

SquareGrid make_grid(const std::vector<Point2D>& pts, double cell_diameter);

// Upper bound (ceil(2*sqrt(2)*r/r_prime) + 1)^2 on the number of
// diameter-r_prime grid squares a radius-r circle can intersect. Exactly 16
// when r_prime == r. Near-integer ceil arguments snap within eps.
// Throws std::invalid_argument on nonpositive inputs.
int max_square_intersections(double r, double r_prime);

// floor(m / f(r, (beta-1) r)); depends only on beta since r'/r is fixed.
int reduced_partition_size(int m, double beta);

// Number of grid cells (side s, grid anchored at the coordinate origin)
// whose closed square meets the closed disc of radius r around center.
// Test oracle for the intersection bound.
int count_disc_cell_intersections(const Point2D& center, double r, double s);

// The candidate scan found no feasible radius. Only possible when the
// requested reduced partition size exceeds what the point set can support.
class NoFeasibleRadius : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SquaresResult {
  bool feasible = false;
  Partition partition;  // m' subsets, meaningful only when feasible
};

// Grid-bucketing bicriteria scheme for planar instances. If an
// m-solidarity-r-cover exists, returns a partition into
// m' = floor(m / f(r,(beta-1)r)) subsets that is an m'-solidarity-
// (beta*r)-cover; the result is self-verified before being returned.
// Throws std::invalid_argument when m' == 0 or the instance is not planar.
SquaresResult squares_sc(const Instance& pts, int m, double beta, double r);

// Smallest candidate radius at which squares_sc succeeds, with its
// partition; radius <= beta * optimal.
MinRadiusResult min_radius_bicriteria(const Instance& pts, int m, double beta,
                                      int threads = 1);

}  // namespace scp
