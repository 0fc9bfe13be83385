#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scp/cover.hpp"
#include "scp/instance.hpp"

using scp::Instance;
using scp::Partition;

namespace {

Instance unit_square() {
  return Instance::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

// Diagonal pairs: S0 = {(0,0),(1,1)}, S1 = {(1,0),(0,1)}.
Partition diagonal_pairs() { return Partition{2, {0, 1, 1, 0}}; }

}  // namespace

TEST_CASE("is_r_cover") {
  auto sq = unit_square();
  CHECK(is_r_cover(sq, {0, 3}, 1.0));
  CHECK(is_r_cover(sq, {0, 1, 2, 3}, 0.0));
  CHECK_FALSE(is_r_cover(sq, {0}, 1.0));  // (1,1) is sqrt(2) away
}

TEST_CASE("is_solidarity_cover") {
  auto sq = unit_square();
  CHECK(is_solidarity_cover(sq, diagonal_pairs(), 1.0));
  CHECK(is_solidarity_cover(sq, Partition{1, {0, 0, 0, 0}}, 0.0));

  // No 3-subset assignment works at radius 1: enumerate all of them.
  for (int code = 0; code < 81; ++code) {
    Partition p{3, {code % 3, code / 3 % 3, code / 9 % 3, code / 27 % 3}};
    CHECK_FALSE(is_solidarity_cover(sq, p, 1.0));
  }
}

TEST_CASE("partitions may leave points unassigned") {
  auto sq = unit_square();
  Partition p{1, {0, Partition::kUnassigned, 0, 0}};
  CHECK(p.well_formed(4));
  CHECK_FALSE(p.all_assigned());
  CHECK(is_solidarity_cover(sq, p, 1.0));
  CHECK_FALSE(Partition{2, {0, 2, 0, 0}}.well_formed(4));
  CHECK_FALSE(Partition{2, {0, 0, 0}}.well_formed(4));
}

TEST_CASE("coverage_count") {
  auto sq = unit_square();
  auto p = diagonal_pairs();
  CHECK(coverage_count(sq, p, 1.0, 0) == 2);
  CHECK(coverage_count(sq, Partition{1, {0, 0, 0, 0}}, 0.0, 2) == 1);
  Partition singles{2, {0, Partition::kUnassigned, Partition::kUnassigned, 1}};
  CHECK(coverage_count(sq, singles, 1.0, 1) == 2);

  // is_solidarity_cover iff every point is m-covered
  for (int pt = 0; pt < 4; ++pt) {
    CHECK(coverage_count(sq, p, 1.0, pt) == p.m);
    CHECK(coverage_count(sq, p, 1.0, pt) <= p.m);
  }
}

TEST_CASE("cover_radius") {
  auto sq = unit_square();
  auto p = diagonal_pairs();
  CHECK(cover_radius(sq, p) == doctest::Approx(1.0));
  CHECK(cover_radius(sq, Partition{1, {0, 0, 0, 0}}) == 0.0);

  auto two = Instance::from_points({{0, 0}, {5, 0}});
  CHECK(cover_radius(two, Partition{2, {0, 1}}) == doctest::Approx(5.0));

  CHECK_THROWS_AS(cover_radius(sq, Partition{3, {0, 1, 1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("cover_radius is minimal") {
  auto sq = unit_square();
  auto p = diagonal_pairs();
  double r = cover_radius(sq, p);
  CHECK(is_solidarity_cover(sq, p, r));
  for (double cand : sq.candidate_radii())
    if (cand < r - 1e-9) CHECK_FALSE(is_solidarity_cover(sq, p, cand));
}

TEST_CASE("monotone in radius") {
  auto sq = unit_square();
  auto p = diagonal_pairs();
  bool prev = false;
  for (double r : sq.candidate_radii()) {
    bool now = is_solidarity_cover(sq, p, r);
    if (prev) CHECK(now);
    prev = now;
  }
}
