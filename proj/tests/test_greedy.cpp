#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scp/cover.hpp"
#include "scp/exact.hpp"
#include "scp/greedy.hpp"
#include "scp/io.hpp"

using scp::Instance;

namespace {

Instance collinear() {
  return Instance::from_points({{0, 0}, {1, 0}, {10, 0}, {11, 0}});
}

}  // namespace

TEST_CASE("hand-traced run on the collinear instance") {
  auto res = scp::greedy_sc(collinear(), 2, 1.0);
  REQUIRE(res.feasible);
  CHECK(res.trace.centers == std::vector<int>{0, 3});
  CHECK(res.partition.assignment == std::vector<int>{0, 1, 0, 1});
  CHECK(is_solidarity_cover(collinear(), res.partition, 3.0));
  CHECK(is_solidarity_cover(collinear(), res.partition, 1.0));
}

TEST_CASE("degenerate single point") {
  auto one = Instance::from_points({{4, 2}});
  auto res = scp::greedy_sc(one, 1, 0.0);
  REQUIRE(res.feasible);
  CHECK(res.partition.assignment == std::vector<int>{0});
}

TEST_CASE("valid at triple radius even when the radius itself is infeasible") {
  auto sq = Instance::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(scp::exact_decide(sq, 3, 1.0).status == scp::Feasibility::kInfeasible);
  auto res = scp::greedy_sc(sq, 3, 1.0);
  REQUIRE(res.feasible);
  CHECK(is_solidarity_cover(sq, res.partition, 3.0));
}

TEST_CASE("infeasible when a center ball is too small") {
  auto two = Instance::from_points({{0, 0}, {5, 0}});
  CHECK_FALSE(scp::greedy_sc(two, 2, 1.0).feasible);
}

TEST_CASE("parameter validation") {
  auto two = Instance::from_points({{0, 0}, {5, 0}});
  CHECK_THROWS_AS(scp::greedy_sc(two, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(scp::greedy_sc(two, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(scp::greedy_sc(two, 1, -0.5), std::invalid_argument);
}

TEST_CASE("min_radius_greedy") {
  auto res = scp::min_radius_greedy(collinear(), 2);
  CHECK(res.radius == doctest::Approx(1.0));
  CHECK(is_solidarity_cover(collinear(), res.partition, 3.0 * res.radius));

  auto rnd = scp::io::gen_random_points(6, 1.0, 11);
  CHECK(scp::min_radius_greedy(rnd, 1).radius == 0.0);

  auto two = Instance::from_points({{0, 0}, {5, 0}});
  CHECK(scp::min_radius_greedy(two, 2).radius == doctest::Approx(5.0));
}

TEST_CASE("center separation and ball disjointness") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = scp::io::gen_random_points(10, 4.0, seed);
    for (double r : {0.5, 1.0, 2.0}) {
      auto res = scp::greedy_sc(inst, 2, r);
      const auto& c = res.trace.centers;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
          CHECK(inst.distance(c[i], c[j]) > 2.0 * r - 1e-9);
      std::vector<int> owner(inst.size(), -1);
      for (int center : c)
        for (int p : inst.ball(center, r)) {
          CHECK(owner[p] == -1);
          owner[p] = center;
        }
    }
  }
}

TEST_CASE("soundness on fuzzed instances") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    auto inst = scp::io::gen_random_points(2 + seed % 9, 3.0, seed);
    auto cand = inst.candidate_radii();
    for (int m = 1; m <= std::min(3, inst.size()); ++m)
      for (double r : cand) {
        auto res = scp::greedy_sc(inst, m, r);
        if (res.feasible)
          CHECK(is_solidarity_cover(inst, res.partition, 3.0 * r));
      }
  }
}

TEST_CASE("parallel scan matches sequential") {
  for (std::uint64_t seed = 200; seed < 210; ++seed) {
    auto inst = scp::io::gen_random_points(12, 2.0, seed);
    auto seq = scp::min_radius_greedy(inst, 3, 1);
    auto par = scp::min_radius_greedy(inst, 3, 4);
    CHECK(seq.radius == par.radius);
    CHECK(seq.partition.assignment == par.partition.assignment);
  }
}
