#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scp/cover.hpp"
#include "scp/exact.hpp"
#include "scp/io.hpp"

using scp::Feasibility;
using scp::HopGraph;
using scp::Instance;

namespace {

Instance unit_square() {
  return Instance::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

Instance collinear() {
  return Instance::from_points({{0, 0}, {1, 0}, {10, 0}, {11, 0}});
}

}  // namespace

TEST_CASE("exact_decide") {
  auto sq = unit_square();
  auto yes = scp::exact_decide(sq, 2, 1.0);
  REQUIRE(yes.status == Feasibility::kFeasible);
  REQUIRE(yes.witness.has_value());
  CHECK(is_solidarity_cover(sq, *yes.witness, 1.0));

  CHECK(scp::exact_decide(sq, 3, 1.0).status == Feasibility::kInfeasible);
  CHECK(scp::exact_decide(sq, 1, std::sqrt(2.0)).status ==
        Feasibility::kFeasible);
}

TEST_CASE("witness is deterministic") {
  auto sq = unit_square();
  auto a = scp::exact_decide(sq, 2, 1.0);
  auto b = scp::exact_decide(sq, 2, 1.0);
  CHECK(a.witness->assignment == b.witness->assignment);
}

TEST_CASE("budget exhaustion is reported, never misread as infeasible") {
  auto inst = scp::io::gen_random_points(12, 1.0, 4);
  scp::SearchBudget tiny{2, 60.0};
  CHECK(scp::exact_decide(inst, 3, 0.5, tiny).status ==
        Feasibility::kIndeterminate);
}

TEST_CASE("exact_min_radius") {
  auto a = scp::exact_min_radius(collinear(), 2);
  REQUIRE(a.status == Feasibility::kFeasible);
  CHECK(a.radius == doctest::Approx(1.0));
  CHECK(is_solidarity_cover(collinear(), *a.witness, a.radius));

  auto b = scp::exact_min_radius(unit_square(), 1);
  CHECK(b.radius == 0.0);

  auto two = Instance::from_points({{0, 0}, {5, 0}});
  CHECK(scp::exact_min_radius(two, 2).radius == doctest::Approx(5.0));
  CHECK_THROWS_AS(scp::exact_min_radius(two, 3), std::invalid_argument);
}

TEST_CASE("exact_max_m") {
  auto sq = unit_square();
  auto a = scp::exact_max_m(sq, 1.0);
  REQUIRE(a.status == Feasibility::kFeasible);
  CHECK(a.max_m == 2);
  CHECK(scp::exact_max_m(sq, std::sqrt(2.0)).max_m == 4);

  auto two = Instance::from_points({{0, 0}, {5, 0}});
  CHECK(scp::exact_max_m(two, 1.0).max_m == 1);
}

TEST_CASE("exact_domatic") {
  HopGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(scp::exact_domatic(k3, 3).status == Feasibility::kFeasible);

  HopGraph p3(3, {{0, 1}, {1, 2}});
  // Two disjoint dominating sets exist ({1} and {0,2}); three do not.
  CHECK(scp::exact_domatic(p3, 2).status == Feasibility::kFeasible);
  CHECK(scp::exact_domatic(p3, 3).status == Feasibility::kInfeasible);

  HopGraph isolated(3, {{0, 1}});
  CHECK(scp::exact_domatic(isolated, 2).status == Feasibility::kInfeasible);
  CHECK(scp::exact_domatic(isolated, 1).status == Feasibility::kFeasible);
}

TEST_CASE("domatic witnesses are disjoint dominating sets") {
  HopGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto res = scp::exact_domatic(c4, 2);
  REQUIRE(res.status == Feasibility::kFeasible);
  REQUIRE(res.witness.has_value());
  auto adj = c4.adjacency();
  for (int s = 0; s < res.witness->m; ++s)
    for (int v = 0; v < c4.n; ++v) {
      bool dominated = res.witness->assignment[v] == s;
      for (int u : adj[v]) dominated |= res.witness->assignment[u] == s;
      CHECK(dominated);
    }
}

TEST_CASE("feasibility monotone in r, antitone in m") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto inst = scp::io::gen_random_points(6, 2.0, seed);
    auto cand = inst.candidate_radii();
    for (int m = 1; m <= inst.size(); ++m) {
      bool prev = false;
      for (double r : cand) {
        auto res = scp::exact_decide(inst, m, r);
        REQUIRE(res.status != Feasibility::kIndeterminate);
        bool now = res.status == Feasibility::kFeasible;
        if (prev) CHECK(now);
        if (now && m > 1)
          CHECK(scp::exact_decide(inst, m - 1, r).status ==
                Feasibility::kFeasible);
        prev = now;
      }
    }
  }
}
