#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scp/exact.hpp"
#include "scp/io.hpp"
#include "scp/reductions.hpp"

using scp::Instance;
using scp::Partition;
namespace io = scp::io;

TEST_CASE("parse_instance per kind") {
  auto sq = io::parse_instance(
      R"({"kind":"points2d","points":[[0,0],[1,0],[0,1],[1,1]]})");
  REQUIRE(sq.is_instance());
  CHECK(sq.instance().size() == 4);
  CHECK(sq.instance().distance(0, 3) == doctest::Approx(std::sqrt(2.0)));

  auto mat = io::parse_instance(R"({"kind":"matrix","dist":[[0,7],[7,0]]})");
  CHECK(mat.instance().distance(0, 1) == 7.0);

  auto gr = io::parse_instance(
      R"({"kind":"graph","n":3,"edges":[[0,1],[1,2]]})");
  CHECK(gr.instance().distance(0, 2) == 2.0);

  auto dr = io::parse_instance(
      R"({"kind":"planar-orthogonal","vertices":[[0,0],[1,0]],)"
      R"("edges":[[[0,0],[1,0]]]})");
  CHECK_FALSE(dr.is_instance());
  CHECK(dr.planar().vertex_count() == 2);
}

TEST_CASE("parse errors name the offending field") {
  CHECK_THROWS_WITH_AS(
      io::parse_instance(R"({"kind":"matrix","dist":[[0,1],[2,0]]})"),
      doctest::Contains("asymmetric"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_instance(R"({"points":[[0,0]]})"),
                       doctest::Contains("kind"), io::ParseError);
  CHECK_THROWS_AS(io::parse_instance("not json"), io::ParseError);
  CHECK_THROWS_WITH_AS(io::parse_instance(R"({"kind":"points2d"})"),
                       doctest::Contains("points"), io::ParseError);
}

TEST_CASE("write/parse round-trips byte-identically") {
  std::vector<std::string> docs = {
      io::write_instance(Instance::from_points({{0, 0}, {0.1, 2.5}})),
      io::write_instance(Instance::from_matrix({{0, 7}, {7, 0}})),
      io::write_instance(
          Instance::from_graph(scp::HopGraph(3, {{0, 1}, {1, 2}}))),
      io::write_instance(scp::PlanarOrthogonalGraph::create(
          {{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}})),
  };
  for (const auto& doc : docs) {
    auto parsed = io::parse_instance(doc);
    std::string again = parsed.is_instance()
                            ? io::write_instance(parsed.instance())
                            : io::write_instance(parsed.planar());
    CHECK(doc == again);
  }
}

TEST_CASE("partition files") {
  io::PartitionFile pf;
  pf.partition = Partition{2, {0, Partition::kUnassigned, 1}};
  pf.radius = 1.5;
  pf.verified = true;
  auto text = io::write_partition(pf);
  auto back = io::parse_partition(text);
  CHECK(back.partition.m == 2);
  CHECK(back.partition.assignment == pf.partition.assignment);
  CHECK(back.radius == 1.5);
  CHECK(back.verified);
  CHECK(io::write_partition(back) == text);

  CHECK_THROWS_AS(io::parse_partition(R"({"m":1})"), io::ParseError);
  CHECK_THROWS_AS(
      io::parse_partition(R"({"m":1,"assignment":[2],"radius":0,"verified":false})"),
      io::ParseError);
}

TEST_CASE("gen_random_points") {
  auto a = io::gen_random_points(10, 1.0, 3);
  auto b = io::gen_random_points(10, 1.0, 3);
  CHECK(io::write_instance(a) == io::write_instance(b));
  for (const auto& p : a.points()) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 1.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= 1.0);
  }
  CHECK(io::gen_random_points(1, 1.0, 99).size() == 1);
  CHECK(io::gen_random_points(4, 1.0, 0).candidate_radii().size() <= 7);
}

TEST_CASE("gen_clustered") {
  auto one = io::gen_clustered(1, 32, 0.5, 10.0, 7);
  REQUIRE(one.size() == 32);
  for (int i = 0; i < one.size(); ++i)
    for (int j = 0; j < one.size(); ++j)
      CHECK(one.distance(i, j) <= 1.0 + 1e-9);

  auto two = io::gen_clustered(2, 3, 0.1, 10.0, 1);
  REQUIRE(two.size() == 6);
  auto res = scp::exact_max_m(two, 0.2);
  REQUIRE(res.status == scp::Feasibility::kFeasible);
  CHECK(res.max_m == 3);

  CHECK(io::gen_clustered(1, 1, 0.3, 10.0, 5).size() == 1);
  CHECK_THROWS_AS(io::gen_clustered(2, 3, 1.0, 1.5, 0),
                  std::invalid_argument);
}

TEST_CASE("gen_planar_orthogonal is deterministic and valid") {
  auto a = scp::io::gen_planar_orthogonal(3, 3, 0.5, 11);
  auto b = scp::io::gen_planar_orthogonal(3, 3, 0.5, 11);
  CHECK(io::write_instance(a) == io::write_instance(b));
  CHECK(a.vertex_count() >= 1);
}

TEST_CASE("render_svg") {
  auto sq = Instance::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  Partition p{2, {0, 1, 1, 0}};
  auto svg = io::render_svg(sq, p, 1.0);
  CHECK(svg.find("subset-0") != std::string::npos);
  CHECK(svg.find("subset-1") != std::string::npos);
  CHECK(svg.find("class=\"radius\"") != std::string::npos);
  CHECK(svg == io::render_svg(sq, p, 1.0));

  Partition empty{2, {Partition::kUnassigned, Partition::kUnassigned,
                      Partition::kUnassigned, Partition::kUnassigned}};
  auto grey = io::render_svg(sq, empty, -1.0);
  CHECK(grey.find("unassigned") != std::string::npos);
  CHECK(grey.find("subset-0") == std::string::npos);
  CHECK(grey.find("class=\"radius\"") == std::string::npos);
}
