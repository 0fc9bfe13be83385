#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "scp/cover.hpp"
#include "scp/instance.hpp"
#include "scp/reductions.hpp"

namespace scp::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedInstance {
  std::variant<Instance, PlanarOrthogonalGraph> value;

  bool is_instance() const { return std::holds_alternative<Instance>(value); }
  const Instance& instance() const { return std::get<Instance>(value); }
  const PlanarOrthogonalGraph& planar() const {
    return std::get<PlanarOrthogonalGraph>(value);
  }
};

// Documents are JSON with a "kind" discriminator:
//   {"kind":"points2d","points":[[x,y],...]}
//   {"kind":"matrix","dist":[[...],...]}
//   {"kind":"graph","n":N,"edges":[[i,j],...]}
//   {"kind":"planar-orthogonal","vertices":[[i,j],...],"edges":[[[x,y],...],...]}
// Throws ParseError with the offending field named.
ParsedInstance parse_instance(const std::string& text);

std::string write_instance(const Instance& inst);
std::string write_instance(const PlanarOrthogonalGraph& g);

struct PartitionFile {
  Partition partition;
  double radius = 0.0;
  bool verified = false;
};

// {"m":M,"assignment":[s0|null,...],"radius":R,"verified":bool}
PartitionFile parse_partition(const std::string& text);
std::string write_partition(const PartitionFile& pf);

// Deterministic generators (pure functions of their parameters).
Instance gen_random_points(int n, double box_side, std::uint64_t seed);
// Clusters of points in discs of the given radius, centers `separation`
// apart on a line; requires separation > 2 * cluster_radius when
// k_clusters > 1.
Instance gen_clustered(int k_clusters, int pts_per_cluster,
                       double cluster_radius, double separation,
                       std::uint64_t seed);
// Random sub-grid graph drawn with unit-length orthogonal edges; used for
// gadget property tests.
PlanarOrthogonalGraph gen_planar_orthogonal(int grid_width, int grid_height,
                                            double edge_prob,
                                            std::uint64_t seed);

// One marker shape and color per subset, grey for unassigned points;
// radius circles drawn when r >= 0. Deterministic output.
std::string render_svg(const Instance& pts, const Partition& p, double r);

}  // namespace scp::io
