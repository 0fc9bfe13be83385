#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scp/cover.hpp"
#include "scp/exact.hpp"
#include "scp/greedy.hpp"
#include "scp/io.hpp"
#include "scp/reductions.hpp"
#include "scp/squares.hpp"

namespace scp::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

io::ParsedInstance load_instance(const std::string& path) {
  return io::parse_instance(read_file(path));
}

Instance load_metric_instance(const std::string& path) {
  auto parsed = load_instance(path);
  if (!parsed.is_instance())
    throw std::runtime_error(path + ": expected a metric instance, got a drawing");
  return parsed.instance();
}

json partition_json(const Partition& p) {
  json assignment = json::array();
  for (int s : p.assignment) {
    if (s == Partition::kUnassigned)
      assignment.push_back(nullptr);
    else
      assignment.push_back(s);
  }
  return json{{"m", p.m}, {"assignment", std::move(assignment)}};
}

void emit(std::ostream& out, const json& report) { out << report.dump() << "\n"; }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct CommonOpts {
  std::string instance_path;
  std::string partition_path;
  std::string coloring_path;
  std::string out_path;
  std::string suite_path;
  int m = 1;
  double r = -1.0;
  double beta = 2.0;
  std::uint64_t seed = 0;
  long long budget_nodes = SearchBudget{}.max_nodes;
  double timeout = SearchBudget{}.timeout_seconds;
  int threads = 1;
  bool strict = false;
  // gen parameters
  int n = 10;
  double box_side = 1.0;
  int clusters = 1;
  int per_cluster = 8;
  double cluster_radius = 0.5;
  double separation = 10.0;

  SearchBudget budget() const { return {budget_nodes, timeout}; }
};

// Writes the partition file only after the checker has confirmed it.
void save_verified(const CommonOpts& opt, const Instance& inst,
                   const Partition& p, double radius) {
  if (opt.out_path.empty()) return;
  io::PartitionFile pf;
  pf.partition = p;
  pf.radius = radius;
  pf.verified = is_solidarity_cover(inst, p, radius);
  if (!pf.verified) return;
  write_file(opt.out_path, io::write_partition(pf));
}

int cmd_check(const CommonOpts& opt, std::ostream& out) {
  Instance inst = load_metric_instance(opt.instance_path);
  io::PartitionFile pf = io::parse_partition(read_file(opt.partition_path));
  if (!pf.partition.well_formed(inst.size()))
    throw std::runtime_error("partition does not match the instance");
  bool ok = is_solidarity_cover(inst, pf.partition, opt.r);
  json report{{"command", "check"},
              {"status", ok ? "ok" : "infeasible"},
              {"cover", ok},
              {"r", opt.r},
              {"m", pf.partition.m}};
  emit(out, report);
  return ok ? kStatusOk : kStatusInfeasible;
}

int cmd_solve_greedy(const CommonOpts& opt, std::ostream& out,
                     std::ostream& err) {
  Instance inst = load_metric_instance(opt.instance_path);
  Timer timer;
  json report{{"command", "solve greedy"}, {"m", opt.m}};
  int status;
  if (opt.r >= 0.0) {
    auto res = greedy_sc(inst, opt.m, opt.r);
    if (res.feasible) {
      bool verified = is_solidarity_cover(inst, res.partition, 3.0 * opt.r);
      report["status"] = "ok";
      report["r"] = opt.r;
      report["cover_radius"] = 3.0 * opt.r;
      report["verified"] = verified;
      report["partition"] = partition_json(res.partition);
      save_verified(opt, inst, res.partition, 3.0 * opt.r);
      status = verified ? kStatusOk : kStatusInfeasible;
    } else {
      report["status"] = "infeasible";
      report["r"] = opt.r;
      status = kStatusInfeasible;
    }
  } else {
    auto res = min_radius_greedy(inst, opt.m, opt.threads);
    bool verified = is_solidarity_cover(inst, res.partition, 3.0 * res.radius);
    report["status"] = "ok";
    report["radius"] = res.radius;
    report["cover_radius"] = 3.0 * res.radius;
    report["candidates_scanned"] = res.candidates_scanned;
    report["verified"] = verified;
    report["partition"] = partition_json(res.partition);
    save_verified(opt, inst, res.partition, 3.0 * res.radius);
    status = verified ? kStatusOk : kStatusInfeasible;
  }
  emit(out, report);
  err << "wall_ms " << timer.ms() << "\n";
  return status;
}

int cmd_solve_bicriteria(const CommonOpts& opt, std::ostream& out,
                         std::ostream& err) {
  Instance inst = load_metric_instance(opt.instance_path);
  Timer timer;
  json report{{"command", "solve bicriteria"}, {"m", opt.m}, {"beta", opt.beta}};
  report["m_prime"] = reduced_partition_size(opt.m, opt.beta);
  int status;
  if (opt.r >= 0.0) {
    auto res = squares_sc(inst, opt.m, opt.beta, opt.r);
    if (res.feasible) {
      report["status"] = "ok";
      report["r"] = opt.r;
      report["cover_radius"] = opt.beta * opt.r;
      report["verified"] = true;  // squares_sc self-verifies
      report["partition"] = partition_json(res.partition);
      save_verified(opt, inst, res.partition, opt.beta * opt.r);
      status = kStatusOk;
    } else {
      report["status"] = "infeasible";
      report["r"] = opt.r;
      status = kStatusInfeasible;
    }
  } else {
    auto res = min_radius_bicriteria(inst, opt.m, opt.beta, opt.threads);
    report["status"] = "ok";
    report["radius"] = res.radius;
    report["cover_radius"] = opt.beta * res.radius;
    report["candidates_scanned"] = res.candidates_scanned;
    report["verified"] = true;
    report["partition"] = partition_json(res.partition);
    save_verified(opt, inst, res.partition, opt.beta * res.radius);
    status = kStatusOk;
  }
  emit(out, report);
  err << "wall_ms " << timer.ms() << "\n";
  return status;
}

int cmd_solve_exact(const CommonOpts& opt, std::ostream& out,
                    std::ostream& err) {
  Instance inst = load_metric_instance(opt.instance_path);
  Timer timer;
  auto res = exact_decide(inst, opt.m, opt.r, opt.budget());
  json report{{"command", "solve exact"},
              {"m", opt.m},
              {"r", opt.r},
              {"nodes", res.nodes}};
  int status;
  switch (res.status) {
    case Feasibility::kFeasible: {
      bool verified = is_solidarity_cover(inst, *res.witness, opt.r);
      report["status"] = "ok";
      report["verified"] = verified;
      report["partition"] = partition_json(*res.witness);
      save_verified(opt, inst, *res.witness, opt.r);
      status = verified ? kStatusOk : kStatusInfeasible;
      break;
    }
    case Feasibility::kInfeasible:
      report["status"] = "infeasible";
      status = kStatusInfeasible;
      break;
    default:
      report["status"] = "budget-exhausted";
      status = kStatusBudgetExhausted;
      break;
  }
  emit(out, report);
  err << "wall_ms " << timer.ms() << "\n";
  return status;
}

int cmd_min_radius_exact(const CommonOpts& opt, std::ostream& out,
                         std::ostream& err) {
  Instance inst = load_metric_instance(opt.instance_path);
  Timer timer;
  auto res = exact_min_radius(inst, opt.m, opt.budget());
  json report{{"command", "min-radius exact"}, {"m", opt.m}};
  int status;
  if (res.status == Feasibility::kFeasible) {
    bool verified = is_solidarity_cover(inst, *res.witness, res.radius);
    report["status"] = "ok";
    report["radius"] = res.radius;
    report["verified"] = verified;
    report["partition"] = partition_json(*res.witness);
    save_verified(opt, inst, *res.witness, res.radius);
    status = verified ? kStatusOk : kStatusInfeasible;
  } else if (res.status == Feasibility::kInfeasible) {
    report["status"] = "infeasible";
    status = kStatusInfeasible;
  } else {
    report["status"] = "budget-exhausted";
    status = kStatusBudgetExhausted;
  }
  emit(out, report);
  err << "wall_ms " << timer.ms() << "\n";
  return status;
}

int cmd_max_m(const CommonOpts& opt, std::ostream& out, std::ostream& err) {
  Instance inst = load_metric_instance(opt.instance_path);
  Timer timer;
  auto res = exact_max_m(inst, opt.r, opt.budget());
  json report{{"command", "max-m exact"}, {"r", opt.r}};
  int status;
  if (res.status == Feasibility::kFeasible) {
    report["status"] = "ok";
    report["max_m"] = res.max_m;
    status = kStatusOk;
  } else {
    report["status"] = "budget-exhausted";
    status = kStatusBudgetExhausted;
  }
  emit(out, report);
  err << "wall_ms " << timer.ms() << "\n";
  return status;
}

int cmd_reduce(const std::string& mode, const CommonOpts& opt,
               std::ostream& out) {
  json report{{"command", "reduce " + mode}, {"status", "ok"}};
  std::string payload;
  if (mode == "hop-metric") {
    Instance inst = load_metric_instance(opt.instance_path);
    payload = io::write_instance(graph_to_hop_metric(inst.graph()));
  } else if (mode == "unit-ball") {
    Instance inst = load_metric_instance(opt.instance_path);
    if (opt.r < 0.0) throw std::runtime_error("reduce unit-ball requires --r");
    HopGraph g = unit_ball_graph(inst, opt.r);
    json doc{{"kind", "graph"}, {"n", g.n}};
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
    doc["edges"] = std::move(edges);
    payload = doc.dump();
  } else {  // gadget
    auto parsed = load_instance(opt.instance_path);
    if (parsed.is_instance())
      throw std::runtime_error("reduce gadget expects a planar-orthogonal drawing");
    auto gadget = coloring_gadget(parsed.planar());
    payload = io::write_instance(gadget.points);
    report["points"] = gadget.points.size();
  }
  if (!opt.out_path.empty()) write_file(opt.out_path, payload);
  report["document"] = json::parse(payload);
  emit(out, report);
  return kStatusOk;
}

std::vector<int> load_coloring(const std::string& path) {
  json doc = json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("colors") ||
      !doc["colors"].is_array())
    throw std::runtime_error(path + ": expected {\"colors\":[...]}");
  std::vector<int> tau;
  for (const auto& c : doc["colors"]) {
    if (!c.is_number_integer())
      throw std::runtime_error(path + ": colors must be integers");
    tau.push_back(c.get<int>());
  }
  return tau;
}

int cmd_from_coloring(const CommonOpts& opt, std::ostream& out) {
  auto parsed = load_instance(opt.instance_path);
  if (parsed.is_instance())
    throw std::runtime_error("from-coloring expects a planar-orthogonal drawing");
  auto gadget = coloring_gadget(parsed.planar());
  auto tau = load_coloring(opt.coloring_path);
  Partition p = cover_from_coloring(gadget, tau);
  bool verified = is_solidarity_cover(gadget.points, p, 1.0);
  json report{{"command", "from-coloring"},
              {"status", "ok"},
              {"r", 1.0},
              {"verified", verified},
              {"partition", partition_json(p)}};
  if (!opt.out_path.empty() && verified) {
    io::PartitionFile pf;
    pf.partition = p;
    pf.radius = 1.0;
    pf.verified = true;
    write_file(opt.out_path, io::write_partition(pf));
  }
  emit(out, report);
  return verified ? kStatusOk : kStatusInfeasible;
}

int cmd_to_coloring(const CommonOpts& opt, std::ostream& out) {
  auto parsed = load_instance(opt.instance_path);
  if (parsed.is_instance())
    throw std::runtime_error("to-coloring expects a planar-orthogonal drawing");
  auto gadget = coloring_gadget(parsed.planar());
  io::PartitionFile pf = io::parse_partition(read_file(opt.partition_path));
  double r = opt.r >= 0.0 ? opt.r : 1.0;
  auto tau = coloring_from_cover(gadget, pf.partition, r);
  json report{{"command", "to-coloring"},
              {"status", "ok"},
              {"colors", tau}};
  if (!opt.out_path.empty())
    write_file(opt.out_path, json{{"colors", tau}}.dump());
  emit(out, report);
  return kStatusOk;
}

int cmd_gen(const std::string& mode, const CommonOpts& opt, std::ostream& out) {
  Instance inst = (mode == "random")
                      ? io::gen_random_points(opt.n, opt.box_side, opt.seed)
                      : io::gen_clustered(opt.clusters, opt.per_cluster,
                                          opt.cluster_radius, opt.separation,
                                          opt.seed);
  std::string payload = io::write_instance(inst);
  if (!opt.out_path.empty()) write_file(opt.out_path, payload);
  json report{{"command", "gen " + mode},
              {"status", "ok"},
              {"n", inst.size()},
              {"document", json::parse(payload)}};
  emit(out, report);
  return kStatusOk;
}

int cmd_render(const CommonOpts& opt, std::ostream& out) {
  Instance inst = load_metric_instance(opt.instance_path);
  io::PartitionFile pf = io::parse_partition(read_file(opt.partition_path));
  if (!pf.partition.well_formed(inst.size()))
    throw std::runtime_error("partition does not match the instance");
  std::string svg = io::render_svg(inst, pf.partition, opt.r);
  if (!opt.out_path.empty())
    write_file(opt.out_path, svg);
  else
    out << svg;
  return kStatusOk;
}

int cmd_bench(const CommonOpts& opt, std::ostream& out, std::ostream& err) {
  json suite = json::parse(read_file(opt.suite_path), nullptr, false);
  if (suite.is_discarded() || !suite.is_object())
    throw std::runtime_error("suite descriptor is not a JSON object");
  if (!suite.contains("instances") || !suite["instances"].is_array() ||
      suite["instances"].empty())
    throw std::runtime_error("suite descriptor lists no instances");
  int m = suite.value("m", 2);
  double beta = suite.value("beta", 2.0);
  std::vector<std::string> solvers;
  if (suite.contains("solvers"))
    for (const auto& s : suite["solvers"]) solvers.push_back(s.get<std::string>());
  if (solvers.empty()) solvers = {"greedy"};

  json rows = json::array();
  bool any_indeterminate = false;
  for (const auto& entry : suite["instances"]) {
    std::string path = entry.get<std::string>();
    Instance inst = load_metric_instance(path);
    auto oracle = exact_min_radius(inst, m, opt.budget());
    for (const auto& solver : solvers) {
      Timer timer;
      json row{{"instance", path}, {"solver", solver}, {"m", m}};
      if (oracle.status != Feasibility::kFeasible) {
        row["status"] = oracle.status == Feasibility::kInfeasible
                            ? "infeasible"
                            : "indeterminate";
        any_indeterminate = oracle.status == Feasibility::kIndeterminate;
        rows.push_back(std::move(row));
        continue;
      }
      double r_hat;
      if (solver == "bicriteria") {
        r_hat = min_radius_bicriteria(inst, m, beta, opt.threads).radius;
        row["beta"] = beta;
      } else {
        r_hat = min_radius_greedy(inst, m, opt.threads).radius;
      }
      row["status"] = "ok";
      row["r_hat"] = r_hat;
      row["r_star"] = oracle.radius;
      if (oracle.radius > 0.0)
        row["ratio"] = r_hat / oracle.radius;
      else
        row["ratio"] = r_hat == 0.0 ? json(1.0) : json(nullptr);
      row["wall_ms"] = timer.ms();
      rows.push_back(std::move(row));
    }
  }
  json report{{"command", "bench"},
              {"status", any_indeterminate && opt.strict ? "budget-exhausted" : "ok"},
              {"rows", rows}};
  emit(out, report);
  for (const auto& row : rows) err << row.dump() << "\n";
  return any_indeterminate && opt.strict ? kStatusBudgetExhausted : kStatusOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Solidarity cover solver toolkit"};
  app.require_subcommand(1);
  CommonOpts opt;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", opt.budget_nodes, "search node cap");
    cmd->add_option("--timeout", opt.timeout, "search timeout in seconds");
  };

  auto* check = app.add_subcommand("check", "verify a partition file");
  check->add_option("--instance", opt.instance_path)->required();
  check->add_option("--partition", opt.partition_path)->required();
  check->add_option("--r", opt.r)->required();

  auto* solve = app.add_subcommand("solve", "solve at a fixed or scanned radius");
  solve->require_subcommand(1);
  auto* solve_greedy = solve->add_subcommand("greedy");
  solve_greedy->add_option("--instance", opt.instance_path)->required();
  solve_greedy->add_option("--m", opt.m)->required();
  solve_greedy->add_option("--r", opt.r);
  solve_greedy->add_option("--out", opt.out_path);
  solve_greedy->add_option("--threads", opt.threads);
  auto* solve_bi = solve->add_subcommand("bicriteria");
  solve_bi->add_option("--instance", opt.instance_path)->required();
  solve_bi->add_option("--m", opt.m)->required();
  solve_bi->add_option("--beta", opt.beta);
  solve_bi->add_option("--r", opt.r);
  solve_bi->add_option("--out", opt.out_path);
  solve_bi->add_option("--threads", opt.threads);
  auto* solve_exact = solve->add_subcommand("exact");
  solve_exact->add_option("--instance", opt.instance_path)->required();
  solve_exact->add_option("--m", opt.m)->required();
  solve_exact->add_option("--r", opt.r)->required();
  solve_exact->add_option("--out", opt.out_path);
  add_budget(solve_exact);

  auto* minr = app.add_subcommand("min-radius", "minimize the radius");
  minr->require_subcommand(1);
  auto* minr_greedy = minr->add_subcommand("greedy");
  minr_greedy->add_option("--instance", opt.instance_path)->required();
  minr_greedy->add_option("--m", opt.m)->required();
  minr_greedy->add_option("--out", opt.out_path);
  minr_greedy->add_option("--threads", opt.threads);
  auto* minr_bi = minr->add_subcommand("bicriteria");
  minr_bi->add_option("--instance", opt.instance_path)->required();
  minr_bi->add_option("--m", opt.m)->required();
  minr_bi->add_option("--beta", opt.beta);
  minr_bi->add_option("--out", opt.out_path);
  minr_bi->add_option("--threads", opt.threads);
  auto* minr_exact = minr->add_subcommand("exact");
  minr_exact->add_option("--instance", opt.instance_path)->required();
  minr_exact->add_option("--m", opt.m)->required();
  minr_exact->add_option("--out", opt.out_path);
  add_budget(minr_exact);

  auto* maxm = app.add_subcommand("max-m", "maximize the partition size");
  maxm->require_subcommand(1);
  auto* maxm_exact = maxm->add_subcommand("exact");
  maxm_exact->add_option("--instance", opt.instance_path)->required();
  maxm_exact->add_option("--r", opt.r)->required();
  add_budget(maxm_exact);

  auto* reduce = app.add_subcommand("reduce", "apply a graph/metric reduction");
  reduce->require_subcommand(1);
  for (const char* mode : {"hop-metric", "unit-ball", "gadget"}) {
    auto* sub = reduce->add_subcommand(mode);
    sub->add_option("--instance", opt.instance_path)->required();
    if (std::string(mode) == "unit-ball") sub->add_option("--r", opt.r);
    sub->add_option("--out", opt.out_path);
  }

  auto* fromc = app.add_subcommand("from-coloring",
                                   "build a gadget cover from a 3-coloring");
  fromc->add_option("--instance", opt.instance_path)->required();
  fromc->add_option("--coloring", opt.coloring_path)->required();
  fromc->add_option("--out", opt.out_path);

  auto* toc = app.add_subcommand("to-coloring",
                                 "read a 3-coloring off a gadget cover");
  toc->add_option("--instance", opt.instance_path)->required();
  toc->add_option("--partition", opt.partition_path)->required();
  toc->add_option("--r", opt.r);
  toc->add_option("--out", opt.out_path);

  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random");
  gen_random->add_option("--n", opt.n);
  gen_random->add_option("--box-side", opt.box_side);
  gen_random->add_option("--seed", opt.seed);
  gen_random->add_option("--out", opt.out_path);
  auto* gen_clustered = gen->add_subcommand("clustered");
  gen_clustered->add_option("--clusters", opt.clusters);
  gen_clustered->add_option("--per-cluster", opt.per_cluster);
  gen_clustered->add_option("--cluster-radius", opt.cluster_radius);
  gen_clustered->add_option("--separation", opt.separation);
  gen_clustered->add_option("--seed", opt.seed);
  gen_clustered->add_option("--out", opt.out_path);

  auto* render = app.add_subcommand("render", "render a partition as SVG");
  render->add_option("--instance", opt.instance_path)->required();
  render->add_option("--partition", opt.partition_path)->required();
  render->add_option("--r", opt.r);
  render->add_option("--out", opt.out_path);

  auto* bench = app.add_subcommand("bench", "run a solver/oracle suite");
  bench->add_option("--suite", opt.suite_path)->required();
  bench->add_flag("--strict", opt.strict);
  bench->add_option("--threads", opt.threads);
  add_budget(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << (e.get_exit_code() == 0 ? app.help() : std::string(e.what()) + "\n");
    return e.get_exit_code() == 0 ? kStatusOk : kStatusInputError;
  }

  try {
    if (*check) return cmd_check(opt, out);
    if (*solve_greedy) return cmd_solve_greedy(opt, out, err);
    if (*solve_bi) return cmd_solve_bicriteria(opt, out, err);
    if (*solve_exact) return cmd_solve_exact(opt, out, err);
    if (*minr_greedy) {
      opt.r = -1.0;
      return cmd_solve_greedy(opt, out, err);
    }
    if (*minr_bi) {
      opt.r = -1.0;
      return cmd_solve_bicriteria(opt, out, err);
    }
    if (*minr_exact) return cmd_min_radius_exact(opt, out, err);
    if (*maxm_exact) return cmd_max_m(opt, out, err);
    if (*reduce) {
      for (const auto* sub : reduce->get_subcommands())
        return cmd_reduce(sub->get_name(), opt, out);
    }
    if (*fromc) return cmd_from_coloring(opt, out);
    if (*toc) return cmd_to_coloring(opt, out);
    if (*gen_random) return cmd_gen("random", opt, out);
    if (*gen_clustered) return cmd_gen("clustered", opt, out);
    if (*render) return cmd_render(opt, out);
    if (*bench) return cmd_bench(opt, out, err);
  } catch (const NoFeasibleRadius& e) {
    emit(out, json{{"status", "infeasible"}, {"error", e.what()}});
    return kStatusInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    emit(out, json{{"status", "input-error"}, {"error", e.what()}});
    return kStatusInputError;
  }
  err << app.help();
  return kStatusInputError;
}

}  // namespace scp::cli
