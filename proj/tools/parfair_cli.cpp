// parfair: generate, solve, verify and benchmark fair-division instances.
//
// Exit codes: 0 ok, 1 fairness check failed, 2 bad input or precondition,
// 3 unparsable file.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "parfair/cc_reduce.hpp"
#include "parfair/const_agents.hpp"
#include "parfair/efk_alloc.hpp"
#include "parfair/errors.hpp"
#include "parfair/generators.hpp"
#include "parfair/graph_alloc.hpp"
#include "parfair/hypergraph_alloc.hpp"
#include "parfair/io.hpp"
#include "parfair/matching_alloc.hpp"
#include "parfair/round_robin.hpp"
#include "parfair/two_agent.hpp"

using namespace parfair;

namespace {

constexpr int kOk = 0;
constexpr int kUnfair = 1;
constexpr int kBadInput = 2;
constexpr int kBadFile = 3;

const std::vector<std::string> kAlgos = {"two-agent",  "graph",    "rr",      "const-agents",
                                         "hypergraph", "matching", "ef-sqrt", "ef-eps"};

struct SolveOptions {
  std::string algo;
  std::string order;
  std::uint64_t seed = 0;
  std::size_t k = 1;
  std::size_t max_rank = 4;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

bool needs_divisible(const std::string& algo) {
  return algo == "rr" || algo == "const-agents" || algo == "matching" || algo == "ef-sqrt" ||
         algo == "ef-eps";
}

bool is_randomized(const std::string& algo) { return algo == "ef-sqrt"; }

AgentOrder order_for(const SolveOptions& o, std::size_t n) {
  return o.order.empty() ? AgentOrder::identity(n) : AgentOrder::parse(o.order, n);
}

Allocation run_algo(const Instance& inst, const SolveOptions& o, par::Meter& meter) {
  const std::string& a = o.algo;
  if (a == "two-agent") return solve_two_agent(inst, meter);
  if (a == "graph") return solve_graph(inst, meter);
  if (a == "rr") return fixed_order_round_robin(inst, order_for(o, inst.n()), meter);
  if (a == "const-agents")
    return solve_const_agents(inst, order_for(o, inst.n()), meter, o.node_budget);
  if (a == "hypergraph") {
    HypergraphOptions h;
    h.max_rank = o.max_rank;
    h.node_budget = o.node_budget;
    return solve_hypergraph(inst, h, meter);
  }
  if (a == "matching") return solve_matching_rounds(inst, meter);
  if (a == "ef-sqrt") return solve_ef_sqrt(inst, o.seed, meter);
  if (a == "ef-eps") return solve_ef_eps(inst, o.k, meter);
  throw InputError("unknown algorithm '" + a + "'");
}

// The guarantee the algorithm promises, as a bound on overall_k.
std::size_t promised_k(const SolveOptions& o, std::size_t n, std::size_t m) {
  if (o.algo == "ef-eps") return ef_eps_bound(m, n, o.k);
  if (o.algo == "ef-sqrt") return std::max<std::size_t>(1, ef_sqrt_bound(m, n));
  return 1;
}

Allocation strip_padding(const Allocation& a, std::size_t m) {
  Allocation out(a.n());
  for (Agent i = 0; i < a.n(); ++i)
    for (Good g : a.bundle(i))
      if (g < m) out.assign(i, g);
  return out;
}

struct Solved {
  Allocation allocation;
  par::Metrics metrics;
  double wall_ms = 0;
  std::size_t padded_m = 0;
};

Solved solve(const Instance& inst, const SolveOptions& o) {
  const Instance work = needs_divisible(o.algo) ? pad_instance(inst) : inst;
  par::Meter meter;
  const auto t0 = std::chrono::steady_clock::now();
  Allocation a = run_algo(work, o, meter);
  const auto t1 = std::chrono::steady_clock::now();
  Solved s;
  s.allocation = strip_padding(a, inst.m());
  s.metrics = meter.metrics();
  s.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  s.padded_m = work.m();
  return s;
}

int cmd_solve(const std::string& path, const SolveOptions& o, const std::string& out,
              bool verify) {
  const Instance inst = io::load_instance(path);
  const Solved s = solve(inst, o);
  s.allocation.validate(inst.m());
  if (!s.allocation.is_complete(inst.m())) {
    std::cerr << "error: " << o.algo << " left goods unallocated\n";
    return kUnfair;
  }
  const EnvyReport report = verify_efk(inst, s.allocation);
  const std::size_t bound = promised_k(o, inst.n(), s.padded_m);
  const bool hard_guarantee = !is_randomized(o.algo);
  if (report.overall_k > bound && (hard_guarantee || verify)) {
    std::cerr << "error: " << o.algo << " produced an EF(" << report.overall_k
              << ") allocation, guarantee is EF(" << bound << ")\n";
    return kUnfair;
  }

  if (out.empty()) {
    io::write_allocation(std::cout, s.allocation, inst.m());
  } else {
    io::save_allocation(out, s.allocation, inst.m());
  }
  std::cout << "algo=" << o.algo << '\n'
            << "digest=" << io::digest(inst) << '\n'
            << "work=" << s.metrics.work << '\n'
            << "depth=" << s.metrics.depth << '\n';
  if (verify) std::cout << "overall_k=" << report.overall_k << '\n';
  std::cout << "wall_ms=" << s.wall_ms << '\n';
  if (is_randomized(o.algo)) std::cout << "seed=" << o.seed << '\n';
  return kOk;
}

int cmd_verify(const std::string& inst_path, const std::string& alloc_path, std::size_t k) {
  const Instance inst = io::load_instance(inst_path);
  const io::AllocationFile file = io::load_allocation(alloc_path);
  if (file.allocation.n() != inst.n() || file.m != inst.m()) {
    throw InputError("allocation shape " + std::to_string(file.allocation.n()) + "x" +
                     std::to_string(file.m) + " does not match instance " +
                     std::to_string(inst.n()) + "x" + std::to_string(inst.m()));
  }
  const EnvyReport r = verify_efk(inst, file.allocation);
  for (Agent i = 0; i < inst.n(); ++i)
    for (Agent j = 0; j < inst.n(); ++j)
      if (i != j) std::cout << "envy " << i << ' ' << j << ' ' << r.count(i, j) << '\n';
  std::cout << "overall_k=" << r.overall_k << '\n';
  return r.overall_k <= k ? kOk : kUnfair;
}

struct GenOptions {
  std::string kind = "dense";
  std::size_t n = 2;
  std::size_t m = 8;
  Value max_value = 100;
  std::uint64_t seed = 0;
  std::size_t rank = 3;
  std::size_t delta = 4;
  std::size_t budget = 4;
};

Instance generate(const GenOptions& g) {
  if (g.kind == "dense") return gen::dense(g.n, g.m, g.max_value, g.seed);
  if (g.kind == "graph") return gen::graph(g.n, g.m, g.max_value, g.seed);
  if (g.kind == "hypergraph")
    return gen::hypergraph(g.n, g.m, g.rank, g.delta, g.max_value, g.seed);
  if (g.kind == "sparse") return gen::sparse(g.n, g.m, g.budget, g.max_value, g.seed);
  throw InputError("unknown instance kind '" + g.kind + "'");
}

int cmd_gen(const GenOptions& g, const std::string& out) {
  const Instance inst = generate(g);
  if (out.empty()) {
    io::write_instance(std::cout, inst);
  } else {
    io::save_instance(out, inst);
  }
  return kOk;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError("bad size list entry '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty size list");
  return out;
}

int cmd_bench(const SolveOptions& o, const std::string& ns, const std::string& ms) {
  std::cout << "m n work depth wall_ms\n";
  for (std::size_t n : parse_sizes(ns)) {
    for (std::size_t m : parse_sizes(ms)) {
      const std::size_t agents = o.algo == "two-agent" ? 2 : n;
      const std::uint64_t seed = o.seed ^ (m * 1000003ULL + agents);
      Instance inst = o.algo == "graph"        ? gen::graph(agents, m, 100, seed)
                      : o.algo == "hypergraph" ? gen::hypergraph(agents, m, 3, 6, 100, seed)
                                               : gen::dense(agents, m, 100, seed);
      const Solved s = solve(inst, o);
      std::cout << m << ' ' << agents << ' ' << s.metrics.work << ' ' << s.metrics.depth << ' '
                << s.wall_ms << '\n';
    }
  }
  return kOk;
}

int cmd_reduce(const std::string& path, const std::string& order, const std::string& out) {
  const Instance inst = io::load_instance(path);
  const AgentOrder o = order.empty() ? AgentOrder::identity(inst.n())
                                     : AgentOrder::parse(order, inst.n());
  const auto smi = reduce_to_stable_matching(inst, o);
  if (out.empty()) {
    write_stable_matching(std::cout, smi);
    return kOk;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  write_stable_matching(f, smi);
  return kOk;
}

void add_solver_flags(CLI::App* cmd, SolveOptions& o) {
  cmd->add_option("--algo", o.algo, "Algorithm")->required()->check(CLI::IsMember(kAlgos));
  cmd->add_option("--order", o.order, "Picking order for rr / const-agents, e.g. 2,0,1");
  cmd->add_option("--seed", o.seed, "Seed for randomized algorithms");
  cmd->add_option("--k", o.k, "Part-size multiplier for ef-eps");
  cmd->add_option("--max-rank", o.max_rank, "Largest hyperedge rank accepted");
  cmd->add_option("--node-budget", o.node_budget, "Reachability graph size limit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel EF1 / EF(k) allocation of indivisible goods"};
  app.require_subcommand(1);

  GenOptions g;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("kind", g.kind, "dense | graph | hypergraph | sparse")
      ->check(CLI::IsMember({"dense", "graph", "hypergraph", "sparse"}));
  gen_cmd->add_option("--n", g.n, "Agents");
  gen_cmd->add_option("--m", g.m, "Goods");
  gen_cmd->add_option("--max-value", g.max_value, "Largest value");
  gen_cmd->add_option("--seed", g.seed, "Seed");
  gen_cmd->add_option("--rank", g.rank, "Hypergraph rank");
  gen_cmd->add_option("--delta", g.delta, "Hypergraph edge degree bound");
  gen_cmd->add_option("--budget", g.budget, "Positive goods per agent (sparse)");
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  SolveOptions so;
  std::string solve_in, solve_out;
  bool solve_verify = false;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an allocation");
  add_solver_flags(solve_cmd, so);
  solve_cmd->add_option("instance", solve_in, "Instance file")->required();
  solve_cmd->add_flag("--verify", solve_verify, "Report overall_k and enforce the guarantee");
  solve_cmd->add_option("--out", solve_out, "Allocation file (default stdout)");

  std::string v_inst, v_alloc;
  std::size_t v_k = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Check an allocation for EF(k)");
  verify_cmd->add_option("instance", v_inst, "Instance file")->required();
  verify_cmd->add_option("allocation", v_alloc, "Allocation file")->required();
  verify_cmd->add_option("--k", v_k, "Allowed number of removed goods");

  SolveOptions bo;
  std::string bench_n = "2", bench_m = "16,32,64,128";
  auto* bench_cmd = app.add_subcommand("bench", "Measure work and depth over a size sweep");
  add_solver_flags(bench_cmd, bo);
  bench_cmd->add_option("--n", bench_n, "Agent counts, comma separated");
  bench_cmd->add_option("--m", bench_m, "Good counts, comma separated");

  std::string r_inst, r_order, r_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Emit the stable matching instance");
  reduce_cmd->add_option("instance", r_inst, "Instance file")->required();
  reduce_cmd->add_option("--order", r_order, "Picking order, e.g. 1,0");
  reduce_cmd->add_option("--out", r_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(g, gen_out);
    if (*solve_cmd) return cmd_solve(solve_in, so, solve_out, solve_verify);
    if (*verify_cmd) return cmd_verify(v_inst, v_alloc, v_k);
    if (*bench_cmd) return cmd_bench(bo, bench_n, bench_m);
    if (*reduce_cmd) return cmd_reduce(r_inst, r_order, r_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadFile;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
