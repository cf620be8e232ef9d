#include "parfair/const_agents.hpp"

#include <algorithm>
#include <numeric>

#include "parfair/errors.hpp"

namespace parfair {

namespace {

struct Prefs {
  std::vector<std::vector<Good>> order;
  std::vector<std::vector<std::uint32_t>> rank;
};

Prefs metered_preferences(const Instance& inst, par::Meter& meter) {
  Prefs p;
  p.order.resize(inst.n());
  p.rank.resize(inst.n());
  par::parallel_for(
      meter, 0, inst.n(),
      [&](par::Meter& ma, std::size_t a) {
        const auto agent = static_cast<Agent>(a);
        auto& order = p.order[a];
        order.resize(inst.m());
        std::iota(order.begin(), order.end(), Good{0});
        par::parallel_sort(ma, order, [&](Good x, Good y) { return prefers(inst, agent, x, y); });
        auto& rank = p.rank[a];
        rank.resize(inst.m());
        par::parallel_for(ma, 0, inst.m(), [&](par::Meter& mg, std::size_t pos) {
          mg.tick();
          rank[order[pos]] = static_cast<std::uint32_t>(pos + 1);
        });
      },
      1);
  return p;
}

// One round of Fixed-Order Round Robin on the residual instance of `config`.
// Writes the successor configuration into `next` and returns false when some
// agent is left without a good.
bool simulate_round(const Prefs& p, const AgentOrder& order, std::span<const std::uint32_t> config,
                    std::span<std::uint32_t> next, std::span<Good> taken, par::Meter& meter) {
  const std::size_t n = config.size();
  const std::size_t m = p.order.empty() ? 0 : p.order[0].size();

  std::vector<std::uint8_t> allocated(m);
  par::parallel_for(meter, 0, m, [&](par::Meter& mg, std::size_t g) {
    mg.tick(n);
    bool hit = false;
    for (std::size_t i = 0; i < n; ++i) hit = hit || p.rank[i][g] < config[i];
    allocated[g] = hit ? 1 : 0;
  });

  std::vector<std::vector<Good>> residual(n);
  par::parallel_for(
      meter, 0, n,
      [&](par::Meter& ma, std::size_t i) {
        residual[i] = par::parallel_filter(ma, std::span<const Good>(p.order[i]),
                                           [&](Good g) { return allocated[g] == 0; });
      },
      1);

  std::fill(taken.begin(), taken.end(), kNoGood);
  bool complete = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Agent a = order[k];
    const auto& list = residual[a];
    std::size_t pos = 0;
    // Only goods picked earlier this round can block; at most n - 1 skips.
    while (pos < list.size() &&
           std::find(taken.begin(), taken.end(), list[pos]) != taken.end()) {
      meter.tick(n);
      ++pos;
    }
    meter.tick();
    if (pos == list.size()) {
      complete = false;
      break;
    }
    taken[a] = list[pos];
    next[a] = p.rank[a][list[pos]] + 1;
  }
  return complete;
}

void check_config(const Configuration& c, std::size_t n, std::size_t m) {
  if (c.size() != n) throw InputError("configuration has wrong arity");
  for (auto v : c) {
    if (v < 1 || v > m + 1) throw InputError("configuration entry outside [1, m+1]");
  }
}

}  // namespace

RoundStep successor(const Instance& inst, const AgentOrder& order, const Configuration& config) {
  if (order.size() != inst.n()) throw InputError("agent order length differs from n");
  check_config(config, inst.n(), inst.m());
  auto meter = par::Meter::disabled();
  const Prefs p = metered_preferences(inst, meter);
  RoundStep step;
  step.taken.assign(inst.n(), kNoGood);
  Configuration next(inst.n(), 0);
  if (simulate_round(p, order, config, next, step.taken, meter)) step.next = std::move(next);
  return step;
}

ReachabilityGraph::ReachabilityGraph(std::size_t n, std::size_t m, AgentOrder order)
    : n_(n), m_(m), order_(std::move(order)) {
  const std::uint64_t count = configuration_count(n, m);
  next_.assign(count, kNoNode);
  taken_.assign(count * n, kNoGood);
}

NodeId ReachabilityGraph::encode(const Configuration& c) const {
  check_config(c, n_, m_);
  std::uint64_t id = 0;
  for (std::size_t i = n_; i-- > 0;) id = id * (m_ + 1) + (c[i] - 1);
  return static_cast<NodeId>(id);
}

Configuration ReachabilityGraph::decode(NodeId id) const {
  Configuration c(n_);
  std::uint64_t rest = id;
  for (std::size_t i = 0; i < n_; ++i) {
    c[i] = static_cast<std::uint32_t>(rest % (m_ + 1)) + 1;
    rest /= (m_ + 1);
  }
  return c;
}

std::uint64_t configuration_count(std::size_t n, std::size_t m) noexcept {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > UINT64_MAX / (m + 1)) return UINT64_MAX;
    count *= (m + 1);
  }
  return count;
}

ReachabilityGraph build_reachability_graph(const Instance& inst, const AgentOrder& order,
                                           par::Meter& meter, std::uint64_t node_budget) {
  if (order.size() != inst.n()) throw InputError("agent order length differs from n");
  const std::size_t n = inst.n(), m = inst.m();
  const std::uint64_t count = configuration_count(n, m);
  const std::uint64_t hard_cap = static_cast<std::uint64_t>(kNoNode) - 1;
  if (count > node_budget || count > hard_cap) {
    throw InputError("reachability graph needs (m+1)^n = " +
                     (count == UINT64_MAX ? std::string("overflow") : std::to_string(count)) +
                     " nodes (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                     "), over the node budget of " + std::to_string(node_budget));
  }
  const Prefs p = metered_preferences(inst, meter);
  ReachabilityGraph graph(n, m, order);
  auto& next = graph.mutable_successors();
  auto& taken = graph.mutable_taken();
  par::parallel_for(
      meter, 0, count,
      [&](par::Meter& mv, std::size_t v) {
        const Configuration c = graph.decode(static_cast<NodeId>(v));
        Configuration succ(n, 0);
        const std::span<Good> round(taken.data() + v * n, n);
        if (simulate_round(p, order, c, succ, round, mv)) next[v] = graph.encode(succ);
      },
      64);
  return graph;
}

ReachabilityGraph build_reachability_graph(const Instance& inst, const AgentOrder& order,
                                           std::uint64_t node_budget) {
  auto meter = par::Meter::disabled();
  return build_reachability_graph(inst, order, meter, node_budget);
}

std::vector<NodeId> extract_path_ids(const ReachabilityGraph& graph, par::Meter& meter) {
  // Doubling from the source: after round k, `path` holds succ^t(source) for
  // every t < 2^k and `jump` is succ^(2^k). An absorbing sentinel stands for
  // "no successor".
  const std::size_t count = graph.size();
  const auto sentinel = static_cast<NodeId>(count);
  std::vector<NodeId> jump(count + 1);
  par::parallel_for(meter, 0, count + 1, [&](par::Meter& mv, std::size_t v) {
    mv.tick();
    const NodeId s = v < count ? graph.next(static_cast<NodeId>(v)) : kNoNode;
    jump[v] = s == kNoNode ? sentinel : s;
  });

  std::vector<NodeId> path{graph.source()};
  std::size_t rounds = 0;
  std::size_t max_rounds = 1;
  while ((std::size_t{1} << max_rounds) < count + 1) ++max_rounds;
  while (path.back() != sentinel && rounds <= max_rounds) {
    const std::size_t len = path.size();
    std::vector<NodeId> longer(2 * len);
    par::parallel_for(meter, 0, len, [&](par::Meter& mt, std::size_t t) {
      mt.tick();
      longer[t] = path[t];
      longer[t + len] = jump[path[t]];
    });
    std::vector<NodeId> squared(count + 1);
    par::parallel_for(meter, 0, count + 1, [&](par::Meter& mv, std::size_t v) {
      mv.tick();
      squared[v] = jump[jump[v]];
    });
    path = std::move(longer);
    jump = std::move(squared);
    ++rounds;
  }
  return par::parallel_filter(meter, std::span<const NodeId>(path),
                              [&](NodeId v) { return v != sentinel; });
}

std::vector<Configuration> extract_path(const ReachabilityGraph& graph, par::Meter& meter) {
  const auto ids = extract_path_ids(graph, meter);
  std::vector<Configuration> out;
  out.reserve(ids.size());
  for (NodeId id : ids) out.push_back(graph.decode(id));
  return out;
}

std::vector<Configuration> extract_path(const ReachabilityGraph& graph) {
  auto meter = par::Meter::disabled();
  return extract_path(graph, meter);
}

Allocation solve_const_agents(const Instance& inst, const AgentOrder& order, par::Meter& meter,
                              std::uint64_t node_budget) {
  if (inst.m() % inst.n() != 0) {
    throw InputError("constant-agent algorithm needs m divisible by n (m=" +
                     std::to_string(inst.m()) + ", n=" + std::to_string(inst.n()) + ")");
  }
  const ReachabilityGraph graph = build_reachability_graph(inst, order, meter, node_budget);
  const auto path = extract_path_ids(graph, meter);
  std::vector<Agent> owner(inst.m(), kNoAgent);
  par::parallel_for(meter, 0, path.size(), [&](par::Meter& mt, std::size_t t) {
    const NodeId v = path[t];
    if (graph.next(v) == kNoNode) return;
    const auto round = graph.taken(v);
    for (Agent a = 0; a < round.size(); ++a) {
      mt.tick();
      owner[round[a]] = a;
    }
  });
  return Allocation::from_owners(inst.n(), owner);
}

Allocation solve_const_agents(const Instance& inst, const AgentOrder& order,
                              std::uint64_t node_budget) {
  auto meter = par::Meter::disabled();
  return solve_const_agents(inst, order, meter, node_budget);
}

}  // namespace parfair
