#include "parfair/hypergraph_alloc.hpp"

#include <algorithm>

#include "parfair/errors.hpp"
#include "parfair/round_robin.hpp"

namespace parfair {

namespace {

struct SupportRecord {
  std::vector<Agent> support;
  Good g = 0;
};

struct Membership {
  Agent agent;
  std::uint32_t edge;
};

}  // namespace

HypergraphView induced_hypergraph(const Instance& inst, par::Meter& meter) {
  const std::size_t n = inst.n(), m = inst.m();
  std::vector<SupportRecord> records(m);
  par::parallel_for(meter, 0, m, [&](par::Meter& mg, std::size_t g) {
    mg.tick(n);
    auto& r = records[g];
    r.g = static_cast<Good>(g);
    for (Agent i = 0; i < n; ++i)
      if (inst.value(i, r.g) > 0) r.support.push_back(i);
  });
  par::parallel_sort(meter, records, [](const SupportRecord& x, const SupportRecord& y) {
    return x.support < y.support;
  });
  const auto starts = par::run_starts(meter, m, [&](std::size_t p, std::size_t q) {
    return records[p].support == records[q].support;
  });

  HypergraphView h;
  std::size_t first = 0;
  if (records[0].support.empty()) {
    const std::size_t hi = starts.size() > 1 ? starts[1] : m;
    for (std::size_t p = 0; p < hi; ++p) h.orphans.push_back(records[p].g);
    first = 1;
  }
  const std::size_t edges = starts.size() - first;
  h.edges.resize(edges);
  par::parallel_for(meter, 0, edges, [&](par::Meter& me, std::size_t e) {
    const std::size_t lo = starts[e + first];
    const std::size_t hi = e + first + 1 < starts.size() ? starts[e + first + 1] : m;
    me.tick(hi - lo);
    h.edges[e].agents = records[lo].support;
    for (std::size_t p = lo; p < hi; ++p) h.edges[e].goods.push_back(records[p].g);
  });
  for (const auto& e : h.edges) h.rank = std::max(h.rank, e.agents.size());

  // Line graph through the agent -> edges incidence.
  std::vector<Membership> member;
  for (std::uint32_t e = 0; e < edges; ++e)
    for (Agent a : h.edges[e].agents) member.push_back({a, e});
  par::parallel_sort(meter, member,
                     [](const Membership& x, const Membership& y) { return x.agent < y.agent; });
  std::vector<std::size_t> agent_lo(n + 1, member.size());
  for (std::size_t p = member.size(); p-- > 0;) agent_lo[member[p].agent] = p;
  for (std::size_t a = n; a-- > 0;) agent_lo[a] = std::min(agent_lo[a], agent_lo[a + 1]);

  h.adjacency.resize(edges);
  par::parallel_for(meter, 0, edges, [&](par::Meter& me, std::size_t e) {
    auto& adj = h.adjacency[e];
    for (Agent a : h.edges[e].agents) {
      for (std::size_t p = agent_lo[a]; p < agent_lo[a + 1]; ++p) {
        me.tick();
        if (member[p].edge != e) adj.push_back(member[p].edge);
      }
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  });
  for (const auto& adj : h.adjacency) h.delta = std::max(h.delta, adj.size());
  return h;
}

HypergraphView induced_hypergraph(const Instance& inst) {
  auto meter = par::Meter::disabled();
  return induced_hypergraph(inst, meter);
}

EdgeColoring color_line_graph(const HypergraphView& h, par::Meter& meter) {
  constexpr std::uint32_t kUncolored = std::numeric_limits<std::uint32_t>::max();
  const std::size_t v = h.edges.size();
  EdgeColoring out;
  out.color.assign(v, kUncolored);

  enum : std::uint8_t { kUndecided, kIn, kOut };
  std::vector<std::uint32_t> remaining(v);
  for (std::uint32_t e = 0; e < v; ++e) remaining[e] = e;

  while (!remaining.empty()) {
    const auto color = static_cast<std::uint32_t>(out.colors);
    std::vector<std::uint8_t> state(v, kOut);
    for (auto e : remaining) state[e] = kUndecided;
    std::vector<std::uint32_t> undecided = remaining;
    while (!undecided.empty()) {
      const std::size_t k = undecided.size();
      std::vector<std::uint8_t> joins(k);
      par::parallel_for(meter, 0, k, [&](par::Meter& mu, std::size_t t) {
        const auto e = undecided[t];
        bool local_min = true;
        for (auto f : h.adjacency[e]) {
          mu.tick();
          if (state[f] == kUndecided && f < e) local_min = false;
        }
        mu.tick();
        joins[t] = local_min ? 1 : 0;
      });
      for (std::size_t t = 0; t < k; ++t)
        if (joins[t]) state[undecided[t]] = kIn;
      std::vector<std::uint8_t> excluded(k);
      par::parallel_for(meter, 0, k, [&](par::Meter& mu, std::size_t t) {
        const auto e = undecided[t];
        bool hit = false;
        if (state[e] == kUndecided) {
          for (auto f : h.adjacency[e]) {
            mu.tick();
            hit = hit || state[f] == kIn;
          }
        }
        mu.tick();
        excluded[t] = hit ? 1 : 0;
      });
      for (std::size_t t = 0; t < k; ++t)
        if (excluded[t]) state[undecided[t]] = kOut;
      undecided = par::parallel_filter(meter, std::span<const std::uint32_t>(undecided),
                                       [&](std::uint32_t e) { return state[e] == kUndecided; });
    }
    for (auto e : remaining)
      if (state[e] == kIn) out.color[e] = color;
    ++out.colors;
    remaining = par::parallel_filter(meter, std::span<const std::uint32_t>(remaining),
                                     [&](std::uint32_t e) { return out.color[e] == kUncolored; });
  }
  return out;
}

EdgeColoring color_line_graph(const HypergraphView& h) {
  auto meter = par::Meter::disabled();
  return color_line_graph(h, meter);
}

namespace {

// Handles one edge of a class. Reads and writes only the bundles of the
// edge's agents.
EdgeStep process_edge(const Instance& inst, const Hyperedge& edge, std::uint32_t edge_id,
                      Allocation& state, const HypergraphOptions& options, par::Meter& meter) {
  EdgeStep step;
  step.edge = edge_id;
  const auto& agents = edge.agents;
  const std::size_t r = agents.size();

  Allocation local(inst.n());
  for (Agent a : agents) local.set_bundle(a, state.bundle(a));
  local = eliminate_envy_cycles(inst, std::move(local), agents, &step.rotations);
  meter.tick((step.rotations + 1) * r * r);

  const EnvyGraph envy = build_envy_graph(inst, local, agents);
  step.acyclic_before = envy.is_acyclic();
  step.order = envy.topological_order();
  meter.tick(r * r);
  for (Agent a : agents) step.before.push_back(local.bundle(a));

  // Sub-instance: local agent t is order[t]; goods padded to a multiple of r.
  const std::size_t me = edge.goods.size();
  const std::size_t padded = r * ((me + r - 1) / r);
  std::vector<Value> values(r * padded, 0);
  par::parallel_for(meter, 0, me, [&](par::Meter& mg, std::size_t l) {
    mg.tick(r);
    for (std::size_t t = 0; t < r; ++t) values[t * padded + l] = inst.value(step.order[t], edge.goods[l]);
  });
  const Instance sub(r, padded, std::move(values));
  const Allocation part =
      solve_const_agents(sub, AgentOrder::identity(r), meter, options.node_budget);

  step.added.resize(r);
  for (std::size_t t = 0; t < r; ++t) {
    const Agent a = step.order[t];
    const std::size_t slot =
        static_cast<std::size_t>(std::lower_bound(agents.begin(), agents.end(), a) - agents.begin());
    for (Good l : part.bundle(static_cast<Agent>(t)))
      if (l < me) step.added[slot].push_back(edge.goods[l]);
  }
  for (std::size_t s = 0; s < r; ++s) {
    auto merged = step.before[s];
    merged.insert(merged.end(), step.added[s].begin(), step.added[s].end());
    state.set_bundle(agents[s], std::move(merged));
  }
  return step;
}

}  // namespace

Allocation solve_hypergraph(const Instance& inst, const HypergraphOptions& options,
                            par::Meter& meter, HypergraphTrace* trace) {
  HypergraphView view = induced_hypergraph(inst, meter);
  if (view.rank > options.max_rank) {
    throw InputError("hypergraph rank " + std::to_string(view.rank) + " exceeds max rank " +
                     std::to_string(options.max_rank));
  }
  EdgeColoring coloring = color_line_graph(view, meter);

  std::vector<std::vector<std::uint32_t>> classes(coloring.colors);
  for (std::uint32_t e = 0; e < view.edges.size(); ++e) classes[coloring.color[e]].push_back(e);

  Allocation state(inst.n());
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    const auto& members = classes[c];
    std::vector<EdgeStep> steps(members.size());
    par::parallel_for(
        meter, 0, members.size(),
        [&](par::Meter& me, std::size_t k) {
          steps[k] = process_edge(inst, view.edges[members[k]], members[k], state, options, me);
        },
        1);
    if (trace) trace->classes.push_back(ClassStep{c, std::move(steps), state});
  }
  for (Good g : view.orphans) state.assign(0, g);

  if (trace) {
    trace->view = std::move(view);
    trace->coloring = std::move(coloring);
  }
  return state;
}

Allocation solve_hypergraph(const Instance& inst, const HypergraphOptions& options,
                            HypergraphTrace* trace) {
  auto meter = par::Meter::disabled();
  return solve_hypergraph(inst, options, meter, trace);
}

}  // namespace parfair
