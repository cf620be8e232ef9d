#include "parfair/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parfair/errors.hpp"

namespace parfair {

Instance::Instance(std::size_t n, std::size_t m, std::vector<Value> values)
    : n_(n), m_(m), values_(std::move(values)) {
  if (n_ == 0) throw InputError("instance needs at least one agent");
  if (m_ == 0) throw InputError("instance needs at least one good");
  if (values_.size() != n_ * m_) {
    throw InputError("valuation matrix has " + std::to_string(values_.size()) +
                     " entries, expected n*m = " + std::to_string(n_ * m_));
  }
  for (Value v : values_) {
    if (v < 0 || v > kMaxValue) {
      throw InputError("value " + std::to_string(v) + " outside [0, 2^40]");
    }
  }
}

Instance Instance::from_rows(const std::vector<std::vector<Value>>& rows) {
  if (rows.empty()) throw InputError("instance needs at least one agent");
  const std::size_t m = rows.front().size();
  std::vector<Value> flat;
  flat.reserve(rows.size() * m);
  for (const auto& r : rows) {
    if (r.size() != m) throw InputError("ragged valuation rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Instance(rows.size(), m, std::move(flat));
}

PreferenceList PreferenceList::build(const Instance& inst, Agent agent) {
  PreferenceList p;
  p.agent = agent;
  p.order.resize(inst.m());
  std::iota(p.order.begin(), p.order.end(), Good{0});
  std::sort(p.order.begin(), p.order.end(),
            [&](Good a, Good b) { return prefers(inst, agent, a, b); });
  p.rank.resize(inst.m());
  for (std::size_t pos = 0; pos < p.order.size(); ++pos) {
    p.rank[p.order[pos]] = static_cast<std::uint32_t>(pos + 1);
  }
  return p;
}

std::vector<PreferenceList> preference_lists(const Instance& inst) {
  std::vector<PreferenceList> out;
  out.reserve(inst.n());
  for (Agent i = 0; i < inst.n(); ++i) out.push_back(PreferenceList::build(inst, i));
  return out;
}

Allocation::Allocation(std::vector<std::vector<Good>> bundles) : bundles_(std::move(bundles)) {
  for (auto& b : bundles_) std::sort(b.begin(), b.end());
}

Allocation Allocation::from_owners(std::size_t n, std::span<const Agent> owner) {
  Allocation a(n);
  for (std::size_t g = 0; g < owner.size(); ++g) {
    if (owner[g] == kNoAgent) continue;
    if (owner[g] >= n) throw InputError("owner id out of range");
    a.bundles_[owner[g]].push_back(static_cast<Good>(g));
  }
  return a;
}

std::size_t Allocation::size() const noexcept {
  std::size_t s = 0;
  for (const auto& b : bundles_) s += b.size();
  return s;
}

void Allocation::assign(Agent i, Good g) {
  auto& b = bundles_.at(i);
  b.insert(std::upper_bound(b.begin(), b.end(), g), g);
}

void Allocation::set_bundle(Agent i, std::vector<Good> goods) {
  std::sort(goods.begin(), goods.end());
  bundles_.at(i) = std::move(goods);
}

void Allocation::validate(std::size_t m) const {
  std::vector<bool> seen(m, false);
  for (const auto& b : bundles_) {
    for (Good g : b) {
      if (g >= m) throw InputError("good " + std::to_string(g) + " out of range");
      if (seen[g]) throw InputError("good " + std::to_string(g) + " allocated twice");
      seen[g] = true;
    }
  }
}

bool Allocation::is_complete(std::size_t m) const {
  validate(m);
  return size() == m;
}

std::vector<Agent> Allocation::owners(std::size_t m) const {
  std::vector<Agent> owner(m, kNoAgent);
  for (Agent i = 0; i < bundles_.size(); ++i) {
    for (Good g : bundles_[i]) owner.at(g) = i;
  }
  return owner;
}

EnvyGraph::EnvyGraph(std::vector<Agent> agents, std::vector<std::vector<bool>> adjacency)
    : agents_(std::move(agents)), adj_(std::move(adjacency)) {}

std::size_t EnvyGraph::local(Agent a) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), a);
  if (it == agents_.end() || *it != a) throw InputError("agent not in envy graph");
  return static_cast<std::size_t>(it - agents_.begin());
}

bool EnvyGraph::has_edge(Agent from, Agent to) const { return adj_[local(from)][local(to)]; }

std::size_t EnvyGraph::edge_count() const noexcept {
  std::size_t c = 0;
  for (const auto& row : adj_) c += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return c;
}

std::vector<Agent> EnvyGraph::find_cycle() const {
  const std::size_t k = agents_.size();
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> color(k, kWhite);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> next(k, 0);

  for (std::size_t root = 0; root < k; ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back(root);
    color[root] = kGrey;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      if (next[u] == k) {
        color[u] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t v = next[u]++;
      if (!adj_[u][v]) continue;
      if (color[v] == kGrey) {
        auto it = std::find(stack.begin(), stack.end(), v);
        std::vector<Agent> cycle;
        for (; it != stack.end(); ++it) cycle.push_back(agents_[*it]);
        return cycle;
      }
      if (color[v] == kWhite) {
        color[v] = kGrey;
        stack.push_back(v);
      }
    }
  }
  return {};
}

std::vector<Agent> EnvyGraph::topological_order() const {
  const std::size_t k = agents_.size();
  std::vector<std::size_t> indeg(k, 0);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v)
      if (adj_[u][v]) ++indeg[v];
  std::vector<bool> done(k, false);
  std::vector<Agent> order;
  order.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t u = 0; u < k; ++u) {
      if (!done[u] && indeg[u] == 0) {
        pick = u;
        break;
      }
    }
    if (pick == k) throw InputError("envy graph has a cycle; no topological order");
    done[pick] = true;
    order.push_back(agents_[pick]);
    for (std::size_t v = 0; v < k; ++v)
      if (adj_[pick][v]) --indeg[v];
  }
  return order;
}

Instance pad_instance(const Instance& inst) {
  const std::size_t n = inst.n(), m = inst.m();
  const std::size_t padded = n * ((m + n - 1) / n);
  if (padded == m) return inst;
  std::vector<Value> values(n * padded, 0);
  for (Agent i = 0; i < n; ++i) {
    auto row = inst.row(i);
    std::copy(row.begin(), row.end(), values.begin() + static_cast<std::ptrdiff_t>(i * padded));
  }
  return Instance(n, padded, std::move(values));
}

Value bundle_value(const Instance& inst, Agent agent, std::span<const Good> goods) {
  if (agent >= inst.n()) throw InputError("agent " + std::to_string(agent) + " out of range");
  Value total = 0;
  for (Good g : goods) {
    if (g >= inst.m()) throw InputError("good " + std::to_string(g) + " out of range");
    total += inst.value(agent, g);
  }
  return total;
}

std::size_t envy_count(const Instance& inst, const Allocation& alloc, Agent i, Agent j) {
  if (i == j) return 0;
  const Value own = bundle_value(inst, i, alloc.bundle(i));
  Value other = bundle_value(inst, i, alloc.bundle(j));
  if (own >= other) return 0;
  std::vector<Value> vals;
  vals.reserve(alloc.bundle(j).size());
  for (Good g : alloc.bundle(j)) vals.push_back(inst.value(i, g));
  std::sort(vals.begin(), vals.end(), std::greater<>());
  std::size_t k = 0;
  while (own < other) {
    other -= vals[k++];
  }
  return k;
}

EnvyReport verify_efk(const Instance& inst, const Allocation& alloc) {
  if (alloc.n() != inst.n()) {
    throw InputError("allocation has " + std::to_string(alloc.n()) + " bundles, instance has " +
                     std::to_string(inst.n()) + " agents");
  }
  alloc.validate(inst.m());
  EnvyReport r;
  r.n = inst.n();
  r.counts.assign(r.n * r.n, 0);
  for (Agent i = 0; i < r.n; ++i) {
    for (Agent j = 0; j < r.n; ++j) {
      const std::size_t c = envy_count(inst, alloc, i, j);
      r.counts[i * r.n + j] = c;
      r.overall_k = std::max(r.overall_k, c);
    }
  }
  return r;
}

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc,
                           std::span<const Agent> agents) {
  std::vector<Agent> sorted(agents.begin(), agents.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Agent a : sorted) {
    if (a >= inst.n()) throw InputError("agent " + std::to_string(a) + " out of range");
  }
  const std::size_t k = sorted.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t u = 0; u < k; ++u) {
    const Value own = bundle_value(inst, sorted[u], alloc.bundle(sorted[u]));
    for (std::size_t v = 0; v < k; ++v) {
      if (u == v) continue;
      adj[u][v] = own < bundle_value(inst, sorted[u], alloc.bundle(sorted[v]));
    }
  }
  return EnvyGraph(std::move(sorted), std::move(adj));
}

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc) {
  const auto agents = all_agents(inst.n());
  return build_envy_graph(inst, alloc, agents);
}

Allocation eliminate_envy_cycles(const Instance& inst, Allocation alloc,
                                 std::span<const Agent> agents, std::size_t* rotations) {
  std::size_t count = 0;
  for (;;) {
    const auto cycle = build_envy_graph(inst, alloc, agents).find_cycle();
    if (cycle.empty()) break;
    // cycle[a] envies cycle[a+1]: it receives that bundle.
    std::vector<std::vector<Good>> taken;
    taken.reserve(cycle.size());
    for (std::size_t a = 0; a < cycle.size(); ++a) {
      taken.push_back(alloc.bundle(cycle[(a + 1) % cycle.size()]));
    }
    for (std::size_t a = 0; a < cycle.size(); ++a) alloc.set_bundle(cycle[a], std::move(taken[a]));
    ++count;
  }
  if (rotations) *rotations = count;
  return alloc;
}

std::vector<Agent> all_agents(std::size_t n) {
  std::vector<Agent> a(n);
  std::iota(a.begin(), a.end(), Agent{0});
  return a;
}

}  // namespace parfair
