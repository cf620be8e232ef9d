#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace parfair {

using Agent = std::uint32_t;
using Good = std::uint32_t;
using Value = std::int64_t;

inline constexpr Value kMaxValue = Value{1} << 40;
inline constexpr Agent kNoAgent = std::numeric_limits<Agent>::max();
inline constexpr Good kNoGood = std::numeric_limits<Good>::max();

// n agents, m goods, additive nonnegative integer valuations.
class Instance {
 public:
  // `values` is row-major: values[i * m + g] is agent i's value for good g.
  Instance(std::size_t n, std::size_t m, std::vector<Value> values);

  static Instance from_rows(const std::vector<std::vector<Value>>& rows);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }

  [[nodiscard]] Value value(Agent i, Good g) const noexcept { return values_[i * m_ + g]; }
  [[nodiscard]] std::span<const Value> row(Agent i) const noexcept {
    return {values_.data() + i * m_, m_};
  }
  [[nodiscard]] const std::vector<Value>& values() const noexcept { return values_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Value> values_;
};

// Goods in descending value order, equal values by ascending good id.
struct PreferenceList {
  Agent agent = 0;
  std::vector<Good> order;
  // rank[g] is the 1-based position of g in `order`.
  std::vector<std::uint32_t> rank;

  static PreferenceList build(const Instance& inst, Agent agent);
};

std::vector<PreferenceList> preference_lists(const Instance& inst);

// The canonical tie-break used by every algorithm and oracle.
inline bool prefers(const Instance& inst, Agent i, Good a, Good b) noexcept {
  const Value va = inst.value(i, a), vb = inst.value(i, b);
  return va != vb ? va > vb : a < b;
}

// One bundle per agent, each kept in ascending good id order.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::size_t n) : bundles_(n) {}
  explicit Allocation(std::vector<std::vector<Good>> bundles);

  // owner[g] is the agent receiving g, or kNoAgent.
  static Allocation from_owners(std::size_t n, std::span<const Agent> owner);

  [[nodiscard]] std::size_t n() const noexcept { return bundles_.size(); }
  [[nodiscard]] const std::vector<Good>& bundle(Agent i) const { return bundles_.at(i); }
  [[nodiscard]] const std::vector<std::vector<Good>>& bundles() const noexcept {
    return bundles_;
  }
  [[nodiscard]] std::size_t size() const noexcept;

  void assign(Agent i, Good g);
  void set_bundle(Agent i, std::vector<Good> goods);

  // Throws InputError if bundles overlap or reference goods >= m.
  void validate(std::size_t m) const;
  [[nodiscard]] bool is_complete(std::size_t m) const;
  [[nodiscard]] std::vector<Agent> owners(std::size_t m) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::vector<Good>> bundles_;
};

struct EnvyReport {
  std::size_t n = 0;
  // counts[i * n + j]: fewest goods to drop from bundle j so agent i stops envying.
  std::vector<std::size_t> counts;
  std::size_t overall_k = 0;

  [[nodiscard]] std::size_t count(Agent i, Agent j) const { return counts.at(i * n + j); }
  [[nodiscard]] bool is_efk(std::size_t k) const noexcept { return overall_k <= k; }
  [[nodiscard]] bool is_ef1() const noexcept { return overall_k <= 1; }
};

class EnvyGraph {
 public:
  EnvyGraph(std::vector<Agent> agents, std::vector<std::vector<bool>> adjacency);

  [[nodiscard]] const std::vector<Agent>& agents() const noexcept { return agents_; }
  [[nodiscard]] bool has_edge(Agent from, Agent to) const;
  [[nodiscard]] std::size_t edge_count() const noexcept;

  // A directed cycle (i1, ..., ik) meaning i1 envies i2, ..., ik envies i1.
  // Search is a DFS started from agents in ascending id, neighbours visited in
  // ascending id. Empty when the graph is acyclic.
  [[nodiscard]] std::vector<Agent> find_cycle() const;
  [[nodiscard]] bool is_acyclic() const { return find_cycle().empty(); }

  // Kahn's algorithm, lowest agent id first among sources. Throws InputError
  // on a cyclic graph.
  [[nodiscard]] std::vector<Agent> topological_order() const;

 private:
  std::size_t local(Agent a) const;

  std::vector<Agent> agents_;
  std::vector<std::vector<bool>> adj_;
};

// Appends zero-valued goods so that m becomes a multiple of n.
Instance pad_instance(const Instance& inst);

Value bundle_value(const Instance& inst, Agent agent, std::span<const Good> goods);

std::size_t envy_count(const Instance& inst, const Allocation& alloc, Agent i, Agent j);

EnvyReport verify_efk(const Instance& inst, const Allocation& alloc);

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc,
                           std::span<const Agent> agents);
EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc);

// Rotates bundles along envy cycles among `agents` until the induced envy
// graph is acyclic. Bundles outside `agents` are untouched. `rotations`, when
// given, receives the number of cycles eliminated.
Allocation eliminate_envy_cycles(const Instance& inst, Allocation alloc,
                                 std::span<const Agent> agents,
                                 std::size_t* rotations = nullptr);

std::vector<Agent> all_agents(std::size_t n);

}  // namespace parfair
