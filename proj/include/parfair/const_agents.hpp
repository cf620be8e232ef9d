#pragma once

// Fixed-Order Round Robin for a constant number of agents, without simulating
// it round by round: every configuration (one preference-list cursor per
// agent) gets its one-round successor computed independently, and the
// source's path through this functional graph is recovered by pointer
// jumping. The path replays Round Robin exactly.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "parfair/model.hpp"
#include "parfair/parexec.hpp"
#include "parfair/round_robin.hpp"

namespace parfair {

// configuration[i] in [1, m + 1]: 1-based cursor into agent i's preference
// list. Goods before some agent's cursor count as already allocated.
using Configuration = std::vector<std::uint32_t>;

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct RoundStep {
  std::optional<Configuration> next;
  // taken[i]: good agent i picks this round, kNoGood if none was left.
  std::vector<Good> taken;
};

RoundStep successor(const Instance& inst, const AgentOrder& order, const Configuration& config);

class ReachabilityGraph {
 public:
  ReachabilityGraph(std::size_t n, std::size_t m, AgentOrder order);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] const AgentOrder& order() const noexcept { return order_; }
  [[nodiscard]] std::size_t size() const noexcept { return next_.size(); }
  [[nodiscard]] NodeId source() const noexcept { return 0; }

  // Mixed radix: id = sum_i (c_i - 1) * (m + 1)^i.
  [[nodiscard]] NodeId encode(const Configuration& c) const;
  [[nodiscard]] Configuration decode(NodeId id) const;

  [[nodiscard]] NodeId next(NodeId id) const { return next_.at(id); }
  [[nodiscard]] std::span<const Good> taken(NodeId id) const {
    return {taken_.data() + static_cast<std::size_t>(id) * n_, n_};
  }
  [[nodiscard]] const std::vector<NodeId>& successors() const noexcept { return next_; }

  std::vector<NodeId>& mutable_successors() noexcept { return next_; }
  std::vector<Good>& mutable_taken() noexcept { return taken_; }

 private:
  std::size_t n_;
  std::size_t m_;
  AgentOrder order_;
  std::vector<NodeId> next_;
  std::vector<Good> taken_;
};

// (m + 1)^n, or UINT64_MAX on overflow.
std::uint64_t configuration_count(std::size_t n, std::size_t m) noexcept;

// Throws InputError when (m + 1)^n exceeds `node_budget`.
ReachabilityGraph build_reachability_graph(const Instance& inst, const AgentOrder& order,
                                           par::Meter& meter,
                                           std::uint64_t node_budget = kDefaultNodeBudget);
ReachabilityGraph build_reachability_graph(const Instance& inst, const AgentOrder& order,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

// Node ids on the maximal path from the source, in path order.
std::vector<NodeId> extract_path_ids(const ReachabilityGraph& graph, par::Meter& meter);
std::vector<Configuration> extract_path(const ReachabilityGraph& graph, par::Meter& meter);
std::vector<Configuration> extract_path(const ReachabilityGraph& graph);

// Needs m divisible by n. Equal to fixed_order_round_robin(inst, order).
Allocation solve_const_agents(const Instance& inst, const AgentOrder& order, par::Meter& meter,
                              std::uint64_t node_budget = kDefaultNodeBudget);
Allocation solve_const_agents(const Instance& inst, const AgentOrder& order,
                              std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace parfair
