#pragma once

// Instances where every good is positively valued by at most two agents.
// Each agent pair sharing goods is an independent two-agent problem.

#include <utility>
#include <vector>

#include "parfair/model.hpp"
#include "parfair/parexec.hpp"

namespace parfair {

struct SupportPartition {
  // Pairs (i, j), i < j, with a nonempty shared good list, ascending.
  std::vector<std::pair<Agent, Agent>> pairs;
  // pair_goods[p] lists the goods valued by exactly pairs[p], ascending.
  std::vector<std::vector<Good>> pair_goods;
  // self[i]: goods valued by agent i alone.
  std::vector<std::vector<Good>> self;
  // Goods nobody values.
  std::vector<Good> orphans;

  // Empty when {i, j} shares no goods.
  [[nodiscard]] const std::vector<Good>& goods_of(Agent i, Agent j) const;
};

// Throws InputError ("not a graph instance") if some good has three or more
// agents with positive value.
SupportPartition partition_by_support(const Instance& inst, par::Meter& meter);
SupportPartition partition_by_support(const Instance& inst);

// Self-loop goods go to their agent, orphans to agent 0, each pair's goods
// through solve_two_agent with the lower id moving first.
Allocation solve_graph(const Instance& inst, par::Meter& meter);
Allocation solve_graph(const Instance& inst);

}  // namespace parfair
