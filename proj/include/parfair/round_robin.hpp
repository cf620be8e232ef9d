#pragma once

// Sequential Round Robin, the ground truth for the parallel simulations.

#include <span>
#include <string>
#include <vector>

#include "parfair/model.hpp"
#include "parfair/parexec.hpp"

namespace parfair {

// A permutation of the agents: order[0] picks first.
class AgentOrder {
 public:
  AgentOrder() = default;
  // Throws InputError unless `order` is a permutation of [0, n).
  AgentOrder(std::vector<Agent> order, std::size_t n);

  static AgentOrder identity(std::size_t n);
  // "2,0,1" style list.
  static AgentOrder parse(const std::string& text, std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
  [[nodiscard]] Agent operator[](std::size_t k) const { return order_.at(k); }
  [[nodiscard]] const std::vector<Agent>& agents() const noexcept { return order_; }

  friend bool operator==(const AgentOrder&, const AgentOrder&) = default;

 private:
  std::vector<Agent> order_;
};

// Needs m divisible by n. Every pick inspection is one unit operation.
Allocation fixed_order_round_robin(const Instance& inst, const AgentOrder& order,
                                   par::Meter& meter);
Allocation fixed_order_round_robin(const Instance& inst, const AgentOrder& order);

// perms[r] is the picking order of round r; needs perms.size() == m / n.
Allocation round_robin_with_permutations(const Instance& inst, std::span<const AgentOrder> perms,
                                         par::Meter& meter);
Allocation round_robin_with_permutations(const Instance& inst, std::span<const AgentOrder> perms);

}  // namespace parfair
