#include "parfair/round_robin.hpp"

#include <numeric>
#include <sstream>

#include "parfair/errors.hpp"

namespace parfair {

AgentOrder::AgentOrder(std::vector<Agent> order, std::size_t n) : order_(std::move(order)) {
  if (order_.size() != n) {
    throw InputError("agent order has " + std::to_string(order_.size()) + " entries, expected " +
                     std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Agent a : order_) {
    if (a >= n || seen[a]) throw InputError("agent order is not a permutation of 0.." + std::to_string(n - 1));
    seen[a] = true;
  }
}

AgentOrder AgentOrder::identity(std::size_t n) { return AgentOrder(all_agents(n), n); }

AgentOrder AgentOrder::parse(const std::string& text, std::size_t n) {
  std::vector<Agent> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw InputError("bad agent id '" + item + "'");
      order.push_back(static_cast<Agent>(v));
    } catch (const std::logic_error&) {
      throw InputError("bad agent id '" + item + "' in order '" + text + "'");
    }
  }
  return AgentOrder(std::move(order), n);
}

namespace {

void check_divisible(const Instance& inst) {
  if (inst.m() % inst.n() != 0) {
    throw InputError("Round Robin needs m divisible by n (m=" + std::to_string(inst.m()) +
                     ", n=" + std::to_string(inst.n()) + "); pad the instance first");
  }
}

}  // namespace

Allocation round_robin_with_permutations(const Instance& inst, std::span<const AgentOrder> perms,
                                         par::Meter& meter) {
  check_divisible(inst);
  const std::size_t rounds = inst.m() / inst.n();
  if (perms.size() != rounds) {
    throw InputError("need one agent order per round: " + std::to_string(rounds) + " expected, " +
                     std::to_string(perms.size()) + " given");
  }
  for (const auto& p : perms) {
    if (p.size() != inst.n()) throw InputError("agent order length differs from n");
  }
  const auto prefs = preference_lists(inst);
  std::vector<bool> taken(inst.m(), false);
  std::vector<std::size_t> cursor(inst.n(), 0);
  Allocation alloc(inst.n());
  for (const auto& perm : perms) {
    for (Agent a : perm.agents()) {
      const auto& order = prefs[a].order;
      while (taken[order[cursor[a]]]) {
        meter.tick();
        ++cursor[a];
      }
      meter.tick();
      const Good g = order[cursor[a]];
      taken[g] = true;
      alloc.assign(a, g);
    }
  }
  return alloc;
}

Allocation round_robin_with_permutations(const Instance& inst, std::span<const AgentOrder> perms) {
  auto meter = par::Meter::disabled();
  return round_robin_with_permutations(inst, perms, meter);
}

Allocation fixed_order_round_robin(const Instance& inst, const AgentOrder& order,
                                   par::Meter& meter) {
  check_divisible(inst);
  const std::vector<AgentOrder> perms(inst.m() / inst.n(), order);
  return round_robin_with_permutations(inst, perms, meter);
}

Allocation fixed_order_round_robin(const Instance& inst, const AgentOrder& order) {
  auto meter = par::Meter::disabled();
  return fixed_order_round_robin(inst, order, meter);
}

}  // namespace parfair
