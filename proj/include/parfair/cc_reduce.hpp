#pragma once

// Fixed-Order Round Robin as stable matching: m/n numbered copies of every
// agent propose to goods, and every good ranks the copies by the picking
// order repeated m/n times.

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "parfair/model.hpp"
#include "parfair/round_robin.hpp"

namespace parfair {

using Proposer = std::uint32_t;

struct StableMatchingInstance {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t copies = 0;
  // a_prefs[p]: goods, most preferred first. Proposer p is copy p % copies
  // of agent p / copies.
  std::vector<std::vector<Good>> a_prefs;
  // b_prefs[g]: proposers, most preferred first.
  std::vector<std::vector<Proposer>> b_prefs;

  [[nodiscard]] Proposer proposer(Agent a, std::size_t copy) const noexcept {
    return static_cast<Proposer>(a * copies + copy);
  }
  [[nodiscard]] Agent agent_of(Proposer p) const noexcept {
    return static_cast<Agent>(p / copies);
  }
};

struct StableMatching {
  std::vector<Good> good_of;           // per proposer
  std::vector<Proposer> proposer_of;   // per good
};

// Needs m divisible by n.
StableMatchingInstance reduce_to_stable_matching(const Instance& inst, const AgentOrder& order);

// Proposer-optimal; proposers become free in ascending id.
StableMatching gale_shapley(const StableMatchingInstance& smi);

// Pairs (p, g), p and g both preferring each other to their partners.
std::vector<std::pair<Proposer, Good>> blocking_pairs(const StableMatchingInstance& smi,
                                                      const StableMatching& matching);

// Walks the common good-side list, giving each proposer its favourite free
// good. Throws InputError when the good-side lists differ.
StableMatching serial_dictatorship(const StableMatchingInstance& smi);

Allocation allocation_from_matching(const StableMatchingInstance& smi,
                                    const StableMatching& matching);

// "SM v1", m, then m proposer lines and m good lines of space-separated ids.
void write_stable_matching(std::ostream& out, const StableMatchingInstance& smi);

}  // namespace parfair
