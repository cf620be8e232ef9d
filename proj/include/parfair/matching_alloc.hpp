#pragma once

// m/n rounds of maximum-weight agent/good matching. Edge (a, g) weighs
// m - rank_a(g), so each round hands every agent a good as high on its list
// as the others allow.

#include <cstdint>
#include <vector>

#include "parfair/model.hpp"
#include "parfair/parexec.hpp"

namespace parfair {

struct MatchingResult {
  // assignment[a]: column matched to row a.
  std::vector<std::uint32_t> assignment;
  std::int64_t weight = 0;
};

// Rows are agents, columns goods; weights row-major n x k, k >= n. Among all
// maximum-weight matchings returns the one with the lexicographically
// smallest assignment vector.
MatchingResult max_weight_perfect_matching(std::size_t n, std::size_t k,
                                           const std::vector<std::int64_t>& weights,
                                           par::Meter& meter);
MatchingResult max_weight_perfect_matching(std::size_t n, std::size_t k,
                                           const std::vector<std::int64_t>& weights);

struct MatchingRound {
  std::size_t index = 0;       // 1-based
  std::vector<Good> remaining;  // before the round, ascending
  std::vector<Good> matched;    // matched[a]
  std::int64_t weight = 0;
};

// Needs m divisible by n. `rounds`, when given, receives one record per round.
Allocation solve_matching_rounds(const Instance& inst, par::Meter& meter,
                                 std::vector<MatchingRound>* rounds = nullptr);
Allocation solve_matching_rounds(const Instance& inst,
                                 std::vector<MatchingRound>* rounds = nullptr);

// Allocation after the first `r` rounds of a recorded run.
Allocation prefix_allocation(std::size_t n, const std::vector<MatchingRound>& rounds,
                             std::size_t r);

}  // namespace parfair
