#pragma once

// Two-agent EF1 via the recursive subtree-choosing game on a complete binary
// tree over the goods. Each internal node stores, for both possible first
// movers j, both agents' utility gaps and the child j picks. The table is
// filled bottom-up and the allocation read off top-down, each pass a
// fork-join recursion over disjoint subtrees.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "parfair/model.hpp"
#include "parfair/parexec.hpp"

namespace parfair {

using Gap = __int128;

struct GapNode {
  // gap[i][j]: own-bundle value minus opponent-bundle value for agent i,
  // in this subgame, when agent j moves first.
  std::array<std::array<Gap, 2>, 2> gap{};
  // choice[j]: 0 = left child, 1 = right child, picked by j moving first.
  std::array<std::uint8_t, 2> choice{};
};

// Heap-ordered complete binary tree: node 0 is the root, node k has children
// 2k+1 and 2k+2, and leaf l (good l) sits at index leaves() - 1 + l.
class GapTable {
 public:
  GapTable(std::size_t goods, std::size_t leaves);

  [[nodiscard]] std::size_t goods() const noexcept { return goods_; }
  [[nodiscard]] std::size_t leaves() const noexcept { return leaves_; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }

  [[nodiscard]] bool is_leaf(std::size_t k) const noexcept { return k + 1 >= leaves_; }
  [[nodiscard]] static std::size_t left(std::size_t k) noexcept { return 2 * k + 1; }
  [[nodiscard]] static std::size_t right(std::size_t k) noexcept { return 2 * k + 2; }
  [[nodiscard]] Good leaf_good(std::size_t k) const noexcept {
    return static_cast<Good>(k + 1 - leaves_);
  }

  [[nodiscard]] const GapNode& node(std::size_t k) const { return nodes_.at(k); }
  GapNode& node(std::size_t k) { return nodes_[k]; }

  // C_j(k) and D_j(k) as node indices.
  [[nodiscard]] std::size_t chosen_child(std::size_t k, Agent j) const noexcept {
    return nodes_[k].choice[j] ? right(k) : left(k);
  }
  [[nodiscard]] std::size_t other_child(std::size_t k, Agent j) const noexcept {
    return nodes_[k].choice[j] ? left(k) : right(k);
  }

 private:
  std::size_t goods_;
  std::size_t leaves_;
  std::vector<GapNode> nodes_;
};

// Smallest power of two >= m.
std::size_t padded_leaves(std::size_t m) noexcept;

// Throws InputError unless n == 2. `first` is accepted for symmetry with
// extract_allocation; the table covers both first movers at every node.
GapTable compute_gaps(const Instance& inst, Agent first, par::Meter& meter);
GapTable compute_gaps(const Instance& inst, Agent first = 0);

Allocation extract_allocation(const GapTable& table, Agent first, par::Meter& meter);
Allocation extract_allocation(const GapTable& table, Agent first = 0);

// The good reached by following `first`'s own choices from the root. Removing
// it from first's bundle removes all of the opponent's envy. May be a padding
// leaf (id >= goods()).
Good first_choice_good(const GapTable& table, Agent first = 0);

// Agent 0 moves first at the root.
Allocation solve_two_agent(const Instance& inst, par::Meter& meter);
Allocation solve_two_agent(const Instance& inst);

}  // namespace parfair
