#pragma once

// Bounded-rank hypergraph instances. Distinct support sets are hyperedges;
// a proper coloring of their intersection (line) graph splits them into
// classes of pairwise disjoint edges. Classes run one after another, the
// edges of a class in parallel: envy cycles among the edge's agents are
// eliminated, a topological order of their envy DAG is fixed, and the edge's
// goods are allocated by constant-agent Round Robin in that order.

#include <cstdint>
#include <vector>

#include "parfair/const_agents.hpp"
#include "parfair/model.hpp"
#include "parfair/parexec.hpp"

namespace parfair {

struct Hyperedge {
  std::vector<Agent> agents;  // ascending
  std::vector<Good> goods;    // ascending
};

struct HypergraphView {
  // Sorted lexicographically by agent set.
  std::vector<Hyperedge> edges;
  std::vector<Good> orphans;
  std::size_t rank = 0;
  // Max number of other edges any edge intersects.
  std::size_t delta = 0;
  // adjacency[e]: intersecting edges, ascending.
  std::vector<std::vector<std::uint32_t>> adjacency;
};

struct EdgeColoring {
  std::vector<std::uint32_t> color;
  std::size_t colors = 0;
};

HypergraphView induced_hypergraph(const Instance& inst, par::Meter& meter);
HypergraphView induced_hypergraph(const Instance& inst);

// Color k is the k-th maximal independent set of the still-uncolored edges.
// Each MIS is built in rounds: an undecided vertex joins when its id is
// smaller than every undecided neighbour's.
EdgeColoring color_line_graph(const HypergraphView& h, par::Meter& meter);
EdgeColoring color_line_graph(const HypergraphView& h);

struct HypergraphOptions {
  std::size_t max_rank = 4;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

// Per-edge record of one color class, for checking the induction.
struct EdgeStep {
  std::uint32_t edge = 0;
  std::size_t rotations = 0;
  // Topological order of the edge's envy DAG after cycle elimination.
  std::vector<Agent> order;
  // Bundles of the edge's agents (ascending agent id) before and the goods
  // added to each by this step.
  std::vector<std::vector<Good>> before;
  std::vector<std::vector<Good>> added;
  bool acyclic_before = false;
};

struct ClassStep {
  std::uint32_t color = 0;
  std::vector<EdgeStep> edges;
  Allocation after;
};

struct HypergraphTrace {
  HypergraphView view;
  EdgeColoring coloring;
  std::vector<ClassStep> classes;
};

// Throws InputError when the rank exceeds options.max_rank or an edge's
// reachability graph exceeds options.node_budget. Orphan goods go to agent 0.
Allocation solve_hypergraph(const Instance& inst, const HypergraphOptions& options,
                            par::Meter& meter, HypergraphTrace* trace = nullptr);
Allocation solve_hypergraph(const Instance& inst, const HypergraphOptions& options = {},
                            HypergraphTrace* trace = nullptr);

}  // namespace parfair
