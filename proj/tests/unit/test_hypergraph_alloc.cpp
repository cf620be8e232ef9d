#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "parfair/errors.hpp"
#include "parfair/generators.hpp"
#include "parfair/hypergraph_alloc.hpp"

using namespace parfair;

namespace {

bool intersects(const std::vector<Agent>& a, const std::vector<Agent>& b) {
  for (Agent x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return true;
  return false;
}

}  // namespace

TEST_CASE("induced hypergraph") {
  // g0 {0,1}, g1 {1,2}, g2 {0,1}, g3 {}, g4 {3}
  const auto inst = Instance::from_rows(
      {{1, 0, 1, 0, 0}, {1, 1, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 2}});
  const auto h = induced_hypergraph(inst);
  REQUIRE(h.edges.size() == 3);
  CHECK(h.edges[0].agents == std::vector<Agent>{0, 1});
  CHECK(h.edges[0].goods == std::vector<Good>{0, 2});
  CHECK(h.edges[1].agents == std::vector<Agent>{1, 2});
  CHECK(h.edges[2].agents == std::vector<Agent>{3});
  CHECK(h.orphans == std::vector<Good>{3});
  CHECK(h.rank == 2);
  CHECK(h.delta == 1);
  CHECK(h.adjacency[0] == std::vector<std::uint32_t>{1});
  CHECK(h.adjacency[2].empty());
}

TEST_CASE("line-graph coloring is proper and uses at most delta + 1 colors") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t delta = oracle::pick(rng, 0, 6);
    const auto inst = gen::hypergraph(12, 60, 3, delta, 20, rng());
    const auto h = induced_hypergraph(inst);
    CHECK(h.delta <= delta);
    const auto c = color_line_graph(h);
    CHECK(c.colors <= h.delta + 1);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      CHECK(c.color[e] < c.colors);
      for (std::size_t f = e + 1; f < h.edges.size(); ++f) {
        const bool meet = intersects(h.edges[e].agents, h.edges[f].agents);
        CHECK(meet == std::binary_search(h.adjacency[e].begin(), h.adjacency[e].end(), f));
        if (meet) CHECK(c.color[e] != c.color[f]);
      }
    }
  }
}

TEST_CASE("rank bound") {
  const auto inst = Instance::from_rows({{1}, {1}, {1}});
  HypergraphOptions opts;
  opts.max_rank = 2;
  CHECK_THROWS_AS(solve_hypergraph(inst, opts), InputError);
  opts.max_rank = 3;
  CHECK(solve_hypergraph(inst, opts).is_complete(1));
}

TEST_CASE("EF1 after every color class") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = gen::hypergraph(oracle::pick(rng, 3, 10), oracle::pick(rng, 5, 40), 3,
                                      oracle::pick(rng, 1, 5), 30, rng());
    HypergraphTrace trace;
    const auto a = solve_hypergraph(inst, {}, &trace);
    CHECK(a.is_complete(inst.m()));
    CHECK(verify_efk(inst, a).is_ef1());
    for (const auto& cls : trace.classes) {
      CHECK(verify_efk(inst, cls.after).is_ef1());
      for (const auto& step : cls.edges) {
        const auto& agents = trace.view.edges[step.edge].agents;
        CHECK(step.order.size() == agents.size());
        std::size_t added = 0;
        for (const auto& s : step.added) added += s.size();
        CHECK(added == trace.view.edges[step.edge].goods.size());
      }
    }
  }
}

TEST_CASE("dense instance with mixed supports") {
  std::mt19937_64 rng(8);
  const auto inst = oracle::random_instance(rng, 3, 9, 10);
  const auto a = solve_hypergraph(inst);
  CHECK(verify_efk(inst, a).is_ef1());
}
