#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "parfair/errors.hpp"
#include "parfair/generators.hpp"
#include "parfair/graph_alloc.hpp"
#include "parfair/two_agent.hpp"

using namespace parfair;

TEST_CASE("support partition") {
  // g0: {0,1}  g1: {1}  g2: {}  g3: {0,1}  g4: {1,2}
  const auto inst = Instance::from_rows({{1, 0, 0, 2, 0}, {1, 5, 0, 1, 3}, {0, 0, 0, 0, 4}});
  const auto p = partition_by_support(inst);
  CHECK(p.pairs == std::vector<std::pair<Agent, Agent>>{{0, 1}, {1, 2}});
  CHECK(p.goods_of(1, 0) == std::vector<Good>{0, 3});
  CHECK(p.goods_of(2, 1) == std::vector<Good>{4});
  CHECK(p.goods_of(0, 2).empty());
  CHECK(p.self[1] == std::vector<Good>{1});
  CHECK(p.orphans == std::vector<Good>{2});
}

TEST_CASE("rejects a good with three positive agents") {
  const auto inst = Instance::from_rows({{1, 1}, {0, 1}, {0, 1}});
  CHECK_THROWS_WITH_AS(partition_by_support(inst), doctest::Contains("not a graph instance"),
                       InputError);
}

TEST_CASE("each pair is solved as its own two-agent game") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = oracle::pick(rng, 2, 8), m = oracle::pick(rng, 1, 60);
    const auto inst = gen::graph(n, m, 50, rng());
    const auto a = solve_graph(inst);
    CHECK(a.is_complete(m));
    const auto p = partition_by_support(inst);
    for (std::size_t k = 0; k < p.pairs.size(); ++k) {
      const auto [i, j] = p.pairs[k];
      const auto& goods = p.pair_goods[k];
      std::vector<std::vector<Value>> rows(2);
      for (Good g : goods) {
        rows[0].push_back(inst.value(i, g));
        rows[1].push_back(inst.value(j, g));
      }
      const auto local = solve_two_agent(Instance::from_rows(rows));
      for (Good l : local.bundle(0)) {
        const auto& b = a.bundle(i);
        CHECK(std::binary_search(b.begin(), b.end(), goods[l]));
      }
    }
  }
}

TEST_CASE("EF1 on random graph instances") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = oracle::pick(rng, 1, 10), m = oracle::pick(rng, 1, 120);
    const auto inst = gen::graph(n, m, 99, rng());
    CHECK(verify_efk(inst, solve_graph(inst)).is_ef1());
  }
}
