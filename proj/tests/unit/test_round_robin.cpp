#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "parfair/errors.hpp"
#include "parfair/round_robin.hpp"

using namespace parfair;

TEST_CASE("agent order parsing") {
  const auto o = AgentOrder::parse("2,0,1", 3);
  CHECK(o.agents() == std::vector<Agent>{2, 0, 1});
  CHECK_THROWS_AS(AgentOrder::parse("0,0,1", 3), InputError);
  CHECK_THROWS_AS(AgentOrder::parse("0,1", 3), InputError);
  CHECK_THROWS_AS(AgentOrder::parse("0,1,3", 3), InputError);
  CHECK_THROWS_AS(AgentOrder::parse("0,a,1", 3), InputError);
}

TEST_CASE("worked example") {
  const auto inst = Instance::from_rows({{8, 5, 3, 2}, {5, 8, 2, 3}});
  const auto a = fixed_order_round_robin(inst, AgentOrder::identity(2));
  CHECK(a.bundle(0) == std::vector<Good>{0, 2});
  CHECK(a.bundle(1) == std::vector<Good>{1, 3});
}

TEST_CASE("rejects m not divisible by n") {
  const auto inst = Instance::from_rows({{1, 2, 3}, {1, 2, 3}});
  CHECK_THROWS_AS(fixed_order_round_robin(inst, AgentOrder::identity(2)), InputError);
}

TEST_CASE("equals the pick-by-pick oracle and is EF1") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = oracle::pick(rng, 1, 6);
    const std::size_t m = n * oracle::pick(rng, 1, 6);
    const auto inst = oracle::random_instance(rng, n, m, 9);
    std::vector<Agent> order(n);
    std::iota(order.begin(), order.end(), Agent{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto a = fixed_order_round_robin(inst, AgentOrder(order, n));
    CHECK(a == oracle::round_robin(inst, order));
    CHECK(verify_efk(inst, a).is_ef1());
  }
}

TEST_CASE("per-round permutations stay EF1") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = oracle::pick(rng, 2, 5);
    const std::size_t rounds = oracle::pick(rng, 1, 5);
    const auto inst = oracle::random_instance(rng, n, n * rounds, 20);
    std::vector<AgentOrder> perms;
    for (std::size_t r = 0; r < rounds; ++r) {
      std::vector<Agent> order(n);
      std::iota(order.begin(), order.end(), Agent{0});
      std::shuffle(order.begin(), order.end(), rng);
      perms.emplace_back(order, n);
    }
    const auto a = round_robin_with_permutations(inst, perms);
    CHECK(a.is_complete(inst.m()));
    for (const auto& b : a.bundles()) CHECK(b.size() == rounds);
  }
}

TEST_CASE("sequential accounting: depth equals work") {
  std::mt19937_64 rng(2);
  const auto inst = oracle::random_instance(rng, 3, 30, 9);
  par::Meter m;
  fixed_order_round_robin(inst, AgentOrder::identity(3), m);
  CHECK(m.metrics().work == m.metrics().depth);
  CHECK(m.metrics().work > 0);
}
