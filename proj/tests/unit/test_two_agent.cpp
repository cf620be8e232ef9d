#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "parfair/errors.hpp"
#include "parfair/two_agent.hpp"

using namespace parfair;

namespace {

const Instance kExample = Instance::from_rows({{8, 5, 3, 2}, {5, 8, 2, 3}});

// Plays the subtree game directly on good ranges: returns agent 0's and 1's
// gaps with `mover` choosing first.
std::array<Gap, 2> play(const Instance& inst, std::size_t lo, std::size_t hi, Agent mover,
                        std::vector<Agent>* owner) {
  if (hi - lo == 1) {
    const Good g = static_cast<Good>(lo);
    const Value v0 = g < inst.m() ? inst.value(0, g) : 0;
    const Value v1 = g < inst.m() ? inst.value(1, g) : 0;
    if (owner && g < inst.m()) (*owner)[g] = mover;
    return mover == 0 ? std::array<Gap, 2>{v0, -v1} : std::array<Gap, 2>{-v0, v1};
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const Agent other = 1 - mover;
  // The mover takes the child with its larger first-move gap and moves first
  // there; the opponent moves first in the other child.
  const auto l_first = play(inst, lo, mid, mover, nullptr);
  const auto r_second = play(inst, mid, hi, other, nullptr);
  const auto r_first = play(inst, mid, hi, mover, nullptr);
  const auto l_second = play(inst, lo, mid, other, nullptr);
  const bool left = l_first[mover] >= r_first[mover];
  if (owner) {
    play(inst, lo, mid, left ? mover : other, owner);
    play(inst, mid, hi, left ? other : mover, owner);
  }
  return left ? std::array<Gap, 2>{l_first[0] + r_second[0], l_first[1] + r_second[1]}
              : std::array<Gap, 2>{r_first[0] + l_second[0], r_first[1] + l_second[1]};
}

}  // namespace

TEST_CASE("worked example") {
  const auto table = compute_gaps(kExample);
  CHECK(table.leaves() == 4);
  const auto& l = table.node(1);
  CHECK(l.gap[0][0] == 3);
  CHECK(l.gap[1][0] == 3);
  CHECK(l.gap[1][1] == 3);
  CHECK(l.gap[0][1] == 3);
  const auto& r = table.node(2);
  CHECK(r.gap[0][0] == 1);
  CHECK(r.gap[1][1] == 1);
  CHECK(table.node(0).gap[0][0] == 4);
  CHECK(table.chosen_child(0, 0) == 1);
  const auto a = solve_two_agent(kExample);
  CHECK(a.bundle(0) == std::vector<Good>{0, 2});
  CHECK(a.bundle(1) == std::vector<Good>{1, 3});
}

TEST_CASE("single good") {
  const auto a = solve_two_agent(Instance::from_rows({{3}, {4}}));
  CHECK(a.bundle(0) == std::vector<Good>{0});
  CHECK(a.bundle(1).empty());
}

TEST_CASE("rejects n != 2") {
  CHECK_THROWS_AS(solve_two_agent(Instance::from_rows({{1}, {1}, {1}})), InputError);
}

TEST_CASE("matches a direct recursive game") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = oracle::pick(rng, 1, 40);
    const auto inst = oracle::random_instance(rng, 2, m, 50);
    std::vector<Agent> owner(m, kNoAgent);
    const auto gaps = play(inst, 0, padded_leaves(m), 0, &owner);
    const auto table = compute_gaps(inst);
    CHECK(table.node(0).gap[0][0] == gaps[0]);
    CHECK(table.node(0).gap[1][0] == gaps[1]);
    CHECK(solve_two_agent(inst) == Allocation::from_owners(2, owner));
  }
}

TEST_CASE("EF1, first mover envy-free, witness good") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = oracle::pick(rng, 1, 64);
    const auto inst = oracle::random_instance(rng, 2, m, 99);
    const auto table = compute_gaps(inst);
    const auto a = extract_allocation(table);
    CHECK(a.is_complete(m));
    CHECK(oracle::is_ef1(inst, a));
    if (m <= 12) CHECK(oracle::overall_k_exhaustive(inst, a) <= 1);
    CHECK(envy_count(inst, a, 0, 1) == 0);
    const Good star = first_choice_good(table);
    if (star < m) {
      std::vector<Good> rest;
      for (Good g : a.bundle(0))
        if (g != star) rest.push_back(g);
      CHECK(bundle_value(inst, 1, a.bundle(1)) >= bundle_value(inst, 1, rest));
    } else {
      CHECK(envy_count(inst, a, 1, 0) == 0);
    }
  }
}

TEST_CASE("depth grows logarithmically") {
  par::Meter small, large;
  std::mt19937_64 rng(1);
  solve_two_agent(oracle::random_instance(rng, 2, 1 << 6, 99), small);
  solve_two_agent(oracle::random_instance(rng, 2, 1 << 12, 99), large);
  const double r_small = static_cast<double>(small.metrics().depth) / 6;
  const double r_large = static_cast<double>(large.metrics().depth) / 12;
  CHECK(r_large / r_small < 2.0);
  CHECK(r_small / r_large < 2.0);
}
