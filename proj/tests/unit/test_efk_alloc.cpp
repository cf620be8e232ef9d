#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "parfair/efk_alloc.hpp"
#include "parfair/errors.hpp"
#include "parfair/matching_alloc.hpp"

using namespace parfair;

TEST_CASE("bound formula uses the natural log") {
  CHECK(ef_sqrt_bound(4, 2) == 3);
  CHECK(ef_sqrt_bound(2048, 16) == 55);
  CHECK(ef_sqrt_bound(1, 1) == 0);
  CHECK(ef_eps_bound(32, 2, 4) == 4);
}

TEST_CASE("rng is a pure function of seed and index") {
  const Rng a(5), b(5), c(6);
  CHECK(a.at(10) == b.at(10));
  CHECK(a.at(10) != c.at(10));
  CHECK(a.split(3).at(0) == b.split(3).at(0));
  CHECK(a.split(3).at(0) != a.split(4).at(0));
}

TEST_CASE("permutations") {
  CHECK(sample_permutation(1, Rng(9)) == std::vector<Agent>{0});
  CHECK_THROWS_AS(sample_permutation(0, Rng(9)), InputError);
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto p = sample_permutation(7, Rng(s));
    std::sort(p.begin(), p.end());
    CHECK(p == std::vector<Agent>{0, 1, 2, 3, 4, 5, 6});
  }
  std::vector<Agent> one, eight;
  {
    par::ScopedThreads t(1);
    one = sample_permutation(5000, Rng(77));
  }
  {
    par::ScopedThreads t(8);
    eight = sample_permutation(5000, Rng(77));
  }
  CHECK(one == eight);
}

TEST_CASE("two-element permutations are balanced") {
  const int trials = 100000;
  int identity = 0;
  for (int s = 0; s < trials; ++s) identity += sample_permutation(2, Rng(1).split(s))[0] == 0;
  CHECK(std::fabs(identity / static_cast<double>(trials) - 0.5) <= 0.01);
}

TEST_CASE("all 6 orders of three appear near-uniformly") {
  std::map<std::vector<Agent>, int> freq;
  const int trials = 60000;
  for (int s = 0; s < trials; ++s) ++freq[sample_permutation(3, Rng(2).split(s))];
  CHECK(freq.size() == 6);
  for (const auto& [perm, c] : freq) CHECK(std::fabs(c / static_cast<double>(trials) - 1.0 / 6) < 0.01);
}

TEST_CASE("ef-sqrt structure") {
  std::mt19937_64 rng(1);
  const auto inst = oracle::random_instance(rng, 4, 40, 10);
  const auto a = solve_ef_sqrt(inst, 123);
  CHECK(a.is_complete(40));
  for (const auto& b : a.bundles()) CHECK(b.size() == 10);
  // Each block of four consecutive goods is dealt one per agent.
  const auto owner = a.owners(40);
  for (std::size_t p = 0; p < 10; ++p) {
    std::set<Agent> s(owner.begin() + 4 * p, owner.begin() + 4 * p + 4);
    CHECK(s.size() == 4);
  }
  CHECK(solve_ef_sqrt(inst, 123) == a);
  CHECK(solve_ef_sqrt(inst, 124) != a);
}

TEST_CASE("ef-sqrt with n == m is EF1") {
  std::mt19937_64 rng(2);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto inst = oracle::random_instance(rng, 5, 5, 10);
    CHECK(verify_efk(inst, solve_ef_sqrt(inst, s)).is_ef1());
  }
}

TEST_CASE("ef-eps divisibility and composition") {
  std::mt19937_64 rng(4);
  const auto inst = oracle::random_instance(rng, 2, 32, 50);
  CHECK_THROWS_WITH_AS(solve_ef_eps(inst, 3), doctest::Contains("m must be divisible by n*k"),
                       InputError);
  CHECK(verify_efk(inst, solve_ef_eps(inst, 4)).overall_k <= 4);
  CHECK(solve_ef_eps(inst, 16) == solve_matching_rounds(inst));
}

TEST_CASE("ef-eps sweep") {
  std::mt19937_64 rng(6);
  for (std::size_t n : {2u, 4u}) {
    for (std::size_t m = n; m <= 48; m += n) {
      for (std::size_t k = 1; k <= m / n; ++k) {
        if (m % (n * k) != 0) continue;
        const auto inst = oracle::random_instance(rng, n, m, 30);
        CHECK(verify_efk(inst, solve_ef_eps(inst, k)).overall_k <= ef_eps_bound(m, n, k));
      }
    }
  }
}

TEST_CASE("pair hook: higher-valued of two part goods goes to a with probability >= 1/2") {
  // One part of two goods, agent 0 prefers good 0.
  const auto inst = Instance::from_rows({{5, 1}, {1, 5}});
  int hits = 0;
  const int trials = 20000;
  for (int s = 0; s < trials; ++s) hits += solve_ef_sqrt(inst, static_cast<std::uint64_t>(s)).bundle(0)[0] == 0;
  CHECK(hits / static_cast<double>(trials) >= 0.5 - 0.015);
}
