#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "parfair/errors.hpp"
#include "parfair/io.hpp"

using namespace parfair;

TEST_CASE("instance text format") {
  const auto inst = Instance::from_rows({{8, 5, 3, 2}, {5, 8, 2, 3}});
  CHECK(io::to_string(inst) == "EF1-INSTANCE v1\n2 4\n8 5 3 2\n5 8 2 3\n");
}

TEST_CASE("allocation text format") {
  Allocation a(3);
  a.assign(0, 2);
  a.assign(0, 0);
  a.assign(2, 1);
  CHECK(io::to_string(a, 4) == "EF1-ALLOC v1\n3 4\n0 2\n\n1\n");
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = oracle::pick(rng, 1, 6), m = oracle::pick(rng, 1, 20);
    const auto inst = oracle::random_instance(rng, n, m, 1000);
    std::istringstream in(io::to_string(inst));
    CHECK(io::read_instance(in) == inst);

    Allocation a(n);
    for (Good g = 0; g < m; ++g)
      if (rng() % 3) a.assign(static_cast<Agent>(rng() % n), g);
    std::istringstream ain(io::to_string(a, m));
    const auto back = io::read_allocation(ain);
    CHECK(back.m == m);
    CHECK(back.allocation == a);
  }
}

TEST_CASE("malformed input is a parse error") {
  const char* bad[] = {
      "",
      "EF1-INSTANCE v2\n1 1\n0\n",
      "EF1-INSTANCE v1\n1 2\n0\n",
      "EF1-INSTANCE v1\n1 1\nx\n",
      "EF1-INSTANCE v1\n1 1\n-3\n",
      "EF1-INSTANCE v1\n1 1\n1 2\n",
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_instance(in), ParseError);
  }
  const char* bad_alloc[] = {
      "EF1-ALLOC v1\n2 3\n1 0\n2\n",
      "EF1-ALLOC v1\n2 3\n5\n\n",
      "EF1-ALLOC v1\n2 3\n0\n0\n",
      "EF1-ALLOC v1\n2 3\n0\n1\n2\n",
  };
  for (const char* text : bad_alloc) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_allocation(in), ParseError);
  }
}

TEST_CASE("digest is stable and content sensitive") {
  const auto a = Instance::from_rows({{1, 2}});
  const auto b = Instance::from_rows({{2, 1}});
  CHECK(io::digest(a).size() == 16);
  CHECK(io::digest(a) == io::digest(Instance::from_rows({{1, 2}})));
  CHECK(io::digest(a) != io::digest(b));
}
