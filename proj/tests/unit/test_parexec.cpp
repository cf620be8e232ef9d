#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "parfair/parexec.hpp"

using namespace parfair::par;

TEST_CASE("fork_join composes work additively and depth by max") {
  Meter m;
  m.tick(2);
  auto [a, b] = fork_join(
      m, [](Meter& l) { l.tick(3); return 1; }, [](Meter& r) { r.tick(5); return 2; });
  CHECK(a == 1);
  CHECK(b == 2);
  CHECK(m.metrics() == Metrics{2 + 3 + 5 + 1, 2 + 5 + 1});
}

TEST_CASE("void branches") {
  Meter m;
  int hits = 0;
  fork_join(m, [&](Meter&) { ++hits; }, [&](Meter&) { ++hits; });
  CHECK(hits == 2);
  CHECK(m.metrics() == Metrics{1, 1});
}

TEST_CASE("disabled meter records nothing") {
  auto m = Meter::disabled();
  m.tick(10);
  fork_join(m, [](Meter& l) { l.tick(4); }, [](Meter& r) { r.tick(4); });
  CHECK(m.metrics() == Metrics{0, 0});
}

TEST_CASE("parallel_for visits each index once with log depth") {
  for (std::size_t n : {1u, 2u, 7u, 64u, 1000u}) {
    Meter m;
    std::vector<int> seen(n, 0);
    parallel_for(m, 0, n, [&](Meter& mi, std::size_t i) {
      mi.tick();
      ++seen[i];
    }, 8);
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    std::uint64_t levels = 0;
    while ((std::size_t{1} << levels) < n) ++levels;
    CHECK(m.metrics().work == 2 * n - 1);
    CHECK(m.metrics().depth == levels + 1);
  }
}

TEST_CASE("metrics do not depend on the thread cap") {
  auto run = [] {
    Meter m;
    std::vector<long> v(5000);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), std::mt19937_64(3));
    parallel_sort(m, v);
    return m.metrics();
  };
  Metrics one, eight;
  {
    ScopedThreads t(1);
    one = run();
  }
  {
    ScopedThreads t(8);
    eight = run();
  }
  CHECK(one == eight);
}

TEST_CASE("parallel_reduce sums") {
  Meter m;
  const long s = parallel_reduce(
      m, 0, 100, 0L, [](Meter& mi, std::size_t i) { mi.tick(); return static_cast<long>(i); },
      [](long a, long b) { return a + b; });
  CHECK(s == 4950);
}

TEST_CASE("exclusive_scan matches a sequential prefix sum") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 2u, 3u, 17u, 256u, 999u}) {
    std::vector<std::size_t> in(n);
    for (auto& x : in) x = rng() % 5;
    Meter m;
    const auto r = exclusive_scan(m, in);
    std::size_t acc = 0;
    REQUIRE(r.offsets.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(r.offsets[i] == acc);
      acc += in[i];
    }
    CHECK(r.total == acc);
  }
}

TEST_CASE("parallel_filter is stable") {
  std::vector<int> v(300);
  std::iota(v.begin(), v.end(), 0);
  Meter m;
  const auto out = parallel_filter(m, std::span<const int>(v), [](int x) { return x % 3 == 1; });
  std::vector<int> expect;
  for (int x : v)
    if (x % 3 == 1) expect.push_back(x);
  CHECK(out == expect);
}

TEST_CASE("parallel_sort agrees with std::stable_sort") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {0u, 1u, 2u, 5u, 100u, 4097u}) {
    std::vector<std::pair<int, int>> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = {static_cast<int>(rng() % 10), static_cast<int>(i)};
    auto expect = v;
    const auto by_first = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::stable_sort(expect.begin(), expect.end(), by_first);
    Meter m;
    parallel_sort(m, v, by_first);
    CHECK(v == expect);
  }
}

TEST_CASE("run_starts") {
  const std::vector<int> v{1, 1, 2, 2, 2, 3, 1};
  Meter m;
  const auto s = run_starts(m, v.size(), [&](std::size_t a, std::size_t b) { return v[a] == v[b]; });
  CHECK(s == std::vector<std::size_t>{0, 2, 5, 6});
}
