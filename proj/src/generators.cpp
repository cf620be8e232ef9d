#include "parfair/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "parfair/errors.hpp"

namespace parfair::gen {

namespace {

void check_shape(std::size_t n, std::size_t m, Value max_value) {
  if (n == 0 || m == 0) throw InputError("generator needs n >= 1 and m >= 1");
  if (max_value < 1 || max_value > kMaxValue) throw InputError("max value out of range");
}

Value positive(std::mt19937_64& rng, Value max_value) {
  return std::uniform_int_distribution<Value>(1, max_value)(rng);
}

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace

Instance dense(std::size_t n, std::size_t m, Value max_value, std::uint64_t seed) {
  check_shape(n, m, max_value);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> dist(0, max_value);
  std::vector<Value> values(n * m);
  for (auto& v : values) v = dist(rng);
  return Instance(n, m, std::move(values));
}

Instance graph(std::size_t n, std::size_t m, Value max_value, std::uint64_t seed) {
  check_shape(n, m, max_value);
  std::mt19937_64 rng(seed);
  std::vector<Value> values(n * m, 0);
  for (Good g = 0; g < m; ++g) {
    const std::size_t a = below(rng, n);
    values[a * m + g] = positive(rng, max_value);
    if (n > 1 && below(rng, 4) != 0) {
      std::size_t b = below(rng, n - 1);
      if (b >= a) ++b;
      values[b * m + g] = positive(rng, max_value);
    }
  }
  return Instance(n, m, std::move(values));
}

Instance hypergraph(std::size_t n, std::size_t m, std::size_t rank, std::size_t delta,
                    Value max_value, std::uint64_t seed) {
  check_shape(n, m, max_value);
  if (rank == 0) throw InputError("hypergraph rank must be at least 1");
  if (rank > n) throw InputError("hypergraph rank exceeds the number of agents");
  std::mt19937_64 rng(seed);

  std::vector<std::vector<Agent>> edges;
  std::vector<std::size_t> degree;
  std::set<std::vector<Agent>> seen;
  const std::size_t target = m;
  const std::size_t attempts = 50 * m + 100;
  std::vector<Agent> pool(n);
  std::iota(pool.begin(), pool.end(), Agent{0});

  for (std::size_t t = 0; t < attempts && edges.size() < target; ++t) {
    const std::size_t size = 1 + below(rng, rank);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Agent> e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(e.begin(), e.end());
    if (seen.count(e)) continue;
    std::vector<std::size_t> hits;
    for (std::size_t f = 0; f < edges.size(); ++f) {
      const bool meets = std::any_of(e.begin(), e.end(), [&](Agent a) {
        return std::binary_search(edges[f].begin(), edges[f].end(), a);
      });
      if (meets) hits.push_back(f);
    }
    if (hits.size() > delta) continue;
    if (std::any_of(hits.begin(), hits.end(), [&](std::size_t f) { return degree[f] >= delta; }))
      continue;
    for (auto f : hits) ++degree[f];
    degree.push_back(hits.size());
    seen.insert(e);
    edges.push_back(std::move(e));
  }
  if (edges.empty()) throw InputError("hypergraph generator could not place any edge");

  std::vector<Value> values(n * m, 0);
  for (Good g = 0; g < m; ++g) {
    const auto& e = edges[g < edges.size() ? g : below(rng, edges.size())];
    for (Agent a : e) values[a * m + g] = positive(rng, max_value);
  }
  return Instance(n, m, std::move(values));
}

Instance sparse(std::size_t n, std::size_t m, std::size_t budget, Value max_value,
                std::uint64_t seed) {
  check_shape(n, m, max_value);
  std::mt19937_64 rng(seed);
  std::vector<Value> values(n * m, 0);
  std::vector<Good> goods(m);
  std::iota(goods.begin(), goods.end(), Good{0});
  const std::size_t take = std::min(budget, m);
  for (Agent a = 0; a < n; ++a) {
    std::shuffle(goods.begin(), goods.end(), rng);
    for (std::size_t t = 0; t < take; ++t) values[a * m + goods[t]] = positive(rng, max_value);
  }
  return Instance(n, m, std::move(values));
}

}  // namespace parfair::gen
