#pragma once

// Deliberately naive reference implementations for the test suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "parfair/model.hpp"

namespace oracle {

using parfair::Agent;
using parfair::Allocation;
using parfair::Good;
using parfair::Instance;
using parfair::Value;

inline Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                Value max_value) {
  std::uniform_int_distribution<Value> dist(0, max_value);
  std::vector<Value> v(n * m);
  for (auto& x : v) x = dist(rng);
  return Instance(n, m, std::move(v));
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Round Robin, one pick at a time: the picker scans every good.
inline Allocation round_robin(const Instance& inst, const std::vector<Agent>& order) {
  const std::size_t n = inst.n(), m = inst.m();
  std::vector<bool> gone(m, false);
  Allocation out(n);
  for (std::size_t t = 0; t < m; ++t) {
    const Agent a = order[t % n];
    Good best = 0;
    bool found = false;
    for (Good g = 0; g < m; ++g) {
      if (gone[g]) continue;
      if (!found || inst.value(a, g) > inst.value(a, best)) {
        best = g;
        found = true;
      }
    }
    gone[best] = true;
    out.assign(a, best);
  }
  return out;
}

inline Value value_of(const Instance& inst, Agent i, const std::vector<Good>& goods) {
  Value s = 0;
  for (Good g : goods) s += inst.value(i, g);
  return s;
}

// Smallest number of goods whose removal from j's bundle ends i's envy,
// found by trying every subset (bundles up to ~16 goods).
inline std::size_t envy_k_exhaustive(const Instance& inst, const Allocation& alloc, Agent i,
                                     Agent j) {
  const auto& mine = alloc.bundle(i);
  const auto& theirs = alloc.bundle(j);
  const Value own = value_of(inst, i, mine);
  const std::size_t s = theirs.size();
  std::size_t best = s;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    Value rest = 0;
    for (std::size_t b = 0; b < s; ++b)
      if (!(mask >> b & 1u)) rest += inst.value(i, theirs[b]);
    if (own >= rest) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

inline std::size_t overall_k_exhaustive(const Instance& inst, const Allocation& alloc) {
  std::size_t k = 0;
  for (Agent i = 0; i < inst.n(); ++i)
    for (Agent j = 0; j < inst.n(); ++j)
      if (i != j) k = std::max(k, envy_k_exhaustive(inst, alloc, i, j));
  return k;
}

// EF1 straight from the definition: dropping i's favourite good from each
// other bundle removes i's envy.
inline bool is_ef1(const Instance& inst, const Allocation& alloc) {
  for (Agent i = 0; i < inst.n(); ++i) {
    const Value own = value_of(inst, i, alloc.bundle(i));
    for (Agent j = 0; j < inst.n(); ++j) {
      if (i == j || alloc.bundle(j).empty()) continue;
      Value total = 0, top = 0;
      for (Good g : alloc.bundle(j)) {
        total += inst.value(i, g);
        top = std::max(top, inst.value(i, g));
      }
      if (own < total - top) return false;
    }
  }
  return true;
}

// Maximum total weight over all injective row -> column maps.
inline std::int64_t max_matching_weight(std::size_t n, std::size_t k,
                                        const std::vector<std::int64_t>& w) {
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  std::int64_t best = INT64_MIN;
  std::vector<bool> used(k, false);
  std::vector<std::size_t> pick_of(n);
  auto rec = [&](auto&& self, std::size_t row, std::int64_t acc) -> void {
    if (row == n) {
      best = std::max(best, acc);
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c]) continue;
      used[c] = true;
      self(self, row + 1, acc + w[row * k + c]);
      used[c] = false;
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Lexicographically smallest optimal assignment, by exhaustive search.
inline std::vector<std::uint32_t> lexmin_optimal_assignment(std::size_t n, std::size_t k,
                                                            const std::vector<std::int64_t>& w) {
  const std::int64_t best = max_matching_weight(n, k, w);
  std::vector<std::uint32_t> cur(n), out;
  std::vector<bool> used(k, false);
  bool done = false;
  auto rec = [&](auto&& self, std::size_t row, std::int64_t acc) -> void {
    if (done) return;
    if (row == n) {
      if (acc == best) {
        out = cur;
        done = true;
      }
      return;
    }
    for (std::size_t c = 0; c < k && !done; ++c) {
      if (used[c]) continue;
      used[c] = true;
      cur[row] = static_cast<std::uint32_t>(c);
      self(self, row + 1, acc + w[row * k + c]);
      used[c] = false;
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace oracle
