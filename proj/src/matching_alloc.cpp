#include "parfair/matching_alloc.hpp"

#include <algorithm>
#include <limits>

#include "parfair/errors.hpp"

namespace parfair {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Assignment {
  std::vector<std::size_t> col_of_row;
  std::vector<std::int64_t> u;  // row potentials, 0-based
  std::vector<std::int64_t> v;  // column potentials, 0-based
  std::int64_t cost = 0;
};

// Successive shortest paths with potentials on an r x c cost matrix, r <= c.
// Columns left unmatched keep potential 0, so (u, v) is an optimal dual of
// the rectangular problem.
template <class Cost>
Assignment hungarian(std::size_t r, std::size_t c, const Cost& cost, par::Meter& meter) {
  std::vector<std::int64_t> u(r + 1, 0), v(c + 1, 0), minv(c + 1);
  std::vector<std::size_t> p(c + 1, 0), way(c + 1, 0);
  std::vector<char> used(c + 1);
  for (std::size_t i = 1; i <= r; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      meter.tick(c);
      for (std::size_t j = 1; j <= c; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= c; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment out;
  out.col_of_row.assign(r, 0);
  for (std::size_t j = 1; j <= c; ++j)
    if (p[j] != 0) out.col_of_row[p[j] - 1] = j - 1;
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  for (std::size_t i = 0; i < r; ++i) out.cost += cost(i, out.col_of_row[i]);
  return out;
}

}  // namespace

MatchingResult max_weight_perfect_matching(std::size_t n, std::size_t k,
                                           const std::vector<std::int64_t>& weights,
                                           par::Meter& meter) {
  if (k < n) {
    throw InputError("matching needs at least as many goods as agents (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  if (weights.size() != n * k) throw InputError("weight matrix size differs from n*k");
  MatchingResult result;
  if (n == 0) return result;

  const auto w = [&](std::size_t i, std::size_t j) { return weights[i * k + j]; };
  const Assignment opt =
      hungarian(n, k, [&](std::size_t i, std::size_t j) { return -w(i, j); }, meter);
  const std::int64_t best = -opt.cost;

  // Fix rows in order to their smallest feasible column. A column can appear
  // in some optimal matching only along a tight edge of the optimal dual, and
  // each tight candidate is confirmed by solving the rest exactly.
  std::vector<char> taken(k, 0);
  std::int64_t fixed_weight = 0;
  result.assignment.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t g = 0; g < k && !placed; ++g) {
      meter.tick();
      if (taken[g] || -w(i, g) - opt.u[i] - opt.v[g] != 0) continue;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < k; ++j)
        if (!taken[j] && j != g) cols.push_back(j);
      const std::size_t rest = n - i - 1;
      std::int64_t rest_weight = 0;
      if (rest > 0) {
        const Assignment sub = hungarian(
            rest, cols.size(),
            [&](std::size_t a, std::size_t b) { return -w(i + 1 + a, cols[b]); }, meter);
        rest_weight = -sub.cost;
      }
      if (fixed_weight + w(i, g) + rest_weight == best) {
        taken[g] = 1;
        fixed_weight += w(i, g);
        result.assignment[i] = static_cast<std::uint32_t>(g);
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("matching: no optimal extension found");
  }
  result.weight = best;
  return result;
}

MatchingResult max_weight_perfect_matching(std::size_t n, std::size_t k,
                                           const std::vector<std::int64_t>& weights) {
  auto meter = par::Meter::disabled();
  return max_weight_perfect_matching(n, k, weights, meter);
}

Allocation solve_matching_rounds(const Instance& inst, par::Meter& meter,
                                 std::vector<MatchingRound>* rounds) {
  const std::size_t n = inst.n(), m = inst.m();
  if (m % n != 0) {
    throw InputError("matching rounds need m divisible by n (m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ")");
  }
  const auto prefs = preference_lists(inst);
  meter.tick(n * m);

  std::vector<Good> remaining(m);
  for (Good g = 0; g < m; ++g) remaining[g] = g;
  std::vector<Agent> owner(m, kNoAgent);

  for (std::size_t round = 1; round <= m / n; ++round) {
    const std::size_t k = remaining.size();
    std::vector<std::int64_t> weights(n * k);
    par::parallel_for(meter, 0, n * k, [&](par::Meter& mc, std::size_t cell) {
      mc.tick();
      const std::size_t a = cell / k;
      weights[cell] = static_cast<std::int64_t>(m) - prefs[a].rank[remaining[cell % k]];
    });
    const MatchingResult match = max_weight_perfect_matching(n, k, weights, meter);

    MatchingRound record;
    record.index = round;
    record.weight = match.weight;
    record.matched.resize(n);
    std::vector<char> gone(k, 0);
    for (Agent a = 0; a < n; ++a) {
      const Good g = remaining[match.assignment[a]];
      record.matched[a] = g;
      owner[g] = a;
      gone[match.assignment[a]] = 1;
    }
    std::vector<Good> next;
    next.reserve(k - n);
    for (std::size_t j = 0; j < k; ++j)
      if (!gone[j]) next.push_back(remaining[j]);
    meter.tick(k);
    if (rounds) {
      record.remaining = std::move(remaining);
      rounds->push_back(std::move(record));
    }
    remaining = std::move(next);
  }
  return Allocation::from_owners(n, owner);
}

Allocation solve_matching_rounds(const Instance& inst, std::vector<MatchingRound>* rounds) {
  auto meter = par::Meter::disabled();
  return solve_matching_rounds(inst, meter, rounds);
}

Allocation prefix_allocation(std::size_t n, const std::vector<MatchingRound>& rounds,
                             std::size_t r) {
  Allocation out(n);
  for (std::size_t t = 0; t < r && t < rounds.size(); ++t)
    for (Agent a = 0; a < n; ++a) out.assign(a, rounds[t].matched[a]);
  return out;
}

}  // namespace parfair
