#pragma once

// Randomized and partition-based EF(k) allocation.

#include <cstdint>
#include <utility>
#include <vector>

#include "parfair/model.hpp"
#include "parfair/parexec.hpp"

namespace parfair {

// Counter-based stream: at(i) depends only on the seed and i, so results do
// not depend on which thread asks first.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) noexcept : seed_(seed) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t at(std::uint64_t i) const noexcept;
  // Independent child stream for part / task `i`.
  [[nodiscard]] Rng split(std::uint64_t i) const noexcept;

 private:
  std::uint64_t seed_;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

// Sorts [0, n) by random 64-bit keys.
std::vector<Agent> sample_permutation(std::size_t n, const Rng& rng, par::Meter& meter);
std::vector<Agent> sample_permutation(std::size_t n, const Rng& rng);

struct PartitionPlan {
  std::size_t parts = 0;
  std::size_t part_size = 0;

  // Contiguous: part p holds goods [p * part_size, (p + 1) * part_size).
  static PartitionPlan contiguous(std::size_t m, std::size_t part_size);
  [[nodiscard]] std::pair<Good, Good> range(std::size_t p) const noexcept {
    return {static_cast<Good>(p * part_size), static_cast<Good>((p + 1) * part_size)};
  }
};

// ceil(sqrt(3 m ln m / n)).
std::size_t ef_sqrt_bound(std::size_t m, std::size_t n);

// Needs m divisible by n. Part p (n goods) is dealt out by a random
// permutation drawn from rng.split(p): its j-th good goes to perm[j].
Allocation solve_ef_sqrt(const Instance& inst, std::uint64_t seed, par::Meter& meter);
Allocation solve_ef_sqrt(const Instance& inst, std::uint64_t seed);

// m / (n k).
std::size_t ef_eps_bound(std::size_t m, std::size_t n, std::size_t k);

// Needs k >= 1 and m divisible by n * k. Each part of n k goods is solved by
// matching rounds; the union is EF(m / (n k)).
Allocation solve_ef_eps(const Instance& inst, std::size_t k, par::Meter& meter);
Allocation solve_ef_eps(const Instance& inst, std::size_t k);

}  // namespace parfair
