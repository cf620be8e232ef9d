#include "parfair/efk_alloc.hpp"

#include <cmath>

#include "parfair/errors.hpp"
#include "parfair/matching_alloc.hpp"

namespace parfair {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::at(std::uint64_t i) const noexcept {
  return mix64(mix64(seed_) ^ (i * 0xd1b54a32d192ed03ULL));
}

Rng Rng::split(std::uint64_t i) const noexcept {
  return Rng(mix64(seed_ ^ mix64(i + 0x632be59bd9b4e019ULL)));
}

std::vector<Agent> sample_permutation(std::size_t n, const Rng& rng, par::Meter& meter) {
  if (n == 0) throw InputError("permutation size must be at least 1");
  std::vector<std::pair<std::uint64_t, Agent>> keyed(n);
  par::parallel_for(meter, 0, n, [&](par::Meter& mi, std::size_t i) {
    mi.tick();
    keyed[i] = {rng.at(i), static_cast<Agent>(i)};
  });
  par::parallel_sort(meter, keyed, [](const auto& x, const auto& y) { return x < y; });
  std::vector<Agent> perm(n);
  par::parallel_for(meter, 0, n, [&](par::Meter& mi, std::size_t i) {
    mi.tick();
    perm[i] = keyed[i].second;
  });
  return perm;
}

std::vector<Agent> sample_permutation(std::size_t n, const Rng& rng) {
  auto meter = par::Meter::disabled();
  return sample_permutation(n, rng, meter);
}

PartitionPlan PartitionPlan::contiguous(std::size_t m, std::size_t part_size) {
  if (part_size == 0 || m % part_size != 0) {
    throw InputError("partition: m=" + std::to_string(m) + " is not a multiple of part size " +
                     std::to_string(part_size));
  }
  return PartitionPlan{m / part_size, part_size};
}

std::size_t ef_sqrt_bound(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) return 0;
  const double md = static_cast<double>(m);
  const double x = std::sqrt(3.0 * md * std::log(md) / static_cast<double>(n));
  return static_cast<std::size_t>(std::ceil(x));
}

Allocation solve_ef_sqrt(const Instance& inst, std::uint64_t seed, par::Meter& meter) {
  const std::size_t n = inst.n(), m = inst.m();
  if (m % n != 0) {
    throw InputError("ef-sqrt needs m divisible by n (m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ")");
  }
  const PartitionPlan plan = PartitionPlan::contiguous(m, n);
  const Rng rng(seed);
  std::vector<Agent> owner(m, kNoAgent);
  par::parallel_for(
      meter, 0, plan.parts,
      [&](par::Meter& mp, std::size_t p) {
        const auto perm = sample_permutation(n, rng.split(p), mp);
        const Good lo = plan.range(p).first;
        par::parallel_for(mp, 0, n, [&](par::Meter& mj, std::size_t j) {
          mj.tick();
          owner[lo + j] = perm[j];
        });
      },
      16);
  return Allocation::from_owners(n, owner);
}

Allocation solve_ef_sqrt(const Instance& inst, std::uint64_t seed) {
  auto meter = par::Meter::disabled();
  return solve_ef_sqrt(inst, seed, meter);
}

std::size_t ef_eps_bound(std::size_t m, std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) return 0;
  return m / (n * k);
}

Allocation solve_ef_eps(const Instance& inst, std::size_t k, par::Meter& meter) {
  const std::size_t n = inst.n(), m = inst.m();
  if (k == 0 || m % (n * k) != 0) {
    throw InputError("ef-eps: m must be divisible by n*k (m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  const PartitionPlan plan = PartitionPlan::contiguous(m, n * k);
  std::vector<Agent> owner(m, kNoAgent);
  par::parallel_for(
      meter, 0, plan.parts,
      [&](par::Meter& mp, std::size_t p) {
        const auto [lo, hi] = plan.range(p);
        const std::size_t s = hi - lo;
        std::vector<Value> values(n * s);
        par::parallel_for(mp, 0, n * s, [&](par::Meter& mc, std::size_t cell) {
          mc.tick();
          values[cell] = inst.value(static_cast<Agent>(cell / s), lo + cell % s);
        });
        const Instance sub(n, s, std::move(values));
        const Allocation local = solve_matching_rounds(sub, mp);
        for (Agent a = 0; a < n; ++a)
          for (Good l : local.bundle(a)) owner[lo + l] = a;
      },
      1);
  return Allocation::from_owners(n, owner);
}

Allocation solve_ef_eps(const Instance& inst, std::size_t k) {
  auto meter = par::Meter::disabled();
  return solve_ef_eps(inst, k, meter);
}

}  // namespace parfair
