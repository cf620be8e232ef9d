#include "parfair/parexec.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace parfair::par {

namespace {

unsigned initial_threads() {
  if (const char* env = std::getenv("PARFAIR_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void scan_up(Meter& meter, std::span<const std::size_t> in, std::size_t lo, std::size_t hi,
             std::vector<std::size_t>& left_sum, std::size_t& sum) {
  if (hi - lo == 1) {
    meter.tick();
    sum = in[lo];
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t a = 0, b = 0;
  fork_join(
      meter, [&](Meter& m) { scan_up(m, in, lo, mid, left_sum, a); },
      [&](Meter& m) { scan_up(m, in, mid, hi, left_sum, b); }, hi - lo >= kDefaultGrain);
  left_sum[mid] = a;
  sum = a + b;
}

void scan_down(Meter& meter, std::size_t lo, std::size_t hi, std::size_t offset,
               const std::vector<std::size_t>& left_sum, std::vector<std::size_t>& out) {
  if (hi - lo == 1) {
    meter.tick();
    out[lo] = offset;
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  fork_join(
      meter, [&](Meter& m) { scan_down(m, lo, mid, offset, left_sum, out); },
      [&](Meter& m) { scan_down(m, mid, hi, offset + left_sum[mid], left_sum, out); },
      hi - lo >= kDefaultGrain);
}

}  // namespace

Executor::Executor() { set_threads(initial_threads()); }

Executor& Executor::global() {
  static Executor instance;
  return instance;
}

void Executor::set_threads(unsigned threads) noexcept {
  if (threads == 0) threads = 1;
  cap_.store(threads);
  free_.store(static_cast<int>(threads) - 1);
}

bool Executor::try_acquire() noexcept {
  int avail = free_.load(std::memory_order_relaxed);
  while (avail > 0) {
    if (free_.compare_exchange_weak(avail, avail - 1, std::memory_order_acq_rel)) return true;
  }
  return false;
}

void Executor::release() noexcept { free_.fetch_add(1, std::memory_order_acq_rel); }

ScanResult exclusive_scan(Meter& meter, std::span<const std::size_t> in) {
  ScanResult result;
  const std::size_t n = in.size();
  if (n == 0) return result;
  std::vector<std::size_t> left_sum(n, 0);
  scan_up(meter, in, 0, n, left_sum, result.total);
  result.offsets.assign(n, 0);
  scan_down(meter, 0, n, 0, left_sum, result.offsets);
  return result;
}

}  // namespace parfair::par
