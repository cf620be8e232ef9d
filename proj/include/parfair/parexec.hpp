#pragma once

// Binary fork-join substrate with work/depth accounting.
//
// Every parallel algorithm in the library is written against this header.
// Computations receive a Meter& and declare their unit operations with
// Meter::tick. Work and depth compose structurally:
//
//   sequential:  work = w1 + w2,      depth = d1 + d2
//   fork/join:   work = wl + wr + 1,  depth = max(dl, dr) + 1
//
// so the recorded Metrics depend only on the shape of the computation and
// never on how many worker threads actually ran it.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <future>
#include <span>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace parfair::par {

struct Metrics {
  std::uint64_t work = 0;
  std::uint64_t depth = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

constexpr Metrics sequence(const Metrics& a, const Metrics& b) noexcept {
  return {a.work + b.work, a.depth + b.depth};
}

constexpr Metrics parallel(const Metrics& a, const Metrics& b) noexcept {
  return {a.work + b.work + 1, std::max(a.depth, b.depth) + 1};
}

class Meter {
 public:
  Meter() = default;
  explicit Meter(bool enabled) : enabled_(enabled) {}

  static Meter disabled() { return Meter(false); }

  void tick(std::uint64_t ops = 1) noexcept {
    if (enabled_) {
      metrics_.work += ops;
      metrics_.depth += ops;
    }
  }

  // Sequential composition with an already-measured computation.
  void append(const Metrics& m) noexcept {
    if (enabled_) metrics_ = sequence(metrics_, m);
  }

  [[nodiscard]] Meter child() const noexcept { return Meter(enabled_); }
  [[nodiscard]] const Metrics& metrics() const noexcept { return metrics_; }
  [[nodiscard]] bool enabled() const noexcept { return enabled_; }

 private:
  Metrics metrics_{};
  bool enabled_ = true;
};

// Process-wide cap on concurrently running worker threads. The cap defaults
// to the PARFAIR_THREADS environment variable, else hardware concurrency.
class Executor {
 public:
  static Executor& global();

  [[nodiscard]] unsigned threads() const noexcept { return cap_.load(); }
  // Must not be called while parallel work is in flight.
  void set_threads(unsigned threads) noexcept;

  bool try_acquire() noexcept;
  void release() noexcept;

 private:
  Executor();

  std::atomic<unsigned> cap_{1};
  std::atomic<int> free_{0};
};

// Sets the worker cap for the lifetime of the object.
class ScopedThreads {
 public:
  explicit ScopedThreads(unsigned threads) : saved_(Executor::global().threads()) {
    Executor::global().set_threads(threads);
  }
  ~ScopedThreads() { Executor::global().set_threads(saved_); }
  ScopedThreads(const ScopedThreads&) = delete;
  ScopedThreads& operator=(const ScopedThreads&) = delete;

 private:
  unsigned saved_;
};

inline constexpr std::size_t kDefaultGrain = 2048;

namespace detail {

template <class F>
using raw_result_t = std::invoke_result_t<F&, Meter&>;

template <class F>
using task_value_t =
    std::conditional_t<std::is_void_v<raw_result_t<F>>, std::monostate, raw_result_t<F>>;

template <class F>
task_value_t<F> run_task(F& f, Meter& m) {
  if constexpr (std::is_void_v<raw_result_t<F>>) {
    f(m);
    return std::monostate{};
  } else {
    return f(m);
  }
}

}  // namespace detail

// Runs left and right as the two branches of a fork. Each branch gets a fresh
// Meter; the parent meter receives their parallel composition. When `spawn`
// is true and a worker slot is free, the left branch runs on another thread.
template <class L, class R>
auto fork_join(Meter& meter, L&& left, R&& right, bool spawn = true)
    -> std::pair<detail::task_value_t<L>, detail::task_value_t<R>> {
  Meter lm = meter.child();
  Meter rm = meter.child();
  auto& ex = Executor::global();
  if (spawn && ex.try_acquire()) {
    struct Release {
      Executor& ex;
      ~Release() { ex.release(); }
    } guard{ex};
    auto fut = std::async(std::launch::async, [&] { return detail::run_task(left, lm); });
    auto r = detail::run_task(right, rm);
    auto l = fut.get();
    meter.append(parallel(lm.metrics(), rm.metrics()));
    return {std::move(l), std::move(r)};
  }
  auto l = detail::run_task(left, lm);
  auto r = detail::run_task(right, rm);
  meter.append(parallel(lm.metrics(), rm.metrics()));
  return {std::move(l), std::move(r)};
}

namespace detail {

template <class Body>
void parallel_for_rec(Meter& meter, std::size_t lo, std::size_t hi, Body& body,
                      std::size_t grain) {
  if (hi - lo == 1) {
    body(meter, lo);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  fork_join(
      meter, [&](Meter& m) { parallel_for_rec(m, lo, mid, body, grain); },
      [&](Meter& m) { parallel_for_rec(m, mid, hi, body, grain); }, hi - lo >= grain);
}

}  // namespace detail

// body(Meter&, i) for every i in [lo, hi), as a balanced fork-join tree.
// `grain` only controls thread spawning, never the accounting.
template <class Body>
void parallel_for(Meter& meter, std::size_t lo, std::size_t hi, Body&& body,
                  std::size_t grain = kDefaultGrain) {
  if (lo >= hi) return;
  detail::parallel_for_rec(meter, lo, hi, body, grain);
}

namespace detail {

template <class T, class Map, class Combine>
T reduce_rec(Meter& meter, std::size_t lo, std::size_t hi, Map& map, Combine& combine,
             std::size_t grain) {
  if (hi - lo == 1) return map(meter, lo);
  const std::size_t mid = lo + (hi - lo) / 2;
  auto [a, b] = fork_join(
      meter, [&](Meter& m) { return reduce_rec<T>(m, lo, mid, map, combine, grain); },
      [&](Meter& m) { return reduce_rec<T>(m, mid, hi, map, combine, grain); },
      hi - lo >= grain);
  return combine(std::move(a), std::move(b));
}

}  // namespace detail

// Balanced tree reduction; the combine step is charged to the join.
template <class T, class Map, class Combine>
T parallel_reduce(Meter& meter, std::size_t lo, std::size_t hi, T identity, Map&& map,
                  Combine&& combine, std::size_t grain = kDefaultGrain) {
  if (lo >= hi) return identity;
  return detail::reduce_rec<T>(meter, lo, hi, map, combine, grain);
}

struct ScanResult {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
};

// Exclusive prefix sum by an up-sweep / down-sweep pair of fork-join passes.
ScanResult exclusive_scan(Meter& meter, std::span<const std::size_t> in);

// Stable filter: flag, scan, scatter. O(log n) depth, O(n) work.
template <class T, class Pred>
std::vector<T> parallel_filter(Meter& meter, std::span<const T> seq, Pred&& pred) {
  const std::size_t n = seq.size();
  if (n == 0) return {};
  std::vector<std::size_t> flags(n);
  parallel_for(meter, 0, n, [&](Meter& m, std::size_t i) {
    m.tick();
    flags[i] = pred(seq[i]) ? 1 : 0;
  });
  ScanResult scan = exclusive_scan(meter, flags);
  std::vector<T> out(scan.total);
  parallel_for(meter, 0, n, [&](Meter& m, std::size_t i) {
    m.tick();
    if (flags[i]) out[scan.offsets[i]] = seq[i];
  });
  return out;
}

// Indices i in [0, n) that begin a run: i == 0 or !same(i - 1, i).
template <class Same>
std::vector<std::size_t> run_starts(Meter& meter, std::size_t n, Same&& same) {
  std::vector<std::size_t> idx(n);
  parallel_for(meter, 0, n, [&](Meter& m, std::size_t i) {
    m.tick();
    idx[i] = i;
  });
  return parallel_filter(meter, std::span<const std::size_t>(idx),
                         [&](std::size_t i) { return i == 0 || !same(i - 1, i); });
}

namespace detail {

inline std::uint64_t search_cost(std::size_t n) noexcept {
  std::uint64_t c = 1;
  while (n > 1) {
    n >>= 1;
    ++c;
  }
  return c;
}

template <class T, class Comp>
void merge_rec(Meter& meter, std::span<const T> a, std::span<const T> b, std::span<T> out,
               Comp& comp) {
  if (a.empty() && b.empty()) return;
  const bool spawn = out.size() >= kDefaultGrain;
  if (a.size() >= b.size()) {
    const std::size_t ma = a.size() / 2;
    const std::size_t j = static_cast<std::size_t>(
        std::lower_bound(b.begin(), b.end(), a[ma], comp) - b.begin());
    meter.tick(search_cost(b.size()));
    out[ma + j] = a[ma];
    fork_join(
        meter,
        [&](Meter& m) { merge_rec(m, a.first(ma), b.first(j), out.first(ma + j), comp); },
        [&](Meter& m) {
          merge_rec(m, a.subspan(ma + 1), b.subspan(j), out.subspan(ma + j + 1), comp);
        },
        spawn);
  } else {
    const std::size_t mb = b.size() / 2;
    const std::size_t i = static_cast<std::size_t>(
        std::upper_bound(a.begin(), a.end(), b[mb], comp) - a.begin());
    meter.tick(search_cost(a.size()));
    out[i + mb] = b[mb];
    fork_join(
        meter,
        [&](Meter& m) { merge_rec(m, a.first(i), b.first(mb), out.first(i + mb), comp); },
        [&](Meter& m) {
          merge_rec(m, a.subspan(i), b.subspan(mb + 1), out.subspan(i + mb + 1), comp);
        },
        spawn);
  }
}

// Sorts src[lo,hi) into dst[lo,hi); both ranges start with identical contents.
template <class T, class Comp>
void msort_rec(Meter& meter, std::span<T> src, std::span<T> dst, Comp& comp) {
  const std::size_t n = dst.size();
  if (n == 1) {
    meter.tick();
    return;
  }
  const std::size_t mid = n / 2;
  fork_join(
      meter, [&](Meter& m) { msort_rec(m, dst.first(mid), src.first(mid), comp); },
      [&](Meter& m) { msort_rec(m, dst.subspan(mid), src.subspan(mid), comp); },
      n >= kDefaultGrain);
  merge_rec<T>(meter, std::span<const T>(src.first(mid)), std::span<const T>(src.subspan(mid)),
               dst, comp);
}

}  // namespace detail

// Stable merge sort with parallel merges: O(log^2 n) depth, O(n log n) work.
template <class T, class Comp = std::less<>>
void parallel_sort(Meter& meter, std::vector<T>& data, Comp comp = {}) {
  if (data.size() < 2) return;
  std::vector<T> scratch(data);
  detail::msort_rec<T>(meter, std::span<T>(scratch), std::span<T>(data), comp);
}

}  // namespace parfair::par
