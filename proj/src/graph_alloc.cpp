#include "parfair/graph_alloc.hpp"

#include <algorithm>
#include <atomic>

#include "parfair/errors.hpp"
#include "parfair/two_agent.hpp"

namespace parfair {

namespace {

// First two positive agents of a good plus a saturating count.
struct Support {
  std::uint32_t count = 0;
  Agent a = kNoAgent;
  Agent b = kNoAgent;
};

Support merge(Support x, const Support& y) {
  for (Agent c : {y.a, y.b}) {
    if (c == kNoAgent) continue;
    if (x.a == kNoAgent) x.a = c;
    else if (x.b == kNoAgent) x.b = c;
  }
  x.count = std::min<std::uint32_t>(x.count + y.count, 3);
  return x;
}

struct Record {
  Agent a;
  Agent b;
  Good g;
};

}  // namespace

const std::vector<Good>& SupportPartition::goods_of(Agent i, Agent j) const {
  static const std::vector<Good> kEmpty;
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{i, j});
  if (it == pairs.end() || *it != std::pair{i, j}) return kEmpty;
  return pair_goods[static_cast<std::size_t>(it - pairs.begin())];
}

SupportPartition partition_by_support(const Instance& inst, par::Meter& meter) {
  const std::size_t n = inst.n(), m = inst.m();
  std::vector<Record> records(m);
  std::atomic<Good> bad{kNoGood};
  par::parallel_for(meter, 0, m, [&](par::Meter& mg, std::size_t g) {
    const Support s = par::parallel_reduce(
        mg, 0, n, Support{},
        [&](par::Meter& ma, std::size_t i) {
          ma.tick();
          if (inst.value(static_cast<Agent>(i), static_cast<Good>(g)) > 0) {
            return Support{1, static_cast<Agent>(i), kNoAgent};
          }
          return Support{};
        },
        merge);
    mg.tick();
    if (s.count >= 3) {
      Good cur = bad.load();
      while (g < cur && !bad.compare_exchange_weak(cur, static_cast<Good>(g))) {
      }
    }
    // Self loops use a == b; orphans sort last.
    const Agent a = s.a;
    const Agent b = s.b == kNoAgent ? s.a : s.b;
    records[g] = Record{a, b, static_cast<Good>(g)};
  });
  if (bad.load() != kNoGood) {
    throw InputError("not a graph instance: good " + std::to_string(bad.load()) +
                     " is positively valued by 3 or more agents");
  }

  par::parallel_sort(meter, records, [](const Record& x, const Record& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  const auto starts = par::run_starts(meter, m, [&](std::size_t p, std::size_t q) {
    return records[p].a == records[q].a && records[p].b == records[q].b;
  });

  const std::size_t groups = starts.size();
  std::vector<std::vector<Good>> group_goods(groups);
  par::parallel_for(meter, 0, groups, [&](par::Meter& mg, std::size_t k) {
    const std::size_t lo = starts[k];
    const std::size_t hi = k + 1 < groups ? starts[k + 1] : m;
    group_goods[k].resize(hi - lo);
    par::parallel_for(mg, lo, hi, [&](par::Meter& mi, std::size_t p) {
      mi.tick();
      group_goods[k][p - lo] = records[p].g;
    });
  });

  SupportPartition part;
  part.self.resize(n);
  for (std::size_t k = 0; k < groups; ++k) {
    const Record& r = records[starts[k]];
    if (r.a == kNoAgent) {
      part.orphans = std::move(group_goods[k]);
    } else if (r.a == r.b) {
      part.self[r.a] = std::move(group_goods[k]);
    } else {
      part.pairs.emplace_back(r.a, r.b);
      part.pair_goods.push_back(std::move(group_goods[k]));
    }
  }
  return part;
}

SupportPartition partition_by_support(const Instance& inst) {
  auto meter = par::Meter::disabled();
  return partition_by_support(inst, meter);
}

Allocation solve_graph(const Instance& inst, par::Meter& meter) {
  const SupportPartition part = partition_by_support(inst, meter);
  std::vector<Agent> owner(inst.m(), kNoAgent);

  for (Good g : part.orphans) owner[g] = 0;
  for (Agent i = 0; i < part.self.size(); ++i)
    for (Good g : part.self[i]) owner[g] = i;

  par::parallel_for(
      meter, 0, part.pairs.size(),
      [&](par::Meter& mp, std::size_t p) {
        const auto [i, j] = part.pairs[p];
        const auto& goods = part.pair_goods[p];
        const std::size_t k = goods.size();
        std::vector<Value> values(2 * k);
        par::parallel_for(mp, 0, k, [&](par::Meter& mg, std::size_t l) {
          mg.tick();
          values[l] = inst.value(i, goods[l]);
          values[k + l] = inst.value(j, goods[l]);
        });
        const Instance sub(2, k, std::move(values));
        const Allocation local = solve_two_agent(sub, mp);
        for (Agent side = 0; side < 2; ++side)
          for (Good l : local.bundle(side)) owner[goods[l]] = side == 0 ? i : j;
      },
      1);

  return Allocation::from_owners(inst.n(), owner);
}

Allocation solve_graph(const Instance& inst) {
  auto meter = par::Meter::disabled();
  return solve_graph(inst, meter);
}

}  // namespace parfair
