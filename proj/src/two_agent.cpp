#include "parfair/two_agent.hpp"

#include "parfair/errors.hpp"

namespace parfair {

namespace {

// Subtrees with fewer leaves than this are never handed to another thread.
constexpr std::size_t kSpawnLeaves = 4096;

void fill(GapTable& t, const Instance& inst, std::size_t k, std::size_t span, par::Meter& meter) {
  GapNode& u = t.node(k);
  if (t.is_leaf(k)) {
    meter.tick();
    const Good g = t.leaf_good(k);
    for (Agent i = 0; i < 2; ++i) {
      const Gap v = g < inst.m() ? Gap{inst.value(i, g)} : Gap{0};
      u.gap[i][i] = v;
      u.gap[i][1 - i] = -v;
    }
    return;
  }
  par::fork_join(
      meter, [&](par::Meter& m) { fill(t, inst, GapTable::left(k), span / 2, m); },
      [&](par::Meter& m) { fill(t, inst, GapTable::right(k), span / 2, m); },
      span >= kSpawnLeaves);
  const GapNode& l = t.node(GapTable::left(k));
  const GapNode& r = t.node(GapTable::right(k));
  for (Agent j = 0; j < 2; ++j) {
    meter.tick();
    const bool pick_right = r.gap[j][j] > l.gap[j][j];
    u.choice[j] = pick_right ? 1 : 0;
    const GapNode& c = pick_right ? r : l;
    const GapNode& d = pick_right ? l : r;
    for (Agent i = 0; i < 2; ++i) u.gap[i][j] = c.gap[i][j] + d.gap[i][1 - j];
  }
}

void assign(const GapTable& t, std::size_t k, Agent mover, std::size_t span,
            std::vector<Agent>& owner, par::Meter& meter) {
  meter.tick();
  if (t.is_leaf(k)) {
    const Good g = t.leaf_good(k);
    if (g < t.goods()) owner[g] = mover;
    return;
  }
  par::fork_join(
      meter, [&](par::Meter& m) { assign(t, t.chosen_child(k, mover), mover, span / 2, owner, m); },
      [&](par::Meter& m) { assign(t, t.other_child(k, mover), 1 - mover, span / 2, owner, m); },
      span >= kSpawnLeaves);
}

void check_agent(Agent a) {
  if (a > 1) throw InputError("first mover must be agent 0 or 1");
}

}  // namespace

GapTable::GapTable(std::size_t goods, std::size_t leaves)
    : goods_(goods), leaves_(leaves), nodes_(2 * leaves - 1) {}

std::size_t padded_leaves(std::size_t m) noexcept {
  std::size_t p = 1;
  while (p < m) p <<= 1;
  return p;
}

GapTable compute_gaps(const Instance& inst, Agent first, par::Meter& meter) {
  if (inst.n() != 2) {
    throw InputError("two-agent algorithm needs exactly 2 agents, got " + std::to_string(inst.n()));
  }
  check_agent(first);
  GapTable t(inst.m(), padded_leaves(inst.m()));
  fill(t, inst, 0, t.leaves(), meter);
  return t;
}

GapTable compute_gaps(const Instance& inst, Agent first) {
  auto meter = par::Meter::disabled();
  return compute_gaps(inst, first, meter);
}

Allocation extract_allocation(const GapTable& table, Agent first, par::Meter& meter) {
  check_agent(first);
  std::vector<Agent> owner(table.goods(), kNoAgent);
  assign(table, 0, first, table.leaves(), owner, meter);
  return Allocation::from_owners(2, owner);
}

Allocation extract_allocation(const GapTable& table, Agent first) {
  auto meter = par::Meter::disabled();
  return extract_allocation(table, first, meter);
}

Good first_choice_good(const GapTable& table, Agent first) {
  check_agent(first);
  std::size_t k = 0;
  while (!table.is_leaf(k)) k = table.chosen_child(k, first);
  return table.leaf_good(k);
}

Allocation solve_two_agent(const Instance& inst, par::Meter& meter) {
  const GapTable table = compute_gaps(inst, 0, meter);
  return extract_allocation(table, 0, meter);
}

Allocation solve_two_agent(const Instance& inst) {
  auto meter = par::Meter::disabled();
  return solve_two_agent(inst, meter);
}

}  // namespace parfair
