#include "parfair/cc_reduce.hpp"

#include <ostream>

#include "parfair/errors.hpp"

namespace parfair {

StableMatchingInstance reduce_to_stable_matching(const Instance& inst, const AgentOrder& order) {
  const std::size_t n = inst.n(), m = inst.m();
  if (m % n != 0) {
    throw InputError("reduction needs m divisible by n (m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ")");
  }
  if (order.size() != n) throw InputError("agent order length differs from n");
  StableMatchingInstance smi;
  smi.m = m;
  smi.n = n;
  smi.copies = m / n;

  const auto prefs = preference_lists(inst);
  smi.a_prefs.resize(m);
  for (Agent a = 0; a < n; ++a)
    for (std::size_t c = 0; c < smi.copies; ++c) smi.a_prefs[smi.proposer(a, c)] = prefs[a].order;

  std::vector<Proposer> common;
  common.reserve(m);
  for (std::size_t c = 0; c < smi.copies; ++c)
    for (std::size_t k = 0; k < n; ++k) common.push_back(smi.proposer(order[k], c));
  smi.b_prefs.assign(m, common);
  return smi;
}

StableMatching gale_shapley(const StableMatchingInstance& smi) {
  const std::size_t m = smi.m;
  std::vector<std::vector<std::uint32_t>> b_rank(m, std::vector<std::uint32_t>(m));
  for (Good g = 0; g < m; ++g)
    for (std::uint32_t r = 0; r < m; ++r) b_rank[g][smi.b_prefs[g][r]] = r;

  StableMatching out;
  out.good_of.assign(m, kNoGood);
  out.proposer_of.assign(m, kNoAgent);
  std::vector<std::size_t> next(m, 0);
  std::vector<Proposer> free;
  free.reserve(m);
  for (Proposer p = static_cast<Proposer>(m); p-- > 0;) free.push_back(p);

  while (!free.empty()) {
    const Proposer p = free.back();
    free.pop_back();
    const Good g = smi.a_prefs[p][next[p]++];
    const Proposer held = out.proposer_of[g];
    if (held == kNoAgent) {
      out.proposer_of[g] = p;
      out.good_of[p] = g;
    } else if (b_rank[g][p] < b_rank[g][held]) {
      out.proposer_of[g] = p;
      out.good_of[p] = g;
      out.good_of[held] = kNoGood;
      free.push_back(held);
    } else {
      free.push_back(p);
    }
  }
  return out;
}

std::vector<std::pair<Proposer, Good>> blocking_pairs(const StableMatchingInstance& smi,
                                                      const StableMatching& matching) {
  const std::size_t m = smi.m;
  std::vector<std::vector<std::uint32_t>> a_rank(m, std::vector<std::uint32_t>(m));
  std::vector<std::vector<std::uint32_t>> b_rank(m, std::vector<std::uint32_t>(m));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::uint32_t r = 0; r < m; ++r) {
      a_rank[x][smi.a_prefs[x][r]] = r;
      b_rank[x][smi.b_prefs[x][r]] = r;
    }
  }
  std::vector<std::pair<Proposer, Good>> out;
  for (Proposer p = 0; p < m; ++p) {
    for (Good g = 0; g < m; ++g) {
      if (matching.good_of[p] == g) continue;
      const bool p_wants = matching.good_of[p] == kNoGood ||
                           a_rank[p][g] < a_rank[p][matching.good_of[p]];
      const bool g_wants = matching.proposer_of[g] == kNoAgent ||
                           b_rank[g][p] < b_rank[g][matching.proposer_of[g]];
      if (p_wants && g_wants) out.emplace_back(p, g);
    }
  }
  return out;
}

StableMatching serial_dictatorship(const StableMatchingInstance& smi) {
  for (const auto& list : smi.b_prefs) {
    if (list != smi.b_prefs.front()) {
      throw InputError("serial dictatorship needs identical good-side lists");
    }
  }
  StableMatching out;
  out.good_of.assign(smi.m, kNoGood);
  out.proposer_of.assign(smi.m, kNoAgent);
  if (smi.m == 0) return out;
  for (Proposer p : smi.b_prefs.front()) {
    for (Good g : smi.a_prefs[p]) {
      if (out.proposer_of[g] == kNoAgent) {
        out.proposer_of[g] = p;
        out.good_of[p] = g;
        break;
      }
    }
  }
  return out;
}

Allocation allocation_from_matching(const StableMatchingInstance& smi,
                                    const StableMatching& matching) {
  std::vector<Agent> owner(smi.m, kNoAgent);
  for (Good g = 0; g < smi.m; ++g) {
    if (matching.proposer_of[g] == kNoAgent) throw InputError("matching is not perfect");
    owner[g] = smi.agent_of(matching.proposer_of[g]);
  }
  return Allocation::from_owners(smi.n, owner);
}

void write_stable_matching(std::ostream& out, const StableMatchingInstance& smi) {
  const auto line = [&](const auto& ids) {
    for (std::size_t t = 0; t < ids.size(); ++t) out << (t ? " " : "") << ids[t];
    out << '\n';
  };
  out << "SM v1\n" << smi.m << '\n';
  for (const auto& list : smi.a_prefs) line(list);
  for (const auto& list : smi.b_prefs) line(list);
}

}  // namespace parfair
