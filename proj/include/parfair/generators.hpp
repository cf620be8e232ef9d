#pragma once

// Seeded random instances for the supported instance classes.

#include <cstdint>

#include "parfair/model.hpp"

namespace parfair::gen {

// Values uniform in [0, max_value].
Instance dense(std::size_t n, std::size_t m, Value max_value, std::uint64_t seed);

// Each good is positively valued by one or two agents.
Instance graph(std::size_t n, std::size_t m, Value max_value, std::uint64_t seed);

// Supports are random agent sets of size 1..rank; every support set meets at
// most `delta` others. Throws InputError when no such set can be formed.
Instance hypergraph(std::size_t n, std::size_t m, std::size_t rank, std::size_t delta,
                    Value max_value, std::uint64_t seed);

// Every agent values exactly min(budget, m) goods positively.
Instance sparse(std::size_t n, std::size_t m, std::size_t budget, Value max_value,
                std::uint64_t seed);

}  // namespace parfair::gen
