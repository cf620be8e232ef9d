#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "parfair/model.hpp"

namespace parfair::io {

// EF1-INSTANCE v1
// <n> <m>
// n lines of m nonnegative integers
Instance read_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);

// EF1-ALLOC v1
// <n> <m>
// n lines of ascending good ids (a line may be empty)
struct AllocationFile {
  std::size_t m = 0;
  Allocation allocation;
};
AllocationFile read_allocation(std::istream& in);
void write_allocation(std::ostream& out, const Allocation& alloc, std::size_t m);

Instance load_instance(const std::string& path);
AllocationFile load_allocation(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);
void save_allocation(const std::string& path, const Allocation& alloc, std::size_t m);

std::string to_string(const Instance& inst);
std::string to_string(const Allocation& alloc, std::size_t m);

// 64-bit FNV-1a of the canonical instance text, as 16 hex digits.
std::string digest(const Instance& inst);

}  // namespace parfair::io
