#include "parfair/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "parfair/errors.hpp"

namespace parfair::io {

namespace {

constexpr const char* kInstanceHeader = "EF1-INSTANCE v1";
constexpr const char* kAllocHeader = "EF1-ALLOC v1";

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of input reading ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::uint64_t> parse_numbers(const std::string& line, const char* what) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
      throw ParseError(std::string("malformed number in ") + what + ": '" + line + "'");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_dims(std::istream& in) {
  const auto dims = parse_numbers(next_line(in, "dimensions"), "dimensions");
  if (dims.size() != 2) throw ParseError("dimension line must hold exactly '<n> <m>'");
  return {static_cast<std::size_t>(dims[0]), static_cast<std::size_t>(dims[1])};
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return f;
}

}  // namespace

Instance read_instance(std::istream& in) {
  if (next_line(in, "header") != kInstanceHeader) {
    throw ParseError(std::string("expected header '") + kInstanceHeader + "'");
  }
  const auto [n, m] = parse_dims(in);
  if (n == 0 || m == 0) throw ParseError("instance needs n >= 1 and m >= 1");
  std::vector<Value> values;
  values.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = parse_numbers(next_line(in, "valuation row"), "valuation row");
    if (row.size() != m) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " values, expected " + std::to_string(m));
    }
    for (auto v : row) {
      if (v > static_cast<std::uint64_t>(kMaxValue)) throw ParseError("value exceeds 2^40");
      values.push_back(static_cast<Value>(v));
    }
  }
  return Instance(n, m, std::move(values));
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << kInstanceHeader << '\n' << inst.n() << ' ' << inst.m() << '\n';
  for (Agent i = 0; i < inst.n(); ++i) {
    const auto row = inst.row(i);
    for (std::size_t g = 0; g < row.size(); ++g) {
      if (g) out << ' ';
      out << row[g];
    }
    out << '\n';
  }
}

AllocationFile read_allocation(std::istream& in) {
  if (next_line(in, "header") != kAllocHeader) {
    throw ParseError(std::string("expected header '") + kAllocHeader + "'");
  }
  const auto [n, m] = parse_dims(in);
  if (n == 0) throw ParseError("allocation needs n >= 1");
  std::vector<std::vector<Good>> bundles(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line)) {
      // A trailing empty bundle line may be missing entirely.
      if (i + 1 == n) break;
      throw ParseError("unexpected end of input reading bundle " + std::to_string(i));
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto ids = parse_numbers(line, "bundle");
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] >= m) throw ParseError("good id " + std::to_string(ids[k]) + " out of range");
      if (k && ids[k] <= ids[k - 1]) throw ParseError("bundle ids must be strictly ascending");
      bundles[i].push_back(static_cast<Good>(ids[k]));
    }
  }
  std::vector<bool> seen(m, false);
  for (const auto& b : bundles) {
    for (Good g : b) {
      if (seen[g]) throw ParseError("good " + std::to_string(g) + " appears in two bundles");
      seen[g] = true;
    }
  }
  for (std::string rest; std::getline(in, rest);) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("trailing content after the last bundle");
    }
  }
  return {m, Allocation(std::move(bundles))};
}

void write_allocation(std::ostream& out, const Allocation& alloc, std::size_t m) {
  out << kAllocHeader << '\n' << alloc.n() << ' ' << m << '\n';
  for (const auto& b : alloc.bundles()) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out << ' ';
      out << b[k];
    }
    out << '\n';
  }
}

Instance load_instance(const std::string& path) {
  auto f = open_in(path);
  return read_instance(f);
}

AllocationFile load_allocation(const std::string& path) {
  auto f = open_in(path);
  return read_allocation(f);
}

void save_instance(const std::string& path, const Instance& inst) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  write_instance(f, inst);
}

void save_allocation(const std::string& path, const Allocation& alloc, std::size_t m) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  write_allocation(f, alloc, m);
}

std::string to_string(const Instance& inst) {
  std::ostringstream s;
  write_instance(s, inst);
  return s.str();
}

std::string to_string(const Allocation& alloc, std::size_t m) {
  std::ostringstream s;
  write_allocation(s, alloc, m);
  return s.str();
}

std::string digest(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_string(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace parfair::io
