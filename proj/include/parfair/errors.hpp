#pragma once

#include <stdexcept>
#include <string>

namespace parfair {

// Violated precondition or invalid argument. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed instance / allocation text. The CLI maps this to exit code 3.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parfair
