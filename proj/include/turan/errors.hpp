#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested order exceeds the 64-vertex word cap (or is negative).
class SizeError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a hard resource cap (enumeration order,
// 64-bit counters, packing search limits).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A builder was handed an input that breaks the freeness guarantee of
// the construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace turan
