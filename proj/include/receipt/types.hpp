#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace receipt {

using vertex_t = std::uint32_t;  // dense 0-based internal label, per side
using count_t = std::uint64_t;   // butterflies, supports, tip numbers, wedges
using edge_t = std::uint64_t;    // CSR offsets
using ext_id_t = std::uint64_t;  // original vertex id as read from input

enum class Side { U, V };

inline const char* to_string(Side side) { return side == Side::U ? "U" : "V"; }

inline count_t choose2(count_t c) { return c < 2 ? 0 : c * (c - 1) / 2; }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("edge list is empty") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  Overflow() : Error("butterfly count exceeds 64-bit range") {}
};

class GenError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace receipt
