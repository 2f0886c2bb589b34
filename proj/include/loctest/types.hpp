#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace loctest {

using State = std::int32_t;
using Letter = std::int32_t;
using Element = std::uint32_t;
using Word = std::vector<Letter>;

inline constexpr State kUndefined = -1;

// Input text does not conform to one of the instance formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A configured resource bound (product graph nodes, semigroup order) was hit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t reached)
      : std::runtime_error(what + " exceeds cap " + std::to_string(cap) +
                           " (reached " + std::to_string(reached) + ")"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

// A witness references states, letters or elements outside the instance.
class MalformedWitness : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_word(const Word& w);

}  // namespace loctest
