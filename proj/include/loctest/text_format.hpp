#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "loctest/types.hpp"

namespace loctest::text {

// One logical line with comments stripped and tokens split on whitespace.
struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<Token> tokens;
};

// Nonblank lines of `text` after removing `#` comments.
std::vector<Line> tokenize(std::string_view text);

// Parses a nonnegative decimal integer or throws ParseError at `tok`.
std::size_t parse_index(const Line& line, const Token& tok);

// Splits a stream of concatenated instance documents. A new document starts
// at each line whose first token is `dfa` or `semigroup`.
std::vector<std::string> split_documents(std::string_view text);

// First token of the first nonblank line, or empty.
std::string header_token(std::string_view text);

}  // namespace loctest::text
