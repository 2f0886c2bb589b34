#include "loctest/text_format.hpp"

#include <charconv>
#include <sstream>

namespace loctest {

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out << ' ';
    out << w[i];
  }
  return out.str();
}

}  // namespace loctest

namespace loctest::text {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      std::size_t start = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::size_t parse_index(const Line& line, const Token& tok) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line.number, tok.column,
                     "expected a nonnegative integer, got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

std::vector<std::string> split_documents(std::string_view text) {
  std::vector<std::string> docs;
  std::string current;
  bool started = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    auto toks = tokenize(raw);
    bool header = !toks.empty() && (toks.front().tokens.front().text == "dfa" ||
                                    toks.front().tokens.front().text == "semigroup");
    if (header && started) {
      docs.push_back(std::move(current));
      current.clear();
    }
    if (header) started = true;
    current.append(raw);
    current.push_back('\n');
    pos = end + 1;
  }
  if (started) docs.push_back(std::move(current));
  return docs;
}

std::string header_token(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) return {};
  return std::string(lines.front().tokens.front().text);
}

}  // namespace loctest::text
