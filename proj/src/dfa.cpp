#include "loctest/dfa.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "loctest/text_format.hpp"

namespace loctest {

Dfa::Dfa(std::size_t state_count, std::size_t alphabet_size,
         std::vector<State> delta, std::vector<std::string> letter_names)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      delta_(std::move(delta)),
      letter_names_(std::move(letter_names)) {
  delta_.resize(state_count_ * alphabet_size_, kUndefined);
}

Dfa Dfa::empty(std::size_t state_count, std::size_t alphabet_size) {
  return Dfa(state_count, alphabet_size,
             std::vector<State>(state_count * alphabet_size, kUndefined));
}

std::string Dfa::letter_label(Letter a) const {
  if (!letter_names_.empty() &&
      static_cast<std::size_t>(a) < letter_names_.size()) {
    return letter_names_[static_cast<std::size_t>(a)];
  }
  return std::to_string(a);
}

Dfa Dfa::with_transition(State p, Letter a, State target) const {
  Dfa copy = *this;
  copy.delta_[static_cast<std::size_t>(p) * alphabet_size_ +
              static_cast<std::size_t>(a)] = target;
  return copy;
}

std::vector<std::string> validate_dfa(const Dfa& d) {
  std::vector<std::string> violations;
  if (d.state_count() == 0) violations.emplace_back("state count must be positive");
  if (d.alphabet_size() == 0) violations.emplace_back("alphabet size must be positive");
  for (std::size_t p = 0; p < d.state_count(); ++p) {
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      State t = d.delta(static_cast<State>(p), static_cast<Letter>(a));
      if (t != kUndefined &&
          (t < 0 || static_cast<std::size_t>(t) >= d.state_count())) {
        violations.push_back("target out of range: delta(" + std::to_string(p) +
                             ", " + std::to_string(a) + ") = " + std::to_string(t));
      }
    }
  }
  const auto& names = d.letter_names();
  if (!names.empty()) {
    if (names.size() != d.alphabet_size()) {
      violations.push_back("letter name count " + std::to_string(names.size()) +
                           " differs from alphabet size " +
                           std::to_string(d.alphabet_size()));
    }
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) {
        violations.push_back("duplicate letter name '" + name + "'");
      }
    }
  }
  return violations;
}

void require_valid(const Dfa& d) {
  auto violations = validate_dfa(d);
  if (violations.empty()) return;
  std::string msg = "invalid dfa:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw std::invalid_argument(msg);
}

Dfa make_dfa(std::size_t state_count, std::size_t alphabet_size,
             std::vector<State> delta, std::vector<std::string> letter_names) {
  Dfa d(state_count, alphabet_size, std::move(delta), std::move(letter_names));
  require_valid(d);
  return d;
}

State apply(const Dfa& d, State p, std::span<const Letter> w) {
  for (Letter a : w) {
    if (p == kUndefined) return kUndefined;
    p = d.delta(p, a);
  }
  return p;
}

std::vector<State> action(const Dfa& d, std::span<const Letter> w) {
  std::vector<State> out(d.state_count());
  for (std::size_t p = 0; p < d.state_count(); ++p) {
    out[p] = apply(d, static_cast<State>(p), w);
  }
  return out;
}

namespace {

const text::Token& expect_key(const text::Line& line, std::string_view key) {
  const auto& tok = line.tokens.front();
  if (tok.text != key) {
    throw ParseError(line.number, tok.column,
                     "expected '" + std::string(key) + "', got '" +
                         std::string(tok.text) + "'");
  }
  return tok;
}

bool is_annotation(std::string_view tok) {
  return tok == "initial:" || tok == "accepting:" || tok == "final:";
}

}  // namespace

Dfa parse_dfa(std::string_view input) {
  auto lines = text::tokenize(input);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'dfa'");

  const auto& head = lines[0];
  if (head.tokens.front().text != "dfa" || head.tokens.size() != 1) {
    throw ParseError(head.number, head.tokens.front().column,
                     "expected header line 'dfa'");
  }
  if (lines.size() < 3) {
    throw ParseError(lines.back().number, 1,
                     "missing 'states:' or 'letters:' line");
  }

  const auto& states_line = lines[1];
  expect_key(states_line, "states:");
  if (states_line.tokens.size() != 2) {
    throw ParseError(states_line.number, states_line.tokens.front().column,
                     "expected 'states: <n>'");
  }
  std::size_t n = text::parse_index(states_line, states_line.tokens[1]);
  if (n == 0) {
    throw ParseError(states_line.number, states_line.tokens[1].column,
                     "state count must be positive");
  }

  const auto& letters_line = lines[2];
  expect_key(letters_line, "letters:");
  if (letters_line.tokens.size() < 2) {
    throw ParseError(letters_line.number, letters_line.tokens.front().column,
                     "expected 'letters: <m>' or 'letters: <name>...'");
  }
  std::size_t m = 0;
  std::vector<std::string> names;
  std::unordered_map<std::string_view, Letter> by_name;
  const auto& first_letter_tok = letters_line.tokens[1];
  bool numeric = letters_line.tokens.size() == 2 &&
                 std::all_of(first_letter_tok.text.begin(),
                             first_letter_tok.text.end(),
                             [](char c) { return c >= '0' && c <= '9'; });
  if (numeric) {
    m = text::parse_index(letters_line, first_letter_tok);
    if (m == 0) {
      throw ParseError(letters_line.number, first_letter_tok.column,
                       "alphabet size must be positive");
    }
  } else {
    for (std::size_t i = 1; i < letters_line.tokens.size(); ++i) {
      const auto& tok = letters_line.tokens[i];
      if (!by_name.emplace(tok.text, static_cast<Letter>(names.size())).second) {
        throw ParseError(letters_line.number, tok.column,
                         "duplicate letter name '" + std::string(tok.text) + "'");
      }
      names.emplace_back(tok.text);
    }
    m = names.size();
  }

  std::vector<State> delta(n * m, kUndefined);
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (is_annotation(line.tokens.front().text)) continue;
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, line.tokens.front().column,
                       "expected '<state> <letter> <state>'");
    }
    std::size_t p = text::parse_index(line, line.tokens[0]);
    if (p >= n) {
      throw ParseError(line.number, line.tokens[0].column,
                       "state " + std::to_string(p) + " out of range");
    }
    const auto& letter_tok = line.tokens[1];
    std::size_t a = 0;
    if (auto it = by_name.find(letter_tok.text); it != by_name.end()) {
      a = static_cast<std::size_t>(it->second);
    } else {
      a = text::parse_index(line, letter_tok);
      if (a >= m) {
        throw ParseError(line.number, letter_tok.column,
                         "letter " + std::to_string(a) + " out of range");
      }
    }
    std::size_t q = text::parse_index(line, line.tokens[2]);
    if (q >= n) {
      throw ParseError(line.number, line.tokens[2].column,
                       "state " + std::to_string(q) + " out of range");
    }
    State& slot = delta[p * m + a];
    if (slot != kUndefined) {
      throw ParseError(line.number, line.tokens[0].column,
                       "duplicate transition for (" + std::to_string(p) + "," +
                           std::to_string(a) + ")");
    }
    slot = static_cast<State>(q);
  }
  return make_dfa(n, m, std::move(delta), std::move(names));
}

std::string serialize_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "dfa\nstates: " << d.state_count() << "\nletters:";
  if (d.letter_names().empty()) {
    out << ' ' << d.alphabet_size();
  } else {
    for (const auto& name : d.letter_names()) out << ' ' << name;
  }
  out << '\n';
  for (std::size_t p = 0; p < d.state_count(); ++p) {
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      State t = d.delta(static_cast<State>(p), static_cast<Letter>(a));
      if (t == kUndefined) continue;
      out << p << ' ' << d.letter_label(static_cast<Letter>(a)) << ' ' << t << '\n';
    }
  }
  return out.str();
}

Dfa identity_dfa(std::size_t states, std::size_t letters) {
  std::vector<State> delta(states * letters);
  for (std::size_t p = 0; p < states; ++p) {
    for (std::size_t a = 0; a < letters; ++a) delta[p * letters + a] = static_cast<State>(p);
  }
  return Dfa(states, letters, std::move(delta));
}

}  // namespace loctest
