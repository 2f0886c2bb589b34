#include "loctest/semigroup.hpp"

#include <sstream>
#include <unordered_map>

#include "loctest/text_format.hpp"

namespace loctest {

namespace detail {

struct SemigroupBackend {
  std::size_t order = 0;
  std::vector<Element> table;  // dense, empty when only the Cayley graph is kept

  std::size_t generators = 0;
  std::vector<Element> right;
  std::vector<Word> words;
  std::vector<Element> generator_elements;

  Element product(Element a, Element b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * order + b];
    Element x = a;
    for (Letter l : words[b]) x = right[static_cast<std::size_t>(x) * generators + static_cast<std::size_t>(l)];
    return x;
  }
};

}  // namespace detail

namespace {

// Generated semigroups up to this order also get a dense table.
constexpr std::size_t kDenseLimit = 512;

}  // namespace

AssociativityError::AssociativityError(std::array<Element, 3> triple)
    : std::invalid_argument("associativity violation at (" + std::to_string(triple[0]) +
                            "," + std::to_string(triple[1]) + "," +
                            std::to_string(triple[2]) + ")"),
      triple_(triple) {}

std::optional<std::array<Element, 3>> find_associativity_violation(
    std::size_t order, std::span<const Element> table) {
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const Element ij = table[i * order + j];
      for (std::size_t l = 0; l < order; ++l) {
        if (table[ij * order + l] != table[i * order + table[j * order + l]]) {
          return std::array<Element, 3>{static_cast<Element>(i), static_cast<Element>(j),
                                        static_cast<Element>(l)};
        }
      }
    }
  }
  return std::nullopt;
}

FiniteSemigroup FiniteSemigroup::from_table_unchecked(std::size_t order,
                                                      std::vector<Element> table) {
  auto backend = std::make_shared<detail::SemigroupBackend>();
  backend->order = order;
  backend->table = std::move(table);
  FiniteSemigroup s;
  s.order_ = order;
  s.backend_ = std::move(backend);
  return s;
}

FiniteSemigroup FiniteSemigroup::from_table(std::size_t order, std::vector<Element> table) {
  if (order == 0) throw std::invalid_argument("semigroup order must be positive");
  if (table.size() != order * order) {
    throw std::invalid_argument("table must have order*order entries");
  }
  for (Element x : table) {
    if (x >= order) throw std::invalid_argument("table entry " + std::to_string(x) + " out of range");
  }
  if (auto bad = find_associativity_violation(order, table)) throw AssociativityError(*bad);
  return from_table_unchecked(order, std::move(table));
}

FiniteSemigroup FiniteSemigroup::from_cayley_graph(std::size_t generators,
                                                   std::vector<Element> right,
                                                   std::vector<Word> words,
                                                   std::vector<Element> generator_elements) {
  auto backend = std::make_shared<detail::SemigroupBackend>();
  backend->order = words.size();
  backend->generators = generators;
  backend->right = std::move(right);
  backend->words = std::move(words);
  backend->generator_elements = std::move(generator_elements);
  const std::size_t k = backend->order;
  if (k <= kDenseLimit) {
    std::vector<Element> table(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        table[a * k + b] = backend->product(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
    backend->table = std::move(table);
  }
  FiniteSemigroup s;
  s.order_ = k;
  s.backend_ = std::move(backend);
  return s;
}

Element FiniteSemigroup::product(Element a, Element b) const {
  return reversed_ ? backend_->product(b, a) : backend_->product(a, b);
}

bool FiniteSemigroup::has_words() const noexcept {
  return backend_ && !reversed_ && !backend_->words.empty();
}

const Word& FiniteSemigroup::word(Element x) const {
  if (!has_words()) throw std::logic_error("semigroup carries no element words");
  return backend_->words[x];
}

std::optional<std::size_t> FiniteSemigroup::generator_count() const noexcept {
  if (!has_words()) return std::nullopt;
  return backend_->generators;
}

std::vector<Element> FiniteSemigroup::table() const {
  std::vector<Element> out(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      out[a * order_ + b] = product(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  return out;
}

FiniteSemigroup FiniteSemigroup::opposite() const {
  FiniteSemigroup s = *this;
  s.reversed_ = !reversed_;
  return s;
}

FiniteSemigroup parse_cayley(std::string_view input) {
  auto lines = text::tokenize(input);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'semigroup'");
  const auto& head = lines[0];
  if (head.tokens.front().text != "semigroup" || head.tokens.size() != 1) {
    throw ParseError(head.number, head.tokens.front().column,
                     "expected header line 'semigroup'");
  }
  if (lines.size() < 2 || lines[1].tokens.front().text != "order:" ||
      lines[1].tokens.size() != 2) {
    const auto& l = lines.size() < 2 ? lines[0] : lines[1];
    throw ParseError(l.number, l.tokens.front().column, "expected 'order: <k>'");
  }
  const std::size_t k = text::parse_index(lines[1], lines[1].tokens[1]);
  if (k == 0) throw ParseError(lines[1].number, lines[1].tokens[1].column, "order must be positive");
  if (lines.size() != 2 + k) {
    const auto& l = lines.back();
    throw ParseError(l.number, 1,
                     "expected " + std::to_string(k) + " table rows, found " +
                         std::to_string(lines.size() - 2));
  }
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& line = lines[2 + i];
    if (line.tokens.size() != k) {
      throw ParseError(line.number, line.tokens.front().column,
                       "expected " + std::to_string(k) + " entries in row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t v = text::parse_index(line, line.tokens[j]);
      if (v >= k) {
        throw ParseError(line.number, line.tokens[j].column,
                         "entry " + std::to_string(v) + " out of range");
      }
      table[i * k + j] = static_cast<Element>(v);
    }
  }
  return FiniteSemigroup::from_table(k, std::move(table));
}

std::string serialize_cayley(const FiniteSemigroup& s) {
  std::ostringstream out;
  const std::size_t k = s.order();
  out << "semigroup\norder: " << k << '\n';
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) out << ' ';
      out << s.product(static_cast<Element>(i), static_cast<Element>(j));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

struct MapHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (State s : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(s));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Element TransitionSemigroup::element_of(std::span<const Letter> w) const {
  if (w.empty()) throw std::invalid_argument("the empty word has no element");
  Element x = letter_element[static_cast<std::size_t>(w[0])];
  for (std::size_t i = 1; i < w.size(); ++i) {
    x = semigroup.product(x, letter_element[static_cast<std::size_t>(w[i])]);
  }
  return x;
}

TransitionSemigroup transition_semigroup(const Dfa& d, std::size_t cap) {
  require_valid(d);
  const std::size_t n = d.state_count();
  const std::size_t m = d.alphabet_size();
  TransitionSemigroup out;
  out.state_count = n;

  std::unordered_map<std::vector<State>, Element, MapHash> index;
  std::vector<Word> words;
  auto intern = [&](std::vector<State> map, const Word& word) {
    auto [it, inserted] = index.try_emplace(std::move(map), static_cast<Element>(words.size()));
    if (inserted) {
      if (words.size() >= cap) throw CapExceeded("transition semigroup", cap, words.size() + 1);
      out.maps.insert(out.maps.end(), it->first.begin(), it->first.end());
      words.push_back(word);
    }
    return it->second;
  };

  std::vector<State> map(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t p = 0; p < n; ++p) map[p] = d.delta(static_cast<State>(p), static_cast<Letter>(a));
    out.letter_element.push_back(intern(map, Word{static_cast<Letter>(a)}));
  }

  std::vector<Element> right;
  for (std::size_t x = 0; x < words.size(); ++x) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t p = 0; p < n; ++p) {
        State s = out.maps[x * n + p];
        map[p] = s == kUndefined ? kUndefined : d.delta(s, static_cast<Letter>(a));
      }
      Word w = words[x];
      w.push_back(static_cast<Letter>(a));
      right.push_back(intern(map, w));
    }
  }
  out.semigroup = FiniteSemigroup::from_cayley_graph(m, std::move(right), std::move(words),
                                                     out.letter_element);
  return out;
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) out.push_back(e);
  }
  return out;
}

std::optional<LocalIdempotencyViolation> is_locally_idempotent(const FiniteSemigroup& s) {
  for (Element e : idempotents(s)) {
    for (Element x = 0; x < s.order(); ++x) {
      const Element exe = s.product(s.product(e, x), e);
      if (s.product(exe, exe) != exe) return LocalIdempotencyViolation{e, x};
    }
  }
  return std::nullopt;
}

IdempotentList reorder_zero_subsemigroups(const FiniteSemigroup& s, Side side) {
  const auto pool = idempotents(s);
  std::vector<char> placed(pool.size(), 0);
  IdempotentList out;
  out.members.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (placed[i]) continue;
    const Element x = pool[i];
    const std::size_t start = out.members.size();
    out.members.push_back(x);
    placed[i] = 1;
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (placed[j]) continue;
      const Element y = pool[j];
      const bool same = side == Side::Right
                            ? (s.product(x, y) == y && s.product(y, x) == x)
                            : (s.product(x, y) == x && s.product(y, x) == y);
      if (same) {
        out.members.push_back(y);
        placed[j] = 1;
      }
    }
    out.zero_intervals.push_back({start, out.members.size(), side});
  }
  return out;
}

FiniteSemigroup trivial_semigroup() { return FiniteSemigroup::from_table(1, {0}); }

FiniteSemigroup zero_semigroup(std::size_t order, Side side) {
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      table[i * order + j] = static_cast<Element>(side == Side::Right ? j : i);
    }
  }
  return FiniteSemigroup::from_table(order, std::move(table));
}

FiniteSemigroup cyclic_group(std::size_t order) {
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) table[i * order + j] = static_cast<Element>((i + j) % order);
  }
  return FiniteSemigroup::from_table(order, std::move(table));
}

}  // namespace loctest
