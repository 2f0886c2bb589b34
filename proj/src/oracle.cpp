#include <chrono>

#include "loctest/deciders.hpp"

namespace loctest {

namespace {

struct Failure {
  Identity identity;
  Element e;
  Element a;
  std::optional<Element> b;
};

// Distinct elements of eSe, each with the first a such that x = e·a·e.
std::vector<std::pair<Element, Element>> local_subsemigroup(const FiniteSemigroup& s,
                                                            Element e) {
  std::vector<std::pair<Element, Element>> out;
  std::vector<char> seen(s.order(), 0);
  for (Element a = 0; a < s.order(); ++a) {
    const Element x = s.product(s.product(e, a), e);
    if (!seen[x]) {
      seen[x] = 1;
      out.emplace_back(x, a);
    }
  }
  return out;
}

std::optional<Failure> check(const FiniteSemigroup& s, PropertyId property) {
  std::vector<Element> units;
  for (Element e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) units.push_back(e);
  }
  for (Element e : units) {
    for (Element a = 0; a < s.order(); ++a) {
      const Element x = s.product(s.product(e, a), e);
      if (s.product(x, x) != x) return Failure{Identity::LocalIdempotency, e, a, std::nullopt};
    }
  }
  if (property == PropertyId::LocallyIdempotent) return std::nullopt;

  const bool right = property == PropertyId::RightLT;
  for (Element e : units) {
    const auto local = local_subsemigroup(s, e);
    for (const auto& [x, a] : local) {
      for (const auto& [y, b] : local) {
        const Element xy = s.product(x, y);
        const Element xyx = s.product(xy, x);
        const Element rhs = right ? xy : s.product(y, x);
        if (xyx != rhs) {
          return Failure{right ? Identity::RightIdentity : Identity::LeftIdentity, e, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict oracle(const FiniteSemigroup& s, PropertyId property) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.property = property;
  v.route = Route::Oracle;
  v.stats.semigroup_order = s.order();
  if (auto f = check(s, property)) {
    SemigroupIdentity w;
    w.identity = f->identity;
    w.e = f->e;
    w.a = f->a;
    w.b = f->b;
    if (s.has_words()) {
      w.e_word = s.word(f->e);
      w.a_word = s.word(f->a);
      if (f->b) w.b_word = s.word(*f->b);
    }
    v.witness = w;
  }
  v.holds = !v.witness.has_value();
  v.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return v;
}

}  // namespace loctest
