#include "loctest/verdict_json.hpp"

namespace loctest {

using nlohmann::json;

namespace {

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::LocalIdempotency: return "local-idempotency";
    case Identity::RightIdentity: return "xyx=xy";
    case Identity::LeftIdentity: return "xyx=yx";
  }
  return "?";
}

Identity parse_identity(std::string_view s) {
  for (Identity id : {Identity::LocalIdempotency, Identity::RightIdentity, Identity::LeftIdentity}) {
    if (identity_name(id) == s) return id;
  }
  throw std::invalid_argument("unknown identity '" + std::string(s) + "'");
}

std::string_view side_name(Side s) { return s == Side::Right ? "right" : "left"; }

Side parse_side(std::string_view s) {
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  throw std::invalid_argument("unknown side '" + std::string(s) + "'");
}

struct ToJson {
  json operator()(const GraphCondition1& w) const {
    return {{"kind", "graph-condition-1"}, {"source", to_string(w.source)},
            {"p", w.p}, {"q", w.q}, {"u", w.u}, {"v", w.v}, {"unit", w.unit}};
  }
  json operator()(const GraphCondition2& w) const {
    return {{"kind", "graph-condition-2"}, {"source", to_string(w.source)},
            {"root", w.root}, {"reached", w.reached}, {"letter", w.letter},
            {"path", w.path}, {"unit", w.unit}};
  }
  json operator()(const GraphCondition3& w) const {
    return {{"kind", "graph-condition-3"}, {"source", to_string(w.source)},
            {"triple", w.triple}, {"unit", w.unit}, {"w", w.w}, {"w2", w.w2}};
  }
  json operator()(const SemigroupIdentity& w) const {
    json j = {{"kind", "semigroup-identity"}, {"identity", identity_name(w.identity)},
              {"e", w.e}, {"a", w.a}, {"b", nullptr},
              {"e_word", w.e_word}, {"a_word", w.a_word}, {"b_word", w.b_word}};
    if (w.b) j["b"] = *w.b;
    return j;
  }
  json operator()(const UnitSharing& w) const {
    return {{"kind", "unit-sharing"}, {"side", side_name(w.side)},
            {"e", w.e}, {"i", w.i}, {"f", w.f},
            {"e_word", w.e_word}, {"i_word", w.i_word}, {"f_word", w.f_word}};
  }
};

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad field '") + name + "': " + e.what());
  }
}

PropertyId source_of(const json& j) { return parse_property(field<std::string>(j, "source")); }

}  // namespace

json to_json(const Witness& w) { return std::visit(ToJson{}, w); }

json to_json(const Verdict& v) {
  json j;
  j["property"] = to_string(v.property);
  j["holds"] = v.holds;
  j["route"] = to_string(v.route);
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  j["stats"] = {{"nodes_visited", v.stats.nodes_visited},
                {"semigroup_order", v.stats.semigroup_order},
                {"elapsed_ms", v.stats.elapsed_ms}};
  return j;
}

Witness witness_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("witness must be an object");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "graph-condition-1") {
    GraphCondition1 w;
    w.source = source_of(j);
    w.p = field<State>(j, "p");
    w.q = field<State>(j, "q");
    w.u = field<Word>(j, "u");
    w.v = field<Word>(j, "v");
    w.unit = field<Word>(j, "unit");
    return w;
  }
  if (kind == "graph-condition-2") {
    GraphCondition2 w;
    w.source = source_of(j);
    w.root = field<Pair>(j, "root");
    w.reached = field<Pair>(j, "reached");
    w.letter = field<Letter>(j, "letter");
    w.path = field<Word>(j, "path");
    w.unit = field<Word>(j, "unit");
    return w;
  }
  if (kind == "graph-condition-3") {
    GraphCondition3 w;
    w.source = source_of(j);
    w.triple = field<Triple>(j, "triple");
    w.unit = field<Word>(j, "unit");
    w.w = field<Word>(j, "w");
    w.w2 = field<Word>(j, "w2");
    return w;
  }
  if (kind == "semigroup-identity") {
    SemigroupIdentity w;
    w.identity = parse_identity(field<std::string>(j, "identity"));
    w.e = field<Element>(j, "e");
    w.a = field<Element>(j, "a");
    if (j.contains("b") && !j.at("b").is_null()) w.b = field<Element>(j, "b");
    w.e_word = field<Word>(j, "e_word");
    w.a_word = field<Word>(j, "a_word");
    w.b_word = field<Word>(j, "b_word");
    return w;
  }
  if (kind == "unit-sharing") {
    UnitSharing w;
    w.side = parse_side(field<std::string>(j, "side"));
    w.e = field<Element>(j, "e");
    w.i = field<Element>(j, "i");
    w.f = field<Element>(j, "f");
    w.e_word = field<Word>(j, "e_word");
    w.i_word = field<Word>(j, "i_word");
    w.f_word = field<Word>(j, "f_word");
    return w;
  }
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

Verdict verdict_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("verdict must be an object");
  Verdict v;
  v.property = parse_property(field<std::string>(j, "property"));
  v.holds = field<bool>(j, "holds");
  v.route = parse_route(field<std::string>(j, "route"));
  if (j.contains("witness") && !j.at("witness").is_null()) {
    v.witness = witness_from_json(j.at("witness"));
  }
  if (j.contains("stats")) {
    const json& s = j.at("stats");
    v.stats.nodes_visited = field<std::size_t>(s, "nodes_visited");
    v.stats.semigroup_order = field<std::size_t>(s, "semigroup_order");
    v.stats.elapsed_ms = field<double>(s, "elapsed_ms");
  }
  return v;
}

}  // namespace loctest
