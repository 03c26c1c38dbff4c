#include "matroid/json_io.hpp"

#include <json.hpp>

namespace matroid {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON input");
  return j;
}

json set_to_json(Subset s) { return json(s.elements()); }

Subset set_from_json(const json& j, int n) {
  if (!j.is_array()) throw Error("expected an array of elements");
  Subset s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error("set elements must be integers");
    const int e = v.get<int>();
    if (e < 1 || e > n) throw Error("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    s.add(e);
  }
  return s;
}

int ground_size_field(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw Error("expected an object with an integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxGroundSet) throw Error("\"n\" outside [0," + std::to_string(kMaxGroundSet) + "]");
  return n;
}

}  // namespace

std::string to_json(const CyclicFlatMatroid& m) {
  json flats = json::array();
  for (const RankedSet& f : m.cyclic_flats())
    flats.push_back(json{{"set", set_to_json(f.set)}, {"rank", f.rank}});
  return json{{"n", m.ground_size()}, {"cyclic_flats", flats}}.dump();
}

CyclicFlatMatroid matroid_from_json(const std::string& text) {
  const json j = parse(text);
  const int n = ground_size_field(j);
  if (!j.contains("cyclic_flats") || !j["cyclic_flats"].is_array())
    throw Error("expected an array field \"cyclic_flats\"");
  std::vector<RankedSet> flats;
  for (const auto& f : j["cyclic_flats"]) {
    if (!f.is_object() || !f.contains("set") || !f.contains("rank") || !f["rank"].is_number_integer())
      throw Error("cyclic flat entries need \"set\" and integer \"rank\"");
    flats.emplace_back(set_from_json(f["set"], n), f["rank"].get<int>());
  }
  return CyclicFlatMatroid(n, std::move(flats));
}

std::string to_json(const SetSystem& a) {
  json sets = json::array();
  for (const Subset& s : a.sets) sets.push_back(set_to_json(s));
  return json{{"n", a.n}, {"sets", sets}}.dump();
}

SetSystem set_system_from_json(const std::string& text) {
  const json j = parse(text);
  SetSystem a;
  a.n = ground_size_field(j);
  if (!j.contains("sets") || !j["sets"].is_array()) throw Error("expected an array field \"sets\"");
  for (const auto& s : j["sets"]) a.sets.push_back(set_from_json(s, a.n));
  return a;
}

std::string to_json(const Diagram& d) {
  return json{{"upper", d.upper.steps}, {"lower", d.lower.steps}}.dump();
}

Diagram diagram_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("upper") || !j.contains("lower") || !j["upper"].is_string() ||
      !j["lower"].is_string())
    throw Error("expected string fields \"upper\" and \"lower\"");
  return make_diagram(j["upper"].get<std::string>(), j["lower"].get<std::string>());
}

std::string to_json(const FiniteLattice& l) {
  json covers = json::array();
  for (auto [lo, hi] : l.cover_pairs()) covers.push_back(json::array({l.ids()[lo], l.ids()[hi]}));
  return json{{"elements", l.ids()}, {"covers", covers}}.dump();
}

FiniteLattice lattice_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw Error("expected an array field \"elements\"");
  std::vector<std::string> ids;
  for (const auto& v : j["elements"]) {
    if (!v.is_string()) throw Error("lattice element ids must be strings");
    ids.push_back(v.get<std::string>());
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t k = i + 1; k < ids.size(); ++k)
      if (ids[i] == ids[k]) throw Error("duplicate lattice element id '" + ids[i] + "'");
  if (!j.contains("covers") || !j["covers"].is_array()) throw Error("expected an array field \"covers\"");
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw Error("covers must be [lower, upper] id pairs");
    int lo = -1, hi = -1;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == c[0].get<std::string>()) lo = static_cast<int>(i);
      if (ids[i] == c[1].get<std::string>()) hi = static_cast<int>(i);
    }
    if (lo < 0 || hi < 0) throw Error("cover pair names an unknown element");
    covers.emplace_back(lo, hi);
  }
  return FiniteLattice(std::move(ids), covers);
}

std::string to_json(const TuttePolynomial& t) {
  json coeffs = json::array();
  for (std::size_t i = 0; i < t.coeffs.size(); ++i)
    for (std::size_t k = 0; k < t.coeffs[i].size(); ++k)
      if (t.coeffs[i][k] != 0) coeffs.push_back(json::array({i, k, t.coeffs[i][k].str()}));
  return json{{"coeffs", coeffs}}.dump();
}

TuttePolynomial tutte_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw Error("expected an array field \"coeffs\"");
  TuttePolynomial t;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() || !c[1].is_number_integer() ||
        !c[2].is_string())
      throw Error("coeff entries must be [i, j, \"decimal\"]");
    const int i = c[0].get<int>(), k = c[1].get<int>();
    if (i < 0 || k < 0) throw Error("coefficient powers must be non-negative");
    if (static_cast<int>(t.coeffs.size()) <= i) t.coeffs.resize(i + 1);
    if (static_cast<int>(t.coeffs[i].size()) <= k) t.coeffs[i].resize(k + 1, 0);
    t.coeffs[i][k] = BigInt(c[2].get<std::string>());
  }
  return t;
}

std::string to_json(const GInvariant& g) {
  json flags = json::array();
  for (const auto& [comp, cnt] : g.table)
    flags.push_back(json{{"composition", comp}, {"count", cnt.str()}});
  return json{{"flags", flags}}.dump();
}

GInvariant g_invariant_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("flags") || !j["flags"].is_array())
    throw Error("expected an array field \"flags\"");
  GInvariant g;
  for (const auto& f : j["flags"]) {
    if (!f.is_object() || !f.contains("composition") || !f.contains("count") ||
        !f["composition"].is_array() || !f["count"].is_string())
      throw Error("flag entries need \"composition\" and \"count\"");
    std::vector<int> comp;
    for (const auto& v : f["composition"]) comp.push_back(v.get<int>());
    g.table[comp] = BigInt(f["count"].get<std::string>());
  }
  return g;
}

}  // namespace matroid
