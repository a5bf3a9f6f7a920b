#include "totcof/serialize.hpp"

#include <algorithm>
#include <set>

#include "totcof/error.hpp"

namespace totcof {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  fail(ErrorCode::parse, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) schema_error(where + "/" + key, "expected an array");
  return a;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

long long integer_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<long long>();
}

std::size_t size_at(const Json& j, const std::string& where) {
  const long long v = integer_at(j, where);
  if (v < 0) schema_error(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

Integer big_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  const std::string s = string_at(j, where);
  const std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<long>(digits_from), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    schema_error(where, "expected a decimal integer string, got \"" + s + "\"");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

std::string pointer(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string pointer(const std::string& where, const std::string& key) { return where + "/" + key; }

Json verdicts_to_json(const std::vector<Verdict>& vs, bool holds) {
  Json list = Json::array();
  for (const auto& v : vs) {
    Json e = {{"element", v.label}, {"status", status_name(v.status)}};
    if (v.witness) e["degree"] = v.witness->degree;
    list.push_back(std::move(e));
  }
  return {{"holds", holds}, {"verdicts", std::move(list)}};
}

Json witness_to_json(const Witness& w) {
  return {{"condition", condition_name(w.condition)},
          {"element", w.element},
          {"complex", w.complex},
          {"degree", w.degree},
          {"group", group_to_json(w.group)}};
}

std::size_t label_index(const Poset& p, const Json& j, const std::string& where) {
  const std::string s = string_at(j, where);
  auto i = p.index_of(s);
  if (!i) schema_error(where, "unknown element '" + s + "'");
  return *i;
}

CoverKey cover_at(const Poset& p, const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema_error(where, "expected a pair [a, b]");
  return {label_index(p, j[0], pointer(where, 0)), label_index(p, j[1], pointer(where, 1))};
}

std::string cover_name(const Poset& p, const CoverKey& c) { return p.label(c.first) + " < " + p.label(c.second); }

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line and column; keep only the description from the
    // library message.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto at = what.find(": ", what.find("parse error")); at != std::string::npos) what = what.substr(at + 2);
    fail(ErrorCode::parse, "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                               ": " + what);
  }
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) entries.push_back(Json::array({i, j, m(i, j).get_str()}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntegerMatrix matrix_from_json(const Json& j, const std::string& where) {
  const std::size_t rows = size_at(field(j, "rows", where), pointer(where, "rows"));
  const std::size_t cols = size_at(field(j, "cols", where), pointer(where, "cols"));
  const Json& entries = array_field(j, "entries", where);
  IntegerMatrix m(rows, cols);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string at = pointer(pointer(where, "entries"), k);
    const Json& t = entries[k];
    if (!t.is_array() || t.size() != 3) schema_error(at, "expected a triplet [row, col, value]");
    const std::size_t r = size_at(t[0], pointer(at, 0));
    const std::size_t c = size_at(t[1], pointer(at, 1));
    if (r >= rows || c >= cols)
      schema_error(at, "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside a " +
                           std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    if (!seen.insert({r, c}).second)
      schema_error(at, "duplicate entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    m(r, c) = big_at(t[2], pointer(at, 2));
  }
  return m;
}

Json group_to_json(const GroupStructure& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.get_str());
  return {{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

Json homology_to_json(const HomologySummary& h) {
  Json out = Json::array();
  for (int n = h.lo(); n <= h.hi(); ++n) {
    Json rec = group_to_json(h.structure(n));
    rec["degree"] = n;
    out.push_back(std::move(rec));
  }
  return out;
}

Json subquotient_to_json(const SubquotientGroup& g) {
  return {{"ambient_rank", g.ambient_rank()},
          {"numerator", matrix_to_json(g.numerator().basis())},
          {"denominator", matrix_to_json(g.denominator().basis())}};
}

SubquotientGroup subquotient_from_json(const Json& j, const std::string& where) {
  const std::size_t n = size_at(field(j, "ambient_rank", where), pointer(where, "ambient_rank"));
  const IntegerMatrix num = matrix_from_json(field(j, "numerator", where), pointer(where, "numerator"));
  const IntegerMatrix den = matrix_from_json(field(j, "denominator", where), pointer(where, "denominator"));
  if (num.rows() != n) schema_error(pointer(where, "numerator"), "generators must have ambient_rank rows");
  if (den.rows() != n) schema_error(pointer(where, "denominator"), "generators must have ambient_rank rows");
  return SubquotientGroup(Lattice(n, num), Lattice(n, den));
}

Json poset_pair_to_json(const PosetPair& pair) {
  const Poset& p = pair.ambient;
  Json covers = Json::array();
  for (const auto& [x, y] : p.covering_pairs()) covers.push_back(Json::array({p.label(x), p.label(y)}));
  Json ideal = Json::array();
  for (auto i : pair.ideal_indices()) ideal.push_back(p.label(i));
  Json out = {{"elements", p.labels()}, {"covers", std::move(covers)}, {"ideal", std::move(ideal)}};
  if (pair.ball_dimension) out["ball_dimension"] = *pair.ball_dimension;
  return out;
}

PosetPair poset_pair_from_json(const Json& j, const std::string& where) {
  const Json& elements = array_field(j, "elements", where);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i)
    labels.push_back(string_at(elements[i], pointer(pointer(where, "elements"), i)));
  std::vector<std::pair<std::string, std::string>> relations;
  if (j.contains("covers")) {
    const Json& covers = array_field(j, "covers", where);
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const std::string at = pointer(pointer(where, "covers"), i);
      if (!covers[i].is_array() || covers[i].size() != 2) schema_error(at, "expected a pair [a, b]");
      relations.emplace_back(string_at(covers[i][0], pointer(at, 0)), string_at(covers[i][1], pointer(at, 1)));
    }
  }
  Poset poset = Poset::from_relations(labels, relations);
  ElementMask ideal(poset.size(), false);
  if (j.contains("ideal")) {
    const Json& list = array_field(j, "ideal", where);
    for (std::size_t i = 0; i < list.size(); ++i) ideal[label_index(poset, list[i], pointer(pointer(where, "ideal"), i))] = true;
  }
  std::optional<int> m;
  if (j.contains("ball_dimension") && !j["ball_dimension"].is_null())
    m = static_cast<int>(integer_at(j["ball_dimension"], pointer(where, "ball_dimension")));
  return PosetPair(std::move(poset), std::move(ideal), m);
}

PosetPair parse_poset_json(const std::string& text) { return poset_pair_from_json(parse_json_text(text)); }

Json complex_to_json(const ChainComplex& c) {
  Json bases = Json::array();
  Json diffs = Json::array();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    bases.push_back(c.basis(n));
    diffs.push_back(matrix_to_json(c.differential(n)));
  }
  return {{"lo", c.lo()}, {"bases", std::move(bases)}, {"differentials", std::move(diffs)}};
}

ChainComplex complex_from_json(const Json& j, const std::string& where) {
  const int lo = static_cast<int>(integer_at(field(j, "lo", where), pointer(where, "lo")));
  const Json& bases_json = array_field(j, "bases", where);
  std::vector<std::vector<std::string>> bases;
  for (std::size_t k = 0; k < bases_json.size(); ++k) {
    const std::string at = pointer(pointer(where, "bases"), k);
    if (!bases_json[k].is_array()) schema_error(at, "expected an array of labels");
    std::vector<std::string> b;
    for (std::size_t i = 0; i < bases_json[k].size(); ++i) b.push_back(string_at(bases_json[k][i], pointer(at, i)));
    bases.push_back(std::move(b));
  }
  std::vector<IntegerMatrix> diffs;
  if (j.contains("differentials")) {
    const Json& d = array_field(j, "differentials", where);
    if (d.size() > bases.size()) schema_error(pointer(where, "differentials"), "more differentials than degrees");
    for (std::size_t k = 0; k < d.size(); ++k)
      diffs.push_back(matrix_from_json(d[k], pointer(pointer(where, "differentials"), k)));
  }
  // Differentials may be omitted from the top down.
  while (diffs.size() < bases.size())
    diffs.emplace_back(diffs.empty() ? 0 : bases[diffs.size() - 1].size(), bases[diffs.size()].size());
  try {
    return ChainComplex(lo, std::move(bases), std::move(diffs));
  } catch (const Error& e) {
    fail(e.code(), (where.empty() ? std::string("/") : where) + ": " + e.what());
  }
}

Json diagram_to_json(const DiagramOfComplexes& d) {
  const Poset& p = d.poset();
  Json values = Json::object();
  for (std::size_t x = 0; x < d.size(); ++x) values[p.label(x)] = complex_to_json(d.value(x));
  Json maps = Json::array();
  for (const auto& c : d.covers()) {
    const ChainMap& f = d.map(c.first, c.second);
    Json comps = Json::array();
    for (int n = d.lo(); n <= d.hi(); ++n) {
      const IntegerMatrix m = f.component(n);
      if (!m.is_zero()) comps.push_back({{"degree", n}, {"matrix", matrix_to_json(m)}});
    }
    maps.push_back({{"cover", {p.label(c.first), p.label(c.second)}}, {"components", std::move(comps)}});
  }
  return {{"kind", "complexes"}, {"values", std::move(values)}, {"maps", std::move(maps)}};
}

DiagramOfComplexes diagram_from_json(const Json& j, const Poset& poset, const std::string& where) {
  if (j.contains("kind") && string_at(j["kind"], pointer(where, "kind")) != "complexes")
    schema_error(pointer(where, "kind"), "expected \"complexes\"");
  const Json& values = field(j, "values", where);
  if (!values.is_object()) schema_error(pointer(where, "values"), "expected an object keyed by element label");
  for (auto it = values.begin(); it != values.end(); ++it)
    if (!poset.index_of(it.key())) schema_error(pointer(pointer(where, "values"), it.key()), "unknown element");
  std::vector<ChainComplex> complexes;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    auto it = values.find(poset.label(x));
    if (it == values.end()) schema_error(pointer(where, "values"), "no value for element '" + poset.label(x) + "'");
    complexes.push_back(complex_from_json(*it, pointer(pointer(where, "values"), poset.label(x))));
  }
  std::map<CoverKey, Components> maps;
  if (j.contains("maps")) {
    const Json& list = array_field(j, "maps", where);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = pointer(pointer(where, "maps"), i);
      const CoverKey key = cover_at(poset, field(list[i], "cover", at), pointer(at, "cover"));
      if (maps.count(key)) schema_error(at, "duplicate map for " + cover_name(poset, key));
      Components comps;
      const Json& cs = array_field(list[i], "components", at);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::string cat = pointer(pointer(at, "components"), k);
        const int n = static_cast<int>(integer_at(field(cs[k], "degree", cat), pointer(cat, "degree")));
        if (comps.count(n)) schema_error(cat, "duplicate degree " + std::to_string(n));
        comps[n] = matrix_from_json(field(cs[k], "matrix", cat), pointer(cat, "matrix"));
      }
      maps[key] = std::move(comps);
    }
  }
  return DiagramOfComplexes(poset, std::move(complexes), maps);
}

Json abelian_diagram_to_json(const AbelianDiagram& a) {
  const Poset& p = a.poset();
  Json values = Json::object();
  for (std::size_t x = 0; x < a.size(); ++x) values[p.label(x)] = subquotient_to_json(a.value(x));
  Json maps = Json::array();
  for (const auto& c : p.covering_pairs())
    maps.push_back({{"cover", {p.label(c.first), p.label(c.second)}}, {"matrix", matrix_to_json(a.map(c.first, c.second))}});
  return {{"kind", "abelian"}, {"values", std::move(values)}, {"maps", std::move(maps)}};
}

AbelianDiagram abelian_diagram_from_json(const Json& j, const Poset& poset, const std::string& where) {
  if (string_at(field(j, "kind", where), pointer(where, "kind")) != "abelian")
    schema_error(pointer(where, "kind"), "expected \"abelian\"");
  const Json& values = field(j, "values", where);
  if (!values.is_object()) schema_error(pointer(where, "values"), "expected an object keyed by element label");
  for (auto it = values.begin(); it != values.end(); ++it)
    if (!poset.index_of(it.key())) schema_error(pointer(pointer(where, "values"), it.key()), "unknown element");
  std::vector<SubquotientGroup> groups;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    auto it = values.find(poset.label(x));
    if (it == values.end()) schema_error(pointer(where, "values"), "no value for element '" + poset.label(x) + "'");
    groups.push_back(subquotient_from_json(*it, pointer(pointer(where, "values"), poset.label(x))));
  }
  std::map<CoverKey, IntegerMatrix> maps;
  if (j.contains("maps")) {
    const Json& list = array_field(j, "maps", where);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = pointer(pointer(where, "maps"), i);
      const CoverKey key = cover_at(poset, field(list[i], "cover", at), pointer(at, "cover"));
      if (maps.count(key)) schema_error(at, "duplicate map for " + cover_name(poset, key));
      maps[key] = matrix_from_json(field(list[i], "matrix", at), pointer(at, "matrix"));
    }
  }
  return AbelianDiagram(poset, std::move(groups), maps);
}

Json condition_report_to_json(const ConditionReport& r) {
  Json out = {{"p1", verdicts_to_json(r.p1, r.p1_holds)},
              {"p2", verdicts_to_json(r.p2, r.p2_holds)},
              {"complete", r.complete},
              {"equivalence_holds", r.equivalence_holds()}};
  if (!r.p1_strong.empty() || !r.p2_strong.empty()) {
    // Homological shadows of the weak-equivalence conditions only.
    out["p1_strong"] = verdicts_to_json(r.p1_strong, r.p1_strong_holds);
    out["p2_strong"] = verdicts_to_json(r.p2_strong, r.p2_strong_holds);
    out["p1_strong"]["approximate"] = true;
    out["p2_strong"]["approximate"] = true;
  }
  Json ws = Json::array();
  for (const auto& w : r.witnesses()) ws.push_back(witness_to_json(w));
  out["witnesses"] = std::move(ws);
  return out;
}

}  // namespace totcof
