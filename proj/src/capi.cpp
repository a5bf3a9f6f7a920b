#include "totcof/totcof.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include "totcof/derived_limits.hpp"
#include "totcof/diagram.hpp"
#include "totcof/error.hpp"
#include "totcof/poset.hpp"
#include "totcof/reports.hpp"
#include "totcof/serialize.hpp"
#include "totcof/spectral.hpp"

struct totcof_pair {
  totcof::PosetPair pair;
};

struct totcof_diagram {
  totcof::PosetPair pair;
  std::variant<totcof::DiagramOfComplexes, totcof::AbelianDiagram> value;
};

struct totcof_report {
  std::string json;
  std::string text;
  bool passed = true;
};

namespace {

using namespace totcof;

thread_local std::string last_error;

totcof_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::input: return TOTCOF_ERR_INPUT;
    case ErrorCode::not_a_poset: return TOTCOF_ERR_NOT_A_POSET;
    case ErrorCode::containment: return TOTCOF_ERR_CONTAINMENT;
    case ErrorCode::invalid_map: return TOTCOF_ERR_INVALID_MAP;
    case ErrorCode::parse: return TOTCOF_ERR_PARSE;
    case ErrorCode::validation: return TOTCOF_ERR_VALIDATION;
    case ErrorCode::condition_failure: return TOTCOF_ERR_CONDITION_FAILURE;
    case ErrorCode::limit: return TOTCOF_ERR_LIMIT;
  }
  return TOTCOF_ERR_INTERNAL;
}

template <typename F>
totcof_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return TOTCOF_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TOTCOF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TOTCOF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return TOTCOF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::input, std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

totcof_options defaults() {
  totcof_options o;
  totcof_options_init(&o);
  return o;
}

ReportOptions report_options(const totcof_options& o) {
  ReportOptions r;
  r.field = Field::parse(o.field ? o.field : "q");
  if (o.has_degrees) {
    if (o.degree_lo > o.degree_hi) fail(ErrorCode::input, "degree window lo..hi has lo > hi");
    r.degrees = std::make_pair(o.degree_lo, o.degree_hi);
  }
  if (o.input) r.input = o.input;
  return r;
}

totcof_report* wrap(const Report& r) {
  auto* out = new totcof_report;
  out->json = r.json.dump(2) + "\n";
  out->text = r.text;
  out->passed = r.passed;
  return out;
}

const DiagramOfComplexes& complexes(const totcof_diagram* d, const char* command) {
  require(d, "diagram");
  if (auto* x = std::get_if<DiagramOfComplexes>(&d->value)) return *x;
  fail(ErrorCode::input, std::string(command) + " needs a diagram of chain complexes, not an abelian diagram");
}

// "Z" or "Z/k" with k >= 1.
ChainComplex constant_value(const std::string& group) {
  if (group == "Z") return ChainComplex::concentrated(0, {"z"});
  if (group.rfind("Z/", 0) == 0 && group.size() > 2 &&
      group.find_first_not_of("0123456789", 2) == std::string::npos) {
    const Integer k(group.substr(2));
    if (k < 1) fail(ErrorCode::input, "constant group Z/k needs k >= 1");
    IntegerMatrix d(1, 1);
    d(0, 0) = k;
    return ChainComplex(0, {{"c0"}, {"c1"}}, {IntegerMatrix(0, 1), d});
  }
  fail(ErrorCode::input, "constant group must be Z or Z/k, got '" + group + "'");
}

PosetPair embedded_pair(const Json& j) {
  if (!j.is_object() || !j.contains("poset")) fail(ErrorCode::input, "diagram JSON embeds no poset");
  return poset_pair_from_json(j["poset"], "/poset");
}

}  // namespace

extern "C" {

void totcof_options_init(totcof_options* o) {
  if (!o) return;
  o->field = nullptr;
  o->has_degrees = 0;
  o->degree_lo = 0;
  o->degree_hi = 0;
  o->has_p = 0;
  o->p = 0;
  o->q = 0;
  o->r_max = -1;
  o->input = nullptr;
}

const char* totcof_last_error(void) { return last_error.c_str(); }

const char* totcof_status_name(totcof_status s) {
  switch (s) {
    case TOTCOF_OK: return "ok";
    case TOTCOF_ERR_INPUT: return "input error";
    case TOTCOF_ERR_NOT_A_POSET: return "not a poset";
    case TOTCOF_ERR_CONTAINMENT: return "containment error";
    case TOTCOF_ERR_INVALID_MAP: return "invalid map";
    case TOTCOF_ERR_PARSE: return "parse error";
    case TOTCOF_ERR_VALIDATION: return "validation error";
    case TOTCOF_ERR_CONDITION_FAILURE: return "condition failure";
    case TOTCOF_ERR_LIMIT: return "size limit exceeded";
    case TOTCOF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void totcof_string_free(char* s) { delete[] s; }

size_t totcof_max_elements(void) { return max_poset_elements(); }
void totcof_set_max_elements(size_t cap) { set_max_poset_elements(cap); }

totcof_status totcof_pair_generate(const char* spec, totcof_pair** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new totcof_pair{generate_pair(spec)};
  });
}

totcof_status totcof_pair_parse_json(const char* text, totcof_pair** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new totcof_pair{parse_poset_json(text)};
  });
}

totcof_status totcof_pair_to_json(const totcof_pair* pair, char** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = copy_out(poset_pair_to_json(pair->pair).dump(2) + "\n");
  });
}

size_t totcof_pair_size(const totcof_pair* pair) { return pair ? pair->pair.ambient.size() : 0; }

int totcof_pair_ball_dimension(const totcof_pair* pair, int* m) {
  if (!pair || !pair->pair.ball_dimension) return 0;
  if (m) *m = *pair->pair.ball_dimension;
  return 1;
}

void totcof_pair_free(totcof_pair* pair) { delete pair; }

totcof_status totcof_diagram_constant(const totcof_pair* pair, const char* group, totcof_diagram** out) {
  return guarded([&] {
    require(pair, "pair");
    require(group, "group");
    require(out, "out");
    *out = new totcof_diagram{pair->pair, constant_diagram(pair->pair.ambient, constant_value(group))};
  });
}

totcof_status totcof_diagram_random(const totcof_pair* pair, uint64_t seed, totcof_diagram** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = new totcof_diagram{pair->pair, random_diagram(pair->pair.ambient, seed)};
  });
}

totcof_status totcof_diagram_json_pair(const char* text, totcof_pair** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new totcof_pair{embedded_pair(parse_json_text(text))};
  });
}

totcof_status totcof_diagram_parse_json(const char* text, const totcof_pair* pair, totcof_diagram** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const Json j = parse_json_text(text);
    if (!j.is_object()) fail(ErrorCode::parse, "/: expected an object");
    PosetPair p;
    if (j.contains("poset")) {
      p = embedded_pair(j);
      if (pair && !(pair->pair.ambient == p.ambient && pair->pair.ideal == p.ideal))
        fail(ErrorCode::input, "embedded poset differs from the given pair");
    } else if (pair) {
      p = pair->pair;
    } else {
      fail(ErrorCode::input, "diagram JSON embeds no poset and no pair was given");
    }
    const bool abelian = j.contains("kind") && j["kind"] == "abelian";
    if (abelian)
      *out = new totcof_diagram{p, abelian_diagram_from_json(j, p.ambient)};
    else
      *out = new totcof_diagram{p, diagram_from_json(j, p.ambient)};
  });
}

totcof_status totcof_diagram_to_json(const totcof_diagram* d, char** out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    Json j = std::visit(
        [](const auto& v) -> Json {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, DiagramOfComplexes>)
            return diagram_to_json(v);
          else
            return abelian_diagram_to_json(v);
        },
        d->value);
    j["poset"] = poset_pair_to_json(d->pair);
    *out = copy_out(j.dump(2) + "\n");
  });
}

int totcof_diagram_is_abelian(const totcof_diagram* d) {
  return d && std::holds_alternative<AbelianDiagram>(d->value) ? 1 : 0;
}

void totcof_diagram_free(totcof_diagram* d) { delete d; }

totcof_status totcof_check(const totcof_pair* pair, const totcof_options* options, totcof_report** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = wrap(check_report(pair->pair, report_options(options ? *options : defaults())));
  });
}

totcof_status totcof_homology(const totcof_pair* pair, const totcof_options* options, totcof_report** out) {
  return guarded([&] {
    require(pair, "pair");
    require(out, "out");
    *out = wrap(homology_report(pair->pair, report_options(options ? *options : defaults())));
  });
}

totcof_status totcof_limp(const totcof_diagram* d, const totcof_options* options, totcof_report** out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    const totcof_options o = options ? *options : defaults();
    ReportOptions ro = report_options(o);
    const std::optional<int> p = o.has_p ? std::optional<int>(o.p) : std::nullopt;
    if (auto* a = std::get_if<AbelianDiagram>(&d->value)) {
      *out = wrap(limp_report(*a, p, ro));
    } else {
      ro.input += (ro.input.empty() ? "" : ", ") + std::string("H_") + std::to_string(o.q);
      *out = wrap(limp_report(homotopy_groups_diagram(std::get<DiagramOfComplexes>(d->value), o.q), p, ro));
    }
  });
}

totcof_status totcof_gamma(const totcof_diagram* d, const totcof_pair* pair, const totcof_options* options,
                           totcof_report** out) {
  return guarded([&] {
    const DiagramOfComplexes& x = complexes(d, "gamma");
    require(out, "out");
    const PosetPair& p = pair ? pair->pair : d->pair;
    if (!(p.ambient == x.poset())) fail(ErrorCode::input, "diagram is indexed by a different poset than the pair");
    *out = wrap(gamma_report(x, p, report_options(options ? *options : defaults())));
  });
}

totcof_status totcof_holim(const totcof_diagram* d, const totcof_options* options, totcof_report** out) {
  return guarded([&] {
    const DiagramOfComplexes& y = complexes(d, "holim");
    require(out, "out");
    *out = wrap(holim_report(y, report_options(options ? *options : defaults())));
  });
}

totcof_status totcof_verify(const totcof_diagram* d, const totcof_pair* pair, const totcof_options* options,
                            totcof_report** out) {
  return guarded([&] {
    const DiagramOfComplexes& x = complexes(d, "verify");
    require(out, "out");
    *out = wrap(verify_report(x, pair ? pair->pair : d->pair, report_options(options ? *options : defaults())));
  });
}

totcof_status totcof_ss(const totcof_diagram* d, const totcof_pair* pair, const totcof_options* options,
                        totcof_report** out) {
  return guarded([&] {
    const DiagramOfComplexes& y = complexes(d, "ss");
    require(out, "out");
    const totcof_options o = options ? *options : defaults();
    *out = wrap(ss_report(y, pair ? &pair->pair : &d->pair, o.r_max, report_options(o)));
  });
}

const char* totcof_report_json(const totcof_report* r) { return r ? r->json.c_str() : ""; }
const char* totcof_report_text(const totcof_report* r) { return r ? r->text.c_str() : ""; }
int totcof_report_passed(const totcof_report* r) { return r && r->passed ? 1 : 0; }
void totcof_report_free(totcof_report* r) { delete r; }

}  // extern "C"
