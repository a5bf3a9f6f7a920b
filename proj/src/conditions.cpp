#include "totcof/conditions.hpp"

#include <functional>

#include "totcof/homology.hpp"
#include "totcof/nerve.hpp"

namespace totcof {

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::p1: return "P1";
    case Condition::p2: return "P2";
    case Condition::p1_strong: return "P1'-h";
    case Condition::p2_strong: return "P2'-h";
  }
  return "?";
}

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::skipped: return "skipped";
  }
  return "?";
}

std::vector<Witness> ConditionReport::witnesses() const {
  std::vector<Witness> out;
  for (const auto* list : {&p1, &p2, &p1_strong, &p2_strong})
    for (const auto& v : *list)
      if (v.witness) out.push_back(*v.witness);
  return out;
}

namespace {

std::optional<Witness> first_nonzero(const ChainComplex& x, Condition c, const std::string& label,
                                     const std::string& complex) {
  const HomologySummary h = homology(x);
  for (int n = h.lo(); n <= h.hi(); ++n) {
    if (h.group(n).trivial()) continue;
    return Witness{c, label, complex, n, h.structure(n)};
  }
  return std::nullopt;
}

using Decider = std::function<std::optional<Witness>(std::size_t f)>;

std::vector<Verdict> run(const PosetPair& pair, const std::vector<std::size_t>& elements, bool early_exit,
                         const Decider& decide) {
  std::vector<Verdict> out;
  bool stopped = false;
  for (auto f : elements) {
    Verdict v;
    v.element = f;
    v.label = pair.ambient.label(f);
    if (!stopped) {
      v.witness = decide(f);
      v.status = v.witness ? VerdictStatus::fail : VerdictStatus::pass;
      if (v.witness && early_exit) stopped = true;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool holds(const std::vector<Verdict>& v) {
  for (const auto& x : v)
    if (x.status == VerdictStatus::fail) return false;
  return true;
}

bool finished(const std::vector<Verdict>& v) {
  for (const auto& x : v)
    if (x.status == VerdictStatus::skipped) return false;
  return true;
}

}  // namespace

std::vector<Verdict> check_p1(const PosetPair& pair, bool early_exit) {
  return run(pair, pair.ideal_indices(), early_exit, [&](std::size_t f) {
    const ChainComplex rel = relative_chains(pair.ambient, complement_star_mask(pair.ambient, f));
    return first_nonzero(rel, Condition::p1, pair.ambient.label(f), "N(C)/N(C^F)");
  });
}

std::vector<Verdict> check_p2(const PosetPair& pair, bool early_exit) {
  return run(pair, pair.outside_indices(), early_exit, [&](std::size_t f) {
    const ChainComplex cone = mapping_cone(quotient_map_beta(pair, f));
    return first_nonzero(cone, Condition::p2, pair.ambient.label(f), "Cone(beta)");
  });
}

std::vector<Verdict> check_strong_p1(const PosetPair& pair, bool early_exit) {
  const ElementMask all(pair.ambient.size(), true);
  return run(pair, pair.ideal_indices(), early_exit, [&](std::size_t f) {
    const ChainMap inc = nerve_inclusion(pair.ambient, complement_star_mask(pair.ambient, f), all);
    return first_nonzero(mapping_cone(inc), Condition::p1_strong, pair.ambient.label(f), "Cone(N(C^F) -> N(C))");
  });
}

std::vector<Verdict> check_strong_p2(const PosetPair& pair, bool early_exit) {
  return run(pair, pair.outside_indices(), early_exit, [&](std::size_t f) {
    const ChainMap inc = nerve_inclusion(pair.ambient, pair.ideal, complement_star_mask(pair.ambient, f));
    return first_nonzero(mapping_cone(inc), Condition::p2_strong, pair.ambient.label(f), "Cone(N(D) -> N(C^F))");
  });
}

ConditionReport classify_pair(const PosetPair& pair, const ClassifyOptions& options) {
  ConditionReport r;
  r.p1 = check_p1(pair, options.early_exit);
  r.p2 = check_p2(pair, options.early_exit);
  if (options.include_strong) {
    r.p1_strong = check_strong_p1(pair, options.early_exit);
    r.p2_strong = check_strong_p2(pair, options.early_exit);
  }
  r.p1_holds = holds(r.p1);
  r.p2_holds = holds(r.p2);
  r.p1_strong_holds = holds(r.p1_strong);
  r.p2_strong_holds = holds(r.p2_strong);
  r.complete = finished(r.p1) && finished(r.p2) && finished(r.p1_strong) && finished(r.p2_strong);
  return r;
}

}  // namespace totcof
