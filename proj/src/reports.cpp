#include "totcof/reports.hpp"

#include <algorithm>
#include <sstream>

#include "totcof/conditions.hpp"
#include "totcof/error.hpp"
#include "totcof/homology.hpp"
#include "totcof/nerve.hpp"

namespace totcof {

namespace {

Json header(const char* command, const ReportOptions& o) {
  return {{"command", command}, {"input", o.input}, {"conventions", conventions()}};
}

bool in_window(int n, const ReportOptions& o) {
  return !o.degrees || (n >= o.degrees->first && n <= o.degrees->second);
}

std::string group_text(const GroupStructure& g) { return g.to_string(); }

// Degree records of a homology summary inside the window; degrees outside the
// computed range but inside the window are reported as zero.
Json homology_records(const HomologySummary& h, const ReportOptions& o) {
  Json out = Json::array();
  int lo = h.lo(), hi = h.hi();
  if (o.degrees) {
    lo = o.degrees->first;
    hi = o.degrees->second;
  }
  for (int n = lo; n <= hi; ++n) {
    const GroupStructure g = (n >= h.lo() && n <= h.hi()) ? h.structure(n) : GroupStructure{};
    Json rec = group_to_json(g);
    rec["degree"] = n;
    out.push_back(std::move(rec));
  }
  return out;
}

void homology_lines(std::ostringstream& os, const std::string& name, const Json& records) {
  bool any = false;
  for (const auto& rec : records) {
    GroupStructure g;
    g.free_rank = rec["free_rank"].get<std::size_t>();
    for (const auto& t : rec["torsion"]) g.torsion.emplace_back(t.get<std::string>());
    if (g.trivial()) continue;
    os << "  H_" << rec["degree"].get<int>() << "(" << name << ") = " << group_text(g) << "\n";
    any = true;
  }
  if (!any) os << "  H_*(" << name << ") = 0\n";
}

void verdict_lines(std::ostringstream& os, const std::string& name, const std::vector<Verdict>& vs, bool holds) {
  std::size_t pass = 0, failed = 0, skipped = 0;
  for (const auto& v : vs) {
    if (v.status == VerdictStatus::pass) ++pass;
    else if (v.status == VerdictStatus::fail) ++failed;
    else ++skipped;
  }
  os << name << ": " << (holds ? "holds" : "fails") << " (" << pass << " pass, " << failed << " fail";
  if (skipped) os << ", " << skipped << " skipped";
  os << ")\n";
}

void condition_lines(std::ostringstream& os, const ConditionReport& r) {
  verdict_lines(os, "P1", r.p1, r.p1_holds);
  verdict_lines(os, "P2", r.p2, r.p2_holds);
  if (!r.p1_strong.empty() || !r.p2_strong.empty()) {
    verdict_lines(os, "P1' (homological approximation)", r.p1_strong, r.p1_strong_holds);
    verdict_lines(os, "P2' (homological approximation)", r.p2_strong, r.p2_strong_holds);
  }
  const auto ws = r.witnesses();
  if (!ws.empty()) {
    os << "witnesses:\n";
    for (const auto& w : ws)
      os << "  " << condition_name(w.condition) << " at " << w.element << ": H_" << w.degree << "(" << w.complex
         << ") = " << group_text(w.group) << "\n";
  }
}

std::string pair_summary(const PosetPair& pair) {
  std::ostringstream os;
  os << pair.ambient.size() << " elements, ideal of " << pair.ideal_indices().size();
  if (pair.ball_dimension) os << ", ball dimension " << *pair.ball_dimension;
  return os.str();
}

Json pair_json(const PosetPair& pair) {
  Json j = {{"elements", pair.ambient.size()}, {"ideal", pair.ideal_indices().size()},
            {"longest_chain", pair.ambient.longest_chain_length()}};
  j["ball_dimension"] = pair.ball_dimension ? Json(*pair.ball_dimension) : Json(nullptr);
  return j;
}

Json comparison_json(const BallEquivalenceReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"gamma_degree", d.degree + r.ball_dimension},
                       {"holim", group_to_json(d.holim)},
                       {"gamma", group_to_json(d.gamma)},
                       {"isomorphic", d.isomorphic}});
  return {{"ball_dimension", r.ball_dimension}, {"degrees", std::move(degrees)}, {"all_isomorphic", r.all_isomorphic}};
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

// Bigraded table with q down the rows (descending) and p across.
void page_table(std::ostringstream& os, const std::map<Bidegree, std::size_t>& dims, int longest) {
  if (dims.empty()) {
    os << "  (all zero)\n";
    return;
  }
  int qlo = dims.begin()->first.q, qhi = qlo;
  for (const auto& [b, d] : dims) {
    qlo = std::min(qlo, b.q);
    qhi = std::max(qhi, b.q);
  }
  const std::size_t w = 4;
  os << "  " << pad("q\\p", 5);
  for (int p = 0; p <= longest; ++p) os << pad(std::to_string(p), w);
  os << "\n";
  for (int q = qhi; q >= qlo; --q) {
    os << "  " << pad(std::to_string(q), 5);
    for (int p = 0; p <= longest; ++p) {
      auto it = dims.find({p, q});
      os << pad(it == dims.end() ? "." : std::to_string(it->second), w);
    }
    os << "\n";
  }
}

Json dims_json(const std::map<Bidegree, std::size_t>& dims, int r) {
  Json rows = Json::array();
  for (const auto& [b, d] : dims) {
    Json row = {{"p", b.p}, {"q", b.q}, {"dim", d}};
    if (r >= 0) row["r"] = r;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json conventions() {
  return {
      {"chains",
       "strict chains x_0 < ... < x_p of element indices, in lexicographic order; d_i deletes x_i"},
      {"order_complex", "d = sum_i (-1)^i d_i; relative chains drop faces inside the subposet"},
      {"mapping_cone", "Cone(f)_n = T_n + S_{n-1}, d = [[d_T, f], [0, -d_S]], basis T before S"},
      {"hocolim",
       "cell (x_0 < ... < x_p) (x) value(x_0)_q in degree p + q; d = sum_i (-1)^i d_i + (-1)^p d_int, d_0 "
       "applies value(x_0) -> value(x_1)"},
      {"gamma", "hocolim over C modulo chains inside D; basis is the chains with top outside D"},
      {"holim",
       "cell (x_0 < ... < x_p) (x) value(x_p)_q in degree q - p; D = delta + (-1)^p d_int, delta = sum_i (-1)^i "
       "over deletions of a (p+1)-chain, the top deletion applies value(x_p) -> value(x_{p+1})"},
      {"lim_cochains",
       "(da)(x_0<...<x_{p+1}) = sum_{i<=p} (-1)^i a(d_i) + (-1)^(p+1) A(x_p <= x_{p+1}) a(d_{p+1})"},
      {"total_basis", "per total degree: chain dimension p ascending, then chain order, then value basis order"},
      {"filtration", "F^s of the holim total complex is spanned by cells with p >= s; d_r: (p, q) -> (p + r, q + r - 1)"},
      {"groups", "free rank and invariant factors d_1 | d_2 | ..., all > 1, as decimal strings"},
      {"matrices", "sparse triplets [row, col, decimal string], row-major, zeros omitted"},
  };
}

std::string field_entry(const mpq_class& v) { return v.get_str(); }

Json field_matrix_to_json(const FieldMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) entries.push_back(Json::array({i, j, field_entry(m(i, j))}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Report check_report(const PosetPair& pair, const ReportOptions& options) {
  const ConditionReport r = classify_pair(pair);
  Report out;
  out.json = header("check", options);
  out.json["pair"] = pair_json(pair);
  out.json["result"] = condition_report_to_json(r);
  out.passed = r.equivalence_holds();
  std::ostringstream os;
  os << "check " << options.input << " (" << pair_summary(pair) << ")\n";
  condition_lines(os, r);
  os << "holim and Gamma agree: " << (r.equivalence_holds() ? "yes" : "not guaranteed") << "\n";
  out.text = os.str();
  return out;
}

Report homology_report(const PosetPair& pair, const ReportOptions& options) {
  const Poset& c = pair.ambient;
  const Json whole = homology_records(homology(order_complex_chains(c)), options);
  const Json ideal = homology_records(homology(order_complex_chains(c, pair.ideal)), options);
  const Json rel = homology_records(homology(relative_chains(c, pair.ideal)), options);
  Report out;
  out.json = header("homology", options);
  out.json["pair"] = pair_json(pair);
  out.json["result"] = {{"nerve", whole}, {"ideal", ideal}, {"relative", rel}};
  std::ostringstream os;
  os << "homology " << options.input << " (" << pair_summary(pair) << ")\n";
  homology_lines(os, "NC", whole);
  homology_lines(os, "ND", ideal);
  homology_lines(os, "NC/ND", rel);
  out.text = os.str();
  return out;
}

Report limp_report(const AbelianDiagram& a, std::optional<int> p, const ReportOptions& options) {
  Report out;
  out.json = header("limp", options);
  std::ostringstream os;
  os << "limp " << options.input << "\n";
  Json groups = Json::array();
  auto add = [&](int k, const SubquotientGroup& g, bool out_of_range) {
    Json rec = group_to_json(g.structure());
    rec["p"] = k;
    if (out_of_range) rec["out_of_range"] = true;
    groups.push_back(std::move(rec));
    os << "  lim^" << k << " = " << group_text(g.structure()) << (out_of_range ? "  (outside 0..longest chain)" : "")
       << "\n";
  };
  if (p) {
    const LimpResult r = limp(a, *p);
    add(*p, r.group, r.out_of_range);
  } else {
    const auto all = all_limp(a);
    for (std::size_t k = 0; k < all.size(); ++k) add(static_cast<int>(k), all[k], false);
  }
  out.json["result"] = {{"longest_chain", a.poset().longest_chain_length()}, {"groups", std::move(groups)}};
  out.text = os.str();
  return out;
}

Report gamma_report(const DiagramOfComplexes& x, const PosetPair& pair, const ReportOptions& options) {
  const TotalComplex t = gamma_total_complex(x, pair.ideal);
  const Json h = homology_records(homology(t.complex), options);
  Report out;
  out.json = header("gamma", options);
  out.json["pair"] = pair_json(pair);
  out.json["result"] = {{"total_rank", t.complex.total_rank()}, {"homology", h}};
  std::ostringstream os;
  os << "gamma " << options.input << " (" << pair_summary(pair) << ", total rank " << t.complex.total_rank()
     << ")\n";
  homology_lines(os, "Gamma", h);
  out.text = os.str();
  return out;
}

Report holim_report(const DiagramOfComplexes& y, const ReportOptions& options) {
  const TotalComplex t = holim_total(y);
  const Json h = homology_records(homology(t.complex), options);
  Report out;
  out.json = header("holim", options);
  out.json["result"] = {{"total_rank", t.complex.total_rank()}, {"homology", h}};
  std::ostringstream os;
  os << "holim " << options.input << " (" << y.size() << " elements, total rank " << t.complex.total_rank()
     << ")\n";
  homology_lines(os, "holim", h);
  out.text = os.str();
  return out;
}

Report verify_report(const DiagramOfComplexes& x, const PosetPair& pair, const ReportOptions& options) {
  if (!pair.ball_dimension) fail(ErrorCode::input, "verify needs a pair with a recorded ball dimension");
  if (!(x.poset() == pair.ambient)) fail(ErrorCode::input, "diagram is indexed by a different poset than the pair");
  ClassifyOptions co;
  co.include_strong = false;
  const ConditionReport conditions = classify_pair(pair, co);
  Report out;
  out.json = header("verify", options);
  out.json["pair"] = pair_json(pair);
  std::ostringstream os;
  os << "verify " << options.input << " (" << pair_summary(pair) << ")\n";
  if (!conditions.equivalence_holds()) {
    out.passed = false;
    out.json["result"] = {{"refused", true}, {"conditions", condition_report_to_json(conditions)}};
    os << "refused: the pair fails the conditions\n";
    condition_lines(os, conditions);
    out.text = os.str();
    return out;
  }
  const BallEquivalenceReport r = compare_holim_gamma(x, pair, *pair.ball_dimension);
  Json cmp = comparison_json(r);
  if (options.degrees) {
    Json kept = Json::array();
    for (const auto& d : cmp["degrees"])
      if (in_window(d["degree"].get<int>(), options)) kept.push_back(d);
    cmp["degrees"] = std::move(kept);
  }
  out.passed = r.all_isomorphic;
  out.json["result"] = {{"refused", false}, {"comparison", cmp}};
  const std::string gamma_head = "H_{n+" + std::to_string(r.ball_dimension) + "}(Gamma)";
  std::size_t w1 = 10, w2 = gamma_head.size();
  for (const auto& d : r.degrees) {
    w1 = std::max(w1, group_text(d.holim).size());
    w2 = std::max(w2, group_text(d.gamma).size());
  }
  os << "  " << pad("n", 4) << "  " << pad("H_n(holim)", w1) << "  " << pad(gamma_head, w2) << "  iso\n";
  for (const auto& d : r.degrees) {
    if (!in_window(d.degree, options)) continue;
    os << "  " << pad(std::to_string(d.degree), 4) << "  " << pad(group_text(d.holim), w1) << "  "
       << pad(group_text(d.gamma), w2) << "  " << (d.isomorphic ? "yes" : "NO") << "\n";
  }
  os << (r.all_isomorphic ? "all degrees isomorphic\n" : "MISMATCH\n");
  out.text = os.str();
  return out;
}

Report ss_report(const DiagramOfComplexes& y, const PosetPair* pair, int r_max, const ReportOptions& options) {
  const SpectralSequence ss = ss_pages(y, options.field, r_max);
  const PosetPair* shift = (pair && pair->ball_dimension && pair->ambient == y.poset()) ? pair : nullptr;
  const E2Report e2 = e2_check(y, ss);
  const AbutmentReport ab = abutment_check(y, ss, shift);
  auto keep = [&](const Bidegree& b) { return in_window(b.q - b.p, options); };

  Report out;
  out.json = header("ss", options);
  std::ostringstream os;
  os << "ss " << options.input << " over " << ss.field.name() << " (longest chain " << ss.longest_chain << ")\n";

  Json pages = Json::array();
  for (const auto& page : ss.pages) {
    std::map<Bidegree, std::size_t> dims;
    for (const auto& [b, d] : page.dims)
      if (keep(b)) dims[b] = d;
    os << "E_" << page.r << ":\n";
    page_table(os, dims, ss.longest_chain);
    Json diffs = Json::array();
    for (const auto& [b, m] : page.differentials) {
      if (!keep(b) || m.is_zero()) continue;
      const int tp = b.p + page.r, tq = b.q + page.r - 1;
      diffs.push_back({{"source", {b.p, b.q}}, {"target", {tp, tq}}, {"matrix", field_matrix_to_json(m)}});
      os << "  d_" << page.r << " (" << b.p << "," << b.q << ") -> (" << tp << "," << tq << ") has rank " << m.rank()
         << "\n";
    }
    pages.push_back({{"r", page.r}, {"dims", dims_json(dims, page.r)}, {"differentials", std::move(diffs)}});
  }
  std::map<Bidegree, std::size_t> einf;
  for (const auto& [b, d] : ss.e_infinity)
    if (keep(b)) einf[b] = d;
  os << "E_inf:\n";
  page_table(os, einf, ss.longest_chain);

  Json e2j = Json::array();
  std::size_t e2_mismatch = 0;
  for (const auto& e : e2.entries) {
    if (!keep(e.at)) continue;
    const bool ok = e.spectral == e.limit;
    if (!ok) ++e2_mismatch;
    if (e.spectral == 0 && e.limit == 0) continue;
    e2j.push_back({{"p", e.at.p}, {"q", e.at.q}, {"spectral", e.spectral}, {"limit", e.limit}, {"match", ok}});
  }
  os << "E_2 = lim^p H_q: " << (e2_mismatch == 0 ? "yes" : "NO") << " (" << e2_mismatch << " mismatches)\n";

  Json abj = Json::array();
  bool conv = true, shift_ok = true;
  for (const auto& d : ab.degrees) {
    if (!in_window(d.degree, options)) continue;
    conv = conv && d.e_infinity == d.holim;
    Json rec = {{"degree", d.degree}, {"e_infinity", d.e_infinity}, {"holim", d.holim}};
    if (d.gamma) {
      rec["gamma"] = *d.gamma;
      shift_ok = shift_ok && *d.gamma == d.holim;
    }
    abj.push_back(std::move(rec));
  }
  os << "abutment sum E_inf = dim H(holim): " << (conv ? "yes" : "NO") << "\n";
  if (ab.shift_ok) os << "shift dim H_{n+m}(Gamma) = dim H_n(holim): " << (shift_ok ? "yes" : "NO") << "\n";
  os << "Euler characteristic E_2 " << ab.euler_e2 << ", holim " << ab.euler_holim << ": "
     << (ab.euler_ok ? "yes" : "NO") << "\n";

  Json abut = {{"degrees", std::move(abj)}, {"convergence_ok", conv}, {"euler_e2", ab.euler_e2},
               {"euler_holim", ab.euler_holim}, {"euler_ok", ab.euler_ok}};
  if (ab.shift_ok) abut["shift_ok"] = shift_ok;
  out.json["result"] = {{"field", ss.field.name()},
                        {"longest_chain", ss.longest_chain},
                        {"pages", std::move(pages)},
                        {"e_infinity", dims_json(einf, -1)},
                        {"e2_check", {{"entries", std::move(e2j)}, {"mismatches", e2_mismatch}}},
                        {"abutment", std::move(abut)}};
  out.passed = e2_mismatch == 0 && conv && ab.euler_ok && (!ab.shift_ok || shift_ok);
  out.text = os.str();
  return out;
}

}  // namespace totcof
