// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "totcof/conditions.hpp"
#include "totcof/derived_limits.hpp"
#include "totcof/diagram.hpp"
#include "totcof/homology.hpp"
#include "totcof/nerve.hpp"
#include "totcof/normal_form.hpp"
#include "totcof/poset.hpp"
#include "totcof/reports.hpp"
#include "totcof/spectral.hpp"

using namespace totcof;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

bool same(const GroupStructure& a, const oracle::Group& b) { return a.free_rank == b.free_rank && a.torsion == b.torsion; }

// Complexes built during the run, audited in criterion 7.
struct Audit {
  std::size_t complexes = 0;
  std::size_t bad_complexes = 0;
  std::vector<IntegerMatrix> matrices;  // sample for the normal-form checks

  void record(const ChainComplex& c) {
    ++complexes;
    bool ok = true;
    for (int n = c.lo(); n <= c.hi() + 1; ++n) {
      // d_n d_{n+1} by plain loops
      const IntegerMatrix& a = c.differential(n);
      const IntegerMatrix& b = c.differential(n + 1);
      for (std::size_t i = 0; i < a.rows() && ok; ++i)
        for (std::size_t j = 0; j < b.cols() && ok; ++j) {
          Integer s = 0;
          for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
          ok = s == 0;
        }
      const IntegerMatrix& d = c.differential(n);
      if (matrices.size() < 300 && d.rows() > 0 && d.cols() > 0 && d.rows() <= 24 && d.cols() <= 24 && !d.is_zero())
        matrices.push_back(d);
    }
    if (!ok) ++bad_complexes;
  }
} audit;

PosetPair segment_with(std::vector<std::string> ideal_labels) {
  Poset c = Poset::from_relations({"a", "b", "ab"}, {{"a", "ab"}, {"b", "ab"}});
  ElementMask ideal(3, false);
  for (const auto& l : ideal_labels) ideal[c.require(l)] = true;
  return PosetPair(c, ideal);
}

ElementMask all_of(std::size_t n) { return ElementMask(n, true); }
ElementMask none_of(std::size_t n) { return ElementMask(n, false); }

oracle::Group oracle_degree(const ChainComplex& c, int n) { return oracle::homology(c, n); }

bool oracle_acyclic(const ChainComplex& c) {
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!oracle::homology(c, n).trivial()) return false;
  return true;
}

ElementMask star_complement(const Poset& p, std::size_t f) {
  ElementMask m(p.size(), false);
  for (std::size_t g = 0; g < p.size(); ++g) m[g] = !p.leq(f, g);
  return m;
}

ChainComplex oracle_relative(const Poset& p, const ElementMask& keep, const ElementMask& sub) {
  return oracle::relative_order_complex(
      p.size(), [&](std::size_t x, std::size_t y) { return p.less(x, y); }, keep, sub);
}

// 1. Generated ball pairs satisfy (P1) and (P2).
Outcome criterion_conditions() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t pairs = 0, verdicts = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& spec : {"simplex:" + std::to_string(n), "cube:" + std::to_string(n)}) {
      const PosetPair pair = generate_pair(spec);
      const ConditionReport r = classify_pair(pair);
      ++pairs;
      verdicts += r.p1.size() + r.p2.size();
      o.require(r.p1_holds && r.p2_holds, spec + ": P1 " + (r.p1_holds ? "true" : "false") + ", P2 " +
                                              (r.p2_holds ? "true" : "false"));
      o.require(r.p2_strong_holds, spec + ": homological P2' fails");
      audit.record(order_complex_chains(pair.ambient));
      audit.record(relative_chains(pair.ambient, pair.ideal));
    }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "runtime " + fixed(t) + " s exceeds 60 s");
  o.detail = std::to_string(pairs) + " ball pairs, " + std::to_string(verdicts) + " verdicts, " + fixed(t) + " s";
  return o;
}

// 2. The segment with ideal {a} fails (P2) at ab with H_1 = Z, and on every
// small pair each verdict agrees with the homology obstruction.
Outcome criterion_counterexample() {
  Outcome o;
  const PosetPair seg = segment_with({"a"});
  const ConditionReport r = classify_pair(seg);
  o.require(r.p1_holds, "segment: P1 should hold");
  o.require(!r.p2_holds, "segment: P2 should fail");
  bool witnessed = false;
  const std::size_t ab = seg.ambient.require("ab");
  // Oracle: N(C)/N(D) is acyclic, so H(Cone beta) = H(N(C)/N(C^ab)).
  const ChainComplex source = oracle_relative(seg.ambient, all_of(3), seg.ideal);
  const ChainComplex target = oracle_relative(seg.ambient, all_of(3), star_complement(seg.ambient, ab));
  o.require(oracle_acyclic(source), "segment: oracle N(C)/N(D) not acyclic");
  const oracle::Group expect = oracle_degree(target, 1);
  o.require(expect == oracle::Group{1, {}}, "segment: oracle H_1(N(C)/N(C^ab)) is not Z");
  for (int n = target.lo(); n <= target.hi(); ++n)
    if (n != 1) o.require(oracle_degree(target, n).trivial(), "segment: oracle target has homology off degree 1");
  for (const auto& w : r.witnesses())
    if (w.condition == Condition::p2) {
      witnessed = true;
      o.require(w.element == "ab", "segment: witness at " + w.element);
      o.require(w.degree == 1, "segment: witness degree " + std::to_string(w.degree));
      o.require(same(w.group, expect), "segment: witness group " + w.group.to_string());
    }
  o.require(witnessed, "segment: no P2 witness");

  // Exhaustive both-way check on posets of size <= 5 with every order ideal.
  std::size_t pairs = 0, checked = 0, failures_seen = 0, passes_seen = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& sp : oracle::posets_up_to_iso(n)) {
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (sp.less[x][y]) rel.emplace_back(x, y);
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
      const Poset c = Poset::from_index_relations(labels, rel);
      for (auto mask : oracle::order_ideals(sp)) {
        ElementMask d(n, false);
        for (int i = 0; i < n; ++i) d[i] = mask >> i & 1;
        const PosetPair pair(c, d);
        const ConditionReport cr = classify_pair(pair, ClassifyOptions{false, false});
        ++pairs;
        for (const auto& v : cr.p1) {
          const bool obstruction = !oracle_acyclic(oracle_relative(c, all_of(n), star_complement(c, v.element)));
          o.require((v.status == VerdictStatus::fail) == obstruction, "P1 verdict disagrees with oracle");
          ++checked;
        }
        for (const auto& v : cr.p2) {
          const bool obstruction = !oracle_acyclic(oracle_relative(c, star_complement(c, v.element), d));
          o.require((v.status == VerdictStatus::fail) == obstruction, "P2 verdict disagrees with oracle");
          (v.status == VerdictStatus::fail ? failures_seen : passes_seen)++;
          ++checked;
        }
      }
    }
  o.require(failures_seen > 0 && passes_seen > 0, "exhaustive sweep did not exercise both outcomes");
  o.detail = "segment witness P2 at ab, H_1 = Z; " + std::to_string(pairs) + " small pairs, " +
             std::to_string(checked) + " verdicts match the obstruction (" + std::to_string(failures_seen) +
             " P2 failures, " + std::to_string(passes_seen) + " passes)";
  return o;
}

struct CorpusEntry {
  std::string spec;
  PosetPair pair;
  std::uint64_t seed;
};

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const char* spec : {"simplex:1", "sd(simplex:1)", "simplex:2", "cube:2", "cone(cube:1)"}) {
    const PosetPair pair = generate_pair(spec);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) out.push_back({spec, pair, seed});
  }
  return out;
}

// 3. H_n(holim) = H_{n+m}(Gamma) on random diagrams over ball pairs.
Outcome criterion_shift(const std::vector<CorpusEntry>& entries) {
  Outcome o;
  std::size_t mismatches = 0, nontrivial = 0, torsion = 0, oracle_checked = 0;
  std::map<std::string, std::size_t> per_pair;
  double worst = 0;
  for (const auto& e : entries) {
    const DiagramOfComplexes x = random_diagram(e.pair.ambient, e.seed);
    const auto t0 = Clock::now();
    const BallEquivalenceReport r = verify_ball_equivalence(x, e.pair);
    worst = std::max(worst, seconds_since(t0));
    ++per_pair[e.spec];
    const std::string tag = e.spec + " seed " + std::to_string(e.seed);
    o.require(r.ball_dimension == *e.pair.ball_dimension, tag + ": wrong ball dimension");
    bool any = false, tors = false;
    for (const auto& d : r.degrees) {
      if (!d.isomorphic || !(d.holim == d.gamma)) {
        ++mismatches;
        o.require(false, tag + ": degree " + std::to_string(d.degree) + " holim " + d.holim.to_string() +
                             " vs Gamma " + d.gamma.to_string());
      }
      any = any || !d.holim.trivial();
      tors = tors || !d.holim.torsion.empty();
    }
    o.require(r.all_isomorphic, tag + ": report not isomorphic");
    nontrivial += any;
    torsion += tors;
    // Independent SNF on both total complexes.
    const TotalComplex h = holim_total(x);
    const TotalComplex g = gamma_total_complex(x, e.pair.ideal);
    audit.record(h.complex);
    audit.record(g.complex);
    const int m = r.ball_dimension;
    for (const auto& d : r.degrees) {
      o.require(same(d.holim, oracle::homology(h.complex, d.degree)), tag + ": holim disagrees with oracle SNF");
      o.require(same(d.gamma, oracle::homology(g.complex, d.degree + m)), tag + ": Gamma disagrees with oracle SNF");
      ++oracle_checked;
    }
    // Degrees outside the reported window vanish on both sides.
    for (int n = h.complex.lo(); n <= h.complex.hi(); ++n) {
      bool reported = false;
      for (const auto& d : r.degrees) reported = reported || d.degree == n;
      if (!reported) o.require(oracle::homology(h.complex, n).trivial(), tag + ": unreported holim degree nonzero");
    }
  }
  for (const auto& [spec, count] : per_pair) o.require(count >= 50, spec + ": fewer than 50 seeds");
  o.require(worst < 5.0, "slowest diagram took " + fixed(worst) + " s");
  o.require(nontrivial > 0 && torsion > 0, "corpus has no nontrivial or no torsion instances");
  o.detail = std::to_string(entries.size()) + " diagrams over " + std::to_string(per_pair.size()) +
             " ball pairs (m = 1, 2), " + std::to_string(mismatches) + " mismatches, " + std::to_string(nontrivial) +
             " nontrivial, " + std::to_string(torsion) + " with torsion, " + std::to_string(oracle_checked) +
             " oracle degree checks, slowest " + fixed(worst, 3) + " s";
  return o;
}

// 4 and 5 share the spectral sequences.
struct SpectralOutcomes {
  Outcome e2;
  Outcome abutment;
};

SpectralOutcomes criteria_spectral(const std::vector<CorpusEntry>& entries) {
  SpectralOutcomes out;
  std::size_t e2_entries = 0, e2_mismatch = 0, e2_nonzero = 0, instances = 0, degrees = 0, higher = 0;
  for (const auto& e : entries) {
    const DiagramOfComplexes y = random_diagram(e.pair.ambient, e.seed);
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
      const std::string tag = e.spec + " seed " + std::to_string(e.seed) + " over " + f.name();
      const SpectralSequence ss = ss_pages(y, f);
      const E2Report r = e2_check(y, ss);
      for (const auto& en : r.entries) {
        ++e2_entries;
        if (en.spectral != 0) ++e2_nonzero;
        if (en.spectral != en.limit) {
          ++e2_mismatch;
          out.e2.require(false, tag + ": E_2(" + std::to_string(en.at.p) + "," + std::to_string(en.at.q) +
                                    ") = " + std::to_string(en.spectral) + " but lim = " + std::to_string(en.limit));
        }
      }
      out.e2.require(r.ok(), tag + ": E_2 report flags mismatches");
      for (const auto& page : ss.pages)
        if (page.r >= 2)
          for (const auto& [b, m] : page.differentials) higher += !m.is_zero();

      const AbutmentReport a = abutment_check(y, ss, &e.pair);
      ++instances;
      // Recompute both sides of the identities from the raw pieces.
      std::map<int, std::size_t> einf;
      for (const auto& [b, d] : ss.e_infinity) einf[b.q - b.p] += d;
      long euler_e2 = 0;
      const SpectralPage* e2page = ss.page(2);
      if (e2page)
        for (const auto& [b, d] : e2page->dims) euler_e2 += ((b.q - b.p) % 2 == 0 ? 1 : -1) * static_cast<long>(d);
      long euler_holim = 0;
      const ChainComplex& total = ss.total.complex;
      for (int n = total.lo(); n <= total.hi(); ++n) {
        const std::size_t h = oracle::field_betti(total, n, f.characteristic());
        euler_holim += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h);
        out.abutment.require(einf[n] == h, tag + ": degree " + std::to_string(n) + " sum E_inf " +
                                               std::to_string(einf[n]) + " vs dim H " + std::to_string(h));
        ++degrees;
      }
      for (const auto& [n, d] : einf)
        if (n < total.lo() || n > total.hi()) out.abutment.require(d == 0, tag + ": E_inf outside the total range");
      out.abutment.require(e2page != nullptr, tag + ": no E_2 page");
      out.abutment.require(euler_e2 == euler_holim, tag + ": Euler E_2 " + std::to_string(euler_e2) + " vs holim " +
                                                        std::to_string(euler_holim));
      out.abutment.require(a.convergence_ok && a.euler_ok && a.shift_ok.value_or(false), tag + ": abutment report fails");
    }
  }
  out.e2.require(e2_nonzero > 0, "no nonzero E_2 entries in the corpus");
  out.e2.detail = std::to_string(entries.size()) + " diagrams over Q and F_2, " + std::to_string(e2_entries) +
                  " (p, q) entries, " + std::to_string(e2_nonzero) + " nonzero, " + std::to_string(e2_mismatch) +
                  " mismatches";
  out.abutment.detail = std::to_string(instances) + " instances, " + std::to_string(degrees) +
                        " degrees against oracle field Betti numbers, Euler identity per instance, " +
                        std::to_string(higher) + " nonzero d_r with r >= 2";
  return out;
}

// 6. Constant diagrams against simplicial (co)homology.
Outcome criterion_constants() {
  Outcome o;
  std::vector<std::string> specs;
  for (int n = 0; n <= 2; ++n)
    for (const std::string base : {"simplex:", "cube:"}) {
      specs.push_back(base + std::to_string(n));
      if (n > 0) specs.push_back(base + std::to_string(n) + "-boundary");
    }
  for (const char* s : {"prism(simplex:1,simplex:1)", "cone(simplex:1)", "cone(cube:1)", "sd(simplex:1)", "sd(cube:1)",
                        "sd(simplex:2)-boundary"})
    specs.push_back(s);
  std::size_t groups = 0;
  for (const auto& spec : specs) {
    const Poset p = generate_pair(spec).ambient;
    const ChainComplex nerve = oracle_relative(p, all_of(p.size()), none_of(p.size()));
    audit.record(order_complex_chains(p));
    for (long a : {0L, 2L, 6L}) {
      IntegerMatrix gen(1, 1);
      gen(0, 0) = a;
      const SubquotientGroup value(Lattice::full(1), a == 0 ? Lattice::zero(1) : Lattice(1, gen));
      const auto lims = all_limp(constant_abelian_diagram(p, value));
      o.require(static_cast<int>(lims.size()) == p.longest_chain_length() + 1, spec + ": wrong number of lim^p");
      for (int k = 0; k < static_cast<int>(lims.size()); ++k) {
        const oracle::Group expect =
            oracle::cohomology_uct(oracle::homology(nerve, k), oracle::homology(nerve, k - 1), Integer(a));
        o.require(same(lims[static_cast<std::size_t>(k)].structure(), expect),
                  spec + ": lim^" + std::to_string(k) + " with A = " + (a == 0 ? "Z" : "Z/" + std::to_string(a)));
        ++groups;
      }
    }
  }
  std::size_t balls = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& spec : {"simplex:" + std::to_string(n), "cube:" + std::to_string(n)}) {
      const PosetPair pair = generate_pair(spec);
      const int m = *pair.ball_dimension;
      const TotalComplex g =
          gamma_total_complex(constant_diagram(pair.ambient, ChainComplex::concentrated(0, {"z"})), pair.ideal);
      audit.record(g.complex);
      const HomologySummary h = homology(g.complex);
      o.require(g.complex.lo() <= m && m <= g.complex.hi(), spec + ": degree m outside Gamma");
      for (int k = g.complex.lo(); k <= g.complex.hi(); ++k) {
        const oracle::Group expect = k == m ? oracle::Group{1, {}} : oracle::Group{};
        o.require(oracle::homology(g.complex, k) == expect, spec + ": oracle H_" + std::to_string(k) + "(Gamma)");
        o.require(same(h.structure(k), expect), spec + ": H_" + std::to_string(k) + "(Gamma)");
      }
      ++balls;
    }
  o.detail = std::to_string(specs.size()) + " posets x {Z, Z/2, Z/6}, " + std::to_string(groups) +
             " lim^p groups; Gamma(constant Z) = reduced H(S^m) on " + std::to_string(balls) + " ball pairs";
  return o;
}

bool unimodular(const IntegerMatrix& u) {
  if (!u.is_square()) return false;
  const auto inv = oracle::invariant_factors(u);
  if (inv.size() != u.rows()) return false;
  for (const auto& d : inv)
    if (d != 1) return false;
  return true;
}

IntegerMatrix times(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0)
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

bool hermite_shape(const HermiteForm& hf) {
  const IntegerMatrix& h = hf.h;
  std::size_t prev = 0;
  for (std::size_t k = 0; k < hf.rank; ++k) {
    const std::size_t r = hf.pivot_rows[k];
    if (k > 0 && r <= prev) return false;
    prev = r;
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, k) != 0) return false;
    if (h(r, k) <= 0) return false;
    for (std::size_t j = k + 1; j < h.cols(); ++j)
      if (h(r, j) != 0) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (h(r, j) < 0 || h(r, j) >= h(r, k)) return false;
  }
  for (std::size_t j = hf.rank; j < h.cols(); ++j)
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) return false;
  return true;
}

// Rank of f_* : H_n(S) -> H_n(T) over a field, from kernels and ranks only.
std::size_t induced_rank(const ChainComplex& s, const ChainComplex& t, const IntegerMatrix& f, int n, long p) {
  const IntegerMatrix z = oracle::field_kernel(s.differential(n), p);
  const IntegerMatrix fz = times(f, z);
  const IntegerMatrix& b = t.differential(n + 1);
  IntegerMatrix both(t.rank(n), b.cols() + fz.cols());
  for (std::size_t i = 0; i < t.rank(n); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) both(i, j) = b(i, j);
    for (std::size_t j = 0; j < fz.cols(); ++j) both(i, b.cols() + j) = fz(i, j);
  }
  return oracle::field_rank(both, p) - oracle::field_rank(b, p);
}

// 7. d^2 = 0 everywhere, normal forms verified, cone sequences exact.
Outcome criterion_invariants() {
  Outcome o;
  std::mt19937_64 rng(20261014);
  std::vector<IntegerMatrix> mats = audit.matrices;
  for (int t = 0; t < 200; ++t) {
    IntegerMatrix m(1 + rng() % 6, 1 + rng() % 6);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(rng() % 13) - 6;
    mats.push_back(m);
  }
  std::size_t nf_checked = 0;
  for (const auto& m : mats) {
    const SmithForm sf = smith_normal_form(m);
    o.require(times(times(sf.u, m), sf.v) == sf.d, "SNF: U M V != D");
    o.require(unimodular(sf.u) && unimodular(sf.v), "SNF: transform not unimodular");
    const auto diag = sf.diagonal();
    for (std::size_t i = 0; i < sf.d.rows(); ++i)
      for (std::size_t j = 0; j < sf.d.cols(); ++j)
        if (i != j) o.require(sf.d(i, j) == 0, "SNF: off-diagonal entry");
    for (std::size_t k = 0; k + 1 < diag.size(); ++k) o.require(diag[k + 1] % diag[k] == 0, "SNF: divisibility");
    o.require(diag == oracle::invariant_factors(m), "SNF: diagonal differs from oracle invariant factors");
    const HermiteForm hf = hermite_normal_form(m);
    o.require(times(m, hf.u) == hf.h, "HNF: M U != H");
    o.require(unimodular(hf.u), "HNF: transform not unimodular");
    o.require(hermite_shape(hf), "HNF: not in Hermite shape");
    o.require(hf.rank == oracle::integer_rank(m), "HNF: rank");
    ++nf_checked;
  }

  // Mapping cones of random diagram maps.
  const std::vector<std::string> bases = {"simplex:1", "simplex:2", "cube:2", "cube:2-boundary", "sd(simplex:1)"};
  std::size_t cones = 0, positions = 0;
  for (int t = 0; t < 100; ++t) {
    const Poset p = generate_pair(bases[static_cast<std::size_t>(t) % bases.size()]).ambient;
    const DiagramOfComplexes d = random_diagram(p, 1000 + static_cast<std::uint64_t>(t));
    std::vector<CoverKey> rel;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.less(x, y)) rel.push_back({x, y});
    const CoverKey k = rel[rng() % rel.size()];
    const ChainMap& f = d.map(k.first, k.second);
    const ChainComplex cone = mapping_cone(f);
    audit.record(cone);
    const ChainComplex& s = f.source();
    const ChainComplex& tt = f.target();
    const std::string tag = "cone " + std::to_string(t);
    // Library cone against the block formula.
    for (int n = cone.lo(); n <= cone.hi(); ++n) {
      const IntegerMatrix& dc = cone.differential(n);
      const std::size_t tn = tt.rank(n), sn1 = s.rank(n - 1), tn1 = tt.rank(n - 1);
      o.require(dc.rows() == tn1 + s.rank(n - 2) && dc.cols() == tn + sn1, tag + ": cone shape");
      if (dc.rows() != tn1 + s.rank(n - 2) || dc.cols() != tn + sn1) continue;
      const IntegerMatrix fn1 = f.component(n - 1);
      for (std::size_t i = 0; i < dc.rows(); ++i)
        for (std::size_t j = 0; j < dc.cols(); ++j) {
          Integer want = 0;
          if (i < tn1 && j < tn) want = tt.differential(n)(i, j);
          else if (i < tn1) want = fn1(i, j - tn);
          else if (j >= tn) want = -s.differential(n - 1)(i - tn1, j - tn);
          o.require(dc(i, j) == want, tag + ": cone entry");
        }
    }
    const LesReport les = verify_long_exact_sequence(
        cone, [&](int n, std::size_t i) { return i < tt.rank(n); });
    o.require(les.exact, tag + ": long exact sequence not exact");
    positions += les.positions_checked;
    for (long prime : {0L, 2L}) {
      for (int n = cone.lo(); n <= cone.hi(); ++n) {
        const std::size_t h = oracle::field_betti(cone, n, prime);
        const std::size_t coker = oracle::field_betti(tt, n, prime) - induced_rank(s, tt, f.component(n), n, prime);
        const std::size_t ker =
            oracle::field_betti(s, n - 1, prime) - induced_rank(s, tt, f.component(n - 1), n - 1, prime);
        o.require(h == coker + ker, tag + ": dim H_" + std::to_string(n) + "(Cone) != coker + ker");
      }
    }
    ++cones;
  }
  o.require(audit.bad_complexes == 0, std::to_string(audit.bad_complexes) + " complexes with d^2 != 0");
  o.detail = std::to_string(audit.complexes) + " complexes with d^2 = 0, " + std::to_string(nf_checked) +
             " matrices through SNF and HNF checks, " + std::to_string(cones) + " cone sequences (" +
             std::to_string(positions) + " positions) exact";
  return o;
}

std::string render(const Report& r) { return r.json.dump(2) + "\n" + r.text; }

std::vector<std::string> all_reports() {
  std::vector<std::string> out;
  ReportOptions q;
  q.input = "acceptance";
  ReportOptions f2 = q;
  f2.field = Field::prime(2);
  const PosetPair cube = generate_pair("cube:2");
  const PosetPair circle = generate_pair("cube:2-boundary");
  const PosetPair seg = segment_with({"a"});
  out.push_back(render(check_report(cube, q)));
  out.push_back(render(check_report(seg, q)));
  out.push_back(render(homology_report(generate_pair("cube:3"), q)));
  out.push_back(render(limp_report(homotopy_groups_diagram(random_diagram(circle.ambient, 4), 1), std::nullopt, q)));
  for (std::uint64_t seed : {3u, 7u, 12u}) {
    const DiagramOfComplexes x = random_diagram(cube.ambient, seed);
    out.push_back(render(gamma_report(x, cube, q)));
    out.push_back(render(holim_report(x, q)));
    out.push_back(render(verify_report(x, cube, q)));
    out.push_back(render(ss_report(x, &cube, -1, q)));
    out.push_back(render(ss_report(x, &cube, -1, f2)));
  }
  return out;
}

struct Process {
  int status = -1;
  std::string output;
};

Process run_cli(const std::string& args) {
  Process r;
  const std::string cmd = "'" TOTCOF_CLI "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 8. Identical jobs give byte-identical reports.
Outcome criterion_determinism() {
  Outcome o;
  const auto a = all_reports();
  const auto b = all_reports();
  o.require(a.size() == b.size(), "report counts differ");
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    o.require(a[i] == b[i], "library report " + std::to_string(i) + " differs between runs");
    bytes += a[i].size();
  }
  const auto dir = std::filesystem::path(TOTCOF_WORK_DIR) / "acceptance_work";
  std::filesystem::create_directories(dir);
  const std::vector<std::string> jobs = {
      "check --generate cube:2",
      "limp --generate cube:2-boundary --constant Z --p 1",
      "verify --generate cube:2 --random-diagram seed=7",
      "gamma --generate simplex:2 --random-diagram seed=9",
      "holim --generate 'sd(simplex:1)' --random-diagram seed=5",
      "ss --generate cube:2 --random-diagram seed=6 --field fp:2",
  };
  std::size_t cli = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    std::string files[2];
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const auto path = dir / ("job" + std::to_string(k) + "_run" + std::to_string(run) + ".json");
      std::filesystem::remove(path);
      const Process p = run_cli(jobs[k] + " --out '" + path.string() + "'");
      o.require(p.status == 0, "'" + jobs[k] + "' exited " + std::to_string(p.status));
      outputs[run] = p.output;
      files[run] = slurp(path);
    }
    o.require(!files[0].empty(), "'" + jobs[k] + "' wrote no report");
    o.require(files[0] == files[1], "'" + jobs[k] + "' JSON differs between runs");
    o.require(outputs[0] == outputs[1], "'" + jobs[k] + "' text differs between runs");
    ++cli;
  }
  o.detail = std::to_string(a.size()) + " library reports (" + std::to_string(bytes) + " bytes) and " +
             std::to_string(cli) + " CLI jobs identical across two runs";
  return o;
}

}  // namespace

int main() {
  struct Line {
    int id;
    const char* name;
    Outcome outcome;
    double seconds;
  };
  std::vector<Line> lines;
  auto run = [&](int id, const char* name, const std::function<Outcome()>& f) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    lines.push_back({id, name, o, seconds_since(t0)});
  };

  const auto entries = corpus();
  SpectralOutcomes spectral;
  run(1, "condition suite", criterion_conditions);
  run(2, "counterexample suite", criterion_counterexample);
  run(3, "shift equivalence", [&] { return criterion_shift(entries); });
  const auto t_ss = Clock::now();
  bool spectral_threw = false;
  std::string spectral_error;
  try {
    spectral = criteria_spectral(entries);
  } catch (const std::exception& e) {
    spectral_threw = true;
    spectral_error = e.what();
  }
  const double ss_seconds = seconds_since(t_ss);
  if (spectral_threw) {
    spectral.e2.pass = spectral.abutment.pass = false;
    spectral.e2.failures.push_back("exception: " + spectral_error);
    spectral.abutment.failures.push_back("exception: " + spectral_error);
  }
  lines.push_back({4, "E2 identity", spectral.e2, ss_seconds});
  lines.push_back({5, "abutment", spectral.abutment, ss_seconds});
  run(6, "constant-diagram oracles", criterion_constants);
  run(7, "algebraic invariants", criterion_invariants);
  run(8, "determinism", criterion_determinism);

  bool all = true;
  for (const auto& l : lines) {
    all = all && l.outcome.pass;
    std::cout << (l.outcome.pass ? "PASS" : "FAIL") << " [" << l.id << "] " << l.name << ": " << l.outcome.detail
              << " (" << fixed(l.seconds, 2) << " s)\n";
    for (const auto& f : l.outcome.failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
