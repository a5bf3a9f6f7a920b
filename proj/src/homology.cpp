#include "totcof/homology.hpp"

#include <memory>

#include "totcof/error.hpp"
#include "totcof/normal_form.hpp"

namespace totcof {

const SubquotientGroup& HomologySummary::group(int n) const {
  static const SubquotientGroup zero_group = SubquotientGroup::zero();
  if (n < lo_ || n > hi()) return zero_group;
  return groups_[static_cast<std::size_t>(n - lo_)];
}

bool HomologySummary::trivial() const {
  for (const auto& g : groups_)
    if (!g.trivial()) return false;
  return true;
}

std::vector<int> HomologySummary::nonzero_degrees() const {
  std::vector<int> out;
  for (int n = lo_; n <= hi(); ++n)
    if (!group(n).trivial()) out.push_back(n);
  return out;
}

SubquotientGroup homology_group(const ChainComplex& x, int n) {
  const std::size_t r = x.rank(n);
  if (r == 0) return SubquotientGroup::zero(0);
  const IntegerMatrix& out = x.differential(n);
  Lattice cycles = out.rows() == 0 ? Lattice::full(r) : Lattice(r, kernel_basis(out));
  Lattice boundaries(r, x.differential(n + 1));
  return group_structure(cycles, boundaries);
}

HomologySummary homology(const ChainComplex& x) {
  std::vector<SubquotientGroup> groups;
  for (int n = x.lo(); n <= x.hi(); ++n) groups.push_back(homology_group(x, n));
  return HomologySummary(x.lo(), std::move(groups));
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  if (!s.has_degrees() && !t.has_degrees()) return ChainComplex();
  int lo = t.has_degrees() ? t.lo() : s.lo() + 1;
  int hi = t.has_degrees() ? t.hi() : s.hi() + 1;
  if (s.has_degrees()) {
    lo = std::min(lo, s.lo() + 1);
    hi = std::max(hi, s.hi() + 1);
  }
  std::vector<std::vector<std::string>> bases;
  std::vector<IntegerMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::string> basis;
    for (const auto& l : t.basis(n)) basis.push_back("T:" + l);
    for (const auto& l : s.basis(n - 1)) basis.push_back("S:" + l);
    bases.push_back(std::move(basis));

    const std::size_t tn = t.rank(n), sn = s.rank(n - 1);
    const std::size_t tb = t.rank(n - 1), sb = s.rank(n - 2);
    IntegerMatrix d(tb + sb, tn + sn);
    const IntegerMatrix& dt = t.differential(n);
    const IntegerMatrix fn = f.component(n - 1);
    const IntegerMatrix& ds = s.differential(n - 1);
    for (std::size_t i = 0; i < tb; ++i) {
      for (std::size_t j = 0; j < tn; ++j) d(i, j) = dt(i, j);
      for (std::size_t j = 0; j < sn; ++j) d(i, tn + j) = fn(i, j);
    }
    for (std::size_t i = 0; i < sb; ++i)
      for (std::size_t j = 0; j < sn; ++j) d(tb + i, tn + j) = -ds(i, j);
    diffs.push_back(n == lo ? IntegerMatrix(0, tn + sn) : std::move(d));
  }
  return ChainComplex(lo, std::move(bases), std::move(diffs));
}

bool InducedHomology::is_isomorphism() const {
  for (const auto& m : maps)
    if (!m.is_isomorphism()) return false;
  return true;
}

InducedHomology induced_map_on_homology(const ChainMap& f) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  InducedHomology out;
  if (!s.has_degrees() && !t.has_degrees()) return out;
  int lo = s.has_degrees() ? s.lo() : t.lo();
  int hi = s.has_degrees() ? s.hi() : t.hi();
  if (t.has_degrees()) {
    lo = std::min(lo, t.lo());
    hi = std::max(hi, t.hi());
  }
  out.lo = lo;
  for (int n = lo; n <= hi; ++n)
    out.maps.push_back(induced_map(f.component(n), homology_group(s, n), homology_group(t, n)));
  return out;
}

ChainComplex augmented(const ChainComplex& x) {
  if (x.rank(-1) != 0) fail(ErrorCode::input, "cannot augment a complex with a nonzero degree -1 module");
  if (x.rank(0) == 0) return x;
  const int lo = std::min(-1, x.lo());
  const int hi = std::max(0, x.hi());
  std::vector<std::vector<std::string>> bases;
  std::vector<IntegerMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    if (n == -1) {
      bases.push_back({"()"});
      diffs.push_back(IntegerMatrix(x.rank(-2), 1));
    } else if (n == 0) {
      bases.push_back(x.basis(0));
      IntegerMatrix aug(1, x.rank(0));
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(0, j) = 1;
      diffs.push_back(std::move(aug));
    } else {
      bases.push_back(x.basis(n));
      diffs.push_back(n == lo ? IntegerMatrix(0, x.rank(n)) : x.differential(n));
    }
  }
  return ChainComplex(lo, std::move(bases), std::move(diffs));
}

bool is_homologically_trivial(const ChainComplex& x, bool reduced) {
  return homology(reduced ? augmented(x) : x).trivial();
}

BasisSplit split_subcomplex(const ChainComplex& b, const std::function<bool(int, std::size_t)>& in_sub) {
  BasisSplit out;
  if (!b.has_degrees()) return out;
  for (int n = b.lo(); n <= b.hi(); ++n) {
    auto& sp = out.sub_positions[n];
    auto& qp = out.quotient_positions[n];
    for (std::size_t i = 0; i < b.rank(n); ++i) (in_sub(n, i) ? sp : qp).push_back(i);
  }
  auto positions = [](const std::map<int, std::vector<std::size_t>>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? std::vector<std::size_t>{} : it->second;
  };
  std::vector<std::vector<std::string>> sub_bases, quo_bases;
  std::vector<IntegerMatrix> sub_diffs, quo_diffs;
  for (int n = b.lo(); n <= b.hi(); ++n) {
    const auto sp = positions(out.sub_positions, n), qp = positions(out.quotient_positions, n);
    const auto spb = positions(out.sub_positions, n - 1), qpb = positions(out.quotient_positions, n - 1);
    std::vector<std::string> sl, ql;
    for (auto i : sp) sl.push_back(b.basis(n)[i]);
    for (auto i : qp) ql.push_back(b.basis(n)[i]);
    sub_bases.push_back(std::move(sl));
    quo_bases.push_back(std::move(ql));
    const IntegerMatrix& d = b.differential(n);
    if (n == b.lo()) {
      sub_diffs.push_back(IntegerMatrix(0, sp.size()));
      quo_diffs.push_back(IntegerMatrix(0, qp.size()));
      continue;
    }
    // a sub column must not reach a quotient row
    for (auto j : sp)
      for (auto i : qpb)
        if (sgn(d(i, j)) != 0)
          fail(ErrorCode::input, "selected basis is not a subcomplex in degree " + std::to_string(n));
    sub_diffs.push_back(d.select_rows(spb).select_columns(sp));
    quo_diffs.push_back(d.select_rows(qpb).select_columns(qp));
  }
  out.sub = ChainComplex(b.lo(), std::move(sub_bases), std::move(sub_diffs));
  out.quotient = ChainComplex(b.lo(), std::move(quo_bases), std::move(quo_diffs));
  return out;
}

namespace {

IntegerMatrix inclusion_matrix(std::size_t rows, const std::vector<std::size_t>& positions) {
  IntegerMatrix m(rows, positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) m(positions[k], k) = 1;
  return m;
}

}  // namespace

LesReport verify_long_exact_sequence(const ChainComplex& b, const std::function<bool(int, std::size_t)>& in_sub) {
  LesReport report;
  if (!b.has_degrees()) return report;
  const BasisSplit split = split_subcomplex(b, in_sub);
  auto pos = [](const std::map<int, std::vector<std::size_t>>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? std::vector<std::size_t>{} : it->second;
  };

  const int lo = b.lo() - 1, hi = b.hi() + 1;
  std::map<int, SubquotientGroup> ha, hb, hq;
  for (int n = lo; n <= hi; ++n) {
    ha[n] = homology_group(split.sub, n);
    hb[n] = homology_group(b, n);
    hq[n] = homology_group(split.quotient, n);
  }
  std::map<int, GroupHomomorphism> inc, proj, conn;
  for (int n = lo; n <= hi; ++n) {
    inc[n] = induced_map(inclusion_matrix(b.rank(n), pos(split.sub_positions, n)), ha[n], hb[n]);
    proj[n] = induced_map(inclusion_matrix(b.rank(n), pos(split.quotient_positions, n)).transpose(), hb[n], hq[n]);
    IntegerMatrix block(split.sub.rank(n - 1), split.quotient.rank(n));
    if (n > b.lo() && n <= b.hi())
      block = b.differential(n).select_rows(pos(split.sub_positions, n - 1)).select_columns(pos(split.quotient_positions, n));
    conn[n] = induced_map(block, hq[n], ha[n - 1]);
  }

  auto check = [&](const GroupHomomorphism& in, const GroupHomomorphism& out, const std::string& where) {
    ++report.positions_checked;
    if (!(in.image().numerator() == out.kernel().numerator())) {
      report.exact = false;
      report.failures.push_back(where);
    }
  };
  for (int n = lo + 1; n < hi; ++n) {
    check(conn[n + 1], inc[n], "H_" + std::to_string(n) + "(A)");
    check(inc[n], proj[n], "H_" + std::to_string(n) + "(B)");
    check(proj[n], conn[n], "H_" + std::to_string(n) + "(B/A)");
  }
  return report;
}

}  // namespace totcof
