#include "totcof/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <tuple>

#include "totcof/derived_limits.hpp"
#include "totcof/error.hpp"
#include "totcof/homology.hpp"

namespace totcof {

Field Field::prime(long p) {
  if (p < 2) fail(ErrorCode::input, "field characteristic must be a prime, got " + std::to_string(p));
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorCode::input, "field characteristic must be a prime, got " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() || digits.size() > 12 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      fail(ErrorCode::input, "bad field spec '" + spec + "' (expected q or fp:<prime>)");
    return prime(std::stol(digits));
  }
  fail(ErrorCode::input, "bad field spec '" + spec + "' (expected q or fp:<prime>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

mpq_class Field::reduce(const mpq_class& x) const {
  if (p_ == 0) {
    mpq_class y = x;
    y.canonicalize();
    return y;
  }
  const mpz_class p(p_);
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) fail(ErrorCode::input, "denominator divisible by the field characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return mpq_class(mpz_class((num * inv) % p));
}

mpq_class Field::inverse(const mpq_class& x) const {
  if (sgn(x) == 0) fail(ErrorCode::input, "division by zero in field arithmetic");
  if (p_ == 0) return 1 / x;
  const mpz_class p(p_);
  mpz_class inv;
  const mpz_class v = x.get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return mpq_class(inv);
}

FieldMatrix::FieldMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}

FieldMatrix FieldMatrix::from_integer(const Field& field, const IntegerMatrix& m) {
  FieldMatrix out(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out.set(i, j, mpq_class(m(i, j)));
  return out;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& v) { return sgn(v) == 0; });
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<mpq_class>& a, std::size_t rows, std::size_t cols, const Field& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[row * cols + k]);
    const mpq_class inv = f.inverse(a[row * cols + c]);
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(a[row * cols + k]) != 0) a[row * cols + k] = f.reduce(a[row * cols + k] * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(a[i * cols + c]) == 0) continue;
      const mpq_class factor = a[i * cols + c];
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(a[row * cols + k]) != 0) a[i * cols + k] = f.reduce(a[i * cols + k] - factor * a[row * cols + k]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t FieldMatrix::rank() const {
  std::vector<mpq_class> a = data_;
  return rref(a, rows_, cols_, field_).size();
}

FieldMatrix FieldMatrix::kernel() const {
  std::vector<mpq_class> a = data_;
  const auto pivots = rref(a, rows_, cols_, field_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  FieldMatrix k(field_, cols_, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k.set(free[j], j, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) k.set(pivots[r], j, -a[r * cols_ + free[j]]);
  }
  return k;
}

FieldMatrix FieldMatrix::select_rows(const std::vector<std::size_t>& which) const {
  FieldMatrix out(field_, which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = (*this)(which[i], j);
  return out;
}

FieldMatrix FieldMatrix::select_columns(const std::vector<std::size_t>& which) const {
  FieldMatrix out(field_, rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < which.size(); ++j) out.data_[i * which.size() + j] = (*this)(i, which[j]);
  return out;
}

FieldMatrix FieldMatrix::embed_rows(std::size_t n, const std::vector<std::size_t>& position) const {
  FieldMatrix out(field_, n, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[position[i] * cols_ + j] = (*this)(i, j);
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::input, "field matrix product shape mismatch");
  FieldMatrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpq_class& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c.data_[i * c.cols_ + j] += x * b(k, j);
    }
  for (auto& v : c.data_) v = a.field_.reduce(v);
  return c;
}

FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_) fail(ErrorCode::input, "hstack row mismatch");
  FieldMatrix c(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) c.data_[i * c.cols_ + j] = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) c.data_[i * c.cols_ + a.cols_ + j] = b(i, j);
  }
  return c;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::size_t field_betti(const ChainComplex& x, int n, const Field& field) {
  const std::size_t r = x.rank(n);
  if (r == 0) return 0;
  const std::size_t out = FieldMatrix::from_integer(field, x.differential(n)).rank();
  const std::size_t in = FieldMatrix::from_integer(field, x.differential(n + 1)).rank();
  return r - out - in;
}

std::size_t SpectralPage::dim(int p, int q) const {
  auto it = dims.find({p, q});
  return it == dims.end() ? 0 : it->second;
}

const SpectralPage* SpectralSequence::page(int r) const {
  if (r < 0 || r >= static_cast<int>(pages.size())) return nullptr;
  return &pages[static_cast<std::size_t>(r)];
}

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 2;

FieldMatrix column_basis(const FieldMatrix& m) {
  std::vector<mpq_class> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
  return m.select_columns(rref(a, m.rows(), m.cols(), m.field()));
}

// Columns of `num` completing a basis of span(den) to one of span(den + num).
FieldMatrix complement(const FieldMatrix& den, const FieldMatrix& num) {
  const FieldMatrix both = hstack(den, num);
  std::vector<mpq_class> a;
  for (std::size_t i = 0; i < both.rows(); ++i)
    for (std::size_t j = 0; j < both.cols(); ++j) a.push_back(both(i, j));
  std::vector<std::size_t> pick;
  for (auto c : rref(a, both.rows(), both.cols(), both.field()))
    if (c >= den.cols()) pick.push_back(c - den.cols());
  return num.select_columns(pick);
}

// X with A X = Y for A of full column rank.
FieldMatrix solve(const FieldMatrix& a, const FieldMatrix& y) {
  const FieldMatrix both = hstack(a, y);
  std::vector<mpq_class> m;
  for (std::size_t i = 0; i < both.rows(); ++i)
    for (std::size_t j = 0; j < both.cols(); ++j) m.push_back(both(i, j));
  const auto pivots = rref(m, both.rows(), both.cols(), both.field());
  if (pivots.size() != a.cols() || (!pivots.empty() && pivots.back() >= a.cols()))
    fail(ErrorCode::validation, "spectral sequence differential leaves the target page");
  FieldMatrix x(a.field(), a.cols(), y.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) x.set(i, j, m[i * both.cols() + a.cols() + j]);
  return x;
}

class Filtered {
 public:
  Filtered(const TotalComplex& t, const Field& field, int longest) : field_(field), t_(t), longest_(longest) {
    const ChainComplex& c = t.complex;
    if (!c.has_degrees()) return;
    for (int n = c.lo(); n <= c.hi() + 1; ++n) d_.emplace(n, FieldMatrix::from_integer(field, c.differential(n)));
    for (int n = c.lo(); n <= c.hi(); ++n) {
      std::vector<int> ps;
      for (const auto& cell : t.cells.at(n)) ps.push_back(cell.p);
      p_.emplace(n, std::move(ps));
    }
  }

  int lo() const { return t_.complex.lo(); }
  int hi() const { return t_.complex.hi(); }
  std::size_t rank(int n) const { return t_.complex.rank(n); }

  /// D out of degree n, or an empty matrix outside the window.
  FieldMatrix d(int n) const {
    auto it = d_.find(n);
    if (it != d_.end()) return it->second;
    return FieldMatrix(field_, rank(n - 1), rank(n));
  }

  std::vector<std::size_t> where(int n, int lo_p, int hi_p) const {
    std::vector<std::size_t> out;
    auto it = p_.find(n);
    if (it == p_.end()) return out;
    for (std::size_t i = 0; i < it->second.size(); ++i)
      if (it->second[i] >= lo_p && it->second[i] < hi_p) out.push_back(i);
    return out;
  }

  FieldMatrix filtration(int n, int s) const {
    const auto cols = where(n, s, kInfinity);
    FieldMatrix id(field_, cols.size(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) id.set(i, i, 1);
    return id.embed_rows(rank(n), cols);
  }

  /// { x in F^s_n : D x in F^t_{n-1} }; F^s is everything for s <= 0 and
  /// zero for s > L, so keys are clamped before caching.
  const FieldMatrix& z(int n, int s, int t) const {
    s = std::clamp(s, 0, longest_ + 1);
    t = std::clamp(t, s, longest_ + 1);
    const auto key = std::make_tuple(n, s, t);
    auto it = z_cache_.find(key);
    if (it != z_cache_.end()) return it->second;
    const auto cols = where(n, s, kInfinity);
    const auto rows = where(n - 1, -kInfinity, t);
    const FieldMatrix sub = d(n).select_rows(rows).select_columns(cols);
    return z_cache_.emplace(key, sub.kernel().embed_rows(rank(n), cols)).first->second;
  }

  /// im D_{n+1} intersected with F^s_n
  FieldMatrix boundaries_in(int n, int s) const {
    const FieldMatrix im = column_basis(d(n + 1));
    const auto low = where(n, -kInfinity, s);
    return im * im.select_rows(low).kernel();
  }

  const Field& field() const { return field_; }

 private:
  Field field_;
  const TotalComplex& t_;
  std::map<int, FieldMatrix> d_;
  std::map<int, std::vector<int>> p_;
  int longest_;
  mutable std::map<std::tuple<int, int, int>, FieldMatrix> z_cache_;
};

struct Cell {
  FieldMatrix reps;
  FieldMatrix denominator;  // independent columns
};

}  // namespace

SpectralSequence ss_pages(const DiagramOfComplexes& y, const Field& field, int r_max) {
  SpectralSequence ss;
  ss.field = field;
  ss.longest_chain = y.poset().longest_chain_length();
  ss.total = holim_total(y);
  const int L = ss.longest_chain;
  if (r_max < 0) r_max = L + 2;
  const int last = std::max(0, std::min(r_max, L + 1));
  const Filtered f(ss.total, field, L);
  const bool any = ss.total.complex.has_degrees();

  for (int r = 0; r <= last; ++r) {
    SpectralPage page;
    page.r = r;
    std::map<Bidegree, Cell> cells;
    if (any) {
      for (int n = f.lo(); n <= f.hi(); ++n)
        for (int p = 0; p <= L; ++p) {
          const FieldMatrix num = r == 0 ? f.filtration(n, p) : f.z(n, p, p + r);
          const FieldMatrix den = r == 0 ? f.filtration(n, p + 1)
                                         : hstack(f.z(n, p + 1, p + r), f.d(n + 1) * f.z(n + 1, p - r + 1, p));
          Cell c{complement(den, num), column_basis(den)};
          if (c.reps.cols() == 0) continue;
          const Bidegree at{p, n + p};
          page.dims[at] = c.reps.cols();
          page.representatives[at] = c.reps;
          cells.emplace(at, std::move(c));
        }
      for (const auto& [at, c] : cells) {
        const Bidegree to{at.p + r, at.q + r - 1};
        const int n = at.q - at.p;
        const FieldMatrix image = f.d(n) * c.reps;
        auto it = cells.find(to);
        if (it == cells.end()) {
          // the image must die in the target page
          FieldMatrix den = r == 0 ? f.filtration(n - 1, to.p + 1)
                                   : hstack(f.z(n - 1, to.p + 1, to.p + r), f.d(n) * f.z(n, to.p - r + 1, to.p));
          solve(column_basis(den), image);
          continue;
        }
        const FieldMatrix coeffs = solve(hstack(it->second.reps, it->second.denominator), image);
        std::vector<std::size_t> top(it->second.reps.cols());
        for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
        FieldMatrix dr = coeffs.select_rows(top);
        if (!dr.is_zero()) page.differentials.emplace(at, std::move(dr));
      }
    }
    ss.pages.push_back(std::move(page));
  }

  if (any) {
    for (int n = f.lo(); n <= f.hi(); ++n)
      for (int p = 0; p <= L; ++p) {
        const FieldMatrix num = f.z(n, p, kInfinity);
        const FieldMatrix den = hstack(f.z(n, p + 1, kInfinity), f.boundaries_in(n, p));
        const std::size_t dim = complement(den, num).cols();
        if (dim) ss.e_infinity[{p, n + p}] = dim;
      }
  }
  return ss;
}

namespace {

// Diagram of cones of multiplication by p; its homology is H_*(Y; F_p).
DiagramOfComplexes mod_p_diagram(const DiagramOfComplexes& y, long p) {
  std::vector<ChainComplex> values;
  for (std::size_t x = 0; x < y.size(); ++x) {
    auto v = y.value_ptr(x);
    std::map<int, IntegerMatrix> mult;
    for (int n = v->lo(); n <= v->hi(); ++n) {
      IntegerMatrix m(v->rank(n), v->rank(n));
      for (std::size_t i = 0; i < v->rank(n); ++i) m(i, i) = p;
      mult.emplace(n, std::move(m));
    }
    values.push_back(mapping_cone(ChainMap(v, v, std::move(mult))));
  }
  std::map<CoverKey, Components> maps;
  for (const auto& [a, b] : y.covers()) {
    Components c;
    const ChainMap& g = y.map(a, b);
    for (int n = values[a].lo(); n <= values[a].hi(); ++n) c.emplace(n, block_diagonal(g.component(n), g.component(n - 1)));
    maps.emplace(CoverKey{a, b}, std::move(c));
  }
  return DiagramOfComplexes(y.poset(), std::move(values), maps);
}

std::map<Bidegree, std::size_t> e2_dims(const SpectralSequence& ss) {
  if (const SpectralPage* p2 = ss.page(2)) return p2->dims;
  const int last = static_cast<int>(ss.pages.size()) - 1;
  if (last >= ss.longest_chain + 1) return ss.e_infinity;  // already stable before page 2
  fail(ErrorCode::input, "E_2 was not computed (r_max < 2)");
}

}  // namespace

E2Report e2_check(const DiagramOfComplexes& y, const Field& field) { return e2_check(y, ss_pages(y, field)); }

E2Report e2_check(const DiagramOfComplexes& y, const SpectralSequence& ss) {
  E2Report rep;
  rep.field = ss.field;
  const auto e2 = e2_dims(ss);
  const int L = ss.longest_chain;
  if (L < 0 || y.hi() < y.lo()) return rep;
  const DiagramOfComplexes source = ss.field.is_rational() ? y : mod_p_diagram(y, ss.field.characteristic());
  for (int q = y.lo(); q <= y.hi(); ++q) {
    const auto lims = all_limp(homotopy_groups_diagram(source, q));
    for (int p = 0; p <= L; ++p) {
      E2Entry e;
      e.at = {p, q};
      auto it = e2.find(e.at);
      e.spectral = it == e2.end() ? 0 : it->second;
      const GroupStructure& g = lims[static_cast<std::size_t>(p)].structure();
      e.limit = ss.field.is_rational() ? g.free_rank : g.torsion.size() + g.free_rank;
      if (e.spectral != e.limit) ++rep.mismatches;
      rep.entries.push_back(e);
    }
  }
  // cells outside the window count as mismatches too
  for (const auto& [at, d] : e2)
    if (at.q < y.lo() || at.q > y.hi() || at.p < 0 || at.p > L) ++rep.mismatches;
  return rep;
}

AbutmentReport abutment_check(const DiagramOfComplexes& y, const Field& field, const PosetPair* pair) {
  return abutment_check(y, ss_pages(y, field), pair);
}

AbutmentReport abutment_check(const DiagramOfComplexes& y, const SpectralSequence& ss, const PosetPair* pair) {
  AbutmentReport rep;
  rep.field = ss.field;
  const ChainComplex& holim = ss.total.complex;
  std::optional<ChainComplex> gamma;
  int m = 0;
  if (pair && pair->ball_dimension) {
    if (!(pair->ambient == y.poset())) fail(ErrorCode::input, "diagram and pair use different posets");
    m = *pair->ball_dimension;
    gamma = gamma_total_complex(y, pair->ideal).complex;
    rep.shift_ok = true;
  }
  int lo = holim.lo(), hi = holim.hi();
  if (gamma && gamma->has_degrees()) {
    lo = std::min(lo, gamma->lo() - m);
    hi = std::max(hi, gamma->hi() - m);
  }
  std::map<int, std::size_t> einf;
  for (const auto& [at, d] : ss.e_infinity) einf[at.q - at.p] += d;
  for (int n = lo; n <= hi; ++n) {
    AbutmentDegree a;
    a.degree = n;
    a.e_infinity = einf.count(n) ? einf.at(n) : 0;
    a.holim = field_betti(holim, n, ss.field);
    if (a.e_infinity != a.holim) rep.convergence_ok = false;
    if (gamma) {
      a.gamma = field_betti(*gamma, n + m, ss.field);
      if (*a.gamma != a.holim) rep.shift_ok = false;
    }
    rep.euler_holim += (n % 2 == 0 ? 1 : -1) * static_cast<long>(a.holim);
    rep.degrees.push_back(a);
  }
  for (const auto& [at, d] : e2_dims(ss)) rep.euler_e2 += ((at.q - at.p) % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  rep.euler_ok = rep.euler_e2 == rep.euler_holim;
  return rep;
}

}  // namespace totcof
