#include "totcof/diagram.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "totcof/conditions.hpp"
#include "totcof/error.hpp"
#include "totcof/normal_form.hpp"

namespace totcof {

namespace {

std::string cover_name(const Poset& p, const CoverKey& k) {
  return "(" + p.label(k.first) + ", " + p.label(k.second) + ")";
}

// Elements sorted by the number of elements below them: a linear extension.
std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> below(p.size(), 0), order(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y)) ++below[y];
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

}  // namespace

DiagramOfComplexes::DiagramOfComplexes(Poset poset, std::vector<ChainComplex> values,
                                       const std::map<CoverKey, Components>& cover_maps)
    : poset_(std::make_shared<const Poset>(std::move(poset))) {
  const Poset& p = *poset_;
  if (values.size() != p.size()) {
    fail(ErrorCode::input, "diagram has " + std::to_string(values.size()) + " values for " + std::to_string(p.size()) +
                               " poset elements");
  }
  bool any = false;
  for (const auto& v : values) {
    if (!v.has_degrees()) continue;
    lo_ = any ? std::min(lo_, v.lo()) : v.lo();
    hi_ = any ? std::max(hi_, v.hi()) : v.hi();
    any = true;
  }
  for (auto& v : values) values_.push_back(std::make_shared<const ChainComplex>(any ? v.padded(lo_, hi_) : v));

  const auto cover_list = p.covering_pairs();
  const std::set<CoverKey> cover_set(cover_list.begin(), cover_list.end());
  for (const auto& [key, comps] : cover_maps) {
    if (key.first >= p.size() || key.second >= p.size() || !cover_set.count(key))
      fail(ErrorCode::invalid_map, "diagram map on a pair that is not a covering relation");
  }
  std::vector<std::vector<std::size_t>> lower_covers(p.size());
  std::map<CoverKey, ChainMap> cover_chain_maps;
  for (const auto& key : cover_list) {
    lower_covers[key.second].push_back(key.first);
    auto it = cover_maps.find(key);
    try {
      cover_chain_maps.emplace(key, ChainMap(values_[key.first], values_[key.second],
                                             it == cover_maps.end() ? Components{} : it->second));
    } catch (const Error& e) {
      fail(e.code(), "map on cover " + cover_name(p, key) + ": " + e.what());
    }
  }

  for (std::size_t x = 0; x < p.size(); ++x) maps_.emplace(CoverKey{x, x}, ChainMap::identity(values_[x]));
  for (auto y : linear_extension(p)) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.less(x, y)) continue;
      std::optional<ChainMap> found;
      for (auto c : lower_covers[y]) {
        if (!p.leq(x, c)) continue;
        ChainMap candidate = maps_.at({x, c}).then(cover_chain_maps.at({c, y}));
        if (!found) {
          found = std::move(candidate);
        } else if (!(*found == candidate)) {
          fail(ErrorCode::invalid_map, "diagram is not functorial: composites from " + p.label(x) + " to " +
                                           p.label(y) + " disagree (through " + p.label(c) + ")");
        }
      }
      maps_.emplace(CoverKey{x, y}, std::move(*found));
    }
  }
}

const ChainMap& DiagramOfComplexes::map(std::size_t x, std::size_t y) const {
  auto it = maps_.find({x, y});
  if (it == maps_.end()) fail(ErrorCode::input, "diagram map requested for a pair that is not x <= y");
  return it->second;
}

bool DiagramOfComplexes::is_zero() const {
  for (const auto& v : values_)
    if (!v->is_zero()) return false;
  return true;
}

DiagramOfComplexes constant_diagram(const Poset& poset, const ChainComplex& value) {
  std::vector<ChainComplex> values(poset.size(), value);
  std::map<CoverKey, Components> maps;
  for (const auto& key : poset.covering_pairs()) {
    Components c;
    for (int n = value.lo(); n <= value.hi(); ++n) c.emplace(n, IntegerMatrix::identity(value.rank(n)));
    maps.emplace(key, std::move(c));
  }
  return DiagramOfComplexes(poset, std::move(values), maps);
}

namespace {

struct Cell {
  int degree = 0;
  std::size_t element = 0;
  IntegerVector boundary;  // over all cells of degree - 1, in creation order
};

// Random unimodular matrix with its inverse, from elementary operations.
std::pair<IntegerMatrix, IntegerMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix p = IntegerMatrix::identity(n), inv = IntegerMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) {
      p(0, 0) = -1;
      inv(0, 0) = -1;
    }
    return {p, inv};
  }
  const std::size_t steps = 2 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const long c = rng() % 2 ? 1 : -1;
    // P <- E P with E = I + c e_ij; P^{-1} <- P^{-1} E^{-1}
    for (std::size_t k = 0; k < n; ++k) p(i, k) += c * p(j, k);
    for (std::size_t k = 0; k < n; ++k) inv(k, j) -= c * inv(k, i);
  }
  return {p, inv};
}

}  // namespace

DiagramOfComplexes random_diagram(const Poset& poset, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = poset.size();
  std::vector<Cell> cells;
  std::vector<std::vector<std::size_t>> by_degree(3);
  if (n > 0) {
    for (int d = 0; d <= 2; ++d) {
      const std::size_t count = rng() % 4;
      for (std::size_t k = 0; k < count; ++k) {
        Cell cell;
        cell.degree = d;
        cell.element = rng() % n;
        if (d > 0) {
          const auto& lower = by_degree[static_cast<std::size_t>(d - 1)];
          cell.boundary.assign(lower.size(), 0);
          std::vector<std::size_t> avail;
          for (std::size_t i = 0; i < lower.size(); ++i)
            if (poset.leq(cells[lower[i]].element, cell.element)) avail.push_back(i);
          // cycles among the available cells of degree d - 1
          IntegerMatrix bd(d >= 2 ? by_degree[static_cast<std::size_t>(d - 2)].size() : 0, avail.size());
          for (std::size_t j = 0; j < avail.size(); ++j) {
            const Cell& c = cells[lower[avail[j]]];
            for (std::size_t i = 0; i < c.boundary.size(); ++i) bd(i, j) = c.boundary[i];
          }
          const IntegerMatrix z = bd.rows() == 0 ? IntegerMatrix::identity(avail.size()) : kernel_basis(bd);
          for (std::size_t col = 0; col < z.cols(); ++col) {
            const long coef = static_cast<long>(rng() % 5) - 2;
            if (coef == 0) continue;
            for (std::size_t j = 0; j < avail.size(); ++j) cell.boundary[avail[j]] += coef * z(j, col);
          }
        }
        by_degree[static_cast<std::size_t>(d)].push_back(cells.size());
        cells.push_back(std::move(cell));
      }
    }
  }

  // value(G)_d = cells of degree d with element <= G, in creation order
  std::vector<std::vector<std::vector<std::size_t>>> present(n, std::vector<std::vector<std::size_t>>(3));
  for (std::size_t g = 0; g < n; ++g)
    for (int d = 0; d <= 2; ++d) {
      const auto& list = by_degree[static_cast<std::size_t>(d)];
      for (std::size_t i = 0; i < list.size(); ++i)
        if (poset.leq(cells[list[i]].element, g)) present[g][d].push_back(i);
    }
  std::vector<std::vector<std::pair<IntegerMatrix, IntegerMatrix>>> change(n);
  for (std::size_t g = 0; g < n; ++g)
    for (int d = 0; d <= 2; ++d) change[g].push_back(random_unimodular(rng, present[g][d].size()));

  std::vector<ChainComplex> values;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<std::vector<std::string>> bases(3);
    std::vector<IntegerMatrix> diffs;
    for (int d = 0; d <= 2; ++d) {
      for (std::size_t k = 0; k < present[g][d].size(); ++k)
        bases[d].push_back("e" + std::to_string(d) + "." + std::to_string(k));
      if (d == 0) {
        diffs.push_back(IntegerMatrix(0, present[g][0].size()));
        continue;
      }
      IntegerMatrix bd(present[g][d - 1].size(), present[g][d].size());
      for (std::size_t j = 0; j < present[g][d].size(); ++j) {
        const Cell& c = cells[by_degree[d][present[g][d][j]]];
        for (std::size_t i = 0; i < present[g][d - 1].size(); ++i) bd(i, j) = c.boundary[present[g][d - 1][i]];
      }
      diffs.push_back(change[g][d - 1].first * bd * change[g][d].second);
    }
    values.emplace_back(0, std::move(bases), std::move(diffs));
  }

  std::map<CoverKey, Components> maps;
  for (const auto& [f, g] : poset.covering_pairs()) {
    Components comps;
    for (int d = 0; d <= 2; ++d) {
      IntegerMatrix inc(present[g][d].size(), present[f][d].size());
      std::size_t i = 0;
      for (std::size_t j = 0; j < present[f][d].size(); ++j) {
        while (present[g][d][i] != present[f][d][j]) ++i;
        inc(i, j) = 1;
      }
      comps.emplace(d, change[g][d].first * inc * change[f][d].second);
    }
    maps.emplace(CoverKey{f, g}, std::move(comps));
  }
  return DiagramOfComplexes(poset, std::move(values), maps);
}

DiagramMap::DiagramMap(std::shared_ptr<const DiagramOfComplexes> source,
                       std::shared_ptr<const DiagramOfComplexes> target, std::vector<Components> components)
    : source_(std::move(source)), target_(std::move(target)) {
  const DiagramOfComplexes& s = *source_;
  const DiagramOfComplexes& t = *target_;
  if (!(s.poset() == t.poset())) fail(ErrorCode::invalid_map, "diagram map between different index posets");
  if (components.size() != s.size()) fail(ErrorCode::invalid_map, "diagram map needs one component per element");
  for (std::size_t x = 0; x < s.size(); ++x) maps_.emplace_back(s.value_ptr(x), t.value_ptr(x), std::move(components[x]));
  const int lo = std::min(s.lo(), t.lo()), hi = std::max(s.hi(), t.hi());
  for (const auto& [x, y] : s.covers()) {
    for (int n = lo; n <= hi; ++n) {
      if (!(t.map(x, y).component(n) * maps_[x].component(n) == maps_[y].component(n) * s.map(x, y).component(n)))
        fail(ErrorCode::invalid_map, "diagram map is not natural on cover " + cover_name(s.poset(), {x, y}));
    }
  }
}

std::size_t TotalComplex::piece_rank(int p, int q) const {
  std::size_t r = 0;
  for (const auto& [n, list] : cells)
    for (const auto& c : list)
      if (c.p == p && c.q == q) ++r;
  return r;
}

std::vector<Bidegree> TotalComplex::bidegrees() const {
  std::set<Bidegree> s;
  for (const auto& [n, list] : cells)
    for (const auto& c : list) s.insert({c.p, c.q});
  return {s.begin(), s.end()};
}

namespace {

struct ChainIndex {
  std::vector<std::vector<Chain>> by_dim;
  std::vector<std::map<Chain, std::uint32_t>> position;

  ChainIndex(const Poset& p, const ElementMask* within, const ElementMask* exclude) {
    for (auto& basis : all_strict_chains(p, within)) {
      std::vector<Chain> kept;
      for (auto& c : basis.chains) {
        bool inside = exclude != nullptr;
        if (exclude)
          for (auto x : c) inside = inside && (*exclude)[x];
        if (!inside) kept.push_back(std::move(c));
      }
      by_dim.push_back(std::move(kept));
    }
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    position.resize(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
      for (std::size_t i = 0; i < by_dim[d].size(); ++i) position[d].emplace(by_dim[d][i], static_cast<std::uint32_t>(i));
  }

  int top_dim() const { return static_cast<int>(by_dim.size()) - 1; }

  std::optional<std::uint32_t> find(std::size_t dim, const Chain& c) const {
    if (dim >= position.size()) return std::nullopt;
    auto it = position[dim].find(c);
    if (it == position[dim].end()) return std::nullopt;
    return it->second;
  }
};

// Cells laid out per total degree with offsets for each (p, chain).
struct Layout {
  int lo = 0;
  int hi = -1;
  std::map<int, std::vector<TotalCell>> cells;
  // offsets[n][p][chain] is the first basis index of that block in degree n
  std::map<int, std::vector<std::vector<std::size_t>>> offsets;

  std::size_t offset(int n, int p, std::uint32_t chain) const { return offsets.at(n)[static_cast<std::size_t>(p)][chain]; }
};

// placement: the element of a chain whose value is used, and q as a function
// of (n, p).
template <typename Anchor, typename QOf>
Layout lay_out(const DiagramOfComplexes& x, const ChainIndex& idx, int lo, int hi, Anchor anchor, QOf q_of) {
  Layout l;
  l.lo = lo;
  l.hi = hi;
  for (int n = lo; n <= hi; ++n) {
    auto& off = l.offsets[n];
    auto& list = l.cells[n];
    off.resize(idx.by_dim.size());
    for (int p = 0; p <= idx.top_dim(); ++p) {
      const int q = q_of(n, p);
      const auto& chains = idx.by_dim[static_cast<std::size_t>(p)];
      off[static_cast<std::size_t>(p)].resize(chains.size());
      for (std::uint32_t c = 0; c < chains.size(); ++c) {
        off[static_cast<std::size_t>(p)][c] = list.size();
        const std::size_t r = x.value(anchor(chains[c])).rank(q);
        for (std::size_t e = 0; e < r; ++e) list.push_back({p, q, c, e});
      }
    }
  }
  return l;
}

TotalComplex assemble(TotalKind kind, const DiagramOfComplexes& x, const ChainIndex& idx, const Layout& l,
                      const std::map<int, IntegerMatrix>& diffs,
                      const std::function<std::size_t(const Chain&)>& anchor) {
  TotalComplex t;
  t.kind = kind;
  t.chains = idx.by_dim;
  t.cells = l.cells;
  if (l.hi < l.lo) return t;
  std::vector<std::vector<std::string>> bases;
  std::vector<IntegerMatrix> ds;
  for (int n = l.lo; n <= l.hi; ++n) {
    std::vector<std::string> b;
    for (const auto& c : l.cells.at(n)) {
      const Chain& ch = idx.by_dim[static_cast<std::size_t>(c.p)][c.chain];
      b.push_back(chain_label(x.poset(), ch) + "|" + x.value(anchor(ch)).basis(c.q)[c.local]);
    }
    bases.push_back(std::move(b));
    ds.push_back(n == l.lo ? IntegerMatrix(0, l.cells.at(n).size()) : diffs.at(n));
  }
  t.complex = ChainComplex(l.lo, std::move(bases), std::move(ds));
  return t;
}

TotalComplex hocolim_like(TotalKind kind, const DiagramOfComplexes& x, const ElementMask* within,
                          const ElementMask* exclude) {
  const ChainIndex idx(x.poset(), within, exclude);
  if (x.hi() < x.lo() || idx.by_dim.empty()) {
    TotalComplex t;
    t.kind = kind;
    t.chains = idx.by_dim;
    return t;
  }
  auto anchor = [](const Chain& c) -> std::size_t { return c.front(); };
  const Layout l = lay_out(x, idx, x.lo(), x.hi() + idx.top_dim(), anchor, [](int n, int p) { return n - p; });
  std::map<int, IntegerMatrix> diffs;
  for (int n = l.lo + 1; n <= l.hi; ++n) {
    const auto& cols = l.cells.at(n);
    IntegerMatrix d(l.cells.at(n - 1).size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const TotalCell& cell = cols[j];
      const Chain& sigma = idx.by_dim[static_cast<std::size_t>(cell.p)][cell.chain];
      // faces
      for (int i = 0; cell.p > 0 && i <= cell.p; ++i) {
        Chain face = sigma;
        face.erase(face.begin() + i);
        const auto fi = idx.find(static_cast<std::size_t>(cell.p - 1), face);
        if (!fi) continue;
        const std::size_t base = l.offset(n - 1, cell.p - 1, *fi);
        if (i == 0) {
          const IntegerMatrix m = x.map(sigma[0], sigma[1]).component(cell.q);
          for (std::size_t r = 0; r < m.rows(); ++r)
            if (sgn(m(r, cell.local)) != 0) d(base + r, j) += m(r, cell.local);
        } else {
          d(base + cell.local, j) += (i % 2 == 0) ? 1 : -1;
        }
      }
      // internal differential with sign (-1)^p
      const IntegerMatrix& dv = x.value(sigma[0]).differential(cell.q);
      if (dv.rows() > 0) {
        const std::size_t base = l.offset(n - 1, cell.p, cell.chain);
        for (std::size_t r = 0; r < dv.rows(); ++r)
          if (sgn(dv(r, cell.local)) != 0) d(base + r, j) += (cell.p % 2 == 0) ? dv(r, cell.local) : -dv(r, cell.local);
      }
    }
    diffs.emplace(n, std::move(d));
  }
  return assemble(kind, x, idx, l, diffs, anchor);
}

}  // namespace

TotalComplex hocolim_total(const DiagramOfComplexes& x, const ElementMask* over) {
  if (over && over->size() != x.size()) fail(ErrorCode::input, "hocolim selector does not match the poset");
  return hocolim_like(TotalKind::hocolim, x, over, nullptr);
}

TotalComplex gamma_total_complex(const DiagramOfComplexes& x, const ElementMask& ideal) {
  if (ideal.size() != x.size()) fail(ErrorCode::input, "ideal does not match the diagram's poset");
  if (!is_order_ideal(x.poset(), ideal)) fail(ErrorCode::validation, "total cofibre needs an order ideal");
  return hocolim_like(TotalKind::gamma, x, nullptr, &ideal);
}

TotalComplex holim_total(const DiagramOfComplexes& y) {
  const ChainIndex idx(y.poset(), nullptr, nullptr);
  if (y.hi() < y.lo() || idx.by_dim.empty()) {
    TotalComplex t;
    t.kind = TotalKind::holim;
    t.chains = idx.by_dim;
    return t;
  }
  const Poset& poset = y.poset();
  auto anchor = [](const Chain& c) -> std::size_t { return c.back(); };
  const Layout l = lay_out(y, idx, y.lo() - idx.top_dim(), y.hi(), anchor, [](int n, int p) { return n + p; });
  std::map<int, IntegerMatrix> diffs;
  for (int n = l.lo + 1; n <= l.hi; ++n) {
    const auto& cols = l.cells.at(n);
    IntegerMatrix d(l.cells.at(n - 1).size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const TotalCell& cell = cols[j];
      const Chain& sigma = idx.by_dim[static_cast<std::size_t>(cell.p)][cell.chain];
      const std::size_t top = sigma.back();
      // coface insertions: z placed at position i of the (p+1)-chain
      for (std::size_t z = 0; z < poset.size(); ++z) {
        std::size_t pos = 0;
        bool ok = true;
        for (auto s : sigma) {
          if (s == z || !(poset.less(s, z) || poset.less(z, s))) {
            ok = false;
            break;
          }
          if (poset.less(s, z)) ++pos;
        }
        if (!ok) continue;
        Chain tau = sigma;
        tau.insert(tau.begin() + static_cast<long>(pos), static_cast<std::uint32_t>(z));
        const auto ti = idx.find(static_cast<std::size_t>(cell.p + 1), tau);
        if (!ti) continue;
        const std::size_t base = l.offset(n - 1, cell.p + 1, *ti);
        const int sign = (pos % 2 == 0) ? 1 : -1;
        if (pos == sigma.size()) {
          const IntegerMatrix m = y.map(top, z).component(cell.q);
          for (std::size_t r = 0; r < m.rows(); ++r)
            if (sgn(m(r, cell.local)) != 0) d(base + r, j) += sign * m(r, cell.local);
        } else {
          d(base + cell.local, j) += sign;
        }
      }
      const IntegerMatrix& dv = y.value(top).differential(cell.q);
      if (dv.rows() > 0) {
        const std::size_t base = l.offset(n - 1, cell.p, cell.chain);
        for (std::size_t r = 0; r < dv.rows(); ++r)
          if (sgn(dv(r, cell.local)) != 0) d(base + r, j) += (cell.p % 2 == 0) ? dv(r, cell.local) : -dv(r, cell.local);
      }
    }
    diffs.emplace(n, std::move(d));
  }
  return assemble(TotalKind::holim, y, idx, l, diffs, anchor);
}

ChainMap gamma_map(const DiagramMap& phi, const ElementMask& ideal) {
  auto src = std::make_shared<const TotalComplex>(gamma_total_complex(phi.source(), ideal));
  auto dst = std::make_shared<const TotalComplex>(gamma_total_complex(phi.target(), ideal));
  std::map<int, IntegerMatrix> comps;
  for (const auto& [n, cols] : src->cells) {
    const auto it = dst->cells.find(n);
    const std::size_t rows = it == dst->cells.end() ? 0 : it->second.size();
    // block starts in the target, keyed by (p, chain)
    std::map<std::pair<int, std::uint32_t>, std::size_t> starts;
    if (it != dst->cells.end())
      for (std::size_t i = 0; i < it->second.size(); ++i) starts.emplace(std::pair{it->second[i].p, it->second[i].chain}, i);
    IntegerMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const TotalCell& c = cols[j];
      const Chain& sigma = src->chains[static_cast<std::size_t>(c.p)][c.chain];
      const IntegerMatrix f = phi.at(sigma.front()).component(c.q);
      if (f.rows() == 0) continue;
      const std::size_t base = starts.at({c.p, c.chain});
      for (std::size_t r = 0; r < f.rows(); ++r) m(base + r, j) = f(r, c.local);
    }
    comps.emplace(n, std::move(m));
  }
  auto s = std::make_shared<const ChainComplex>(src->complex);
  auto t = std::make_shared<const ChainComplex>(dst->complex);
  return ChainMap(s, t, std::move(comps));
}

BallEquivalenceReport compare_holim_gamma(const DiagramOfComplexes& x, const PosetPair& pair, int m) {
  if (!(x.poset() == pair.ambient)) fail(ErrorCode::input, "diagram and pair use different posets");
  const ChainComplex holim = holim_total(x).complex;
  const ChainComplex gamma = gamma_total_complex(x, pair.ideal).complex;
  const HomologySummary hh = homology(holim);
  const HomologySummary hg = homology(gamma);
  BallEquivalenceReport r;
  r.ball_dimension = m;
  int lo = 0, hi = -1;
  bool any = false;
  auto widen = [&](int a, int b) {
    if (b < a) return;
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  };
  widen(holim.lo(), holim.hi());
  widen(gamma.lo() - m, gamma.hi() - m);
  for (int n = lo; n <= hi; ++n) {
    DegreeComparison c;
    c.degree = n;
    c.holim = hh.structure(n);
    c.gamma = hg.structure(n + m);
    c.isomorphic = c.holim == c.gamma;
    r.all_isomorphic = r.all_isomorphic && c.isomorphic;
    r.degrees.push_back(std::move(c));
  }
  return r;
}

BallEquivalenceReport verify_ball_equivalence(const DiagramOfComplexes& x, const PosetPair& pair) {
  if (!pair.ball_dimension) fail(ErrorCode::input, "ball equivalence needs a pair with a recorded ball dimension");
  ClassifyOptions opts;
  opts.early_exit = true;
  opts.include_strong = false;
  const ConditionReport report = classify_pair(pair, opts);
  if (!report.equivalence_holds()) {
    std::string msg = "pair fails the conditions:";
    for (const auto& w : report.witnesses())
      msg += " " + condition_name(w.condition) + " at " + w.element + " (H_" + std::to_string(w.degree) + " = " +
             w.group.to_string() + ")";
    fail(ErrorCode::condition_failure, msg);
  }
  return compare_holim_gamma(x, pair, *pair.ball_dimension);
}

}  // namespace totcof
