#include "totcof/derived_limits.hpp"

#include <algorithm>
#include <set>

#include "totcof/error.hpp"
#include "totcof/homology.hpp"

namespace totcof {

namespace {

std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> below(p.size(), 0), order(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y)) ++below[y];
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

// Direct sum of lattices laid out block by block.
Lattice direct_sum(const std::vector<const Lattice*>& parts) {
  std::size_t rows = 0, cols = 0;
  for (auto* l : parts) {
    rows += l->ambient_rank();
    cols += l->rank();
  }
  IntegerMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (auto* l : parts) {
    const IntegerMatrix& b = l->basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += l->ambient_rank();
    c0 += l->rank();
  }
  return Lattice(rows, m);
}

}  // namespace

AbelianDiagram::AbelianDiagram(Poset poset, std::vector<SubquotientGroup> values,
                               const std::map<CoverKey, IntegerMatrix>& cover_maps)
    : poset_(std::make_shared<const Poset>(std::move(poset))), values_(std::move(values)) {
  const Poset& p = *poset_;
  if (values_.size() != p.size()) fail(ErrorCode::input, "abelian diagram needs one group per element");
  const auto covers = p.covering_pairs();
  const std::set<CoverKey> cover_set(covers.begin(), covers.end());
  for (const auto& [key, m] : cover_maps)
    if (!cover_set.count(key)) fail(ErrorCode::invalid_map, "abelian diagram map on a pair that is not a covering relation");

  std::vector<std::vector<std::size_t>> lower(p.size());
  std::map<CoverKey, IntegerMatrix> cover_mats;
  for (const auto& key : covers) {
    lower[key.second].push_back(key.first);
    auto it = cover_maps.find(key);
    IntegerMatrix m = it == cover_maps.end()
                          ? IntegerMatrix(values_[key.second].ambient_rank(), values_[key.first].ambient_rank())
                          : it->second;
    try {
      induced_map(m, values_[key.first], values_[key.second]);
    } catch (const Error& e) {
      fail(ErrorCode::invalid_map, "map on cover (" + p.label(key.first) + ", " + p.label(key.second) + "): " + e.what());
    }
    cover_mats.emplace(key, std::move(m));
  }
  for (std::size_t x = 0; x < p.size(); ++x) maps_.emplace(CoverKey{x, x}, IntegerMatrix::identity(values_[x].ambient_rank()));
  for (auto y : linear_extension(p)) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.less(x, y)) continue;
      std::optional<IntegerMatrix> found;
      for (auto c : lower[y]) {
        if (!p.leq(x, c)) continue;
        IntegerMatrix cand = cover_mats.at({c, y}) * maps_.at({x, c});
        if (!found) {
          found = std::move(cand);
          continue;
        }
        const GroupHomomorphism a(*found, values_[x], values_[y]), b(cand, values_[x], values_[y]);
        if (!a.agrees_with(b))
          fail(ErrorCode::invalid_map, "abelian diagram is not functorial: composites from " + p.label(x) + " to " +
                                           p.label(y) + " disagree");
      }
      maps_.emplace(CoverKey{x, y}, std::move(*found));
    }
  }
}

const IntegerMatrix& AbelianDiagram::map(std::size_t x, std::size_t y) const {
  auto it = maps_.find({x, y});
  if (it == maps_.end()) fail(ErrorCode::input, "abelian diagram map requested for a pair that is not x <= y");
  return it->second;
}

AbelianDiagram constant_abelian_diagram(const Poset& poset, const SubquotientGroup& value) {
  std::map<CoverKey, IntegerMatrix> maps;
  for (const auto& key : poset.covering_pairs()) maps.emplace(key, IntegerMatrix::identity(value.ambient_rank()));
  return AbelianDiagram(poset, std::vector<SubquotientGroup>(poset.size(), value), maps);
}

LimCochainComplex lim_cochain_complex(const AbelianDiagram& a) {
  const Poset& poset = a.poset();
  LimCochainComplex out;
  for (auto& basis : all_strict_chains(poset)) out.chains.push_back(std::move(basis.chains));
  const std::size_t levels = out.chains.size();
  std::vector<std::vector<std::size_t>> offsets(levels);
  std::vector<std::size_t> widths(levels, 0);
  std::vector<std::map<Chain, std::size_t>> position(levels);
  for (std::size_t p = 0; p < levels; ++p) {
    std::vector<const Lattice*> nums, dens;
    for (std::size_t c = 0; c < out.chains[p].size(); ++c) {
      const SubquotientGroup& g = a.value(out.chains[p][c].back());
      offsets[p].push_back(widths[p]);
      widths[p] += g.ambient_rank();
      nums.push_back(&g.numerator());
      dens.push_back(&g.denominator());
      position[p].emplace(out.chains[p][c], c);
    }
    out.terms.emplace_back(direct_sum(nums), direct_sum(dens));
  }
  for (std::size_t p = 0; p < levels; ++p) {
    const std::size_t rows = p + 1 < levels ? widths[p + 1] : 0;
    IntegerMatrix d(rows, widths[p]);
    if (p + 1 < levels) {
      for (std::size_t t = 0; t < out.chains[p + 1].size(); ++t) {
        const Chain& tau = out.chains[p + 1][t];
        const std::size_t ro = offsets[p + 1][t];
        for (std::size_t i = 0; i < tau.size(); ++i) {
          Chain face = tau;
          face.erase(face.begin() + static_cast<long>(i));
          const std::size_t s = position[p].at(face);
          const std::size_t co = offsets[p][s];
          const int sign = (i % 2 == 0) ? 1 : -1;
          if (i + 1 < tau.size()) {
            for (std::size_t k = 0; k < a.value(tau.back()).ambient_rank(); ++k) d(ro + k, co + k) += sign;
          } else {
            const IntegerMatrix& f = a.map(face.back(), tau.back());
            for (std::size_t r = 0; r < f.rows(); ++r)
              for (std::size_t c = 0; c < f.cols(); ++c)
                if (sgn(f(r, c)) != 0) d(ro + r, co + c) += sign * f(r, c);
          }
        }
      }
    }
    out.coboundary.push_back(std::move(d));
  }
  for (std::size_t p = 0; p + 2 < levels; ++p) {
    const IntegerMatrix dd = out.coboundary[p + 1] * out.coboundary[p];
    if (!out.terms[p + 2].denominator().contains(out.terms[p].numerator().image(dd)))
      fail(ErrorCode::invalid_map, "lim cochain differential does not square to zero");
  }
  return out;
}

namespace {

SubquotientGroup cohomology_at(const LimCochainComplex& c, int p) {
  const auto& term = c.terms[static_cast<std::size_t>(p)];
  const SubquotientGroup next = static_cast<std::size_t>(p) + 1 < c.terms.size()
                                    ? c.terms[static_cast<std::size_t>(p) + 1]
                                    : SubquotientGroup::zero(0);
  const Lattice cycles = GroupHomomorphism(c.coboundary[static_cast<std::size_t>(p)], term, next).kernel().numerator();
  Lattice boundaries = term.denominator();
  if (p > 0) {
    const auto& prev = c.terms[static_cast<std::size_t>(p) - 1];
    boundaries = prev.numerator().image(c.coboundary[static_cast<std::size_t>(p) - 1]).sum(boundaries);
  }
  return group_structure(cycles, boundaries);
}

}  // namespace

LimpResult limp(const AbelianDiagram& a, int p) {
  const LimCochainComplex c = lim_cochain_complex(a);
  if (p < 0 || p > c.top()) return {SubquotientGroup::zero(0), true};
  return {cohomology_at(c, p), false};
}

std::vector<SubquotientGroup> all_limp(const AbelianDiagram& a) {
  const LimCochainComplex c = lim_cochain_complex(a);
  std::vector<SubquotientGroup> out;
  for (int p = 0; p <= c.top(); ++p) out.push_back(cohomology_at(c, p));
  return out;
}

SubquotientGroup inverse_limit(const AbelianDiagram& a) {
  const Poset& poset = a.poset();
  std::vector<std::size_t> offset;
  std::size_t width = 0;
  std::vector<const Lattice*> nums, dens;
  for (std::size_t x = 0; x < a.size(); ++x) {
    offset.push_back(width);
    width += a.value(x).ambient_rank();
    nums.push_back(&a.value(x).numerator());
    dens.push_back(&a.value(x).denominator());
  }
  const Lattice num = direct_sum(nums), den = direct_sum(dens);
  const auto covers = poset.covering_pairs();
  std::size_t rows = 0;
  std::vector<const Lattice*> target_dens;
  for (const auto& [x, y] : covers) {
    rows += a.value(y).ambient_rank();
    target_dens.push_back(&a.value(y).denominator());
  }
  IntegerMatrix m(rows, width);
  std::size_t r0 = 0;
  for (const auto& [x, y] : covers) {
    const IntegerMatrix& f = a.map(x, y);
    for (std::size_t r = 0; r < f.rows(); ++r) {
      for (std::size_t c = 0; c < f.cols(); ++c) m(r0 + r, offset[x] + c) += f(r, c);
      m(r0 + r, offset[y] + r) -= 1;
    }
    r0 += f.rows();
  }
  const Lattice compatible = Lattice::preimage(m, direct_sum(target_dens)).intersection(num);
  return group_structure(compatible, den);
}

AbelianDiagram homotopy_groups_diagram(const DiagramOfComplexes& x, int q) {
  std::vector<SubquotientGroup> values;
  for (std::size_t e = 0; e < x.size(); ++e) {
    SubquotientGroup g = homology_group(x.value(e), q);
    if (g.ambient_rank() != x.value(e).rank(q)) g = SubquotientGroup::zero(x.value(e).rank(q));
    values.push_back(std::move(g));
  }
  std::map<CoverKey, IntegerMatrix> maps;
  for (const auto& key : x.covers()) maps.emplace(key, x.map(key.first, key.second).component(q));
  return AbelianDiagram(x.poset(), std::move(values), maps);
}

}  // namespace totcof
