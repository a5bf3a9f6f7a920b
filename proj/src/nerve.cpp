#include "totcof/nerve.hpp"

#include <map>
#include <memory>

#include "totcof/error.hpp"

namespace totcof {

namespace {

bool chain_inside(const Chain& c, const ElementMask& mask) {
  for (auto x : c)
    if (!mask[x]) return false;
  return true;
}

// Chains by dimension, each with a position lookup.
struct IndexedChains {
  std::vector<std::vector<Chain>> by_dim;
  std::vector<std::map<Chain, std::size_t>> position;

  IndexedChains(const Poset& p, const ElementMask* within, const ElementMask* exclude) {
    for (auto& basis : all_strict_chains(p, within)) {
      std::vector<Chain> kept;
      for (auto& c : basis.chains)
        if (!exclude || !chain_inside(c, *exclude)) kept.push_back(std::move(c));
      by_dim.push_back(std::move(kept));
    }
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    position.resize(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
      for (std::size_t i = 0; i < by_dim[d].size(); ++i) position[d].emplace(by_dim[d][i], i);
  }

  std::vector<std::string> labels(const Poset& p, std::size_t d) const {
    std::vector<std::string> out;
    out.reserve(by_dim[d].size());
    for (const auto& c : by_dim[d]) out.push_back(chain_label(p, c));
    return out;
  }

  // Boundary out of dimension d; faces not present are dropped.
  IntegerMatrix boundary(std::size_t d) const {
    IntegerMatrix m(by_dim[d - 1].size(), by_dim[d].size());
    for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
      const Chain& c = by_dim[d][j];
      for (std::size_t i = 0; i < c.size(); ++i) {
        Chain face;
        face.reserve(c.size() - 1);
        for (std::size_t k = 0; k < c.size(); ++k)
          if (k != i) face.push_back(c[k]);
        auto it = position[d - 1].find(face);
        if (it != position[d - 1].end()) m(it->second, j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  }

  ChainComplex complex(const Poset& p) const {
    std::vector<std::vector<std::string>> bases;
    std::vector<IntegerMatrix> diffs;
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
      bases.push_back(labels(p, d));
      diffs.push_back(d == 0 ? IntegerMatrix(0, by_dim[0].size()) : boundary(d));
    }
    return ChainComplex(0, std::move(bases), std::move(diffs));
  }
};

}  // namespace

ChainComplex order_complex_chains(const Poset& p, bool reduced) {
  const IndexedChains chains(p, nullptr, nullptr);
  if (!reduced) return chains.complex(p);
  std::vector<std::vector<std::string>> bases{{"()"}};
  std::vector<IntegerMatrix> diffs{IntegerMatrix(0, 1)};
  for (std::size_t d = 0; d < chains.by_dim.size(); ++d) {
    bases.push_back(chains.labels(p, d));
    if (d == 0) {
      IntegerMatrix aug(1, chains.by_dim[0].size());
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(0, j) = 1;
      diffs.push_back(std::move(aug));
    } else {
      diffs.push_back(chains.boundary(d));
    }
  }
  return ChainComplex(-1, std::move(bases), std::move(diffs));
}

ChainComplex order_complex_chains(const Poset& p, const ElementMask& within) {
  if (within.size() != p.size()) fail(ErrorCode::input, "sub-poset mask size does not match poset");
  return IndexedChains(p, &within, nullptr).complex(p);
}

ChainComplex relative_chains(const Poset& c, const ElementMask& a) {
  if (a.size() != c.size()) fail(ErrorCode::input, "sub-poset mask size does not match poset");
  return IndexedChains(c, nullptr, &a).complex(c);
}

ChainMap quotient_map_beta(const PosetPair& pair, std::size_t f) {
  const Poset& c = pair.ambient;
  if (f >= c.size()) fail(ErrorCode::input, "element index out of range");
  if (pair.ideal[f]) fail(ErrorCode::input, "beta needs F outside the ideal, got '" + c.label(f) + "'");
  const ElementMask star = complement_star_mask(c, f);
  const IndexedChains src(c, nullptr, &pair.ideal);
  const IndexedChains dst(c, nullptr, &star);
  auto source = std::make_shared<const ChainComplex>(src.complex(c));
  auto target = std::make_shared<const ChainComplex>(dst.complex(c));
  std::map<int, IntegerMatrix> comps;
  for (std::size_t d = 0; d < src.by_dim.size(); ++d) {
    const std::size_t rows = d < dst.by_dim.size() ? dst.by_dim[d].size() : 0;
    IntegerMatrix m(rows, src.by_dim[d].size());
    for (std::size_t j = 0; j < src.by_dim[d].size(); ++j) {
      if (d >= dst.by_dim.size()) break;
      auto it = dst.position[d].find(src.by_dim[d][j]);
      if (it != dst.position[d].end()) m(it->second, j) = 1;
    }
    comps.emplace(static_cast<int>(d), std::move(m));
  }
  return ChainMap(source, target, std::move(comps));
}

ChainMap nerve_inclusion(const Poset& p, const ElementMask& a, const ElementMask& b) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (a[i] && !b[i]) fail(ErrorCode::input, "inclusion needs A within B");
  const IndexedChains src(p, &a, nullptr);
  const IndexedChains dst(p, &b, nullptr);
  auto source = std::make_shared<const ChainComplex>(src.complex(p));
  auto target = std::make_shared<const ChainComplex>(dst.complex(p));
  std::map<int, IntegerMatrix> comps;
  for (std::size_t d = 0; d < src.by_dim.size(); ++d) {
    IntegerMatrix m(dst.by_dim[d].size(), src.by_dim[d].size());
    for (std::size_t j = 0; j < src.by_dim[d].size(); ++j) m(dst.position[d].at(src.by_dim[d][j]), j) = 1;
    comps.emplace(static_cast<int>(d), std::move(m));
  }
  return ChainMap(source, target, std::move(comps));
}

}  // namespace totcof
