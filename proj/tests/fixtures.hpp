#pragma once

// Shared test-side builders. Nothing here calls the total-complex code.

#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "totcof/chain_complex.hpp"
#include "totcof/diagram.hpp"
#include "totcof/poset.hpp"

namespace fixture {

using namespace totcof;

inline Poset to_poset(const oracle::SmallPoset& s) {
  std::vector<std::string> labels;
  for (int i = 0; i < s.n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (s.less[i][j]) rel.emplace_back(i, j);
  return Poset::from_index_relations(labels, rel);
}

inline ChainComplex integers_in(int degree) { return ChainComplex::concentrated(degree, {"z"}); }

/// Z/k concentrated in degree 0, as Z --k--> Z in degrees 1, 0.
inline ChainComplex cyclic(long k) {
  return ChainComplex(0, {{"c0"}, {"c1"}}, {IntegerMatrix(0, 1), IntegerMatrix({{k}})});
}

/// Direct sum with the basis of `a` first.
inline ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  const ChainComplex pa = a.padded(lo, hi), pb = b.padded(lo, hi);
  std::vector<std::vector<std::string>> bases;
  std::vector<IntegerMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    auto basis = pa.basis(n);
    for (const auto& s : pb.basis(n)) basis.push_back(s + "'");
    bases.push_back(std::move(basis));
    diffs.push_back(n == lo ? IntegerMatrix(0, pa.rank(n) + pb.rank(n))
                            : block_diagonal(pa.differential(n), pb.differential(n)));
  }
  return ChainComplex(lo, std::move(bases), std::move(diffs));
}

/// Tensor product with d(a x b) = da x b + (-1)^i a x db; basis ordered by
/// the degree of the left factor, then left index, then right index.
inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  const int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
  // position of (i, s, t) inside degree i + j
  auto offset = [&](int n, int i) {
    std::size_t off = 0;
    for (int k = a.lo(); k < i; ++k) off += a.rank(k) * b.rank(n - k);
    return off;
  };
  std::vector<std::vector<std::string>> bases;
  std::vector<IntegerMatrix> diffs;
  std::vector<std::size_t> size;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::string> basis;
    for (int i = a.lo(); i <= a.hi(); ++i)
      for (const auto& s : a.basis(i))
        for (const auto& t : b.basis(n - i)) basis.push_back(s + "*" + t);
    size.push_back(basis.size());
    bases.push_back(std::move(basis));
  }
  for (int n = lo; n <= hi; ++n) {
    const std::size_t cols = size[static_cast<std::size_t>(n - lo)];
    if (n == lo) {
      diffs.push_back(IntegerMatrix(0, cols));
      continue;
    }
    IntegerMatrix d(size[static_cast<std::size_t>(n - 1 - lo)], cols);
    for (int i = a.lo(); i <= a.hi(); ++i) {
      const int j = n - i;
      const std::size_t bj = b.rank(j);
      if (bj == 0) continue;
      const std::size_t col0 = offset(n, i);
      const IntegerMatrix da = a.differential(i), db = b.differential(j);
      for (std::size_t s = 0; s < a.rank(i); ++s)
        for (std::size_t t = 0; t < bj; ++t) {
          const std::size_t col = col0 + s * bj + t;
          if (i - 1 >= a.lo()) {
            const std::size_t row0 = offset(n - 1, i - 1);
            for (std::size_t r = 0; r < da.rows(); ++r)
              if (sgn(da(r, s)) != 0) d(row0 + r * bj + t, col) += da(r, s);
          }
          if (j - 1 >= b.lo()) {
            const std::size_t row0 = offset(n - 1, i);
            const std::size_t bj1 = b.rank(j - 1);
            for (std::size_t r = 0; r < db.rows(); ++r)
              if (sgn(db(r, t)) != 0) d(row0 + s * bj1 + r, col) += (i % 2 == 0 ? 1 : -1) * db(r, t);
          }
        }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(lo, std::move(bases), std::move(diffs));
}

/// Sum of two diagrams over the same poset.
inline DiagramOfComplexes direct_sum(const DiagramOfComplexes& x, const DiagramOfComplexes& y) {
  std::vector<ChainComplex> values;
  for (std::size_t e = 0; e < x.size(); ++e) values.push_back(direct_sum(x.value(e), y.value(e)));
  const int lo = values.empty() ? 0 : values[0].lo(), hi = values.empty() ? -1 : values[0].hi();
  std::map<CoverKey, Components> maps;
  for (const auto& key : x.covers()) {
    Components c;
    for (int n = lo; n <= hi; ++n)
      c.emplace(n, block_diagonal(x.map(key.first, key.second).component(n), y.map(key.first, key.second).component(n)));
    maps.emplace(key, std::move(c));
  }
  return DiagramOfComplexes(x.poset(), std::move(values), maps);
}

/// Homology of every degree in a window, by the elimination oracle.
inline std::map<int, oracle::Group> oracle_homology(const ChainComplex& c) {
  std::map<int, oracle::Group> out;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    auto g = oracle::homology(c, n);
    if (!g.trivial()) out.emplace(n, g);
  }
  return out;
}

}  // namespace fixture
