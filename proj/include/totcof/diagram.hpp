#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "totcof/chain_complex.hpp"
#include "totcof/homology.hpp"
#include "totcof/poset.hpp"

namespace totcof {

using CoverKey = std::pair<std::size_t, std::size_t>;
/// Degreewise components of a map between two values of a diagram.
using Components = std::map<int, IntegerMatrix>;

/// Functor from a finite poset to bounded chain complexes, given on covering
/// relations. Composites along different covering paths must agree; every
/// value is padded to the common degree window.
class DiagramOfComplexes {
 public:
  DiagramOfComplexes() = default;
  /// Covers missing from `cover_maps` get the zero map; keys that are not
  /// covering relations are rejected.
  DiagramOfComplexes(Poset poset, std::vector<ChainComplex> values, const std::map<CoverKey, Components>& cover_maps);

  const Poset& poset() const noexcept { return *poset_; }
  std::size_t size() const noexcept { return values_.size(); }
  const ChainComplex& value(std::size_t x) const { return *values_.at(x); }
  std::shared_ptr<const ChainComplex> value_ptr(std::size_t x) const { return values_.at(x); }

  /// Common window; hi() < lo() when every value is zero.
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }

  /// The map value(x) -> value(y) for x <= y (identity when x == y).
  const ChainMap& map(std::size_t x, std::size_t y) const;
  std::vector<CoverKey> covers() const { return poset_->covering_pairs(); }

  bool is_zero() const;

 private:
  std::shared_ptr<const Poset> poset_;
  std::vector<std::shared_ptr<const ChainComplex>> values_;
  std::map<CoverKey, ChainMap> maps_;  // every pair x <= y
  int lo_ = 0;
  int hi_ = -1;
};

/// Same value at every element, identity maps.
DiagramOfComplexes constant_diagram(const Poset& poset, const ChainComplex& value);

/// Seeded random diagram built by attaching cells: each cell lives at an
/// element F and is present at every G >= F; its boundary is a random
/// integral cycle of the value at F. At most three cells per degree, degrees
/// 0..2. Each value is then expressed in a random unimodular basis, so maps
/// and differentials carry small nontrivial entries.
DiagramOfComplexes random_diagram(const Poset& poset, std::uint64_t seed);

/// Natural transformation between diagrams over the same poset.
class DiagramMap {
 public:
  DiagramMap(std::shared_ptr<const DiagramOfComplexes> source, std::shared_ptr<const DiagramOfComplexes> target,
             std::vector<Components> components);

  const DiagramOfComplexes& source() const { return *source_; }
  const DiagramOfComplexes& target() const { return *target_; }
  const ChainMap& at(std::size_t x) const { return maps_.at(x); }

 private:
  std::shared_ptr<const DiagramOfComplexes> source_;
  std::shared_ptr<const DiagramOfComplexes> target_;
  std::vector<ChainMap> maps_;
};

struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend bool operator<(const Bidegree& a, const Bidegree& b) { return a.p != b.p ? a.p < b.p : a.q < b.q; }
};

enum class TotalKind { hocolim, gamma, holim };

/// One basis element of a total complex: chain `chain` of dimension p (index
/// into chains[p]) tensored with basis element `local` of a value in degree q.
struct TotalCell {
  int p = 0;
  int q = 0;
  std::uint32_t chain = 0;
  std::size_t local = 0;
};

/// Total complex of a double complex over chains of a poset.
struct TotalComplex {
  TotalKind kind = TotalKind::hocolim;
  ChainComplex complex;
  std::vector<std::vector<Chain>> chains;  // chains used, by dimension
  std::map<int, std::vector<TotalCell>> cells;  // per total degree, in basis order

  /// Rank of the (p, q) piece.
  std::size_t piece_rank(int p, int q) const;
  std::vector<Bidegree> bidegrees() const;
};

/// Chains x_0 < ... < x_p inside `over` (all of C when null), tensored with
/// value(x_0)_q in total degree p + q. Deleting x_0 applies value(x_0) ->
/// value(x_1); the internal differential carries the sign (-1)^p.
TotalComplex hocolim_total(const DiagramOfComplexes& x, const ElementMask* over = nullptr);

/// hocolim over C modulo the subcomplex of chains inside the ideal D: the
/// basis is the chains whose top lies outside D.
TotalComplex gamma_total_complex(const DiagramOfComplexes& x, const ElementMask& ideal);

/// Chains x_0 < ... < x_p tensored with value(x_p)_q in total degree q - p.
/// D = delta + (-1)^p d, where delta is the alternating sum over the
/// deletions of the (p+1)-chain and deleting the new top applies
/// value(x_p) -> value(x_{p+1}).
TotalComplex holim_total(const DiagramOfComplexes& y);

/// Induced map of total cofibres: sigma (x) e -> sigma (x) phi_{x_0}(e).
ChainMap gamma_map(const DiagramMap& phi, const ElementMask& ideal);

struct DegreeComparison {
  int degree = 0;  // holim degree n; Gamma degree is n + m
  GroupStructure holim;
  GroupStructure gamma;
  bool isomorphic = false;
};

struct BallEquivalenceReport {
  int ball_dimension = 0;
  std::vector<DegreeComparison> degrees;
  bool all_isomorphic = true;
};

/// Refuses (condition_failure) unless the pair satisfies (P1) and (P2); needs
/// a recorded ball dimension.
BallEquivalenceReport verify_ball_equivalence(const DiagramOfComplexes& x, const PosetPair& pair);

/// Comparison without the condition gate, for callers that already checked.
BallEquivalenceReport compare_holim_gamma(const DiagramOfComplexes& x, const PosetPair& pair, int m);

}  // namespace totcof
