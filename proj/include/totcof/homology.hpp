#pragma once

#include <functional>
#include <string>
#include <vector>

#include "totcof/chain_complex.hpp"
#include "totcof/lattice.hpp"

namespace totcof {

/// H_n = ker d_n / im d_{n+1} for every degree of the complex.
class HomologySummary {
 public:
  HomologySummary() = default;
  HomologySummary(int lo, std::vector<SubquotientGroup> groups) : lo_(lo), groups_(std::move(groups)) {}

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(groups_.size()) - 1; }

  /// Zero group outside the computed range.
  const SubquotientGroup& group(int n) const;
  GroupStructure structure(int n) const { return group(n).structure(); }
  bool trivial() const;

  /// Degrees with nonzero homology, ascending.
  std::vector<int> nonzero_degrees() const;

 private:
  int lo_ = 0;
  std::vector<SubquotientGroup> groups_;
};

HomologySummary homology(const ChainComplex& x);
SubquotientGroup homology_group(const ChainComplex& x, int n);

/// Cone(f)_n = T_n + S_{n-1} with d = [[d_T, f], [0, -d_S]]. Basis labels are
/// prefixed "T:" and "S:".
ChainComplex mapping_cone(const ChainMap& f);

struct InducedHomology {
  int lo = 0;
  std::vector<GroupHomomorphism> maps;

  int hi() const noexcept { return lo + static_cast<int>(maps.size()) - 1; }
  bool is_isomorphism() const;
};

InducedHomology induced_map_on_homology(const ChainMap& f);

/// With `reduced`, degree 0 is augmented onto Z by the all-ones map first
/// (for nerve complexes whose degree-0 basis are vertices). Quotient
/// complexes already model reduced homology and are checked unreduced.
bool is_homologically_trivial(const ChainComplex& x, bool reduced = false);

/// Augmented complex used by the reduced test.
ChainComplex augmented(const ChainComplex& x);

/// Basis-aligned subcomplex A of B: in_sub(n, i) selects basis element i of
/// degree n. Splits B into A and the quotient B/A (both keep B's relative
/// order).
struct BasisSplit {
  ChainComplex sub;
  ChainComplex quotient;
  // per degree of B: positions of sub/quotient basis elements within B_n
  std::map<int, std::vector<std::size_t>> sub_positions;
  std::map<int, std::vector<std::size_t>> quotient_positions;
};

BasisSplit split_subcomplex(const ChainComplex& b, const std::function<bool(int, std::size_t)>& in_sub);

struct LesReport {
  bool exact = true;
  std::vector<std::string> failures;
  std::size_t positions_checked = 0;
};

/// Exactness of ... -> H_n(A) -> H_n(B) -> H_n(B/A) -> H_{n-1}(A) -> ...
/// at every position, with the connecting map read off the off-diagonal block
/// of d_B.
LesReport verify_long_exact_sequence(const ChainComplex& b, const std::function<bool(int, std::size_t)>& in_sub);

}  // namespace totcof
