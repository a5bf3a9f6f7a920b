#pragma once

#include <map>
#include <memory>
#include <vector>

#include "totcof/diagram.hpp"
#include "totcof/lattice.hpp"
#include "totcof/poset.hpp"

namespace totcof {

/// Functor from a finite poset to finitely generated abelian groups, each a
/// subquotient of its own free ambient, with maps given by ambient matrices
/// on covering relations.
class AbelianDiagram {
 public:
  AbelianDiagram() = default;
  /// Missing covers get the zero map; composites must agree as maps of
  /// subquotients.
  AbelianDiagram(Poset poset, std::vector<SubquotientGroup> values, const std::map<CoverKey, IntegerMatrix>& cover_maps);

  const Poset& poset() const noexcept { return *poset_; }
  std::size_t size() const noexcept { return values_.size(); }
  const SubquotientGroup& value(std::size_t x) const { return values_.at(x); }
  /// Ambient matrix of value(x) -> value(y) for x <= y.
  const IntegerMatrix& map(std::size_t x, std::size_t y) const;

 private:
  std::shared_ptr<const Poset> poset_;
  std::vector<SubquotientGroup> values_;
  std::map<CoverKey, IntegerMatrix> maps_;
};

AbelianDiagram constant_abelian_diagram(const Poset& poset, const SubquotientGroup& value);

/// Degree p term: sum over strict p-chains of A(x_p), laid out in one free
/// ambient. (da)_{x_0<...<x_{p+1}} = sum_{i<=p} (-1)^i a_{d_i}
/// + (-1)^{p+1} A(x_p <= x_{p+1}) a_{d_{p+1}}.
struct LimCochainComplex {
  std::vector<std::vector<Chain>> chains;
  std::vector<SubquotientGroup> terms;    // p = 0 .. top
  std::vector<IntegerMatrix> coboundary;  // terms[p] -> terms[p+1]; last maps to 0

  int top() const noexcept { return static_cast<int>(terms.size()) - 1; }
};

LimCochainComplex lim_cochain_complex(const AbelianDiagram& a);

struct LimpResult {
  SubquotientGroup group;
  /// p outside 0..longest chain length; group is then zero
  bool out_of_range = false;
};

LimpResult limp(const AbelianDiagram& a, int p);
/// lim^p for every p in 0..longest chain length.
std::vector<SubquotientGroup> all_limp(const AbelianDiagram& a);

/// Compatible tuples: (a_x) with A(x<y) a_x = a_y modulo denominators for
/// every cover, computed directly by lattice intersection.
SubquotientGroup inverse_limit(const AbelianDiagram& a);

/// q-th homology of every value, with induced maps.
AbelianDiagram homotopy_groups_diagram(const DiagramOfComplexes& x, int q);

}  // namespace totcof
