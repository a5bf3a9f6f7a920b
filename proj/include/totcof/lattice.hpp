#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totcof/integer_matrix.hpp"

namespace totcof {

/// Subgroup of Z^n held in canonical form: the nonzero columns of the column
/// Hermite normal form of any generating set. Equal lattices compare equal
/// syntactically.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t ambient_rank, const IntegerMatrix& generators);

  static Lattice zero(std::size_t ambient_rank);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntegerMatrix& basis() const noexcept { return basis_; }

  /// Coefficients of v in the canonical basis, if v lies in the lattice.
  std::optional<IntegerVector> coordinates(const IntegerVector& v) const;
  bool contains(const IntegerVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;

  Lattice sum(const Lattice& other) const;
  Lattice intersection(const Lattice& other) const;
  /// { M x : x in this }, a lattice in Z^{M.rows()}.
  Lattice image(const IntegerMatrix& m) const;
  /// { v : M v in target }.
  static Lattice preimage(const IntegerMatrix& m, const Lattice& target);

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  IntegerMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

enum class LatticeOp { sum, intersection, preimage };

/// Dispatcher over the three lattice constructions; for preimage, `map`
/// carries A's ambient into B's ambient and the result is { v : map v in B }.
Lattice lattice_ops(const Lattice& a, const Lattice& b, LatticeOp kind,
                    const IntegerMatrix* map = nullptr);

/// Free rank plus invariant factors d_1 | d_2 | ... (each >= 2).
struct GroupStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Invariant-factor normal form of Z^free plus a list of cyclic orders
/// (orders 0 count as free, orders 1 are dropped).
GroupStructure normalize_group(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);

/// Finitely generated abelian group numerator / denominator.
///
/// Besides the invariant factors it keeps a Smith-adapted basis so that
/// elements can be converted into coordinates of
/// Z/d_1 + ... + Z/d_t + Z^free.
class SubquotientGroup {
 public:
  SubquotientGroup() = default;
  SubquotientGroup(Lattice numerator, Lattice denominator);

  static SubquotientGroup zero(std::size_t ambient_rank = 0);

  std::size_t ambient_rank() const noexcept { return numerator_.ambient_rank(); }
  const Lattice& numerator() const noexcept { return numerator_; }
  const Lattice& denominator() const noexcept { return denominator_; }
  const GroupStructure& structure() const noexcept { return structure_; }
  bool trivial() const noexcept { return structure_.trivial(); }

  /// Generators of the abstract group: torsion ones first, then free ones.
  std::size_t generator_count() const noexcept { return orders_.size(); }
  /// Order of each generator, 0 for free generators.
  const std::vector<Integer>& orders() const noexcept { return orders_; }
  /// Ambient representative of generator i.
  IntegerVector generator(std::size_t i) const;

  /// Coordinates of v (which must lie in the numerator), reduced modulo the
  /// generator orders.
  IntegerVector coordinates(const IntegerVector& v) const;
  bool represents_zero(const IntegerVector& v) const { return denominator_.contains(v); }

 private:
  Lattice numerator_;
  Lattice denominator_;
  GroupStructure structure_;
  std::vector<Integer> orders_;
  IntegerMatrix to_adapted_;           // numerator coords -> adapted coords (only kept rows)
  std::vector<IntegerVector> generators_;
};

SubquotientGroup group_structure(const Lattice& numerator, const Lattice& denominator);

/// Homomorphism of subquotients induced by an ambient integer matrix.
class GroupHomomorphism {
 public:
  GroupHomomorphism() = default;
  GroupHomomorphism(IntegerMatrix ambient, SubquotientGroup source, SubquotientGroup target);

  const IntegerMatrix& ambient() const noexcept { return ambient_; }
  const SubquotientGroup& source() const noexcept { return source_; }
  const SubquotientGroup& target() const noexcept { return target_; }

  /// Matrix on generator coordinates (target generators x source generators).
  IntegerMatrix abstract_matrix() const;

  SubquotientGroup kernel() const;
  SubquotientGroup image() const;
  SubquotientGroup cokernel() const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
  bool is_zero() const;

  /// `after` composed with this map.
  GroupHomomorphism then(const GroupHomomorphism& after) const;

  /// Equality as maps of subquotients (differences land in the denominator).
  bool agrees_with(const GroupHomomorphism& other) const;

 private:
  IntegerMatrix ambient_;
  SubquotientGroup source_;
  SubquotientGroup target_;
};

GroupHomomorphism induced_map(const IntegerMatrix& f, const SubquotientGroup& source,
                              const SubquotientGroup& target);

}  // namespace totcof
