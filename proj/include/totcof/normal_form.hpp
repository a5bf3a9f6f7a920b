#pragma once

#include <optional>
#include <vector>

#include "totcof/integer_matrix.hpp"

namespace totcof {

/// Column Hermite normal form H = M * U.
///
/// H is a lower staircase: column k (k < rank) has its leading nonzero entry
/// at pivot_rows[k], that pivot is positive, every column to its right is zero
/// in that row, and every column to its left holds a residue in [0, pivot)
/// there. Columns rank.. of H are zero, so the matching columns of U span the
/// integer kernel of M.
struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

/// When with_transform is false, u is left empty (lattice canonicalization
/// only needs H).
HermiteForm hermite_normal_form(const IntegerMatrix& m, bool with_transform = true);
HermiteForm hermite_normal_form(const SparseMatrix& m, bool with_transform = true);

/// D = U * M * V with D diagonal, d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;
  IntegerMatrix u_inverse;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);
SmithForm smith_normal_form(const SparseMatrix& m);

/// Some integer x with M x = b, or nothing when no integer solution exists.
std::optional<IntegerVector> solve_integer(const IntegerMatrix& m, const IntegerVector& b);

/// Columns form a basis of the integer kernel {x : M x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

}  // namespace totcof
