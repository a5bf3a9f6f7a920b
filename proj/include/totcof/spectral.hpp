#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "totcof/diagram.hpp"
#include "totcof/integer_matrix.hpp"
#include "totcof/poset.hpp"

namespace totcof {

/// Q (characteristic 0) or F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  /// Rejects non-primes with an input error.
  static Field prime(long p);
  /// "q" or "fp:<p>".
  static Field parse(const std::string& spec);

  long characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  /// "Q" or "F_p".
  std::string name() const;

  mpq_class reduce(const mpq_class& x) const;
  mpq_class inverse(const mpq_class& x) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  long p_ = 0;
};

/// Dense matrix over a Field; entries are kept reduced (canonical
/// representatives in [0, p) for F_p).
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(const Field& field, std::size_t rows, std::size_t cols);
  static FieldMatrix from_integer(const Field& field, const IntegerMatrix& m);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const mpq_class& v) { data_[i * cols_ + j] = field_.reduce(v); }

  bool is_zero() const;
  std::size_t rank() const;
  /// Columns spanning the null space.
  FieldMatrix kernel() const;
  FieldMatrix select_rows(const std::vector<std::size_t>& which) const;
  FieldMatrix select_columns(const std::vector<std::size_t>& which) const;
  /// Zero rows inserted so row i lands on position[i] of a length-n vector.
  FieldMatrix embed_rows(std::size_t n, const std::vector<std::size_t>& position) const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Dimension of H_n of an integral complex with field coefficients.
std::size_t field_betti(const ChainComplex& x, int n, const Field& field);

/// One page of the spectral sequence of the column filtration F^s = (cells
/// with chain length p >= s) of the holim total complex. Cell (p, q) sits in
/// total degree n = q - p; d_r maps (p, q) to (p + r, q + r - 1).
struct SpectralPage {
  int r = 0;
  std::map<Bidegree, std::size_t> dims;  // nonzero cells only
  /// Keyed by source bidegree; rows index the target cell's basis.
  std::map<Bidegree, FieldMatrix> differentials;
  /// Representative cycles of each cell's basis, in total-complex coordinates.
  std::map<Bidegree, FieldMatrix> representatives;

  std::size_t dim(int p, int q) const;
};

struct SpectralSequence {
  Field field;
  int longest_chain = -1;
  std::vector<SpectralPage> pages;  // pages[k].r == k
  std::map<Bidegree, std::size_t> e_infinity;
  TotalComplex total;

  const SpectralPage* page(int r) const;
};

/// Pages r = 0 .. min(r_max, L + 1) with L the longest chain length; E_{L+1}
/// is already E_infinity. r_max < 0 selects the default L + 2.
SpectralSequence ss_pages(const DiagramOfComplexes& y, const Field& field, int r_max = -1);

struct E2Entry {
  Bidegree at;
  std::size_t spectral = 0;  // dim E_2^{p,q}
  std::size_t limit = 0;     // dim lim^p H_q(Y; field)
};

struct E2Report {
  Field field;
  std::vector<E2Entry> entries;  // every (p, q) in the window
  std::size_t mismatches = 0;
  bool ok() const noexcept { return mismatches == 0; }
};

/// E_2 against lim^p of the homology diagram. Over Q the limit side is the
/// free rank of the integral lim^p H_q; over F_p it counts the invariant
/// factors of lim^p H_q(Cone(p)), whose homology is H_q(Y; F_p).
E2Report e2_check(const DiagramOfComplexes& y, const Field& field);
E2Report e2_check(const DiagramOfComplexes& y, const SpectralSequence& ss);

struct AbutmentDegree {
  int degree = 0;
  std::size_t e_infinity = 0;  // sum over q - p = n
  std::size_t holim = 0;
  std::optional<std::size_t> gamma;  // dim H_{n+m}(Gamma), ball pairs only
};

struct AbutmentReport {
  Field field;
  std::vector<AbutmentDegree> degrees;
  long euler_e2 = 0;
  long euler_holim = 0;
  bool convergence_ok = true;
  bool euler_ok = true;
  std::optional<bool> shift_ok;
  bool ok() const noexcept { return convergence_ok && euler_ok && shift_ok.value_or(true); }
};

/// With a pair carrying a ball dimension m, also compares against the total
/// cofibre shifted by m.
AbutmentReport abutment_check(const DiagramOfComplexes& y, const Field& field, const PosetPair* pair = nullptr);
AbutmentReport abutment_check(const DiagramOfComplexes& y, const SpectralSequence& ss, const PosetPair* pair = nullptr);

}  // namespace totcof
