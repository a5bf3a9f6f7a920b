#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "totcof/integer_matrix.hpp"

namespace totcof {

/// Bounded complex of finitely generated free abelian groups with labelled
/// bases. differential(n) maps degree n to degree n - 1; the constructor
/// checks shapes and that consecutive differentials compose to zero.
class ChainComplex {
 public:
  /// The zero complex.
  ChainComplex() = default;
  /// bases[k] is the basis in degree lo + k; differentials[k] is the
  /// differential out of degree lo + k (it may be omitted for k = 0).
  ChainComplex(int lo, std::vector<std::vector<std::string>> bases, std::vector<IntegerMatrix> differentials);

  /// Single free module Z^rank in one degree.
  static ChainComplex concentrated(int degree, std::vector<std::string> basis);

  int lo() const noexcept { return lo_; }
  /// lo() - 1 when there are no degrees.
  int hi() const noexcept { return lo_ + static_cast<int>(bases_.size()) - 1; }
  bool has_degrees() const noexcept { return !bases_.empty(); }

  std::size_t rank(int n) const;
  std::size_t total_rank() const;
  const std::vector<std::string>& basis(int n) const;
  /// rank(n - 1) x rank(n) for every n, zero-shaped outside the range.
  const IntegerMatrix& differential(int n) const;

  /// Same complex over a wider degree window (zero modules added).
  ChainComplex padded(int lo, int hi) const;

  long euler_characteristic() const;
  bool is_zero() const { return total_rank() == 0; }

 private:
  void validate() const;

  int lo_ = 0;
  std::vector<std::vector<std::string>> bases_;
  // differential out of degree lo_ + k, plus one extra for degree hi + 1
  std::vector<IntegerMatrix> differentials_;
};

/// Degreewise integer maps commuting with the differentials.
class ChainMap {
 public:
  ChainMap() = default;
  /// components[n] maps source degree n into target degree n; missing
  /// degrees are zero.
  ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
           std::map<int, IntegerMatrix> components);

  static ChainMap identity(std::shared_ptr<const ChainComplex> complex);
  static ChainMap zero(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target);

  const ChainComplex& source() const { return *source_; }
  const ChainComplex& target() const { return *target_; }
  std::shared_ptr<const ChainComplex> source_ptr() const { return source_; }
  std::shared_ptr<const ChainComplex> target_ptr() const { return target_; }

  /// target.rank(n) x source.rank(n).
  IntegerMatrix component(int n) const;

  /// `after` composed with this map.
  ChainMap then(const ChainMap& after) const;
  bool operator==(const ChainMap& other) const;

 private:
  std::shared_ptr<const ChainComplex> source_;
  std::shared_ptr<const ChainComplex> target_;
  std::map<int, IntegerMatrix> components_;
};

}  // namespace totcof
