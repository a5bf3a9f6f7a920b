#include "totcof/chain_complex.hpp"

#include <algorithm>

#include "totcof/error.hpp"

namespace totcof {

namespace {

const std::vector<std::string>& empty_basis() {
  static const std::vector<std::string> empty;
  return empty;
}

const IntegerMatrix& empty_matrix() {
  static const IntegerMatrix empty;
  return empty;
}

}  // namespace

ChainComplex::ChainComplex(int lo, std::vector<std::vector<std::string>> bases,
                           std::vector<IntegerMatrix> differentials)
    : lo_(lo), bases_(std::move(bases)) {
  const std::size_t count = bases_.size();
  if (differentials.size() > count) fail(ErrorCode::input, "more differentials than degrees");
  differentials_.resize(count + 1);
  for (std::size_t k = 0; k <= count; ++k) {
    const std::size_t below = k == 0 ? 0 : bases_[k - 1].size();
    const std::size_t here = k == count ? 0 : bases_[k].size();
    if (k < differentials.size() && !(k == 0 && differentials[k].rows() == 0 && differentials[k].cols() == 0)) {
      differentials_[k] = std::move(differentials[k]);
    } else {
      differentials_[k] = IntegerMatrix(below, here);
    }
  }
  validate();
}

ChainComplex ChainComplex::concentrated(int degree, std::vector<std::string> basis) {
  std::vector<std::vector<std::string>> b;
  b.push_back(std::move(basis));
  return ChainComplex(degree, std::move(b), {});
}

void ChainComplex::validate() const {
  const std::size_t count = bases_.size();
  for (std::size_t k = 0; k <= count; ++k) {
    const std::size_t below = k == 0 ? 0 : bases_[k - 1].size();
    const std::size_t here = k == count ? 0 : bases_[k].size();
    const IntegerMatrix& d = differentials_[k];
    if (d.rows() != below || d.cols() != here) {
      fail(ErrorCode::input, "differential out of degree " + std::to_string(lo_ + static_cast<int>(k)) +
                                 " has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                 ", expected " + std::to_string(below) + "x" + std::to_string(here));
    }
  }
  for (std::size_t k = 1; k < count; ++k) {
    if (differentials_[k - 1].rows() == 0 || differentials_[k].cols() == 0) continue;
    if (!(differentials_[k - 1] * differentials_[k]).is_zero()) {
      fail(ErrorCode::input, "d o d != 0 out of degree " + std::to_string(lo_ + static_cast<int>(k)));
    }
  }
}

std::size_t ChainComplex::rank(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return bases_[static_cast<std::size_t>(n - lo_)].size();
}

std::size_t ChainComplex::total_rank() const {
  std::size_t t = 0;
  for (const auto& b : bases_) t += b.size();
  return t;
}

const std::vector<std::string>& ChainComplex::basis(int n) const {
  if (n < lo_ || n > hi()) return empty_basis();
  return bases_[static_cast<std::size_t>(n - lo_)];
}

const IntegerMatrix& ChainComplex::differential(int n) const {
  if (n < lo_ || static_cast<std::size_t>(n - lo_) >= differentials_.size()) return empty_matrix();
  return differentials_[static_cast<std::size_t>(n - lo_)];
}

ChainComplex ChainComplex::padded(int lo, int hi) const {
  if (has_degrees()) {
    lo = std::min(lo, lo_);
    hi = std::max(hi, this->hi());
  }
  if (hi < lo) return ChainComplex();
  std::vector<std::vector<std::string>> bases;
  std::vector<IntegerMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    bases.push_back(basis(n));
    diffs.push_back(IntegerMatrix(rank(n - 1), rank(n)));
    if (n - 1 >= lo_ && n <= this->hi()) diffs.back() = differential(n);
  }
  return ChainComplex(lo, std::move(bases), std::move(diffs));
}

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (int n = lo_; n <= hi(); ++n) chi += ((n % 2 == 0) ? 1 : -1) * static_cast<long>(rank(n));
  return chi;
}

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
                   std::map<int, IntegerMatrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [n, m] : components) {
    if (m.rows() != target_->rank(n) || m.cols() != source_->rank(n)) {
      fail(ErrorCode::invalid_map, "chain map component in degree " + std::to_string(n) + " has shape " +
                                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!m.is_zero()) components_.emplace(n, std::move(m));
  }
  const int lo = std::min(source_->lo(), target_->lo());
  const int hi = std::max(source_->hi(), target_->hi());
  for (int n = lo; n <= hi + 1; ++n) {
    // d_T f_n = f_{n-1} d_S
    const IntegerMatrix lhs = target_->differential(n) * component(n);
    const IntegerMatrix rhs = component(n - 1) * source_->differential(n);
    if (!(lhs == rhs)) fail(ErrorCode::invalid_map, "map does not commute with differentials in degree " + std::to_string(n));
  }
}

ChainMap ChainMap::identity(std::shared_ptr<const ChainComplex> complex) {
  std::map<int, IntegerMatrix> comps;
  for (int n = complex->lo(); n <= complex->hi(); ++n) comps.emplace(n, IntegerMatrix::identity(complex->rank(n)));
  return ChainMap(complex, complex, std::move(comps));
}

ChainMap ChainMap::zero(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target) {
  return ChainMap(std::move(source), std::move(target), {});
}

IntegerMatrix ChainMap::component(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return IntegerMatrix(target_->rank(n), source_->rank(n));
}

ChainMap ChainMap::then(const ChainMap& after) const {
  std::map<int, IntegerMatrix> comps;
  for (const auto& [n, m] : components_) comps.emplace(n, after.component(n) * m);
  return ChainMap(source_, after.target_, std::move(comps));
}

bool ChainMap::operator==(const ChainMap& other) const {
  const int lo = std::min(source_->lo(), target_->lo());
  const int hi = std::max(source_->hi(), target_->hi());
  for (int n = lo; n <= hi; ++n)
    if (!(component(n) == other.component(n))) return false;
  return true;
}

}  // namespace totcof
