#include "totcof/lattice.hpp"

#include <sstream>
#include <utility>

#include "totcof/error.hpp"
#include "totcof/normal_form.hpp"

namespace totcof {

Lattice::Lattice(std::size_t ambient_rank, const IntegerMatrix& generators) : ambient_(ambient_rank) {
  if (generators.rows() != ambient_rank) {
    fail(ErrorCode::input, "lattice generators have " + std::to_string(generators.rows()) +
                               " rows, ambient rank is " + std::to_string(ambient_rank));
  }
  HermiteForm hf = hermite_normal_form(generators, false);
  std::vector<std::size_t> keep(hf.rank);
  for (std::size_t k = 0; k < hf.rank; ++k) keep[k] = k;
  basis_ = hf.h.select_columns(keep);
  pivot_rows_ = std::move(hf.pivot_rows);
}

Lattice Lattice::zero(std::size_t ambient_rank) { return Lattice(ambient_rank, IntegerMatrix(ambient_rank, 0)); }

Lattice Lattice::full(std::size_t ambient_rank) {
  return Lattice(ambient_rank, IntegerMatrix::identity(ambient_rank));
}

std::optional<IntegerVector> Lattice::coordinates(const IntegerVector& v) const {
  if (v.size() != ambient_) {
    fail(ErrorCode::input, "vector of length " + std::to_string(v.size()) + " tested against lattice in Z^" +
                               std::to_string(ambient_));
  }
  IntegerVector residual = v;
  IntegerVector x(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t r = pivot_rows_[k];
    for (std::size_t i = (k == 0 ? 0 : pivot_rows_[k - 1] + 1); i < r; ++i)
      if (sgn(residual[i]) != 0) return std::nullopt;
    const Integer& p = basis_(r, k);
    if (!mpz_divisible_p(residual[r].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    Integer coef;
    mpz_divexact(coef.get_mpz_t(), residual[r].get_mpz_t(), p.get_mpz_t());
    if (sgn(coef) != 0)
      for (std::size_t i = r; i < ambient_; ++i)
        if (sgn(basis_(i, k)) != 0) residual[i] -= coef * basis_(i, k);
    x[k] = std::move(coef);
  }
  if (!is_zero(residual)) return std::nullopt;
  return x;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

Lattice Lattice::sum(const Lattice& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::input, "lattice sum across different ambient ranks");
  return Lattice(ambient_, hstack(basis_, other.basis_));
}

Lattice Lattice::intersection(const Lattice& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::input, "lattice intersection across different ambient ranks");
  if (rank() == 0 || other.rank() == 0) return zero(ambient_);
  // (x, y) with A x - B y = 0 gives A x in both.
  const IntegerMatrix kernel = kernel_basis(hstack(basis_, -other.basis_));
  std::vector<std::size_t> top(rank());
  for (std::size_t k = 0; k < rank(); ++k) top[k] = k;
  return Lattice(ambient_, basis_ * kernel.select_rows(top));
}

Lattice Lattice::image(const IntegerMatrix& m) const {
  if (m.cols() != ambient_) fail(ErrorCode::input, "image: matrix columns do not match ambient rank");
  return Lattice(m.rows(), m * basis_);
}

Lattice Lattice::preimage(const IntegerMatrix& m, const Lattice& target) {
  if (m.rows() != target.ambient_) fail(ErrorCode::input, "preimage: matrix rows do not match target ambient rank");
  const std::size_t s = m.cols();
  const IntegerMatrix kernel = kernel_basis(hstack(m, -target.basis_));
  std::vector<std::size_t> top(s);
  for (std::size_t k = 0; k < s; ++k) top[k] = k;
  return Lattice(s, kernel.select_rows(top));
}

Lattice lattice_ops(const Lattice& a, const Lattice& b, LatticeOp kind, const IntegerMatrix* map) {
  switch (kind) {
    case LatticeOp::sum:
      return a.sum(b);
    case LatticeOp::intersection:
      return a.intersection(b);
    case LatticeOp::preimage:
      if (map == nullptr) fail(ErrorCode::input, "preimage requires a map");
      if (map->cols() != a.ambient_rank()) fail(ErrorCode::input, "preimage map does not start at A's ambient");
      return Lattice::preimage(*map, b).intersection(a);
  }
  fail(ErrorCode::input, "unknown lattice operation");
}

std::string GroupStructure::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

GroupStructure normalize_group(std::size_t free_rank, const std::vector<Integer>& cyclic_orders) {
  GroupStructure g;
  g.free_rank = free_rank;
  std::vector<Integer> finite;
  for (const auto& d : cyclic_orders) {
    if (sgn(d) == 0) {
      ++g.free_rank;
    } else if (abs(d) != 1) {
      finite.push_back(abs(d));
    }
  }
  IntegerMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (auto& d : smith_normal_form(diag).diagonal())
    if (d != 1) g.torsion.push_back(d);
  return g;
}

SubquotientGroup::SubquotientGroup(Lattice numerator, Lattice denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.ambient_rank() != denominator_.ambient_rank()) {
    fail(ErrorCode::containment, "numerator and denominator live in different ambient ranks");
  }
  const std::size_t k = numerator_.rank();
  const std::size_t l = denominator_.rank();
  IntegerMatrix coords(k, l);
  for (std::size_t j = 0; j < l; ++j) {
    auto x = numerator_.coordinates(denominator_.basis().column(j));
    if (!x) fail(ErrorCode::containment, "denominator is not contained in numerator");
    for (std::size_t i = 0; i < k; ++i) coords(i, j) = (*x)[i];
  }
  const SmithForm snf = smith_normal_form(coords);
  const IntegerMatrix adapted = numerator_.basis() * snf.u_inverse;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    const Integer& d = snf.d(i, i);
    if (d != 1) {
      kept.push_back(i);
      orders_.push_back(d);
      structure_.torsion.push_back(d);
    }
  }
  for (std::size_t i = snf.rank; i < k; ++i) {
    kept.push_back(i);
    orders_.push_back(0);
  }
  structure_.free_rank = k - snf.rank;
  to_adapted_ = snf.u.select_rows(kept);
  for (std::size_t i : kept) generators_.push_back(adapted.column(i));
}

SubquotientGroup SubquotientGroup::zero(std::size_t ambient_rank) {
  return SubquotientGroup(Lattice::zero(ambient_rank), Lattice::zero(ambient_rank));
}

IntegerVector SubquotientGroup::generator(std::size_t i) const { return generators_.at(i); }

IntegerVector SubquotientGroup::coordinates(const IntegerVector& v) const {
  auto x = numerator_.coordinates(v);
  if (!x) fail(ErrorCode::containment, "element does not lie in the numerator lattice");
  IntegerVector y = to_adapted_.apply(*x);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(orders_[i]) != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), orders_[i].get_mpz_t());
  }
  return y;
}

SubquotientGroup group_structure(const Lattice& numerator, const Lattice& denominator) {
  return SubquotientGroup(numerator, denominator);
}

GroupHomomorphism::GroupHomomorphism(IntegerMatrix ambient, SubquotientGroup source, SubquotientGroup target)
    : ambient_(std::move(ambient)), source_(std::move(source)), target_(std::move(target)) {
  if (ambient_.cols() != source_.ambient_rank() || ambient_.rows() != target_.ambient_rank()) {
    fail(ErrorCode::invalid_map, "map shape " + std::to_string(ambient_.rows()) + "x" +
                                     std::to_string(ambient_.cols()) + " does not match Z^" +
                                     std::to_string(source_.ambient_rank()) + " -> Z^" +
                                     std::to_string(target_.ambient_rank()));
  }
  const IntegerMatrix num_image = ambient_ * source_.numerator().basis();
  for (std::size_t j = 0; j < num_image.cols(); ++j)
    if (!target_.numerator().contains(num_image.column(j)))
      fail(ErrorCode::invalid_map, "map does not send numerator into target numerator");
  const IntegerMatrix den_image = ambient_ * source_.denominator().basis();
  for (std::size_t j = 0; j < den_image.cols(); ++j)
    if (!target_.denominator().contains(den_image.column(j)))
      fail(ErrorCode::invalid_map, "map does not send denominator into target denominator");
}

IntegerMatrix GroupHomomorphism::abstract_matrix() const {
  IntegerMatrix m(target_.generator_count(), source_.generator_count());
  for (std::size_t j = 0; j < source_.generator_count(); ++j) {
    const IntegerVector c = target_.coordinates(ambient_.apply(source_.generator(j)));
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

SubquotientGroup GroupHomomorphism::kernel() const {
  Lattice num = Lattice::preimage(ambient_, target_.denominator()).intersection(source_.numerator());
  return SubquotientGroup(std::move(num), source_.denominator());
}

SubquotientGroup GroupHomomorphism::image() const {
  Lattice num = source_.numerator().image(ambient_).sum(target_.denominator());
  return SubquotientGroup(std::move(num), target_.denominator());
}

SubquotientGroup GroupHomomorphism::cokernel() const {
  return SubquotientGroup(target_.numerator(), image().numerator());
}

bool GroupHomomorphism::is_injective() const { return kernel().trivial(); }

bool GroupHomomorphism::is_surjective() const {
  return source_.numerator().image(ambient_).sum(target_.denominator()) == target_.numerator();
}

bool GroupHomomorphism::is_zero() const {
  return target_.denominator().contains(source_.numerator().image(ambient_));
}

GroupHomomorphism GroupHomomorphism::then(const GroupHomomorphism& after) const {
  return GroupHomomorphism(after.ambient_ * ambient_, source_, after.target_);
}

bool GroupHomomorphism::agrees_with(const GroupHomomorphism& other) const {
  if (!(ambient_.rows() == other.ambient_.rows() && ambient_.cols() == other.ambient_.cols())) return false;
  const IntegerMatrix diff = (ambient_ - other.ambient_) * source_.numerator().basis();
  for (std::size_t j = 0; j < diff.cols(); ++j)
    if (!target_.denominator().contains(diff.column(j))) return false;
  return true;
}

GroupHomomorphism induced_map(const IntegerMatrix& f, const SubquotientGroup& source,
                              const SubquotientGroup& target) {
  return GroupHomomorphism(f, source, target);
}

}  // namespace totcof
