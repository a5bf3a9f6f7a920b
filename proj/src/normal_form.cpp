#include "totcof/normal_form.hpp"

#include <algorithm>
#include <utility>

#include "totcof/error.hpp"

namespace totcof {

namespace {

using Column = IntegerVector;

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// col[dst] -= q * col[src], applied to both the working columns and the
// transform columns.
void axpy(std::vector<Column>& cols, std::size_t dst, std::size_t src, const Integer& q) {
  Column& d = cols[dst];
  const Column& s = cols[src];
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(s[i]) != 0) d[i] -= q * s[i];
}

void negate(Column& c) {
  for (auto& x : c) x = -x;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& m, bool with_transform) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  std::vector<Column> work = m.columns();
  std::vector<Column> trans;
  if (with_transform) {
    trans.assign(n, Column(n));
    for (std::size_t j = 0; j < n; ++j) trans[j][j] = 1;
  }
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    axpy(work, dst, src, q);
    if (with_transform) axpy(trans, dst, src, q);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(work[a], work[b]);
    if (with_transform) std::swap(trans[a], trans[b]);
  };

  HermiteForm out;
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < n; ++r) {
    for (;;) {
      // Minimal absolute value pivot among the remaining columns, ties by
      // lowest column index.
      std::size_t best = n;
      for (std::size_t k = c; k < n; ++k) {
        if (sgn(work[k][r]) == 0) continue;
        if (best == n || cmpabs(work[k][r], work[best][r]) < 0) best = k;
      }
      if (best == n) break;
      col_swap(c, best);
      bool done = true;
      for (std::size_t k = c + 1; k < n; ++k) {
        if (sgn(work[k][r]) == 0) continue;
        const Integer q = floor_div(work[k][r], work[c][r]);
        col_op(k, c, q);
        if (sgn(work[k][r]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(work[c][r]) == 0) continue;
    if (sgn(work[c][r]) < 0) {
      negate(work[c]);
      if (with_transform) negate(trans[c]);
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (sgn(work[j][r]) == 0) continue;
      const Integer q = floor_div(work[j][r], work[c][r]);
      if (sgn(q) != 0) col_op(j, c, q);
    }
    out.pivot_rows.push_back(r);
    ++c;
  }
  out.rank = c;
  out.h = IntegerMatrix::from_columns(rows, work);
  if (with_transform) out.u = IntegerMatrix::from_columns(n, trans);
  return out;
}

HermiteForm hermite_normal_form(const SparseMatrix& m, bool with_transform) {
  return hermite_normal_form(m.to_dense(), with_transform);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const IntegerMatrix& m)
      : a_(m), u_(IntegerMatrix::identity(m.rows())), ui_(IntegerMatrix::identity(m.rows())),
        v_(IntegerMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t rows = a_.rows();
    const std::size_t cols = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
      auto [pi, pj] = min_entry(t, t, true);
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (sgn(a_(i, t)) == 0) continue;
          row_add(i, t, -floor_div(a_(i, t), a_(t, t)));
          if (sgn(a_(i, t)) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(a_(t, j)) == 0) continue;
          col_add(j, t, -floor_div(a_(t, j), a_(t, t)));
          if (sgn(a_(t, j)) != 0) clean = false;
        }
        if (!clean) {
          auto [ci, cj] = min_entry(t, t, false);
          swap_rows(t, ci);
          swap_cols(t, cj);
          continue;
        }
        // Row and column are cleared; enforce divisibility of the remainder.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        row_add(t, bad, 1);
      }
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }
    SmithForm out;
    out.rank = t;
    out.d = std::move(a_);
    out.u = std::move(u_);
    out.u_inverse = std::move(ui_);
    out.v = std::move(v_);
    return out;
  }

 private:
  // Minimal |entry| over the trailing block (whole block when `block`, else
  // only row t and column t); ties by lowest row, then lowest column.
  std::pair<std::size_t, std::size_t> min_entry(std::size_t t0, std::size_t t1, bool block) const {
    const std::size_t rows = a_.rows();
    const std::size_t cols = a_.cols();
    std::size_t bi = rows, bj = cols;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (sgn(a_(i, j)) == 0) return;
      if (bi == rows || cmpabs(a_(i, j), a_(bi, bj)) < 0) {
        bi = i;
        bj = j;
      }
    };
    if (block) {
      for (std::size_t i = t0; i < rows; ++i)
        for (std::size_t j = t1; j < cols; ++j) consider(i, j);
    } else {
      for (std::size_t j = t1; j < cols; ++j) consider(t0, j);
      for (std::size_t i = t0 + 1; i < rows; ++i) consider(i, t1);
    }
    return {bi, bj};
  }

  static Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
    for (std::size_t r = 0; r < ui_.rows(); ++r) std::swap(ui_(r, i), ui_(r, k));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
  }

  // row dst += q * row src
  void row_add(std::size_t dst, std::size_t src, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (sgn(a_(src, j)) != 0) a_(dst, j) += q * a_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j)
      if (sgn(u_(src, j)) != 0) u_(dst, j) += q * u_(src, j);
    // inverse picks up column src -= q * column dst
    for (std::size_t r = 0; r < ui_.rows(); ++r)
      if (sgn(ui_(r, dst)) != 0) ui_(r, src) -= q * ui_(r, dst);
  }

  // col dst += q * col src
  void col_add(std::size_t dst, std::size_t src, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (sgn(a_(i, src)) != 0) a_(i, dst) += q * a_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i)
      if (sgn(v_(i, src)) != 0) v_(i, dst) += q * v_(i, src);
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(t, j) = -a_(t, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = -u_(t, j);
    for (std::size_t r = 0; r < ui_.rows(); ++r) ui_(r, t) = -ui_(r, t);
  }

  IntegerMatrix a_;
  IntegerMatrix u_;
  IntegerMatrix ui_;
  IntegerMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) { return SmithWorker(m).run(); }

SmithForm smith_normal_form(const SparseMatrix& m) { return SmithWorker(m.to_dense()).run(); }

std::optional<IntegerVector> solve_integer(const IntegerMatrix& m, const IntegerVector& b) {
  if (b.size() != m.rows()) {
    fail(ErrorCode::input, "right-hand side has length " + std::to_string(b.size()) + ", matrix has " +
                               std::to_string(m.rows()) + " rows");
  }
  const HermiteForm hf = hermite_normal_form(m, true);
  // Staircase forward substitution on H y = b.
  IntegerVector residual = b;
  IntegerVector y(m.cols());
  for (std::size_t k = 0; k < hf.rank; ++k) {
    const std::size_t r = hf.pivot_rows[k];
    const Integer& p = hf.h(r, k);
    if (!mpz_divisible_p(residual[r].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    Integer coef;
    mpz_divexact(coef.get_mpz_t(), residual[r].get_mpz_t(), p.get_mpz_t());
    if (sgn(coef) != 0)
      for (std::size_t i = r; i < m.rows(); ++i)
        if (sgn(hf.h(i, k)) != 0) residual[i] -= coef * hf.h(i, k);
    y[k] = std::move(coef);
  }
  if (!is_zero(residual)) return std::nullopt;
  return hf.u.apply(y);
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  const HermiteForm hf = hermite_normal_form(m, true);
  std::vector<std::size_t> cols;
  for (std::size_t j = hf.rank; j < m.cols(); ++j) cols.push_back(j);
  return hf.u.select_columns(cols);
}

std::size_t rank(const IntegerMatrix& m) { return hermite_normal_form(m, false).rank; }

}  // namespace totcof
