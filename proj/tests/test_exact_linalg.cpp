#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "totcof/error.hpp"
#include "totcof/lattice.hpp"
#include "totcof/normal_form.hpp"

using namespace totcof;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

bool is_hermite(const HermiteForm& hf) {
  const IntegerMatrix& h = hf.h;
  std::size_t prev = 0;
  for (std::size_t k = 0; k < hf.rank; ++k) {
    const std::size_t r = hf.pivot_rows[k];
    if (k > 0 && r <= prev) return false;
    prev = r;
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, k) != 0) return false;
    if (h(r, k) <= 0) return false;
    for (std::size_t j = k + 1; j < h.cols(); ++j)
      if (h(r, j) != 0) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (h(r, j) < 0 || h(r, j) >= h(r, k)) return false;
  }
  for (std::size_t j = hf.rank; j < h.cols(); ++j)
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) return false;
  return true;
}

// Membership oracle for full-rank lattices in Z^2: L contains N Z^2 where N is
// its index, so L is decided by its image in (Z/N)^2, closed by brute force.
struct ModularLattice2 {
  long n = 0;
  std::set<std::pair<long, long>> residues;

  explicit ModularLattice2(const std::vector<std::pair<long, long>>& gens) {
    Integer g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Integer minor = gens[i].first * gens[j].second - gens[i].second * gens[j].first;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
      }
    n = g.get_si();
    if (n == 0) return;
    residues.insert({0, 0});
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::pair<long, long>> current(residues.begin(), residues.end());
      for (auto [x, y] : current)
        for (auto [gx, gy] : gens) {
          std::pair<long, long> r{((x + gx) % n + n) % n, ((y + gy) % n + n) % n};
          if (residues.insert(r).second) grew = true;
        }
    }
  }
  bool contains(long x, long y) const { return residues.count({((x % n) + n) % n, ((y % n) + n) % n}) > 0; }
};

Lattice lattice_of(const std::vector<std::pair<long, long>>& gens) {
  IntegerMatrix m(2, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    m(0, j) = gens[j].first;
    m(1, j) = gens[j].second;
  }
  return Lattice(2, m);
}

}  // namespace

TEST_CASE("hermite form of the identity is the identity", "[hnf]") {
  const auto hf = hermite_normal_form(IntegerMatrix::identity(2));
  CHECK(hf.h == IntegerMatrix::identity(2));
  CHECK(hf.u == IntegerMatrix::identity(2));
}

TEST_CASE("hermite form of [[2,4],[6,8]] by hand column reduction", "[hnf]") {
  // c2 -= 2 c1 gives [[2,0],[6,-4]]; negate c2, then c1 += 2 c2 reduces 6 to 2 mod 4.
  const IntegerMatrix m{{2, 4}, {6, 8}};
  const auto hf = hermite_normal_form(m);
  CHECK(hf.h == IntegerMatrix({{2, 0}, {2, 4}}));
  CHECK(m * hf.u == hf.h);
  CHECK(abs(determinant(hf.u)) == 1);
}

TEST_CASE("hermite form of a zero matrix", "[hnf]") {
  const auto hf = hermite_normal_form(IntegerMatrix(3, 2));
  CHECK(hf.h.is_zero());
  CHECK(hf.u == IntegerMatrix::identity(2));
  CHECK(hf.rank == 0);
}

TEST_CASE("hermite form reconstruction, unimodularity and span on random matrices", "[hnf][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const IntegerMatrix m = random_matrix(rng, rows, cols, 6);
    const auto hf = hermite_normal_form(m);
    REQUIRE(m * hf.u == hf.h);
    REQUIRE(abs(determinant(hf.u)) == 1);
    REQUIRE(is_hermite(hf));
    REQUIRE(hf.rank == oracle::integer_rank(m));
    // mutual membership: every column of H is M x and every column of M is H y
    for (std::size_t j = 0; j < cols; ++j) REQUIRE(solve_integer(hf.h, m.column(j)).has_value());
    const auto sparse = hermite_normal_form(SparseMatrix(m));
    REQUIRE(sparse.h == hf.h);
  }
}

TEST_CASE("smith form examples", "[snf]") {
  CHECK(smith_normal_form(IntegerMatrix::identity(3)).diagonal() == std::vector<Integer>{1, 1, 1});
  const IntegerMatrix m{{2, 4}, {6, 8}};
  const auto sf = smith_normal_form(m);
  CHECK(sf.diagonal() == std::vector<Integer>{2, 4});
  CHECK(sf.u * m * sf.v == sf.d);
  const auto z = smith_normal_form(IntegerMatrix{{0}});
  CHECK(z.d == IntegerMatrix{{0}});
  CHECK(z.rank == 0);
}

TEST_CASE("smith form matches determinantal divisors on random matrices", "[snf][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntegerMatrix m = random_matrix(rng, rows, cols, 9);
    const auto sf = smith_normal_form(m);
    REQUIRE(sf.u * m * sf.v == sf.d);
    REQUIRE(abs(determinant(sf.u)) == 1);
    REQUIRE(abs(determinant(sf.v)) == 1);
    REQUIRE(sf.u * sf.u_inverse == IntegerMatrix::identity(rows));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) REQUIRE(sf.d(i, j) == 0);
    const auto diag = sf.diagonal();
    for (std::size_t k = 0; k + 1 < diag.size(); ++k) REQUIRE(diag[k + 1] % diag[k] == 0);
    const auto dd = oracle::determinantal_divisors(m);
    REQUIRE(dd.size() == diag.size());
    Integer prod = 1;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      REQUIRE(diag[k] > 0);
      prod *= diag[k];
      REQUIRE(prod == dd[k]);
    }
    REQUIRE(diag == oracle::invariant_factors(m));
  }
}

TEST_CASE("smith form of a large-entry matrix stays exact", "[snf]") {
  IntegerMatrix m(2, 2);
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = Integer("987654321098765432109876543210");
  m(1, 0) = 3;
  m(1, 1) = 7;
  const auto sf = smith_normal_form(m);
  CHECK(sf.u * m * sf.v == sf.d);
  const auto diag = sf.diagonal();
  REQUIRE(diag.size() == 2);
  CHECK(diag[0] * diag[1] == abs(determinant(m)));
}

TEST_CASE("integer solving", "[solve]") {
  auto x = solve_integer(IntegerMatrix{{2}}, {4});
  REQUIRE(x);
  CHECK(*x == IntegerVector{2});
  CHECK_FALSE(solve_integer(IntegerMatrix{{2}}, {3}));
  auto y = solve_integer(IntegerMatrix{{2, 3}}, {1});
  REQUIRE(y);
  CHECK(2 * (*y)[0] + 3 * (*y)[1] == 1);
  CHECK_THROWS_AS(solve_integer(IntegerMatrix{{2, 3}}, {1, 2}), Error);
}

TEST_CASE("solutions are checked against random consistent systems", "[solve][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntegerMatrix m = random_matrix(rng, rows, cols, 5);
    IntegerVector x0(cols);
    for (auto& v : x0) v = static_cast<long>(rng() % 7) - 3;
    const IntegerVector b = m.apply(x0);
    const auto x = solve_integer(m, b);
    REQUIRE(x);
    REQUIRE(m.apply(*x) == b);
    const IntegerMatrix k = kernel_basis(m);
    REQUIRE((m * k).is_zero());
    REQUIRE(k.cols() == cols - oracle::integer_rank(m));
  }
}

TEST_CASE("one-dimensional lattice sum and intersection", "[lattice]") {
  const Lattice a(1, IntegerMatrix{{2}}), b(1, IntegerMatrix{{3}});
  CHECK(lattice_ops(a, b, LatticeOp::sum) == Lattice::full(1));
  CHECK(lattice_ops(a, b, LatticeOp::intersection) == Lattice(1, IntegerMatrix{{6}}));
  CHECK(a.intersection(a) == a);
  const IntegerMatrix m{{1, 2}, {3, 4}, {5, 6}};
  CHECK(lattice_ops(Lattice::full(2), Lattice::full(3), LatticeOp::preimage, &m) == Lattice::full(2));
  CHECK_THROWS_AS(a.sum(Lattice::full(2)), Error);
}

TEST_CASE("canonical form is generator-order independent", "[lattice]") {
  const Lattice x(2, IntegerMatrix{{2, 0, 4}, {0, 6, 6}});
  const Lattice y(2, IntegerMatrix{{4, 0, 2}, {6, 6, 0}});
  CHECK(x == y);
}

TEST_CASE("lattice operations agree with modular membership in a box", "[lattice][property]") {
  std::mt19937_64 rng(23);
  int tested = 0;
  while (tested < 60) {
    auto gens = [&]() {
      std::vector<std::pair<long, long>> g;
      for (int k = 0; k < 2 + static_cast<int>(rng() % 2); ++k)
        g.push_back({static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3});
      return g;
    };
    const auto ga = gens(), gb = gens(), gc = gens();
    const ModularLattice2 oa(ga), ob(gb), oc(gc);
    if (oa.n == 0 || ob.n == 0 || oc.n == 0) continue;
    ++tested;
    const Lattice a = lattice_of(ga), b = lattice_of(gb), c = lattice_of(gc);
    auto both = gb;
    both.insert(both.end(), gc.begin(), gc.end());
    const ModularLattice2 obc(both);
    const Lattice ab = a.intersection(b), bc = b.sum(c);
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        const IntegerVector v{x, y};
        REQUIRE(a.contains(v) == oa.contains(x, y));
        REQUIRE(ab.contains(v) == (oa.contains(x, y) && ob.contains(x, y)));
        REQUIRE(bc.contains(v) == obc.contains(x, y));
      }
    // modular law with the smaller lattice inside: (A n C) + (A n B) = A n (C + (A n B))
    const Lattice lhs = a.intersection(c).sum(ab);
    const Lattice rhs = a.intersection(c.sum(ab));
    REQUIRE(lhs == rhs);
    // preimage of B under a 2x2 matrix M, checked pointwise
    const IntegerMatrix m = random_matrix(rng, 2, 2, 2);
    const Lattice pre = Lattice::preimage(m, b);
    for (long x = -4; x <= 4; ++x)
      for (long y = -4; y <= 4; ++y) {
        const IntegerVector w = m.apply({x, y});
        REQUIRE(pre.contains(IntegerVector{x, y}) == ob.contains(w[0].get_si(), w[1].get_si()));
      }
  }
}

TEST_CASE("group structure examples", "[subquotient]") {
  CHECK(group_structure(Lattice::full(2), Lattice::zero(2)).structure() == GroupStructure{2, {}});
  CHECK(group_structure(Lattice::full(1), Lattice(1, IntegerMatrix{{2}})).structure() == GroupStructure{0, {2}});
  const Lattice den(2, IntegerMatrix{{2, 0}, {0, 4}});
  CHECK(group_structure(Lattice::full(2), den).structure() == GroupStructure{0, {2, 4}});
  CHECK_THROWS_AS(group_structure(Lattice(1, IntegerMatrix{{2}}), Lattice::full(1)), Error);
  try {
    group_structure(Lattice(1, IntegerMatrix{{2}}), Lattice::full(1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::containment);
  }
}

TEST_CASE("group structure is invariant under generator shuffles", "[subquotient][property]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntegerMatrix num = random_matrix(rng, n, 1 + rng() % 4, 4);
    const IntegerMatrix coeffs = random_matrix(rng, num.cols(), 1 + rng() % 4, 3);
    const IntegerMatrix den = num * coeffs;
    const auto g = group_structure(Lattice(n, num), Lattice(n, den));
    std::vector<std::size_t> pn(num.cols()), pd(den.cols());
    for (std::size_t i = 0; i < pn.size(); ++i) pn[i] = i;
    for (std::size_t i = 0; i < pd.size(); ++i) pd[i] = i;
    std::shuffle(pn.begin(), pn.end(), rng);
    std::shuffle(pd.begin(), pd.end(), rng);
    const auto h = group_structure(Lattice(n, num.select_columns(pn)), Lattice(n, den.select_columns(pd)));
    REQUIRE(g.structure() == h.structure());
    REQUIRE(g.structure().free_rank == Lattice(n, num).rank() - Lattice(n, den).rank());
    // coordinates round-trip through generators
    for (std::size_t i = 0; i < g.generator_count(); ++i) {
      auto c = g.coordinates(g.generator(i));
      for (std::size_t k = 0; k < c.size(); ++k) REQUIRE(c[k] == (k == i ? 1 : 0));
    }
  }
}

TEST_CASE("induced maps of subquotients", "[subquotient]") {
  const auto z4 = group_structure(Lattice::full(1), Lattice(1, IntegerMatrix{{4}}));
  const auto id = induced_map(IntegerMatrix::identity(1), z4, z4);
  CHECK(id.is_isomorphism());
  const auto twice = induced_map(IntegerMatrix{{2}}, z4, z4);
  CHECK(twice.kernel().structure() == GroupStructure{0, {2}});
  CHECK(twice.image().structure() == GroupStructure{0, {2}});
  CHECK(twice.cokernel().structure() == GroupStructure{0, {2}});
  // oracle: enumerate the four elements
  int kernel_size = 0;
  std::set<long> image;
  for (long x = 0; x < 4; ++x) {
    if ((2 * x) % 4 == 0) ++kernel_size;
    image.insert((2 * x) % 4);
  }
  CHECK(kernel_size == 2);
  CHECK(image.size() == 2);
  const auto zero = induced_map(IntegerMatrix{{0}}, z4, z4);
  CHECK(zero.is_zero());
  CHECK(zero.kernel().structure() == z4.structure());
  CHECK(twice.then(twice).is_zero());
  // Z/4 -> Z/2 is not well defined by multiplication by 1 in reverse
  const auto z2 = group_structure(Lattice::full(1), Lattice(1, IntegerMatrix{{2}}));
  CHECK_NOTHROW(induced_map(IntegerMatrix{{1}}, z4, z2));
  CHECK_THROWS_AS(induced_map(IntegerMatrix{{1}}, z2, z4), Error);
}
