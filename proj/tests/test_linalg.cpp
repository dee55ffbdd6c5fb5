#include "doctest.h"

#include "drz/generators.hpp"
#include "drz/linalg.hpp"
#include "test_util.hpp"

using namespace drz;
using namespace drz::testutil;

namespace {
const Domain kQ = Domain::rationals();
}

TEST_CASE("rref rank and transform record") {
  CHECK(rref_rank(Matrix<Rational>::identity(4, kQ)).rank == 4);
  CHECK(rref_rank(mgf(2, 2, 2, {"1", "1", "1", "1"})).rank == 1);
  CHECK(rref_rank(Matrix<Rational>(3, 3, kQ)).rank == 0);

  SplitMix64 g(17);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + static_cast<int>(g.below(4));
    int c = 1 + static_cast<int>(g.below(4));
    auto a = detail::random_matrix<Rational>(g, kQ, r, c, 5);
    auto rr = rref_rank(a);
    CHECK(rr.transform * a == rr.reduced);
    CHECK(rr.rank == static_cast<int>(rr.pivots.size()));
    CHECK(rr.rank + null_space_basis(a).cols() == a.cols());
  }
  for (int t = 0; t < 40; ++t) {
    auto a = detail::random_matrix<Fp>(g, Domain::prime_field(3), 4, 3, 0);
    auto rr = rref_rank(a);
    CHECK(rr.transform * a == rr.reduced);
  }
}

TEST_CASE("solve_right") {
  auto id = Matrix<Rational>::identity(2, kQ);
  auto b = mq(2, 2, {"1", "2", "3", "4"});
  CHECK(*solve_right(id, b) == b);

  Matrix<Rational> zero(2, 2, kQ);
  CHECK(*solve_right(zero, zero) == zero);

  auto a = mq(2, 2, {"1", "0", "0", "0"});
  auto rhs = mq(2, 1, {"0", "1"});
  CHECK_FALSE(solve_right(a, rhs).has_value());

  SplitMix64 g(23);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(g.below(4));
    auto m = detail::random_matrix<Rational>(g, kQ, n, n, 4);
    auto y = detail::random_matrix<Rational>(g, kQ, n, 2, 4);
    auto x = solve_right(m, m * y);
    REQUIRE(x.has_value());
    CHECK(m * *x == m * y);
  }
  CHECK_THROWS_AS(solve_right(mq(2, 2, {"1", "0", "0", "1"}),
                              mq(3, 1, {"1", "1", "1"})),
                  DimensionMismatch);
}

TEST_CASE("inverse") {
  CHECK(inverse(mgf(7, 2, 2, {"2", "0", "0", "1"})) ==
        mgf(7, 2, 2, {"4", "0", "0", "1"}));
  CHECK(inverse(mq(2, 2, {"1", "0", "1", "1"})) ==
        mq(2, 2, {"1", "0", "-1", "1"}));
  CHECK_THROWS_AS(inverse(mq(2, 2, {"0", "1", "0", "0"})), Singular);
  CHECK_THROWS_AS(inverse(mq(1, 2, {"1", "2"})), NotSquare);

  SplitMix64 g(29);
  const Domain gf13 = Domain::prime_field(13);
  for (int t = 0; t < 30; ++t) {
    auto m = detail::random_matrix<Fp>(g, gf13, 4, 4, 0);
    if (rank(m) < 4) continue;
    auto mi = inverse(m);
    CHECK(m * mi == Matrix<Fp>::identity(4, gf13));
    CHECK(mi * m == Matrix<Fp>::identity(4, gf13));
  }
}

TEST_CASE("column and null space bases") {
  auto id = Matrix<Rational>::identity(3, kQ);
  CHECK(column_space_basis(id) == id);
  CHECK(null_space_basis(id).cols() == 0);

  Matrix<Rational> zero(3, 3, kQ);
  CHECK(column_space_basis(zero).cols() == 0);
  CHECK(null_space_basis(zero) == id);

  auto d10 = mq(2, 2, {"1", "0", "0", "0"});
  CHECK(column_space_basis(d10) == mq(2, 1, {"1", "0"}));
  CHECK(null_space_basis(d10) == mq(2, 1, {"0", "1"}));

  // Basis columns really span: a * null basis = 0, and every column of a
  // is a combination of the column basis (rank equality).
  SplitMix64 g(31);
  for (int t = 0; t < 30; ++t) {
    auto a = detail::random_matrix<Rational>(g, kQ, 3, 4, 3);
    auto nb = null_space_basis(a);
    CHECK((a * nb).is_zero());
    auto cb = column_space_basis(a);
    CHECK(rank(cb) == cb.cols());
    CHECK(rank(hcat(cb, a)) == rank(a));
  }
}

TEST_CASE("deterministic pivot choice") {
  // First nonzero in column order: the reduction of this rank-1 matrix must
  // pick row 0 as pivot and produce exactly this reduced form.
  auto a = mq(2, 2, {"2", "4", "1", "2"});
  auto rr = rref_rank(a);
  CHECK(rr.reduced == mq(2, 2, {"1", "2", "0", "0"}));
  CHECK(rr.pivots == std::vector<int>{0});
}
