#include "doctest.h"

#include "drz/generators.hpp"
#include "drz/matrix.hpp"
#include "test_util.hpp"

using namespace drz;
using namespace drz::testutil;

namespace {
const Domain kQ = Domain::rationals();
}

TEST_CASE("matrix product") {
  auto a = mq(2, 2, {"1", "2", "3", "4"});
  auto id = Matrix<Rational>::identity(2, kQ);
  CHECK(id * a == a);
  CHECK(a * id == a);

  // pq = 0 for the pair p = [[1,0],[1,0]], q = [[0,0],[0,1]].
  auto p = mq(2, 2, {"1", "0", "1", "0"});
  auto q = mq(2, 2, {"0", "0", "0", "1"});
  CHECK((p * q).is_zero());

  auto u = mq(2, 2, {"0", "1", "0", "0"});
  auto v = mq(2, 2, {"0", "0", "1", "0"});
  CHECK(u * v == mq(2, 2, {"1", "0", "0", "0"}));
}

TEST_CASE("matrix powers") {
  auto a = mq(2, 2, {"1", "2", "3", "4"});
  CHECK(mat_pow(a, 0) == Matrix<Rational>::identity(2, kQ));
  auto j2 = mq(2, 2, {"0", "1", "0", "0"});
  CHECK(mat_pow(j2, 2).is_zero());
  auto d = mq(2, 2, {"1", "0", "1", "-1"});
  CHECK(mat_pow(d, 2) == Matrix<Rational>::identity(2, kQ));

  SplitMix64 g(3);
  for (int t = 0; t < 20; ++t) {
    auto m = detail::random_matrix<Fp>(g, Domain::prime_field(5), 3, 3, 0);
    unsigned long i = g.below(5), j = g.below(5);
    CHECK(mat_pow(m, i + j) == mat_pow(m, i) * mat_pow(m, j));
  }
  CHECK_THROWS_AS(mat_pow(mq(1, 2, {"1", "2"}), 2), NotSquare);
}

TEST_CASE("transpose") {
  auto sym = mq(2, 2, {"1", "2", "2", "5"});
  CHECK(transpose(sym) == sym);
  CHECK(transpose(mq(2, 2, {"1", "0", "1", "0"})) ==
        mq(2, 2, {"1", "1", "0", "0"}));
  SplitMix64 g(4);
  for (int t = 0; t < 20; ++t) {
    auto a = detail::random_matrix<Rational>(g, kQ, 3, 2, 4);
    auto b = detail::random_matrix<Rational>(g, kQ, 2, 4, 4);
    CHECK(transpose(a * b) == transpose(b) * transpose(a));
  }
}

TEST_CASE("shape and domain mismatches") {
  auto a = mq(2, 2, {"1", "0", "0", "1"});
  auto b = mq(2, 3, {"1", "0", "0", "1", "0", "0"});
  CHECK_THROWS_AS(a + b, DimensionMismatch);
  CHECK_THROWS_AS(b * b, DimensionMismatch);
  CHECK(a * b == b);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(mgf(5, 2, 2, {"1", "0", "0", "1"}) +
                      mgf(7, 2, 2, {"1", "0", "0", "1"}),
                  DomainMismatch);
}

TEST_CASE("ring arithmetic over composite Zn") {
  auto a = mzn(12, 2, 2, {"6", "3", "0", "6"});
  auto sq = a * a;
  CHECK(sq == mzn(12, 2, 2, {"0", "0", "0", "0"}));
  CHECK(mat_pow(a, 2).is_zero());
  CHECK(a + a == mzn(12, 2, 2, {"0", "6", "0", "0"}));
}

TEST_CASE("hcat and empty blocks") {
  auto a = mq(2, 1, {"1", "2"});
  auto b = mq(2, 2, {"3", "4", "5", "6"});
  CHECK(hcat(a, b) == mq(2, 3, {"1", "3", "4", "2", "5", "6"}));
  Matrix<Rational> empty(2, 0, kQ);
  CHECK(hcat(empty, a) == a);
  CHECK(hcat(a, empty) == a);
}
