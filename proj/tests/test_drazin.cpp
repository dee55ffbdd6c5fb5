#include "doctest.h"

#include "drz/drazin.hpp"
#include "drz/generators.hpp"
#include "drz/rings.hpp"
#include "test_util.hpp"

using namespace drz;
using namespace drz::testutil;

namespace {
const Domain kQ = Domain::rationals();
const Domain kGF7 = Domain::prime_field(7);
}

TEST_CASE("drazin index by rank stabilization") {
  CHECK(drazin_index(mq(2, 2, {"1", "1", "0", "1"})) == 0);
  auto j3 = mq(3, 3, {"0", "1", "0", "0", "0", "1", "0", "0", "0"});
  CHECK(drazin_index(j3) == 3);
  CHECK(drazin_index(mq(2, 2, {"1", "0", "0", "0"})) == 1);
  CHECK(drazin_index(Matrix<Rational>(3, 3, kQ)) == 1);
  CHECK(drazin_index(Matrix<Rational>::identity(3, kQ)) == 0);
}

TEST_CASE("drazin fixtures") {
  auto r = drazin(mgf(7, 2, 2, {"2", "0", "0", "0"}));
  CHECK(r.d == mgf(7, 2, 2, {"4", "0", "0", "0"}));
  CHECK(r.index == 1);
  CHECK(r.pi == mgf(7, 2, 2, {"0", "0", "0", "1"}));

  auto j2 = mq(2, 2, {"0", "1", "0", "0"});
  auto rj = drazin(j2);
  CHECK(rj.d.is_zero());
  CHECK(rj.index == 2);
  CHECK(rj.pi == Matrix<Rational>::identity(2, kQ));
  CHECK(rj.witness == 2);

  auto invol = mq(2, 2, {"1", "0", "1", "-1"});
  auto ri = drazin(invol);
  CHECK(ri.d == invol);  // a^2 = I forces a^D = a^{-1} = a
  CHECK(ri.index == 0);
  CHECK(ri.pi.is_zero());
  CHECK(ri.witness == 1);
}

TEST_CASE("group inverse") {
  auto p = mq(2, 2, {"1", "0", "1", "0"});
  CHECK(*group_inverse(p) == p);
  auto a = mq(2, 2, {"1", "1", "0", "1"});
  CHECK(*group_inverse(a) == inverse(a));
  CHECK_FALSE(group_inverse(mq(2, 2, {"0", "1", "0", "0"})).has_value());
}

TEST_CASE("is_drazin_pair") {
  auto p = mq(2, 2, {"1", "0", "1", "0"});
  CHECK(is_drazin_pair(p, p, 2));
  auto j2 = mq(2, 2, {"0", "1", "0", "0"});
  CHECK_FALSE(is_drazin_pair(j2, j2, 2));

  SplitMix64 g(101);
  for (int t = 0; t < 100; ++t) {
    auto a = detail::random_matrix<Fp>(g, kGF7, 4, 4, 0);
    auto r = drazin(a);
    CHECK(is_drazin_pair(a, r.d, 4));
  }
}

TEST_CASE("engine properties on random matrices") {
  SplitMix64 g(202);
  for (int t = 0; t < 60; ++t) {
    auto a = detail::random_matrix<Fp>(g, kGF7, 4, 4, 0);
    auto r = drazin(a);

    // (a^2)^D = (a^D)^2
    CHECK(drazin(a * a).d == r.d * r.d);

    // commutation inheritance: x in comm(a) built as a polynomial in a
    Fp c0(g.below(7), 7), c1(g.below(7), 7), c2(g.below(7), 7);
    auto x = c0 * Matrix<Fp>::identity(4, kGF7) + c1 * a + c2 * (a * a);
    CHECK(x * r.d == r.d * x);

    // spectral idempotent
    CHECK(r.pi * r.pi == r.pi);
    CHECK(r.pi == Matrix<Fp>::identity(4, kGF7) - a * r.d);
    CHECK(r.pi * a == a * r.pi);
    Matrix<Fp> w = r.pi * a;
    CHECK(is_nilpotent_elem(w, 4));

    // definitional index agrees with rank stabilization
    CHECK(definitional_index(a, r.d, 5) == r.index);
    if (r.index >= 1) {
      Matrix<Fp> nil = a - a * a * r.d;
      CHECK(mat_pow(nil, r.index).is_zero());
      if (r.index >= 2) CHECK_FALSE(mat_pow(nil, r.index - 1).is_zero());
    }
  }
}

TEST_CASE("engine agrees with exhaustive search on M2(GF(2))") {
  const Domain gf2 = Domain::prime_field(2);
  EnumerableMatrixRing ring(2, gf2);
  REQUIRE(ring.size() == 16);
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    auto a = ring.element(i);
    auto engine = drazin(a);
    auto oracle = brute_force_drazin(a, ring);
    REQUIRE(oracle.has_value());
    CHECK(oracle->d == engine.d);
    CHECK(oracle->index == engine.index);
    CHECK(oracle->pi == engine.pi);
  }
}
