#include "doctest.h"

#include "drz/generators.hpp"
#include "drz/rings.hpp"
#include "drz/scalars.hpp"

using namespace drz;

TEST_CASE("rational normalization") {
  CHECK(normalize_rational(2, 4).str() == "1/2");
  CHECK(normalize_rational(3, -6).str() == "-1/2");
  CHECK(normalize_rational(0, 5).str() == "0");
  CHECK(normalize_rational(0, 5).denominator() == 1);
  CHECK(normalize_rational(-4, -6).str() == "2/3");
  CHECK_THROWS_AS(normalize_rational(1, 0), ZeroDenominator);
}

TEST_CASE("scalar inversion") {
  CHECK(invert_scalar(Fp(2, 7)) == Fp(4, 7));
  CHECK(invert_scalar(Rational::parse("3/4", Domain::rationals())).str() ==
        "4/3");
  CHECK_THROWS_AS(invert_scalar(Zn(2, 12)), NotAUnit);
  CHECK(invert_scalar(Zn(5, 12)) == Zn(5, 12));
  CHECK(invert_scalar(Int(-1)) == Int(-1));
  CHECK_THROWS_AS(invert_scalar(Int(2)), NotAUnit);
  CHECK_THROWS_AS(invert_scalar(Fp(0, 7)), NotAUnit);
}

TEST_CASE("inversion is an involution on units") {
  SplitMix64 g(11);
  for (int i = 0; i < 200; ++i) {
    Fp x(1 + g.below(12), 13);
    CHECK(invert_scalar(invert_scalar(x)) == x);
  }
  for (int i = 0; i < 100; ++i) {
    Rational x(static_cast<long>(g.below(2000)) - 1000);
    if (x.is_zero()) continue;
    CHECK(invert_scalar(invert_scalar(x)) == x);
  }
}

TEST_CASE("nilpotency tests") {
  CHECK(is_nilpotent_scalar(Zn(2, 8)));
  CHECK_FALSE(is_nilpotent_scalar(Zn(2, 7)));
  CHECK(is_nilpotent_scalar(Zn(6, 12)));
  CHECK_FALSE(is_nilpotent_scalar(Zn(4, 12)));
  CHECK(is_nilpotent_scalar(Zn(0, 12)));
  CHECK_FALSE(is_nilpotent_scalar(Fp(2, 7)));
  CHECK(is_nilpotent_scalar(Fp(0, 7)));
  CHECK_FALSE(is_nilpotent_scalar(Int(2)));
  CHECK(is_nilpotent_scalar(Int(0)));
  // Agreement with the power characterization x^ceil(log2 n) = 0 mod n.
  for (std::uint64_t n : {4ull, 8ull, 12ull, 30ull, 36ull, 64ull, 100ull}) {
    int b = ceil_log2_u64(n);
    for (std::uint64_t x = 0; x < n; ++x)
      CHECK(Zn(x, n).is_nilpotent() == (modarith::pow(x, b, n) == 0));
  }
}

TEST_CASE("deterministic primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(13));
  CHECK(is_prime_u64(2147483647ull));          // 2^31 - 1
  CHECK(is_prime_u64(2305843009213693951ull)); // 2^61 - 1
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(91));               // 7 * 13
  CHECK_FALSE(is_prime_u64(3215031751ull));    // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime_u64((1ull << 62)));
}

TEST_CASE("domain validation and tags") {
  CHECK_THROWS_AS(Domain::prime_field(4), InvalidDomain);
  CHECK_THROWS_AS(Domain::prime_field(1), InvalidDomain);
  CHECK_THROWS_AS(Domain::modular(1), InvalidDomain);
  CHECK(Domain::prime_field(7).tag() == "GF:7");
  CHECK(Domain::modular(12).file_tag() == "Zn 12");
  CHECK(*Domain::from_tag("Q") == Domain::rationals());
  CHECK(*Domain::from_tag("GF:13") == Domain::prime_field(13));
  CHECK(*Domain::from_tag("Zn:12") == Domain::modular(12));
  CHECK(*Domain::from_tag("Z") == Domain::integers());
  CHECK_FALSE(Domain::from_tag("GF7").has_value());
  CHECK_FALSE(Domain::from_tag("").has_value());
  CHECK_THROWS_AS(Domain::from_tag("GF:9"), InvalidDomain);
}

TEST_CASE("rational arithmetic is exact") {
  SplitMix64 g(7);
  const Domain q = Domain::rationals();
  for (int i = 0; i < 200; ++i) {
    Rational a(mpz_class(static_cast<long>(g.below(20001)) - 10000),
               mpz_class(1 + static_cast<long>(g.below(999))));
    Rational b(mpz_class(static_cast<long>(g.below(20001)) - 10000),
               mpz_class(1 + static_cast<long>(g.below(999))));
    CHECK((a + b) - b == a);
    CHECK((a * b).denominator() > 0);
  }
  (void)q;
}

TEST_CASE("Fermat property in GF(p)") {
  for (std::uint64_t p : {2ull, 3ull, 7ull, 13ull, 101ull}) {
    SplitMix64 g(p);
    for (int i = 0; i < 50; ++i) {
      Fp x(g.below(p), p);
      Fp acc = Fp::one(Domain::prime_field(p));
      for (std::uint64_t e = 0; e < p; ++e) acc = acc * x;
      CHECK(acc == x);
    }
  }
}

TEST_CASE("scalar parsing") {
  const Domain q = Domain::rationals();
  CHECK(Rational::parse("-3", q).str() == "-3");
  CHECK(Rational::parse("2/4", q).str() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/0", q), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2", q), ParseError);
  CHECK_THROWS_AS(Rational::parse("x", q), ParseError);
  CHECK_THROWS_AS(Rational::parse("", q), ParseError);
  const Domain gf7 = Domain::prime_field(7);
  CHECK(Fp::parse("9", gf7) == Fp(2, 7));
  CHECK_THROWS_AS(Fp::parse("-1", gf7), ParseError);
  CHECK(Int::parse("123456789012345678901234567890", Domain::integers())
            .str() == "123456789012345678901234567890");
  CHECK(Zn::parse("14", Domain::modular(12)) == Zn(2, 12));
}

TEST_CASE("domain mismatch is rejected") {
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), DomainMismatch);
  CHECK_THROWS_AS(Zn(1, 6) * Zn(1, 8), DomainMismatch);
}
