#include "doctest.h"

#include <sstream>

#include "drz/generators.hpp"
#include "drz/io.hpp"
#include "test_util.hpp"

using namespace drz;
using namespace drz::testutil;

namespace {

template <Scalar S>
Matrix<S> reload(const Matrix<S>& m) {
  std::ostringstream os;
  print_matrix(os, m);
  std::istringstream is(os.str());
  return std::get<Matrix<S>>(load_matrix(is));
}

}  // namespace

TEST_CASE("matrix file parsing") {
  std::istringstream in(
      "# Drazin example\n"
      "GF 7\n"
      "\n"
      "2 2   # dimensions\n"
      "2 0\n"
      "0 1\n");
  auto any = load_matrix(in);
  auto m = std::get<Matrix<Fp>>(any);
  CHECK(m == mgf(7, 2, 2, {"2", "0", "0", "1"}));
  CHECK(any_domain(any).tag() == "GF:7");
  CHECK(any_rows(any) == 2);
  CHECK(any_cols(any) == 2);
}

TEST_CASE("all four domains round-trip") {
  SplitMix64 g(42);
  for (int t = 0; t < 10; ++t) {
    auto q = detail::random_matrix<Rational>(g, Domain::rationals(), 3, 2, 9);
    CHECK(reload(q) == q);
    auto f = detail::random_matrix<Fp>(g, Domain::prime_field(13), 2, 3, 0);
    CHECK(reload(f) == f);
  }
  auto zn = mzn(12, 2, 2, {"11", "6", "0", "5"});
  CHECK(reload(zn) == zn);
  auto z = mk<Int>(Domain::integers(), 1, 1, {"-123456789012345678901"});
  CHECK(reload(z) == z);

  auto q = mq(2, 2, {"1/2", "-3", "0", "22/7"});
  CHECK(reload(q) == q);
}

TEST_CASE("parse errors") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return load_matrix(is);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("GF\n2 2\n1 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("F 7\n1 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse("Q\nxx yy\n"), ParseError);
  CHECK_THROWS_AS(parse("Q\n2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("Q\n2 2\n1 0\n"), ParseError);        // missing row
  CHECK_THROWS_AS(parse("Q\n2 2\n1 0 0\n0 1\n"), ParseError); // ragged row
  CHECK_THROWS_AS(parse("Q\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse("Q\n-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("Q\n1 1\n1/0\n"), ParseError);
  CHECK_THROWS_AS(parse("GF 6\n1 1\n1\n"), InvalidDomain);
  CHECK_THROWS_AS(parse("Zn 1\n1 1\n0\n"), InvalidDomain);
  CHECK_THROWS_AS(parse("GF 7\n1 1\n-2\n"), ParseError);
}

TEST_CASE("modular entries are reduced on input") {
  std::istringstream in("Zn 12\n1 2\n14 25\n");
  auto m = std::get<Matrix<Zn>>(load_matrix(in));
  CHECK(m == mzn(12, 1, 2, {"2", "1"}));
}
