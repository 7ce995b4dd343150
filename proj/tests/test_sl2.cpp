#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "hkchi/errors.hpp"
#include "hkchi/sl2.hpp"
#include "support/generators.hpp"

using namespace hkchi;

TEST_CASE("trace") {
  CHECK(SL2Element::identity().trace() == 2);
  CHECK(SL2Element(0, -1, 1, 0).trace() == 0);
  CHECK(SL2Element(2, 1, 1, 1).trace() == 3);
}

TEST_CASE("determinant must be one") {
  CHECK_THROWS_AS(SL2Element(1, 0, 0, 2), DeterminantError);
  CHECK_THROWS_AS(SL2Element(-1, 0, 0, 1), DeterminantError);
  CHECK_NOTHROW(SL2Element(-1, 0, 0, -1));
}

TEST_CASE("matrix syntax") {
  CHECK(SL2Element::parse("0,-1;1,0") == SL2Element(0, -1, 1, 0));
  CHECK(SL2Element::parse(" 2, 1 ; 1, 1") == SL2Element(2, 1, 1, 1));
  CHECK_THROWS_AS(SL2Element::parse("1,0,0,1"), ParseError);
  CHECK_THROWS_AS(SL2Element::parse("1,0;0"), ParseError);
  CHECK_THROWS_AS(SL2Element::parse("1.5,0;0,1"), ParseError);
  CHECK_THROWS_AS(SL2Element::parse("1,0;0,2"), DeterminantError);
}

TEST_CASE("group operations") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto u = testing::random_sl2(rng);
    REQUIRE(u * u.inverse() == SL2Element::identity());
    REQUIRE(u.inverse() * u == SL2Element::identity());
  }
}

TEST_CASE("characters") {
  const auto t = LaurentPolynomial::monomial(1, 1);
  CHECK(character(0).is_zero());
  CHECK(character(-3).is_zero());
  CHECK(character(1) == LaurentPolynomial(1));
  CHECK(character(2) == t);
  CHECK(character(3) == parse_laurent("t^2-1", "t"));
  CHECK(character(4) == parse_laurent("t^3-2t", "t"));
  for (long r = 1; r <= 40; ++r) REQUIRE(*character(r).max_exponent() == r - 1);
}

TEST_CASE("character table agrees with the shared cache") {
  const CharacterTable table(30);
  for (long r = -2; r <= 30; ++r) REQUIRE(table[r] == character(r));
  CHECK_THROWS_AS(table[31], std::out_of_range);
}

TEST_CASE("unipotent and order-four specializations") {
  for (long r = 1; r <= 64; ++r) {
    REQUIRE(evaluate(character(r), 2) == r);
    static const int cycle[4] = {0, 1, 0, -1};  // r mod 4 = 0, 1, 2, 3
    REQUIRE(evaluate(character(r), 0) == cycle[r % 4]);
    REQUIRE(evaluate(character(r), 7) == testing::character_value(r, 7));
  }
}

TEST_CASE("character identity t_{r+1} - t_{r-1} = y^r + y^-r") {
  for (long r = 1; r <= 64; ++r) REQUIRE(verify_char_identity(r));
  CHECK_THROWS_AS(verify_char_identity(0), std::invalid_argument);
}

TEST_CASE("cache is consistent under concurrent first use") {
  std::vector<std::thread> threads;
  std::vector<LaurentPolynomial> results(8);
  for (int i = 0; i < 8; ++i) threads.emplace_back([&, i] { results[i] = character(100 + i); });
  for (auto& th : threads) th.join();
  const CharacterTable table(110);
  for (int i = 0; i < 8; ++i) CHECK(results[i] == table[100 + i]);
}

TEST_CASE("eigenvalue polynomial") {
  CHECK(eigenvalue_poly(SL2Element::identity()) == parse_laurent("y^2-2y+1"));
  CHECK(eigenvalue_poly(SL2Element(0, -1, 1, 0)) == parse_laurent("y^2+1"));
  CHECK(eigenvalue_poly(SL2Element(2, 1, 1, 1)) == parse_laurent("y^2-3y+1"));
  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) REQUIRE(eigenvalue_poly(testing::random_sl2(rng)).coefficient(0) == 1);
}
