#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "hkchi/catalog.hpp"
#include "hkchi/json_value.hpp"
#include "support/generators.hpp"

using namespace hkchi;

namespace {

std::string with_table(const std::string& table, int n) {
  return "{\"hodge\": " + table + ", \"n\": " + std::to_string(n) + ", \"name\": \"X\"}";
}

}  // namespace

TEST_CASE("K3 seed") {
  const auto k3 = k3_seed();
  CHECK(k3 == HodgeDiamond({{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}));
  CHECK(builtin("K3").diamond == k3);
  CHECK(builtin("K3").chern == ChernData{1, {{"c2", 24}}});
  CHECK_THROWS_AS(builtin("K3[1]"), UnknownManifoldError);
  CHECK_THROWS_AS(builtin("K3[6]"), UnknownManifoldError);
}

TEST_CASE("Hilbert square of K3") {
  const auto& d = builtin("K3[2]").diamond;
  CHECK(d.n() == 2);
  CHECK(d.h(1, 1) == 21);
  CHECK(d.h(2, 2) == 232);
  CHECK(d.h(2, 0) == 1);
  CHECK(d.h(1, 0) == 0);
  CHECK(alternating_sum(d) == 324);
  CHECK(builtin("K3[2]").chern == ChernData{2, {{"c2^2", 828}, {"c4", 324}}});
}

TEST_CASE("Euler numbers follow the eta-product") {
  const auto expected = testing::euler_product_coefficients(24, kMaxHilbertOrder);
  CHECK(expected[2] == 324);
  const auto ds = goettsche_expand(k3_seed(), kMaxHilbertOrder);
  REQUIRE(ds.size() == static_cast<std::size_t>(kMaxHilbertOrder));
  for (int m = 1; m <= kMaxHilbertOrder; ++m) {
    CHECK(ds[m - 1].n() == m);
    CHECK(alternating_sum(ds[m - 1]) == expected[m]);
    CHECK(validate(ds[m - 1], ValidationLevel::Strict).passed());
  }
  CHECK(ds[0] == k3_seed());
}

TEST_CASE("expansion cache gives the same answer") {
  const auto a = goettsche_expand(k3_seed(), 3);
  const auto b = goettsche_expand(k3_seed(), 3);
  CHECK(a == b);
  const auto full = goettsche_expand(k3_seed(), 5);
  for (int m = 0; m < 3; ++m) CHECK(a[m] == full[m]);
}

TEST_CASE("expansion of a torus-like surface") {
  // A surface with trivial chi_y; every Hilbert scheme then has Euler number
  // given by the product with exponent 0, i.e. zero.
  const HodgeDiamond t4({{1, 2, 1}, {2, 4, 2}, {1, 2, 1}});
  const auto ds = goettsche_expand(t4, 3);
  REQUIRE(ds.size() == 3);
  for (const auto& d : ds) {
    CHECK(validate(d, ValidationLevel::Structural).passed());
    CHECK(alternating_sum(d) == 0);
  }
}

TEST_CASE("expansion argument errors") {
  CHECK_THROWS_AS(goettsche_expand(k3_seed(), 0), InputError);
  CHECK_THROWS_AS(goettsche_expand(k3_seed(), 6), InputError);
  CHECK_THROWS_AS(goettsche_expand(builtin("K3[2]").diamond, 2), InputError);
}

TEST_CASE("JSON round trip of built-ins is exact") {
  for (const auto& name : builtin_names()) {
    const auto& rec = builtin(name);
    const auto text = to_json(rec);
    const auto back = record_from_json(text);
    CHECK(back == rec);
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("integers beyond 64 bits survive") {
  const std::string big = "123456789012345678901234567890";
  const std::string text = with_table("[[1, 0, 1], [0, " + big + ", 0], [1, 0, 1]]", 1);
  const auto rec = record_from_json(text);
  CHECK(rec.diamond.h(1, 1) == Integer(big));
  CHECK(record_from_json(to_json(rec)) == rec);
  CHECK(to_json(rec).find(big) != std::string::npos);
}

TEST_CASE("load errors") {
  SUBCASE("negative entry") {
    try {
      record_from_json(with_table("[[1, 0, 1], [0, -3, 0], [1, 0, 1]]", 1));
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("NEGATIVE_ENTRY") != std::string::npos);
    }
  }
  SUBCASE("even side") {
    CHECK_THROWS_AS(record_from_json(with_table("[[1,0,0,1],[0,1,1,0],[0,1,1,0],[1,0,0,1]]", 1)), DimensionError);
  }
  SUBCASE("n disagrees with the table") {
    CHECK_THROWS_AS(record_from_json(with_table("[[1, 0, 1], [0, 20, 0], [1, 0, 1]]", 2)), DimensionError);
  }
  SUBCASE("floats") {
    CHECK_THROWS_AS(record_from_json(with_table("[[1, 0, 1], [0, 20.0, 0], [1, 0, 1]]", 1)), ParseError);
  }
  SUBCASE("unknown key") {
    CHECK_THROWS_AS(record_from_json("{\"hodge\": [[1,0,1],[0,20,0],[1,0,1]], \"n\": 1, \"name\": \"X\", \"extra\": 1}"),
                    ParseError);
  }
  SUBCASE("malformed") {
    CHECK_THROWS_AS(record_from_json("{\"hodge\": [[1,0,1],"), ParseError);
    CHECK_THROWS_AS(record_from_json("[]"), ParseError);
    CHECK_THROWS_AS(record_from_json("{\"n\": 1, \"n\": 1}"), ParseError);
  }
  SUBCASE("asymmetric") {
    CHECK_THROWS_AS(record_from_json(with_table("[[1, 0, 0], [0, 0, 0], [0, 0, 1]]", 1)), ValidationError);
  }
}

TEST_CASE("save and load through a file") {
  const auto dir = std::filesystem::temp_directory_path() / "hkchi_test_catalog";
  std::filesystem::create_directories(dir);
  const auto path = dir / "k3_2.hodge.json";
  save(builtin("K3[2]"), path);
  CHECK(load(path) == builtin("K3[2]"));
  CHECK_THROWS_AS(load(dir / "missing.hodge.json"), InputError);

  const auto chern_path = dir / "k3_2.chern.json";
  {
    std::ofstream f(chern_path);
    f << chern_to_json(*builtin("K3[2]").chern);
  }
  CHECK(load_chern(chern_path) == *builtin("K3[2]").chern);
  std::filesystem::remove_all(dir);
}

TEST_CASE("Chern JSON") {
  const auto cd = chern_from_json("{\"n\": 2, \"chern\": {\"c2^2\": 828, \"c4\": 324}}");
  CHECK(cd == ChernData{2, {{"c2^2", 828}, {"c4", 324}}});
  CHECK(chern_from_json(chern_to_json(cd)) == cd);
  CHECK_THROWS_AS(chern_from_json("{\"n\": 2, \"chern\": {\"c3\": 1}}"), ParseError);
  CHECK_THROWS_AS(chern_from_json("{\"n\": 2, \"chern\": {\"c4\": 1.5}}"), ParseError);
}

TEST_CASE("concurrent catalog access") {
  std::vector<std::thread> threads;
  std::vector<Integer> euler(8);
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] { euler[i] = alternating_sum(builtin(builtin_names()[i % 5]).diamond); });
  for (auto& th : threads) th.join();
  for (int i = 0; i < 8; ++i) CHECK(euler[i] == alternating_sum(builtin(builtin_names()[i % 5]).diamond));
}

TEST_CASE("JSON tree keeps integer text") {
  const auto v = json::parse("{\"a\": [1, -2, 99999999999999999999999]}");
  CHECK(v.find("a")->items()[2].as_integer() == Integer("99999999999999999999999"));
  CHECK(json::dump_compact(v) == "{\"a\": [1, -2, 99999999999999999999999]}");
}
