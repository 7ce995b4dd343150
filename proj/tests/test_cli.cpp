#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hkchi/catalog.hpp"
#include "hkchi/cli.hpp"
#include "hkchi/json_value.hpp"

using namespace hkchi;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, false);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto dir = std::filesystem::temp_directory_path() / "hkchi_test_cli";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("verify prints the identity") {
  const auto r = run({"verify", "--manifold", "K3"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS  ST(t=y+1/y) = 2y+20+2y^-1 = chi_{-y}/y^1\n");
}

TEST_CASE("strace at the order-four element") {
  const auto r = run({"strace", "--manifold", "K3", "--matrix", "0,-1;1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "S(t)=2t+20  S(0)=20\n");
  CHECK(run({"strace", "--manifold", "K3[2]"}).out == "S(t)=3t^2+42t+228\n");
}

TEST_CASE("rw rejects a non-unimodular matrix") {
  const auto r = run({"rw", "--manifold", "K3", "--matrix", "1,0;0,2"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("determinant") != std::string::npos);
}

TEST_CASE("rw values") {
  CHECK(run({"rw", "--manifold", "K3", "--matrix", "1,0;0,1"}).out.find("Z_RW[T_U] = 24 ") == 0);
  CHECK(run({"rw", "--manifold", "K3", "--matrix", "-1,0;0,-1"}).out.find("Z_RW[T_U] = 16 ") == 0);
  CHECK(run({"rw", "--manifold", "K3", "--matrix", "0,-1;1,0"}).out.find("Z_RW[T_U] = 20 ") == 0);
  CHECK(run({"rw", "--manifold", "K3"}).code == 1);
}

TEST_CASE("verify over all built-ins") {
  const auto r = run({"verify", "--all-builtin"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    REQUIRE(i < builtin_names().size());
    CHECK(line.rfind(builtin_names()[i], 0) == 0);
    CHECK(line.find("PASS") != std::string::npos);
    ++i;
  }
  CHECK(i == builtin_names().size());
  CHECK(run({"verify", "--all-builtin", "--manifold", "K3"}).code == 1);
}

TEST_CASE("text and json carry the same numbers") {
  for (const auto& name : builtin_names()) {
    const auto text = run({"chi", "--manifold", name});
    const auto js = run({"chi", "--manifold", name, "--format", "json"});
    REQUIRE(text.code == 0);
    REQUIRE(js.code == 0);
    const auto v = json::parse(js.out);
    for (const char* key : {"euler", "todd", "signature"}) {
      std::string label = key;
      label.resize(10, ' ');
      const auto expected = label + "= " + v.find(key)->as_integer().get_str() + "\n";
      CHECK(text.out.find(expected) != std::string::npos);
    }
    CHECK(text.out.find("chi_y     = " + v.find("chi_y")->as_string() + "\n") != std::string::npos);
  }

  const auto st = json::parse(run({"strace", "--manifold", "K3", "--matrix", "0,-1;1,0", "--format", "json"}).out);
  CHECK(st.find("supertrace")->as_string() == "2t+20");
  CHECK(st.find("value")->as_integer() == 20);

  const auto rw = json::parse(run({"rw", "--manifold", "K3[2]", "--matrix", "2,1;1,1", "--format", "json"}).out);
  CHECK(rw.find("rw_invariant")->as_integer() == 381);
  CHECK(run({"rw", "--manifold", "K3[2]", "--matrix", "2,1;1,1"}).out.find("Z_RW[T_U] = 381 ") == 0);

  const auto all = json::parse(run({"--format", "json", "verify", "--all-builtin"}).out);
  CHECK(all.items().size() == builtin_names().size());
}

TEST_CASE("csv output") {
  const auto r = run({"catalog", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("name,n,euler,todd,signature\nK3,1,24,2,-16\nK3[2],2,324,3,156\n", 0) == 0);
  CHECK(run({"chi", "--manifold", "K3", "--format", "csv"}).out ==
        "manifold,n,chi_y,chi_minus_y,euler,todd,signature\nK3,1,2y^2-20y+2,2y^2+20y+2,24,2,-16\n");
  CHECK(run({"chi", "--manifold", "K3", "--format", "xml"}).code == 1);
}

TEST_CASE("decompose") {
  const auto r = run({"decompose", "--manifold", "K3[2]", "--format", "json"});
  CHECK(r.code == 0);
  const auto v = json::parse(r.out);
  CHECK(v.find("primitive")->items()[2].items()[2].as_integer() == 231);
}

TEST_CASE("catalog json") {
  const auto v = json::parse(run({"catalog", "--format", "json"}).out);
  REQUIRE(v.items().size() == 5);
  CHECK(v.items()[4].find("euler")->as_integer() == 176256);
}

TEST_CASE("rr") {
  SUBCASE("K3 from flags") {
    const auto r = run({"rr", "--n", "1", "--c2", "24", "--manifold", "K3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("integrand S(t)           = 2t+20\n") != std::string::npos);
  }
  SUBCASE("K3[2] from catalog data") {
    const auto v = json::parse(run({"rr", "--manifold", "K3[2]", "--format", "json"}).out);
    CHECK(v.find("chern")->find("c2^2")->as_integer() == 828);
    CHECK(v.find("integrand")->as_string() == "3t^2+42t+228");
    CHECK(v.find("chi_match")->as_bool());
    CHECK(v.find("supertrace_match")->as_bool());
  }
  SUBCASE("mismatch is an identity failure") {
    const auto r = run({"rr", "--n", "1", "--c2", "12", "--manifold", "K3"});
    CHECK(r.code == 2);
    CHECK(r.out.find("MISMATCH") != std::string::npos);
  }
  SUBCASE("Chern file") {
    const auto path = scratch("k3_2.chern.json", "{\"n\": 2, \"chern\": {\"c2^2\": 828, \"c4\": 324}}");
    CHECK(run({"rr", "--chern", path.string()}).code == 0);
    CHECK(run({"rr", "--chern", path.string(), "--c4", "1"}).code == 1);
  }
  SUBCASE("input errors") {
    CHECK(run({"rr"}).code == 1);
    CHECK(run({"rr", "--n", "3", "--c2", "1"}).code == 1);
    CHECK(run({"rr", "--c2", "24"}).code == 1);
    CHECK(run({"rr", "--n", "2", "--c4", "324"}).code == 1);
    CHECK(run({"rr", "--n", "1", "--c2", "24", "--manifold", "K3[2]"}).code == 1);
  }
}

TEST_CASE("manifold sources") {
  CHECK(run({"chi"}).code == 1);
  CHECK(run({"chi", "--manifold", "K3[9]"}).code == 1);
  CHECK(run({"chi", "--manifold", "K3", "--input", "x.json"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);

  const auto good = scratch("k3.hodge.json", to_json(builtin("K3")));
  CHECK(run({"verify", "--input", good.string()}).out == "PASS  ST(t=y+1/y) = 2y+20+2y^-1 = chi_{-y}/y^1\n");

  const auto bad = scratch("bad.hodge.json", "{\"hodge\": [[1,0,1],[0,-1,0],[1,0,1]], \"n\": 1, \"name\": \"bad\"}");
  const auto r = run({"verify", "--input", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("NEGATIVE_ENTRY") != std::string::npos);

  // Structurally fine, but not irreducible.
  const auto torus = scratch("t4.hodge.json", "{\"hodge\": [[1,2,1],[2,4,2],[1,2,1]], \"n\": 1, \"name\": \"T4\"}");
  CHECK(run({"verify", "--input", torus.string()}).code == 0);
  CHECK(run({"verify", "--input", torus.string(), "--strict"}).code == 1);
  CHECK(run({"rw", "--input", torus.string(), "--matrix", "1,0;0,1"}).code == 1);
  std::filesystem::remove_all(torus.parent_path());
}

TEST_CASE("color only when asked") {
  std::ostringstream out, err;
  CHECK(cli::run({"verify", "--manifold", "K3"}, out, err, true) == 0);
  CHECK(out.str().find("\033[32mPASS\033[0m") == 0);
  CHECK(run({"verify", "--manifold", "K3"}).out.find('\033') == std::string::npos);
}
