// Acceptance gate: one PASS/FAIL line per criterion, all comparisons exact.

#include <functional>
#include <iostream>
#include <sstream>

#include "hkchi/catalog.hpp"
#include "hkchi/chern.hpp"
#include "hkchi/hodge.hpp"
#include "hkchi/lefschetz.hpp"
#include "hkchi/sl2.hpp"
#include "support/generators.hpp"

using namespace hkchi;

namespace {

struct Gate {
  int failures = 0;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) detail << "    failed: " << what << '\n';
  }

  void run(const std::string& id, const std::string& title, const std::function<void(Gate&)>& body) {
    detail.str("");
    try {
      body(*this);
    } catch (const std::exception& e) {
      detail << "    exception: " << e.what() << '\n';
    }
    const bool ok = detail.str().empty();
    if (!ok) ++failures;
    std::cout << (ok ? "PASS  " : "FAIL  ") << id << "  " << title << '\n' << detail.str();
  }
};

LaurentPolynomial poly(const char* text, const char* var = "y") { return parse_laurent(text, var); }

}  // namespace

int main() {
  Gate g;

  g.run("AC1", "theorem identity for K3 and K3[2..5]", [](Gate& g) {
    for (const auto& name : builtin_names()) g.check(verify_theorem(builtin(name).diamond).passed, name);
  });

  g.run("AC2", "classical values of K3 and K3[2]; Euler number of K3[2] from the eta-product", [](Gate& g) {
    g.check(classical_values(builtin("K3").diamond) == ClassicalValues{24, 2, -16}, "K3 (24, 2, -16)");
    const auto cv = classical_values(builtin("K3[2]").diamond);
    g.check(cv == ClassicalValues{324, 3, 156}, "K3[2] (324, 3, 156)");
    g.check(testing::euler_product_coefficients(24, 2)[2] == cv.euler, "z^2 coefficient equals 324");
  });

  g.run("AC3", "super-trace polynomials; primitive form equals rewritten form", [](Gate& g) {
    for (const auto& [name, expected] : {std::pair{"K3", "2t+20"}, std::pair{"K3[2]", "3t^2+42t+228"}}) {
      const auto& d = builtin(name).diamond;
      g.check(supertrace_poly(d) == poly(expected, "t"), std::string(name) + " S(t)");
      g.check(supertrace_primitive_form(d) == supertrace_rewritten_form(d), std::string(name) + " two forms");
    }
  });

  g.run("AC4", "Rozansky-Witten values for K3 and conjugacy invariance", [](Gate& g) {
    const auto& k3 = builtin("K3").diamond;
    g.check(rw_invariant(k3, SL2Element::identity()).value == 24, "trace 2");
    g.check(rw_invariant(k3, SL2Element(-1, 0, 0, -1)).value == 16, "trace -2");
    g.check(rw_invariant(k3, SL2Element(0, -1, 1, 0)).value == 20, "trace 0");
    std::mt19937_64 rng(2024);
    const auto& k3_2 = builtin("K3[2]").diamond;
    for (const auto& u : {SL2Element(2, 1, 1, 1), SL2Element(1, 1, 0, 1), SL2Element(0, -1, 1, 1)}) {
      const auto base_k3 = rw_invariant(k3, u).value;
      const auto base_k3_2 = rw_invariant(k3_2, u).value;
      for (int i = 0; i < 100; ++i) {
        const auto v = testing::random_sl2(rng);
        const auto w = v * u * v.inverse();
        if (rw_invariant(k3, w).value != base_k3 || rw_invariant(k3_2, w).value != base_k3_2) {
          g.check(false, "conjugate " + w.to_string() + " of " + u.to_string());
          return;
        }
      }
    }
  });

  g.run("AC5", "character identity t_{r+1} - t_{r-1} = y^r + y^-r for r = 1..64", [](Gate& g) {
    for (long r = 1; r <= 64; ++r) g.check(verify_char_identity(r), "r = " + std::to_string(r));
  });

  g.run("AC6", "Riemann-Roch side agrees with the Hodge side for n = 1, 2", [](Gate& g) {
    const auto& k3 = builtin("K3").diamond;
    const ChernData k3_cd{1, {{"c2", 24}}};
    g.check(chi_y_via_rr(1, k3_cd) == chi_y(k3).with_negated_variable(), "n=1 chi_{-y}");
    g.check(mtf_integrand(1, k3_cd) == supertrace_poly(k3), "n=1 integrand");

    const auto& k3_2 = builtin("K3[2]").diamond;
    const auto hodge = chi_y(k3_2).with_negated_variable();
    const auto c2sq = derive_c2_squared(hodge, 324);
    g.check(c2sq == 828, "derived c2^2 = 828, got " + c2sq.get_str());
    const ChernData cd{2, {{"c2^2", c2sq}, {"c4", 324}}};
    g.check(chi_y_via_rr(2, cd) == hodge, "n=2 chi_{-y}");
    g.check(mtf_integrand(2, cd) == supertrace_poly(k3_2), "n=2 integrand");
    g.check(builtin("K3[2]").chern == cd, "catalog Chern data");
  });

  g.run("AC7", "y^n S(y+1/y) equals chi_{-y} on the Riemann-Roch side", [](Gate& g) {
    const ChernData n1{1, {{"c2", 24}}};
    const ChernData n2{2, {{"c2^2", 828}, {"c4", 324}}};
    g.check(substitute_t(mtf_integrand(1, n1)).shifted(1) == chi_y_via_rr(1, n1), "n=1");
    g.check(substitute_t(mtf_integrand(2, n2)).shifted(2) == chi_y_via_rr(2, n2), "n=2");
  });

  g.run("AC8", "1000 random structurally valid diamonds (n <= 4)", [](Gate& g) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const auto d = reconstruct(testing::random_primitive_table(rng, n));
      const bool ok = validate(d, ValidationLevel::Structural).passed() &&
                      reconstruct(primitive_multiplicities(d)) == d && normalized_genus(d).is_palindromic() &&
                      verify_theorem(d).passed;
      if (!ok) {
        g.check(false, "sample " + std::to_string(i) + " (n=" + std::to_string(n) + ")");
        return;
      }
    }
  });

  g.run("AC9", "Hilbert scheme expansion and exact JSON round trip", [](Gate& g) {
    const auto ds = goettsche_expand(builtin("K3").diamond, 5);
    g.check(ds.size() == 5, "five diamonds");
    for (std::size_t m = 0; m < ds.size(); ++m)
      g.check(validate(ds[m], ValidationLevel::Strict).passed(), "z^" + std::to_string(m + 1) + " STRICT");
    g.check(!ds.empty() && ds[0] == builtin("K3").diamond, "z^1 is K3");
    for (const auto& name : builtin_names()) {
      const auto text = to_json(builtin(name));
      const auto back = record_from_json(text);
      g.check(back == builtin(name) && to_json(back) == text, name + " round trip");
    }
  });

  std::cout << (g.failures == 0 ? "ALL PASS" : std::to_string(g.failures) + " FAILED") << '\n';
  return g.failures == 0 ? 0 : 1;
}
