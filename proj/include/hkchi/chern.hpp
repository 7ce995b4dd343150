#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hkchi/integer.hpp"
#include "hkchi/laurent.hpp"
#include "hkchi/truncated_series.hpp"

namespace hkchi {

// Symbolic Riemann-Roch over the paired root set {x_1..x_n, -x_1..-x_n} of a
// hyper-Kaehler 2n-fold. The series engine is generic in n; the public
// entry points accept n in [1, kMaxChernN].
inline constexpr int kMaxChernN = 2;

// Exponents (a_1, ..., a_n) of c_2^{a_1} c_4^{a_2} ... c_{2n}^{a_n}. Odd
// Chern classes of a paired root set vanish, so they have no slot.
using ChernMonomial = std::vector<int>;

// "c2^2", "c4", "c2c4", ...; factors in increasing class order.
std::string chern_monomial_key(const ChernMonomial& m);
// Throws ParseError for malformed, odd-class or non-canonical keys.
ChernMonomial parse_chern_monomial(std::string_view key, int n);
// All monomials of weighted degree 2n, in canonical key order.
std::vector<ChernMonomial> chern_monomial_basis(int n);

struct ChernData {
  int n = 0;
  std::map<std::string, Integer> values;  // canonical key -> Chern number

  // Throws InputError for bad keys, wrong degree or a missing basis monomial.
  void require_complete() const;
  const Integer& value(const ChernMonomial& m) const;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

// Coefficients in the auxiliary variable (y or t) for each Chern monomial.
using ChernExpression = std::map<ChernMonomial, RationalLaurent>;

// Series in x_1..x_n whose coefficients are polynomials in an auxiliary
// variable, truncated at total x-degree 2n. Only the degree-2n part is
// integrated.
struct RootSeries {
  int n;
  BasicTruncatedSeries<RationalLaurent> terms;
};

// Empty series in x_1..x_n with the degree-2n truncation.
RootSeries make_root_series(int n);

// Todd class of the paired root set: prod over all 2n roots r of
// r / (1 - e^{-r}).
RootSeries todd_series(int n);

// Top-degree part rewritten in Chern monomials via power sums and Newton's
// identities. Throws InconsistencyError if odd power sums fail to cancel or
// the top part is not symmetric in the roots.
ChernExpression integrate_symbolic(const RootSeries& s);
RationalLaurent evaluate(const ChernExpression& e, const ChernData& cd);

// chi_{-y} = int Todd * prod_i ((1 + y^2) - 2 y cosh x_i), symbolically.
ChernExpression chi_minus_y_symbolic(int n);
// int Todd * prod_i (t - 2 cosh x_i), symbolically.
ChernExpression mtf_symbolic(int n);

// chi_{-y} as an integer polynomial in y; throws InconsistencyError if the
// rational result is not integral.
LaurentPolynomial chi_y_via_rr(int n, const ChernData& cd);
// Integer polynomial in t of degree n.
LaurentPolynomial mtf_integrand(int n, const ChernData& cd);

// For n = 2: the unique c_2^2 making the Riemann-Roch chi_{-y} equal
// `hodge_chi_minus_y`, given c_4. Every coefficient of y must agree on the
// same value; otherwise InconsistencyError.
Integer derive_c2_squared(const LaurentPolynomial& hodge_chi_minus_y, const Integer& c4);

}  // namespace hkchi
