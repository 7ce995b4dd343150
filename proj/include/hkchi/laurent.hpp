#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hkchi/integer.hpp"

namespace hkchi {

// Sparse univariate Laurent polynomial. Terms are kept in a sorted map from
// exponent to coefficient; a zero coefficient is never stored, so the zero
// polynomial is the empty map and equality is plain map equality.
template <class Coeff>
class BasicLaurentPolynomial {
 public:
  using Exponent = long;
  using Terms = std::map<Exponent, Coeff>;

  BasicLaurentPolynomial() = default;

  // Constant polynomial.
  BasicLaurentPolynomial(const Coeff& c) { add_term(0, c); }  // NOLINT(implicit)
  BasicLaurentPolynomial(long c) : BasicLaurentPolynomial(Coeff(c)) {}  // NOLINT(implicit)

  static BasicLaurentPolynomial monomial(const Coeff& c, Exponent e) {
    BasicLaurentPolynomial p;
    p.add_term(e, c);
    return p;
  }

  static BasicLaurentPolynomial from_terms(const Terms& terms) {
    BasicLaurentPolynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  std::optional<Exponent> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<Exponent> max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  bool has_negative_exponents() const { return !terms_.empty() && terms_.begin()->first < 0; }

  void add_term(Exponent e, const Coeff& c) {
    if (hkchi::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (hkchi::is_zero(it->second)) terms_.erase(it);
    }
  }

  // coefficient(k) == coefficient(-k) for every k.
  bool is_palindromic() const {
    for (const auto& [e, c] : terms_)
      if (coefficient(-e) != c) return false;
    return true;
  }

  // p(y) -> y^k p(y)
  BasicLaurentPolynomial shifted(Exponent k) const {
    BasicLaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  // p(y) -> p(1/y)
  BasicLaurentPolynomial reflected() const {
    BasicLaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  // p(y) -> p(-y)
  BasicLaurentPolynomial with_negated_variable() const {
    BasicLaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, (e % 2 == 0) ? Coeff(c) : Coeff(-c));
    return r;
  }

  BasicLaurentPolynomial operator-() const {
    BasicLaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, Coeff(-c));
    return r;
  }

  BasicLaurentPolynomial& operator+=(const BasicLaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicLaurentPolynomial& operator-=(const BasicLaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }
  BasicLaurentPolynomial& operator*=(const BasicLaurentPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend BasicLaurentPolynomial operator+(BasicLaurentPolynomial a, const BasicLaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend BasicLaurentPolynomial operator-(BasicLaurentPolynomial a, const BasicLaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend BasicLaurentPolynomial operator*(const BasicLaurentPolynomial& a, const BasicLaurentPolynomial& b) {
    BasicLaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, Coeff(ca * cb));
    return r;
  }
  friend BasicLaurentPolynomial operator*(const Coeff& s, const BasicLaurentPolynomial& p) {
    BasicLaurentPolynomial r;
    if (hkchi::is_zero(s)) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, Coeff(s * c));
    return r;
  }

  friend bool operator==(const BasicLaurentPolynomial& a, const BasicLaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

using LaurentPolynomial = BasicLaurentPolynomial<Integer>;
using RationalLaurent = BasicLaurentPolynomial<Rational>;

inline bool is_zero(const RationalLaurent& p) { return p.is_zero(); }
inline bool is_zero(const LaurentPolynomial& p) { return p.is_zero(); }

template <class Coeff>
BasicLaurentPolynomial<Coeff> power(BasicLaurentPolynomial<Coeff> base, unsigned long k) {
  BasicLaurentPolynomial<Coeff> result(Coeff(1));
  while (k != 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

// Replaces t^k by (y + 1/y)^k, i.e. imposes t*y = y^2 + 1. The input must
// be an ordinary polynomial in t; the result is always palindromic.
template <class Coeff>
BasicLaurentPolynomial<Coeff> substitute_t(const BasicLaurentPolynomial<Coeff>& p_in_t) {
  using P = BasicLaurentPolynomial<Coeff>;
  if (p_in_t.has_negative_exponents())
    throw std::invalid_argument("substitute_t: polynomial in t must not have negative exponents");
  const P y_plus_inverse = P::monomial(Coeff(1), 1) + P::monomial(Coeff(1), -1);
  P result;
  P t_power(Coeff(1));
  long k = 0;
  for (const auto& [e, c] : p_in_t.terms()) {
    for (; k < e; ++k) t_power *= y_plus_inverse;
    result += c * t_power;
  }
  return result;
}

// Plain polynomial evaluation. Negative exponents are accepted only at the
// units +1 and -1, where y^-k = y^k.
Integer evaluate(const LaurentPolynomial& p, const Integer& x);

// Degree-descending monomial string, e.g. "3y^2+42y+234+42y^-1+3y^-2".
std::string format(const LaurentPolynomial& p, std::string_view var = "y");
std::string format(const RationalLaurent& p, std::string_view var = "y");

// Inverse of format() for integer coefficients. Whitespace is ignored.
LaurentPolynomial parse_laurent(std::string_view text, std::string_view var = "y");

// Exact conversion; throws InconsistencyError if some coefficient is not
// an integer.
LaurentPolynomial to_integer_polynomial(const RationalLaurent& p);
RationalLaurent to_rational_polynomial(const LaurentPolynomial& p);

}  // namespace hkchi
