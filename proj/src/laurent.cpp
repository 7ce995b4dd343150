#include "hkchi/laurent.hpp"

#include <cctype>
#include <string>

#include "hkchi/errors.hpp"

namespace hkchi {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  if (i == text.size()) throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
  return Integer(std::string(text), 10);
}

Integer evaluate(const LaurentPolynomial& p, const Integer& x) {
  const bool unit = (x == 1 || x == -1);
  if (p.has_negative_exponents() && !unit)
    throw std::domain_error("evaluate: negative exponent at a non-unit point");
  Integer result = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer xe;
    mpz_pow_ui(xe.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    result += c * xe;
  }
  return result;
}

namespace {

template <class Coeff>
std::string format_impl(const BasicLaurentPolynomial<Coeff>& p, std::string_view var, bool parenthesize) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto e = it->first;
    Coeff c = it->second;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    std::string mag = to_string(c);
    const bool unit = (mag == "1");
    if (parenthesize && mag.find('/') != std::string::npos) mag = "(" + mag + ")";
    if (e == 0) {
      out += mag;
      continue;
    }
    if (!unit) out += mag;
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string format(const LaurentPolynomial& p, std::string_view var) { return format_impl(p, var, false); }
std::string format(const RationalLaurent& p, std::string_view var) { return format_impl(p, var, true); }

LaurentPolynomial parse_laurent(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  if (var.empty()) throw ParseError("empty variable name");

  LaurentPolynomial result;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("polynomial \"" + std::string(text) + "\": " + what + " at offset " + std::to_string(i));
  };
  auto read_digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = (s[i] == '-');
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    const std::string digits = read_digits();
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits, 10);
    long exponent = 0;
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool neg_exp = false;
        if (i < s.size() && s[i] == '-') {
          neg_exp = true;
          ++i;
        }
        const std::string exp_digits = read_digits();
        if (exp_digits.empty()) fail("missing exponent");
        exponent = std::stol(exp_digits);
        if (neg_exp) exponent = -exponent;
      }
    } else if (digits.empty()) {
      fail("expected a coefficient or '" + std::string(var) + "'");
    }
    if (negative) coeff = -coeff;
    result.add_term(exponent, coeff);
  }
  return result;
}

LaurentPolynomial to_integer_polynomial(const RationalLaurent& p) {
  LaurentPolynomial r;
  for (const auto& [e, c] : p.terms()) {
    Rational q = c;
    q.canonicalize();
    if (q.get_den() != 1)
      throw InconsistencyError("non-integer coefficient " + to_string(q) + " at exponent " + std::to_string(e));
    r.add_term(e, q.get_num());
  }
  return r;
}

RationalLaurent to_rational_polynomial(const LaurentPolynomial& p) {
  RationalLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
  return r;
}

}  // namespace hkchi
