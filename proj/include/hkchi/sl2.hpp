#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hkchi/integer.hpp"
#include "hkchi/laurent.hpp"

namespace hkchi {

// Integer 2x2 matrix (a b; c d) with ad - bc = 1.
//
// Only SL(2,Z) elements are accepted. Everything computed from an element
// goes through its trace, so results hold verbatim for any SL(2,C) element
// sharing that trace.
class SL2Element {
 public:
  // Throws DeterminantError when ad - bc != 1.
  SL2Element(Integer a, Integer b, Integer c, Integer d);

  static SL2Element identity() { return {1, 0, 0, 1}; }

  // "a,b;c,d", rows separated by ';'. Whitespace around entries is allowed.
  static SL2Element parse(std::string_view text);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  Integer trace() const { return a_ + d_; }
  SL2Element inverse() const { return {d_, -b_, -c_, a_}; }
  std::string to_string() const;

  friend SL2Element operator*(const SL2Element& x, const SL2Element& y);
  friend bool operator==(const SL2Element&, const SL2Element&) = default;

 private:
  Integer a_, b_, c_, d_;
};

// Characters t_r of the r-dimensional irreducible representation, as
// polynomials in t = t_2: t_1 = 1, t_{r+1} = t t_r - t_{r-1}, and t_r = 0
// for r <= 0.
class CharacterTable {
 public:
  explicit CharacterTable(long r_max);

  long r_max() const noexcept { return static_cast<long>(values_.size()) - 1; }

  // Zero for r <= 0; throws std::out_of_range beyond r_max.
  const LaurentPolynomial& operator[](long r) const;

 private:
  LaurentPolynomial zero_;
  std::vector<LaurentPolynomial> values_;  // index r, slot 0 unused
};

// t_r from a process-wide write-once cache that only ever grows.
LaurentPolynomial character(long r);

// Checks t_{r+1} - t_{r-1} = y^r + y^{-r} exactly after t -> y + 1/y.
bool verify_char_identity(long r);

// y^2 - t y + 1 with t = trace(U): the characteristic polynomial of U in the
// defining representation. Its roots are the eigenvalues and multiply to 1.
LaurentPolynomial eigenvalue_poly(const SL2Element& u);

}  // namespace hkchi
