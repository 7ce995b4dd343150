#pragma once

#include <utility>
#include <vector>

#include "hkchi/hodge.hpp"
#include "hkchi/integer.hpp"
#include "hkchi/laurent.hpp"
#include "hkchi/sl2.hpp"

namespace hkchi {

// Multiplicities h_eps^{p,q} of highest-weight vectors for the SL(2) action
// generated by cup product with the holomorphic 2-form. Row p in [0, n]
// counts copies of the (n-p+1)-dimensional irreducible representation
// inside column q. All entries are nonnegative.
class PrimitiveTable {
 public:
  using Table = std::vector<std::vector<Integer>>;

  // Throws DimensionError for a table that is not (n+1) x (2n+1) with
  // n >= 1, and NegativePrimitiveError for a negative entry.
  explicit PrimitiveTable(Table rows);

  int n() const noexcept { return n_; }
  const Table& rows() const noexcept { return rows_; }
  const Integer& operator()(int p, int q) const { return rows_.at(p).at(q); }

  friend bool operator==(const PrimitiveTable&, const PrimitiveTable&) = default;

 private:
  int n_ = 0;
  Table rows_;
};

// (p, q) with p <= n where h^{p,q} - h^{p-2,q} < 0.
std::vector<std::pair<int, int>> negative_primitive_entries(const HodgeDiamond& d);

// h_eps^{p,q} = h^{p,q} - h^{p-2,q} for 0 <= p <= n.
// Throws NegativePrimitiveError at the first negative entry.
PrimitiveTable primitive_multiplicities(const HodgeDiamond& d);

// Inverse of primitive_multiplicities: h^{p,q} = sum_j h_eps^{p-2j,q} for
// p <= n, and h^{p,q} = h^{2n-p,q} above the middle row.
HodgeDiamond reconstruct(const PrimitiveTable& pt);

struct IrreducibleSummand {
  int column;     // q
  int dimension;  // n - p + 1
  Integer multiplicity;
};

// Nonzero multiplicities, column by column, largest representation first.
std::vector<IrreducibleSummand> irreducible_summands(const PrimitiveTable& pt);

// Super-trace in its two algebraic forms, as polynomials in t:
//   primitive form  sum_{q} sum_{p<=n} (-1)^{p+q} t_{n-p+1} h_eps^{p,q}
//   rewritten form  sum_{q} sum_{p<=n} (-1)^{p+q} h^{p,q} (t_{n-p+1} - t_{n-p-1})
LaurentPolynomial supertrace_primitive_form(const HodgeDiamond& d);
LaurentPolynomial supertrace_rewritten_form(const HodgeDiamond& d);

// S(t), after checking that both forms agree (InconsistencyError if not).
LaurentPolynomial supertrace_poly(const HodgeDiamond& d);

struct TheoremCheck {
  bool passed = false;
  LaurentPolynomial supertrace_t;          // S(t)
  LaurentPolynomial supertrace_y;          // S(y + 1/y)
  LaurentPolynomial normalized_genus;      // chi_{-y} / y^n
};

// Compares S(y + 1/y) with chi_{-y}/y^n as Laurent polynomials. Both sides
// depend on U only through its trace, so one comparison covers every U.
TheoremCheck verify_theorem(const HodgeDiamond& d);

// S(trace U).
Integer st_value(const HodgeDiamond& d, const SL2Element& u);

struct RozanskyWittenValue {
  Integer value;                     // Z^RW_X[T_U]
  Integer trace;
  LaurentPolynomial supertrace_t;    // S(t), valid on every conjugacy class
};

// Mapping-torus invariant; requires a STRICT-valid diamond.
RozanskyWittenValue rw_invariant(const HodgeDiamond& d, const SL2Element& u);

}  // namespace hkchi
