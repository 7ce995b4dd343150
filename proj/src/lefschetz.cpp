#include "hkchi/lefschetz.hpp"

#include <utility>

namespace hkchi {

namespace {

int sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

PrimitiveTable::PrimitiveTable(Table rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) throw DimensionError("primitive table needs n >= 1 (at least two rows)");
  n_ = static_cast<int>(rows_.size()) - 1;
  for (int p = 0; p <= n_; ++p) {
    if (rows_[p].size() != static_cast<std::size_t>(2 * n_ + 1))
      throw DimensionError("primitive table row " + std::to_string(p) + " must have 2n+1 = " +
                           std::to_string(2 * n_ + 1) + " entries");
    for (int q = 0; q <= 2 * n_; ++q)
      if (sgn(rows_[p][q]) < 0) throw NegativePrimitiveError(p, q);
  }
}

std::vector<std::pair<int, int>> negative_primitive_entries(const HodgeDiamond& d) {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p <= d.n(); ++p)
    for (int q = 0; q < d.side(); ++q)
      if (d.h(p, q) < d.h(p - 2, q)) out.emplace_back(p, q);
  return out;
}

PrimitiveTable primitive_multiplicities(const HodgeDiamond& d) {
  PrimitiveTable::Table rows(d.n() + 1, std::vector<Integer>(d.side()));
  for (int p = 0; p <= d.n(); ++p)
    for (int q = 0; q < d.side(); ++q) {
      rows[p][q] = d.h(p, q) - d.h(p - 2, q);
      if (sgn(rows[p][q]) < 0) throw NegativePrimitiveError(p, q);
    }
  return PrimitiveTable(std::move(rows));
}

HodgeDiamond reconstruct(const PrimitiveTable& pt) {
  const int n = pt.n();
  const int side = 2 * n + 1;
  HodgeDiamond::Table h(side, std::vector<Integer>(side));
  for (int q = 0; q < side; ++q) {
    for (int p = 0; p <= n; ++p) {
      Integer sum = 0;
      for (int k = p; k >= 0; k -= 2) sum += pt(k, q);
      h[p][q] = sum;
    }
    for (int p = n + 1; p < side; ++p) h[p][q] = h[2 * n - p][q];
  }
  return HodgeDiamond(std::move(h));
}

std::vector<IrreducibleSummand> irreducible_summands(const PrimitiveTable& pt) {
  std::vector<IrreducibleSummand> out;
  for (int q = 0; q <= 2 * pt.n(); ++q)
    for (int p = 0; p <= pt.n(); ++p)
      if (!is_zero(pt(p, q))) out.push_back({q, pt.n() - p + 1, pt(p, q)});
  return out;
}

LaurentPolynomial supertrace_primitive_form(const HodgeDiamond& d) {
  const auto prim = primitive_multiplicities(d);
  const int n = d.n();
  LaurentPolynomial s;
  for (int q = 0; q < d.side(); ++q)
    for (int p = 0; p <= n; ++p) s += Integer(sign(p + q) * prim(p, q)) * character(n - p + 1);
  return s;
}

LaurentPolynomial supertrace_rewritten_form(const HodgeDiamond& d) {
  const int n = d.n();
  LaurentPolynomial s;
  for (int q = 0; q < d.side(); ++q)
    for (int p = 0; p <= n; ++p)
      s += Integer(sign(p + q) * d.h(p, q)) * (character(n - p + 1) - character(n - p - 1));
  return s;
}

LaurentPolynomial supertrace_poly(const HodgeDiamond& d) {
  auto primitive = supertrace_primitive_form(d);
  const auto rewritten = supertrace_rewritten_form(d);
  if (!(primitive == rewritten))
    throw InconsistencyError("super-trace forms disagree: primitive " + format(primitive, "t") + " vs rewritten " +
                             format(rewritten, "t"));
  return primitive;
}

TheoremCheck verify_theorem(const HodgeDiamond& d) {
  require_valid(d, ValidationLevel::Structural);
  TheoremCheck check;
  check.supertrace_t = supertrace_poly(d);
  check.supertrace_y = substitute_t(check.supertrace_t);
  check.normalized_genus = normalized_genus(d);
  check.passed = (check.supertrace_y == check.normalized_genus);
  return check;
}

Integer st_value(const HodgeDiamond& d, const SL2Element& u) {
  require_valid(d, ValidationLevel::Structural);
  return evaluate(supertrace_poly(d), u.trace());
}

RozanskyWittenValue rw_invariant(const HodgeDiamond& d, const SL2Element& u) {
  require_valid(d, ValidationLevel::Strict);
  RozanskyWittenValue rw;
  rw.trace = u.trace();
  rw.supertrace_t = supertrace_poly(d);
  rw.value = evaluate(rw.supertrace_t, rw.trace);
  return rw;
}

}  // namespace hkchi
