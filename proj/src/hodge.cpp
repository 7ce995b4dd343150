#include "hkchi/hodge.hpp"

#include <algorithm>
#include <utility>

#include "hkchi/lefschetz.hpp"

namespace hkchi {

HodgeDiamond::HodgeDiamond(Table rows, std::optional<std::string> name) : rows_(std::move(rows)), name_(std::move(name)) {
  const std::size_t side = rows_.size();
  if (side % 2 == 0)
    throw DimensionError("Hodge table side must be odd (2n+1), got " + std::to_string(side));
  if (side == 1) throw DimensionError("Hodge table must have n >= 1 (side >= 3)");
  for (std::size_t p = 0; p < side; ++p)
    if (rows_[p].size() != side)
      throw DimensionError("Hodge table row " + std::to_string(p) + " has " + std::to_string(rows_[p].size()) +
                           " entries, expected " + std::to_string(side));
  n_ = static_cast<int>(side / 2);
}

Integer HodgeDiamond::h(int p, int q) const {
  if (p < 0 || q < 0 || p >= side() || q >= side()) return 0;
  return rows_[p][q];
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NegativeEntry: return "NEGATIVE_ENTRY";
    case Violation::Kind::SerreDuality: return "SERRE_DUALITY";
    case Violation::Kind::Conjugation: return "CONJUGATION";
    case Violation::Kind::ColumnSymmetry: return "COLUMN_SYMMETRY";
    case Violation::Kind::NegativePrimitive: return "NEGATIVE_PRIMITIVE";
    case Violation::Kind::Irreducibility: return "IRREDUCIBILITY";
  }
  return "UNKNOWN";
}

std::string Violation::describe() const {
  return to_string(kind) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool ValidationReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (passed()) return "pass";
  std::string out = "fail:";
  for (const auto& v : violations) out += " " + v.describe();
  return out;
}

ValidationReport validate(const HodgeDiamond& d, ValidationLevel level) {
  ValidationReport report;
  report.level = level;
  const int n = d.n();
  const int top = 2 * n;
  auto add = [&](Violation::Kind k, int p, int q) { report.violations.push_back({k, p, q}); };

  for (int p = 0; p <= top; ++p)
    for (int q = 0; q <= top; ++q)
      if (sgn(d.h(p, q)) < 0) add(Violation::Kind::NegativeEntry, p, q);

  // Each mirror pair is reported once, at its lexicographically smaller end.
  for (int p = 0; p <= top; ++p) {
    for (int q = 0; q <= top; ++q) {
      const std::pair<int, int> here{p, q};
      if (here < std::pair{top - p, top - q} && d.h(p, q) != d.h(top - p, top - q))
        add(Violation::Kind::SerreDuality, p, q);
      if (p < q && d.h(p, q) != d.h(q, p)) add(Violation::Kind::Conjugation, p, q);
      if (p < top - p && d.h(p, q) != d.h(top - p, q)) add(Violation::Kind::ColumnSymmetry, p, q);
    }
  }

  for (const auto& [p, q] : negative_primitive_entries(d)) add(Violation::Kind::NegativePrimitive, p, q);

  if (level == ValidationLevel::Strict) {
    if (d.h(0, 0) != 1) add(Violation::Kind::Irreducibility, 0, 0);
    if (d.h(1, 0) != 0) add(Violation::Kind::Irreducibility, 1, 0);
    if (d.h(2, 0) != 1) add(Violation::Kind::Irreducibility, 2, 0);
  }
  return report;
}

ValidationError::ValidationError(ValidationReport report)
    : InputError("Hodge diamond failed " +
                 std::string(report.level == ValidationLevel::Strict ? "STRICT" : "STRUCTURAL") +
                 " validation: " + report.summary()),
      report_(std::move(report)) {}

void require_valid(const HodgeDiamond& d, ValidationLevel level) {
  auto report = validate(d, level);
  if (!report.passed()) throw ValidationError(std::move(report));
}

LaurentPolynomial chi_y(const HodgeDiamond& d) {
  require_valid(d, ValidationLevel::Structural);
  LaurentPolynomial result;
  for (int p = 0; p < d.side(); ++p) {
    Integer column_sum = 0;
    for (int q = 0; q < d.side(); ++q) {
      if (q % 2 == 0)
        column_sum += d.h(p, q);
      else
        column_sum -= d.h(p, q);
    }
    result.add_term(p, column_sum);
  }
  return result;
}

ClassicalValues classical_values(const HodgeDiamond& d) {
  const auto chi = chi_y(d);
  return {evaluate(chi, -1), evaluate(chi, 0), evaluate(chi, 1)};
}

LaurentPolynomial normalized_genus(const HodgeDiamond& d) {
  return chi_y(d).with_negated_variable().shifted(-d.n());
}

Integer alternating_sum(const HodgeDiamond& d) {
  Integer sum = 0;
  for (int p = 0; p < d.side(); ++p)
    for (int q = 0; q < d.side(); ++q) {
      if ((p + q) % 2 == 0)
        sum += d.h(p, q);
      else
        sum -= d.h(p, q);
    }
  return sum;
}

}  // namespace hkchi
