#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkchi/errors.hpp"
#include "hkchi/integer.hpp"
#include "hkchi/laurent.hpp"

namespace hkchi {

// Full table h^{p,q} = dim H^q(X, Omega^p) of a compact complex 2n-fold.
// Rows are indexed by p and columns by q, both in [0, 2n]. The constructor
// only checks the shape; symmetries are checked by validate().
class HodgeDiamond {
 public:
  using Table = std::vector<std::vector<Integer>>;

  // Throws DimensionError unless `rows` is square with odd side 2n+1, n >= 1.
  explicit HodgeDiamond(Table rows, std::optional<std::string> name = std::nullopt);

  int n() const noexcept { return n_; }
  int side() const noexcept { return 2 * n_ + 1; }
  const Table& rows() const noexcept { return rows_; }
  const std::optional<std::string>& name() const noexcept { return name_; }
  void set_name(std::optional<std::string> name) { name_ = std::move(name); }

  // h^{p,q}; zero outside the table, which gives the h^{p,q} = 0 for p < 0
  // convention for free.
  Integer h(int p, int q) const;

  // Tables compare equal regardless of their labels.
  friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) { return a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  Table rows_;
  std::optional<std::string> name_;
};

enum class ValidationLevel { Structural, Strict };

struct Violation {
  enum class Kind {
    NegativeEntry,
    SerreDuality,      // h^{p,q} != h^{2n-p,2n-q}
    Conjugation,       // h^{p,q} != h^{q,p}
    ColumnSymmetry,    // h^{p,q} != h^{2n-p,q}
    NegativePrimitive, // h^{p,q} - h^{p-2,q} < 0 for p <= n
    Irreducibility,    // STRICT: h^{0,0} = 1, h^{1,0} = 0, h^{2,0} = 1
  };
  Kind kind;
  int p;
  int q;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  ValidationLevel level = ValidationLevel::Structural;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool has(Violation::Kind kind) const;
  std::string summary() const;
};

ValidationReport validate(const HodgeDiamond& d, ValidationLevel level);

class ValidationError : public InputError {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Throws ValidationError carrying the report when validation fails.
void require_valid(const HodgeDiamond& d, ValidationLevel level);

// chi_y = sum_{p,q} (-1)^q h^{p,q} y^p, so y = -1, 0, 1 give the Euler
// characteristic, the Todd genus and the signature.
LaurentPolynomial chi_y(const HodgeDiamond& d);

struct ClassicalValues {
  Integer euler;
  Integer todd_genus;
  Integer signature;
  friend bool operator==(const ClassicalValues&, const ClassicalValues&) = default;
};

ClassicalValues classical_values(const HodgeDiamond& d);

// chi_{-y} / y^n. Palindromic for every structurally valid diamond.
LaurentPolynomial normalized_genus(const HodgeDiamond& d);

// sum_{p,q} (-1)^{p+q} h^{p,q}, straight from the table.
Integer alternating_sum(const HodgeDiamond& d);

}  // namespace hkchi
