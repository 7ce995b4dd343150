#include "hkchi/truncated_series.hpp"

#include <stdexcept>

namespace hkchi {

TruncatedSeries expand_binomial(const TruncatedSeries& base, long exponent) {
  const std::size_t k = base.nvars();
  const TruncatedSeries::Exponents zero(k, 0);
  if (base.terms().size() != 2 || base.coefficient(zero) != 1)
    throw std::invalid_argument("expand_binomial: base must have the form 1 - m for a single monomial m");

  // The non-constant term is -m = -c x^a.
  TruncatedSeries::Exponents a;
  Integer c;
  for (const auto& [e, coeff] : base.terms()) {
    if (e == zero) continue;
    a = e;
    c = -coeff;
  }
  if (TruncatedSeries::total_degree(a) <= 0)
    throw std::invalid_argument("expand_binomial: monomial must have positive total degree");

  // sum_j binom(exponent, j) (-c)^j x^{j a}
  auto result = TruncatedSeries::zero_like(base);
  Integer binom = 1;
  Integer neg_c_power = 1;
  TruncatedSeries::Exponents e = zero;
  for (long j = 0;; ++j) {
    if (j > 0) {
      binom *= (exponent - j + 1);
      binom /= j;  // exact: binom(e, j) = binom(e, j-1) (e-j+1) / j
      neg_c_power *= -c;
      for (std::size_t i = 0; i < k; ++i) e[i] += a[i];
    }
    if (!base.within_truncation(e) || is_zero(binom)) break;
    result.add_term(e, binom * neg_c_power);
  }
  return result;
}

}  // namespace hkchi
