#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hkchi/integer.hpp"
#include "hkchi/laurent.hpp"

namespace hkchi {

// Sparse multivariate power series truncated per variable, and optionally
// also by total degree. Terms outside the truncation window are dropped on
// insertion, so products are closed under truncation. All exponents are
// nonnegative.
template <class Coeff>
class BasicTruncatedSeries {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Coeff>;

  BasicTruncatedSeries(std::vector<std::string> variables, std::vector<int> max_degrees,
                       std::optional<int> max_total_degree = std::nullopt)
      : variables_(std::move(variables)), max_degrees_(std::move(max_degrees)), max_total_degree_(max_total_degree) {
    if (variables_.size() != max_degrees_.size())
      throw std::invalid_argument("truncated series: one truncation order per variable required");
    for (int d : max_degrees_)
      if (d < 0) throw std::invalid_argument("truncated series: negative truncation order");
    if (max_total_degree_ && *max_total_degree_ < 0)
      throw std::invalid_argument("truncated series: negative total-degree truncation");
  }

  // Zero series sharing the variables and truncation of `like`.
  static BasicTruncatedSeries zero_like(const BasicTruncatedSeries& like) {
    return BasicTruncatedSeries(like.variables_, like.max_degrees_, like.max_total_degree_);
  }
  static BasicTruncatedSeries constant_like(const BasicTruncatedSeries& like, const Coeff& c) {
    auto s = zero_like(like);
    s.add_term(Exponents(like.variables_.size(), 0), c);
    return s;
  }
  static BasicTruncatedSeries monomial_like(const BasicTruncatedSeries& like, Exponents e, const Coeff& c) {
    auto s = zero_like(like);
    s.add_term(std::move(e), c);
    return s;
  }

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<int>& max_degrees() const noexcept { return max_degrees_; }
  const std::optional<int>& max_total_degree() const noexcept { return max_total_degree_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  static int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

  bool within_truncation(const Exponents& e) const {
    if (e.size() != variables_.size()) throw std::invalid_argument("truncated series: exponent arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 || e[i] > max_degrees_[i]) return false;
    return !max_total_degree_ || total_degree(e) <= *max_total_degree_;
  }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Adds c * x^e; silently discards terms beyond the truncation.
  void add_term(Exponents e, const Coeff& c) {
    if (!within_truncation(e) || is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  // Terms of total degree exactly `degree`.
  BasicTruncatedSeries homogeneous_part(int degree) const {
    auto r = zero_like(*this);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == degree) r.terms_.emplace(e, c);
    return r;
  }

  BasicTruncatedSeries& operator+=(const BasicTruncatedSeries& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicTruncatedSeries& operator-=(const BasicTruncatedSeries& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }

  friend BasicTruncatedSeries operator+(BasicTruncatedSeries a, const BasicTruncatedSeries& b) {
    a += b;
    return a;
  }
  friend BasicTruncatedSeries operator-(BasicTruncatedSeries a, const BasicTruncatedSeries& b) {
    a -= b;
    return a;
  }
  friend BasicTruncatedSeries operator*(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
    a.require_compatible(b);
    auto r = zero_like(a);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (!r.within_truncation(e)) continue;
        r.add_term(e, Coeff(ca * cb));
      }
    }
    return r;
  }
  BasicTruncatedSeries& operator*=(const BasicTruncatedSeries& o) {
    *this = *this * o;
    return *this;
  }
  friend BasicTruncatedSeries operator*(const Coeff& s, const BasicTruncatedSeries& a) {
    auto r = zero_like(a);
    for (const auto& [e, c] : a.terms_) r.add_term(e, Coeff(s * c));
    return r;
  }

  friend bool operator==(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
    return a.variables_ == b.variables_ && a.max_degrees_ == b.max_degrees_ &&
           a.max_total_degree_ == b.max_total_degree_ && a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return hkchi::is_zero(c); }

  void require_compatible(const BasicTruncatedSeries& o) const {
    if (variables_ != o.variables_ || max_degrees_ != o.max_degrees_ || max_total_degree_ != o.max_total_degree_)
      throw std::invalid_argument("truncated series: operands have different variables or truncation");
  }

  std::vector<std::string> variables_;
  std::vector<int> max_degrees_;
  std::optional<int> max_total_degree_;
  Terms terms_;
};

using TruncatedSeries = BasicTruncatedSeries<Integer>;

// (1 - m)^exponent for a single monomial m = c * x^a of positive total
// degree, expanded by the generalized binomial series up to the
// truncation of `base`. `base` must consist of exactly the constant term 1
// and the term -m.
TruncatedSeries expand_binomial(const TruncatedSeries& base, long exponent);

}  // namespace hkchi
