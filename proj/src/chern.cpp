#include "hkchi/chern.hpp"

#include <cctype>
#include <utility>

#include "hkchi/errors.hpp"

namespace hkchi {

namespace {

using Series = BasicTruncatedSeries<RationalLaurent>;
using RationalChern = std::map<ChernMonomial, Rational>;

void require_supported(int n) {
  if (n < 1 || n > kMaxChernN)
    throw UnsupportedError("Riemann-Roch pipeline supports n in [1, " + std::to_string(kMaxChernN) + "], got " +
                           std::to_string(n));
}

int weighted_degree(const ChernMonomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += 2 * static_cast<int>(i + 1) * m[i];
  return d;
}

// Univariate coefficients of x / (1 - e^{-x}) up to x^order, by inverting
// (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!.
std::vector<Rational> todd_generator(int order) {
  std::vector<Rational> denom(order + 1);
  Integer factorial = 1;
  for (int k = 0; k <= order; ++k) {
    factorial *= (k + 1);
    denom[k] = Rational((k % 2 == 0) ? 1 : -1, 1) / Rational(factorial);
  }
  std::vector<Rational> inv(order + 1);
  inv[0] = 1 / denom[0];
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += denom[j] * inv[k - j];
    inv[k] = -acc / denom[0];
  }
  return inv;
}

// sum_k c_k (sign * x_i)^k as a root series.
Series univariate_in(const Series& like, std::size_t var, const std::vector<Rational>& coeffs, int sign) {
  auto s = Series::zero_like(like);
  Series::Exponents e(like.nvars(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    e[var] = static_cast<int>(k);
    Rational c = coeffs[k];
    if (sign < 0 && k % 2 == 1) c = -c;
    s.add_term(e, RationalLaurent(c));
  }
  return s;
}

// a + b * cosh(x_i), truncated.
Series affine_cosh(const Series& like, std::size_t var, const RationalLaurent& a, const RationalLaurent& b) {
  auto s = Series::zero_like(like);
  Series::Exponents e(like.nvars(), 0);
  s.add_term(e, a);
  Integer factorial = 1;
  for (int k = 0; 2 * k <= like.max_degrees()[var]; ++k) {
    if (k > 0) factorial *= (2 * k - 1) * (2 * k);
    e[var] = 2 * k;
    s.add_term(e, Rational(1) / Rational(factorial) * b);
  }
  return s;
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t size = m.size();
  std::vector<std::vector<Rational>> inv(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == size) throw InconsistencyError("power-sum transition matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = m[col][col];
    for (std::size_t j = 0; j < size; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < size; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

void add_to(RationalChern& poly, const ChernMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = poly.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) poly.erase(it);
  }
}

RationalChern multiply(const RationalChern& a, const RationalChern& b) {
  RationalChern out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      ChernMonomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_to(out, m, ca * cb);
    }
  return out;
}

// Power sums P_1..P_{2n} of the paired root set in terms of c_2, c_4, ...
// via Newton's identities with all odd elementary symmetric functions zero.
std::vector<RationalChern> paired_power_sums(int n) {
  const int top = 2 * n;
  auto elementary = [&](int k) {
    RationalChern e;
    if (k == 0) {
      e[ChernMonomial(n, 0)] = 1;
    } else if (k % 2 == 0 && k <= top) {
      ChernMonomial m(n, 0);
      m[k / 2 - 1] = 1;
      e[m] = 1;
    }
    return e;
  };
  std::vector<RationalChern> p(top + 1);
  for (int k = 1; k <= top; ++k) {
    RationalChern pk;
    for (const auto& [m, c] : elementary(k)) add_to(pk, m, Rational((k % 2 == 1 ? 1 : -1) * k) * c);
    for (int i = 1; i < k; ++i) {
      const int s = ((k + i - 1) % 2 == 0) ? 1 : -1;
      for (const auto& [m, c] : multiply(elementary(k - i), p[i])) add_to(pk, m, Rational(s) * c);
    }
    if (k % 2 == 1 && !pk.empty())
      throw InconsistencyError("odd power sum P_" + std::to_string(k) + " of the paired root set does not vanish");
    p[k] = std::move(pk);
  }
  return p;
}

}  // namespace

std::string chern_monomial_key(const ChernMonomial& m) {
  std::string key;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    key += "c" + std::to_string(2 * (i + 1));
    if (m[i] != 1) key += "^" + std::to_string(m[i]);
  }
  return key.empty() ? "1" : key;
}

ChernMonomial parse_chern_monomial(std::string_view key, int n) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("Chern monomial \"" + std::string(key) + "\": " + why);
  };
  ChernMonomial m(n, 0);
  std::size_t i = 0;
  auto read_number = [&]() {
    const std::size_t start = i;
    while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) ++i;
    if (start == i || i - start > 6) throw fail("expected a small positive integer");
    return std::stoi(std::string(key.substr(start, i - start)));
  };
  if (key.empty()) throw fail("empty key");
  while (i < key.size()) {
    if (key[i] != 'c') throw fail("expected 'c'");
    ++i;
    const int cls = read_number();
    int power = 1;
    if (i < key.size() && key[i] == '^') {
      ++i;
      power = read_number();
    }
    if (cls % 2 != 0) throw fail("odd Chern classes vanish for a paired root set");
    if (cls < 2 || cls > 2 * n) throw fail("class c" + std::to_string(cls) + " out of range for n=" + std::to_string(n));
    if (power < 1) throw fail("power must be positive");
    m[cls / 2 - 1] += power;
  }
  if (chern_monomial_key(m) != key) throw fail("non-canonical form, expected \"" + chern_monomial_key(m) + "\"");
  return m;
}

std::vector<ChernMonomial> chern_monomial_basis(int n) {
  std::vector<ChernMonomial> out;
  for (const auto& lambda : partitions(n, n)) {
    ChernMonomial m(n, 0);
    for (int part : lambda) ++m[part - 1];
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const ChernMonomial& a, const ChernMonomial& b) { return chern_monomial_key(a) < chern_monomial_key(b); });
  return out;
}

void ChernData::require_complete() const {
  if (n < 1) throw InputError("Chern data needs n >= 1");
  for (const auto& [key, v] : values) {
    const auto m = parse_chern_monomial(key, n);
    if (weighted_degree(m) != 2 * n)
      throw InputError("Chern monomial " + key + " has degree " + std::to_string(weighted_degree(m)) +
                       ", expected " + std::to_string(2 * n));
  }
  for (const auto& m : chern_monomial_basis(n))
    if (!values.count(chern_monomial_key(m))) throw InputError("missing Chern monomial " + chern_monomial_key(m));
}

const Integer& ChernData::value(const ChernMonomial& m) const {
  auto it = values.find(chern_monomial_key(m));
  if (it == values.end()) throw InputError("missing Chern monomial " + chern_monomial_key(m));
  return it->second;
}

RootSeries make_root_series(int n) {
  if (n < 1) throw UnsupportedError("root series needs n >= 1");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return {n, Series(std::move(vars), std::vector<int>(n, 2 * n), 2 * n)};
}

RootSeries todd_series(int n) {
  require_supported(n);
  auto s = make_root_series(n);
  const auto g = todd_generator(2 * n);
  auto product = Series::constant_like(s.terms, RationalLaurent(1));
  for (int i = 0; i < n; ++i) {
    product *= univariate_in(s.terms, i, g, +1);
    product *= univariate_in(s.terms, i, g, -1);
  }
  s.terms = std::move(product);
  return s;
}

ChernExpression integrate_symbolic(const RootSeries& s) {
  const int n = s.n;
  const Series top = s.terms.homogeneous_part(2 * n);
  for (const auto& [e, c] : top.terms())
    for (int k : e)
      if (k % 2 != 0) throw InconsistencyError("odd powers of a Chern root survive in the top-degree part");

  // Express the top part in products of q_k = sum_i x_i^{2k}.
  const auto lambdas = partitions(n, n);
  auto x_exponents = [&](const std::vector<int>& mu) {
    Series::Exponents e(n, 0);
    for (std::size_t i = 0; i < mu.size(); ++i) e[i] = 2 * mu[i];
    return e;
  };
  auto q = [&](int k) {
    auto out = Series::zero_like(top);
    for (int i = 0; i < n; ++i) {
      Series::Exponents e(n, 0);
      e[i] = 2 * k;
      out.add_term(e, RationalLaurent(1));
    }
    return out;
  };
  std::vector<Series> q_products;
  for (const auto& lambda : lambdas) {
    auto prod = Series::constant_like(top, RationalLaurent(1));
    for (int part : lambda) prod *= q(part);
    q_products.push_back(std::move(prod));
  }
  const std::size_t size = lambdas.size();
  // transition[mu][lambda] = coefficient of x^{2 mu} in q_lambda
  std::vector<std::vector<Rational>> transition(size, std::vector<Rational>(size));
  for (std::size_t mu = 0; mu < size; ++mu)
    for (std::size_t la = 0; la < size; ++la)
      transition[mu][la] = q_products[la].coefficient(x_exponents(lambdas[mu])).coefficient(0);
  const auto inverse = invert(transition);

  std::vector<RationalLaurent> a(size);
  for (std::size_t la = 0; la < size; ++la)
    for (std::size_t mu = 0; mu < size; ++mu) a[la] += inverse[la][mu] * top.coefficient(x_exponents(lambdas[mu]));

  auto rebuilt = Series::zero_like(top);
  for (std::size_t la = 0; la < size; ++la)
    for (const auto& [e, c] : q_products[la].terms()) rebuilt.add_term(e, c * a[la]);
  if (!(rebuilt == top)) throw InconsistencyError("top-degree part is not symmetric in the Chern roots");

  // q_k = P_{2k} / 2, with P the power sums of the full paired root set.
  const auto p = paired_power_sums(n);
  ChernExpression out;
  for (std::size_t la = 0; la < size; ++la) {
    RationalChern term;
    term[ChernMonomial(n, 0)] = 1;
    for (int part : lambdas[la]) {
      RationalChern half = p[2 * part];
      for (auto& [m, c] : half) c /= 2;
      term = multiply(term, half);
    }
    for (const auto& [m, c] : term) {
      auto& slot = out[m];
      slot += c * a[la];
      if (slot.is_zero()) out.erase(m);
    }
  }
  return out;
}

RationalLaurent evaluate(const ChernExpression& e, const ChernData& cd) {
  RationalLaurent out;
  for (const auto& [m, c] : e) out += Rational(cd.value(m)) * c;
  return out;
}

ChernExpression chi_minus_y_symbolic(int n) {
  auto s = todd_series(n);
  // (1 + y^2) - 2y cosh x_i
  RationalLaurent one_plus_y2 = RationalLaurent::monomial(1, 2) + RationalLaurent(1);
  RationalLaurent minus_two_y = RationalLaurent::monomial(-2, 1);
  for (int i = 0; i < n; ++i) s.terms *= affine_cosh(s.terms, i, one_plus_y2, minus_two_y);
  return integrate_symbolic(s);
}

ChernExpression mtf_symbolic(int n) {
  auto s = todd_series(n);
  // t - 2 cosh x_i
  RationalLaurent t = RationalLaurent::monomial(1, 1);
  for (int i = 0; i < n; ++i) s.terms *= affine_cosh(s.terms, i, t, RationalLaurent(-2));
  return integrate_symbolic(s);
}

namespace {

LaurentPolynomial evaluate_integral(const ChernExpression& e, int n, const ChernData& cd) {
  if (cd.n != n)
    throw InputError("Chern data is for n=" + std::to_string(cd.n) + ", expected n=" + std::to_string(n));
  cd.require_complete();
  return to_integer_polynomial(evaluate(e, cd));
}

}  // namespace

LaurentPolynomial chi_y_via_rr(int n, const ChernData& cd) {
  require_supported(n);
  return evaluate_integral(chi_minus_y_symbolic(n), n, cd);
}

LaurentPolynomial mtf_integrand(int n, const ChernData& cd) {
  require_supported(n);
  return evaluate_integral(mtf_symbolic(n), n, cd);
}

Integer derive_c2_squared(const LaurentPolynomial& hodge_chi_minus_y, const Integer& c4) {
  const auto symbolic = chi_minus_y_symbolic(2);
  const RationalLaurent zero;
  auto find = [&](const ChernMonomial& m) -> const RationalLaurent& {
    auto it = symbolic.find(m);
    return it == symbolic.end() ? zero : it->second;
  };
  const RationalLaurent& a = find({2, 0});
  const RationalLaurent& b = find({0, 1});
  // a(y) X + b(y) c4 = H(y), coefficient by coefficient.
  const RationalLaurent target = to_rational_polynomial(hodge_chi_minus_y) - Rational(c4) * b;
  if (a.is_zero()) throw InconsistencyError("c2^2 does not enter the n=2 Riemann-Roch expression");
  const auto& [e0, a0] = *a.terms().begin();
  const Rational x = target.coefficient(e0) / a0;
  if (!(Rational(x) * a == target))
    throw InconsistencyError("no single c2^2 reproduces the Hodge-side chi_{-y}");
  Rational canonical = x;
  canonical.canonicalize();
  if (canonical.get_den() != 1) throw InconsistencyError("derived c2^2 = " + to_string(canonical) + " is not integral");
  return canonical.get_num();
}

}  // namespace hkchi
