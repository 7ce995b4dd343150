#include "hkchi/sl2.hpp"

#include <mutex>
#include <stdexcept>

#include "hkchi/errors.hpp"

namespace hkchi {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

SL2Element::SL2Element(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Integer det = a_ * d_ - b_ * c_;
  if (det != 1) throw DeterminantError("matrix " + to_string() + " has determinant " + det.get_str() + ", expected 1");
}

SL2Element SL2Element::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("matrix \"" + std::string(text) + "\": expected \"a,b;c,d\"");
  std::vector<Integer> entries;
  for (std::string_view row : {text.substr(0, semi), text.substr(semi + 1)}) {
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("matrix \"" + std::string(text) + "\": each row needs exactly two entries");
    entries.push_back(parse_integer(trim(row.substr(0, comma))));
    entries.push_back(parse_integer(trim(row.substr(comma + 1))));
  }
  return {entries[0], entries[1], entries[2], entries[3]};
}

std::string SL2Element::to_string() const {
  return "(" + a_.get_str() + " " + b_.get_str() + "; " + c_.get_str() + " " + d_.get_str() + ")";
}

SL2Element operator*(const SL2Element& x, const SL2Element& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

CharacterTable::CharacterTable(long r_max) {
  if (r_max < 1) r_max = 1;
  values_.resize(static_cast<std::size_t>(r_max) + 1);
  const auto t = LaurentPolynomial::monomial(1, 1);
  values_[1] = LaurentPolynomial(1);
  for (long r = 1; r < r_max; ++r) values_[r + 1] = t * values_[r] - values_[r - 1];
}

const LaurentPolynomial& CharacterTable::operator[](long r) const {
  if (r <= 0) return zero_;
  if (r > r_max()) throw std::out_of_range("character index " + std::to_string(r) + " beyond table");
  return values_[static_cast<std::size_t>(r)];
}

LaurentPolynomial character(long r) {
  if (r <= 0) return {};
  static std::mutex mutex;
  static CharacterTable table(16);
  std::lock_guard lock(mutex);
  if (r > table.r_max()) table = CharacterTable(std::max(r, 2 * table.r_max()));
  return table[r];
}

bool verify_char_identity(long r) {
  if (r < 1) throw std::invalid_argument("verify_char_identity: r must be >= 1");
  const auto lhs = substitute_t(character(r + 1) - character(r - 1));
  const auto rhs = LaurentPolynomial::monomial(1, r) + LaurentPolynomial::monomial(1, -r);
  return lhs == rhs;
}

LaurentPolynomial eigenvalue_poly(const SL2Element& u) {
  LaurentPolynomial p = LaurentPolynomial::monomial(1, 2);
  p.add_term(1, -u.trace());
  p.add_term(0, 1);
  return p;
}

}  // namespace hkchi
