#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hkchi/integer.hpp"

namespace hkchi::json {

// Minimal JSON tree that keeps integers exact. Lexing and parsing are done
// by nlohmann's SAX parser; integers of any length keep their digits.
// Floating-point numbers are rejected outright.
class Value {
 public:
  enum class Kind { Null, Bool, Integer, String, Array, Object };
  using Members = std::vector<std::pair<std::string, Value>>;

  Value() = default;
  static Value boolean(bool b);
  static Value integer(const hkchi::Integer& i);
  static Value string(std::string s);
  static Value array(std::vector<Value> items = {});
  static Value object(Members members = {});

  Kind kind() const noexcept { return kind_; }
  bool is(Kind k) const noexcept { return kind_ == k; }

  bool as_bool() const;
  hkchi::Integer as_integer() const;
  const std::string& as_string() const;
  const std::vector<Value>& items() const;
  const Members& members() const;

  // Object access; find returns nullptr when absent.
  const Value* find(std::string_view key) const;
  Value& set(std::string key, Value v);
  Value& push_back(Value v);

 private:
  Kind kind_ = Kind::Null;
  bool bool_ = false;
  std::string text_;  // string payload, or decimal digits of an integer
  std::vector<Value> items_;
  Members members_;
};

// Throws ParseError with line/column information.
Value parse(std::string_view text);

// Two-space indentation, object keys sorted, arrays of scalars on one line,
// trailing newline.
std::string dump(const Value& v);

// Single-line rendering with sorted keys.
std::string dump_compact(const Value& v);

}  // namespace hkchi::json
