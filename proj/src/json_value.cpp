#include "hkchi/json_value.hpp"

#include <json.hpp>

#include <algorithm>
#include <memory>

#include "hkchi/errors.hpp"

namespace hkchi::json {

Value Value::boolean(bool b) {
  Value v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}

Value Value::integer(const hkchi::Integer& i) {
  Value v;
  v.kind_ = Kind::Integer;
  v.text_ = i.get_str();
  return v;
}

Value Value::string(std::string s) {
  Value v;
  v.kind_ = Kind::String;
  v.text_ = std::move(s);
  return v;
}

Value Value::array(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::Array;
  v.items_ = std::move(items);
  return v;
}

Value Value::object(Members members) {
  Value v;
  v.kind_ = Kind::Object;
  v.members_ = std::move(members);
  return v;
}

bool Value::as_bool() const {
  if (kind_ != Kind::Bool) throw ParseError("expected a boolean");
  return bool_;
}

hkchi::Integer Value::as_integer() const {
  if (kind_ != Kind::Integer) throw ParseError("expected an integer");
  return hkchi::Integer(text_, 10);
}

const std::string& Value::as_string() const {
  if (kind_ != Kind::String) throw ParseError("expected a string");
  return text_;
}

const std::vector<Value>& Value::items() const {
  if (kind_ != Kind::Array) throw ParseError("expected an array");
  return items_;
}

const Value::Members& Value::members() const {
  if (kind_ != Kind::Object) throw ParseError("expected an object");
  return members_;
}

const Value* Value::find(std::string_view key) const {
  for (const auto& [k, v] : members())
    if (k == key) return &v;
  return nullptr;
}

Value& Value::set(std::string key, Value v) {
  if (kind_ != Kind::Object) throw ParseError("expected an object");
  for (auto& [k, existing] : members_)
    if (k == key) return existing = std::move(v);
  members_.emplace_back(std::move(key), std::move(v));
  return members_.back().second;
}

Value& Value::push_back(Value v) {
  if (kind_ != Kind::Array) throw ParseError("expected an array");
  items_.push_back(std::move(v));
  return items_.back();
}

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  Value result;
  std::string error;

  bool null() override { return emit(Value()); }
  bool boolean(bool val) override { return emit(Value::boolean(val)); }
  bool number_integer(number_integer_t val) override { return emit(Value::integer(hkchi::Integer(std::to_string(val), 10))); }
  bool number_unsigned(number_unsigned_t val) override { return emit(Value::integer(hkchi::Integer(std::to_string(val), 10))); }
  bool number_float(number_float_t, const string_t& raw) override {
    // Integers beyond 64 bits arrive here with their raw token intact.
    if (!is_integer_token(raw)) {
      error = "floating-point number " + raw + " is not allowed";
      return false;
    }
    return emit(Value::integer(hkchi::Integer(raw, 10)));
  }
  bool string(string_t& val) override { return emit(Value::string(std::move(val))); }
  bool binary(binary_t&) override {
    error = "binary values are not supported";
    return false;
  }
  bool start_object(std::size_t) override {
    stack_.push_back({Value::object(), {}});
    return true;
  }
  bool key(string_t& val) override {
    for (const auto& [k, v] : stack_.back().value.members())
      if (k == val) {
        error = "duplicate key \"" + val + "\"";
        return false;
      }
    stack_.back().pending_key = std::move(val);
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    stack_.push_back({Value::array(), {}});
    return true;
  }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    error = ex.what();
    return false;
  }

 private:
  struct Frame {
    Value value;
    std::string pending_key;
  };

  bool emit(Value v) {
    if (stack_.empty()) {
      result = std::move(v);
    } else if (stack_.back().value.is(Value::Kind::Object)) {
      stack_.back().value.set(std::move(stack_.back().pending_key), std::move(v));
    } else {
      stack_.back().value.push_back(std::move(v));
    }
    return true;
  }

  bool close() {
    Value done = std::move(stack_.back().value);
    stack_.pop_back();
    return emit(std::move(done));
  }

  std::vector<Frame> stack_;
};

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

bool is_scalar(const Value& v) { return !v.is(Value::Kind::Array) && !v.is(Value::Kind::Object); }

std::vector<const std::pair<std::string, Value>*> sorted_members(const Value& v) {
  std::vector<const std::pair<std::string, Value>*> out;
  for (const auto& m : v.members()) out.push_back(&m);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->first < b->first; });
  return out;
}

void write_scalar(std::string& out, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Null: out += "null"; break;
    case Value::Kind::Bool: out += v.as_bool() ? "true" : "false"; break;
    case Value::Kind::Integer: out += v.as_integer().get_str(); break;
    case Value::Kind::String: out += quote(v.as_string()); break;
    default: break;
  }
}

void write_compact(std::string& out, const Value& v) {
  if (v.is(Value::Kind::Array)) {
    out += '[';
    bool first = true;
    for (const auto& item : v.items()) {
      if (!first) out += ", ";
      first = false;
      write_compact(out, item);
    }
    out += ']';
  } else if (v.is(Value::Kind::Object)) {
    out += '{';
    bool first = true;
    for (const auto* m : sorted_members(v)) {
      if (!first) out += ", ";
      first = false;
      out += quote(m->first) + ": ";
      write_compact(out, m->second);
    }
    out += '}';
  } else {
    write_scalar(out, v);
  }
}

void write_pretty(std::string& out, const Value& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  if (v.is(Value::Kind::Array)) {
    if (v.items().empty() || std::all_of(v.items().begin(), v.items().end(), is_scalar)) {
      write_compact(out, v);
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.items().size(); ++i) {
      out += pad;
      write_pretty(out, v.items()[i], indent + 2);
      out += (i + 1 < v.items().size()) ? ",\n" : "\n";
    }
    out += close_pad + "]";
  } else if (v.is(Value::Kind::Object)) {
    if (v.members().empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    const auto members = sorted_members(v);
    for (std::size_t i = 0; i < members.size(); ++i) {
      out += pad + quote(members[i]->first) + ": ";
      write_pretty(out, members[i]->second, indent + 2);
      out += (i + 1 < members.size()) ? ",\n" : "\n";
    }
    out += close_pad + "}";
  } else {
    write_scalar(out, v);
  }
}

}  // namespace

Value parse(std::string_view text) {
  TreeBuilder builder;
  const bool ok = nlohmann::json::sax_parse(text.begin(), text.end(), &builder);
  if (!ok) throw ParseError("JSON: " + (builder.error.empty() ? std::string("malformed input") : builder.error));
  return std::move(builder.result);
}

std::string dump(const Value& v) {
  std::string out;
  write_pretty(out, v, 0);
  out += '\n';
  return out;
}

std::string dump_compact(const Value& v) {
  std::string out;
  write_compact(out, v);
  return out;
}

}  // namespace hkchi::json
