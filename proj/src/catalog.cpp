#include "hkchi/catalog.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "hkchi/json_value.hpp"
#include "hkchi/truncated_series.hpp"

namespace hkchi {

HodgeDiamond k3_seed() {
  // Irreducible holomorphic symplectic surface: h^{0,0} = h^{2,0} = 1 and
  // h^{1,0} = 0; the rest of the corners follow by symmetry.
  const Integer h00 = 1, h10 = 0, h20 = 1;
  const Integer todd = h00 - h10 + h20;   // chi(O_X)
  const Integer c2 = 12 * todd;           // Noether with c_1 = 0
  const Integer euler = c2;               // top Chern class
  // Euler = sum (-1)^{p+q} h^{p,q} = 4 h00 - 4 h10 + h11 on this pattern.
  const Integer h11 = euler - 4 * h00 + 4 * h10;
  return HodgeDiamond({{h00, h10, h20}, {h10, h11, h10}, {h20, h10, h00}}, "K3");
}

namespace {

std::string table_key(const HodgeDiamond& d) {
  std::string key;
  for (const auto& row : d.rows()) {
    for (const auto& v : row) key += v.get_str() + ",";
    key += ";";
  }
  return key;
}

std::vector<HodgeDiamond> expand_uncached(const HodgeDiamond& base, int n_max) {
  const int xy_order = 2 * n_max;
  const TruncatedSeries like({"x", "y", "z"}, {xy_order, xy_order, n_max});
  auto product = TruncatedSeries::constant_like(like, 1);
  for (int k = 1; k <= n_max; ++k) {
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        const Integer& h = base.rows()[p][q];
        if (is_zero(h)) continue;
        if (!h.fits_slong_p()) throw InputError("Hodge number too large for the generating function");
        const int s = ((p + q) % 2 == 0) ? 1 : -1;
        // 1 - s x^{p+k-1} y^{q+k-1} z^k
        auto factor = TruncatedSeries::constant_like(like, 1);
        factor.add_term({p + k - 1, q + k - 1, k}, Integer(-s));
        if (factor.terms().size() != 2) continue;  // monomial beyond truncation
        product *= expand_binomial(factor, -s * h.get_si());
      }
    }
  }

  std::vector<HodgeDiamond> out;
  for (int m = 1; m <= n_max; ++m) {
    const int side = 2 * m + 1;
    HodgeDiamond::Table rows(side, std::vector<Integer>(side));
    for (const auto& [e, c] : product.terms()) {
      if (e[2] != m) continue;
      if (e[0] >= side || e[1] >= side)
        throw InconsistencyError("generating function produced x^" + std::to_string(e[0]) + " y^" +
                                 std::to_string(e[1]) + " at z^" + std::to_string(m));
      rows[e[0]][e[1]] = c;
    }
    out.emplace_back(std::move(rows));
  }
  return out;
}

}  // namespace

std::vector<HodgeDiamond> goettsche_expand(const HodgeDiamond& base, int n_max) {
  if (base.n() != 1) throw InputError("generating function needs a surface (3x3) base diamond");
  if (n_max < 1 || n_max > kMaxHilbertOrder)
    throw InputError("Hilbert scheme order must be in [1, " + std::to_string(kMaxHilbertOrder) + "], got " +
                     std::to_string(n_max));

  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::vector<HodgeDiamond>> cache;
  const auto key = std::make_pair(table_key(base), n_max);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  auto out = expand_uncached(base, n_max);
  std::optional<ValidationLevel> level;
  if (validate(base, ValidationLevel::Strict).passed())
    level = ValidationLevel::Strict;
  else if (validate(base, ValidationLevel::Structural).passed())
    level = ValidationLevel::Structural;
  if (level) {
    for (std::size_t m = 0; m < out.size(); ++m) {
      const auto report = validate(out[m], *level);
      if (!report.passed())
        throw InconsistencyError("Hilbert scheme diamond at z^" + std::to_string(m + 1) +
                                 " failed validation: " + report.summary());
    }
  }

  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

namespace {

std::vector<ManifoldRecord> build_catalog() {
  std::vector<ManifoldRecord> records;

  const HodgeDiamond k3 = k3_seed();
  ChernData k3_chern{1, {{"c2", 12 * classical_values(k3).todd_genus}}};
  records.push_back({"K3", k3, k3_chern,
                     "seeded: h00=h20=1, h10=0 (irreducible); c2=12*Todd=24 (Noether); h11=Euler-4=20"});

  const auto hilbert = goettsche_expand(k3, kMaxHilbertOrder);
  for (int m = 2; m <= kMaxHilbertOrder; ++m) {
    const std::string name = "K3[" + std::to_string(m) + "]";
    HodgeDiamond d = hilbert[m - 1];
    d.set_name(name);
    ManifoldRecord rec{name, d, std::nullopt, "Hilbert scheme generating function from the K3 seed, z^" + std::to_string(m)};
    if (m == 2) {
      // c4 is the Euler number; c2^2 is then forced by matching the
      // Riemann-Roch chi_{-y} against the Hodge side.
      const Integer c4 = classical_values(d).euler;
      const Integer c2sq = derive_c2_squared(chi_y(d).with_negated_variable(), c4);
      rec.chern = ChernData{2, {{"c2^2", c2sq}, {"c4", c4}}};
      rec.provenance += "; c4=Euler, c2^2 solved from Riemann-Roch against chi_y";
    }
    records.push_back(std::move(rec));
  }
  return records;
}

const std::vector<ManifoldRecord>& catalog() {
  static const std::vector<ManifoldRecord> records = build_catalog();
  return records;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : catalog()) out.push_back(r.name);
    return out;
  }();
  return names;
}

const ManifoldRecord& builtin(std::string_view name) {
  for (const auto& r : catalog())
    if (r.name == name) return r;
  std::string known;
  for (const auto& r : catalog()) known += (known.empty() ? "" : ", ") + r.name;
  throw UnknownManifoldError("unknown built-in manifold \"" + std::string(name) + "\" (known: " + known + ")");
}

namespace {

json::Value chern_values_to_json(const ChernData& cd) {
  auto obj = json::Value::object();
  for (const auto& [k, v] : cd.values) obj.set(k, json::Value::integer(v));
  return obj;
}

ChernData chern_values_from_json(const json::Value& v, int n) {
  ChernData cd;
  cd.n = n;
  for (const auto& [k, val] : v.members()) {
    parse_chern_monomial(k, n);
    cd.values.emplace(k, val.as_integer());
  }
  cd.require_complete();
  return cd;
}

void reject_unknown_keys(const json::Value& obj, std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, v] : obj.members()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || (k == a);
    if (!ok) throw ParseError("unexpected key \"" + k + "\"");
  }
}

const json::Value& required(const json::Value& obj, std::string_view key) {
  const auto* v = obj.find(key);
  if (!v) throw ParseError("missing key \"" + std::string(key) + "\"");
  return *v;
}

int small_int(const json::Value& v, std::string_view what) {
  const Integer i = v.as_integer();
  if (!i.fits_sint_p()) throw DimensionError(std::string(what) + " out of range");
  return static_cast<int>(i.get_si());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_json(const ManifoldRecord& record) {
  auto obj = json::Value::object();
  obj.set("name", json::Value::string(record.name));
  obj.set("n", json::Value::integer(record.diamond.n()));
  auto rows = json::Value::array();
  for (const auto& row : record.diamond.rows()) {
    auto r = json::Value::array();
    for (const auto& v : row) r.push_back(json::Value::integer(v));
    rows.push_back(std::move(r));
  }
  obj.set("hodge", std::move(rows));
  if (record.chern) obj.set("chern", chern_values_to_json(*record.chern));
  if (!record.provenance.empty()) obj.set("provenance", json::Value::string(record.provenance));
  return json::dump(obj);
}

ManifoldRecord record_from_json(std::string_view text) {
  const auto doc = json::parse(text);
  if (!doc.is(json::Value::Kind::Object)) throw ParseError("manifold file must contain a JSON object");
  reject_unknown_keys(doc, {"name", "n", "hodge", "chern", "provenance"});

  const std::string name = required(doc, "name").as_string();
  const int n = small_int(required(doc, "n"), "n");
  HodgeDiamond::Table table;
  for (const auto& row : required(doc, "hodge").items()) {
    std::vector<Integer> r;
    for (const auto& v : row.items()) r.push_back(v.as_integer());
    table.push_back(std::move(r));
  }
  HodgeDiamond d(std::move(table), name);
  if (d.n() != n)
    throw DimensionError("\"n\" is " + std::to_string(n) + " but the hodge table has side " +
                         std::to_string(d.side()));
  require_valid(d, ValidationLevel::Structural);

  ManifoldRecord rec{name, std::move(d), std::nullopt, ""};
  if (const auto* c = doc.find("chern")) rec.chern = chern_values_from_json(*c, n);
  if (const auto* p = doc.find("provenance")) rec.provenance = p->as_string();
  return rec;
}

ManifoldRecord load(const std::filesystem::path& path) {
  try {
    return record_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save(const ManifoldRecord& record, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << to_json(record);
  if (!out) throw InputError("write failed for " + path.string());
}

ChernData chern_from_json(std::string_view text) {
  const auto doc = json::parse(text);
  if (!doc.is(json::Value::Kind::Object)) throw ParseError("Chern file must contain a JSON object");
  reject_unknown_keys(doc, {"n", "chern"});
  const int n = small_int(required(doc, "n"), "n");
  return chern_values_from_json(required(doc, "chern"), n);
}

std::string chern_to_json(const ChernData& cd) {
  auto obj = json::Value::object();
  obj.set("n", json::Value::integer(cd.n));
  obj.set("chern", chern_values_to_json(cd));
  return json::dump(obj);
}

ChernData load_chern(const std::filesystem::path& path) {
  try {
    return chern_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace hkchi
