#include "hkchi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include "hkchi/catalog.hpp"
#include "hkchi/chern.hpp"
#include "hkchi/hodge.hpp"
#include "hkchi/json_value.hpp"
#include "hkchi/lefschetz.hpp"
#include "hkchi/sl2.hpp"

namespace hkchi::cli {

namespace {

enum class Format { Text, Csv, Json };

struct Options {
  std::string manifold;
  std::string input;
  std::string format = "text";
  bool strict = false;
  std::string matrix;
  bool all_builtin = false;
  int rr_n = 0;
  std::string c2, c2sq, c4;
  std::string chern_file;
};

// Failure of one of the checked identities; maps to exit code 2.
class IdentityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Printer {
  Format format;
  bool color;

  std::string mark(bool ok, const char* good, const char* bad) const {
    const std::string word = ok ? good : bad;
    if (!color) return word;
    return std::string(ok ? "\033[32m" : "\033[31m") + word + "\033[0m";
  }
};

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw InputError("unknown format \"" + f + "\" (expected text, csv or json)");
}

struct Source {
  std::string label;
  HodgeDiamond diamond;
  std::optional<ChernData> chern;
};

std::optional<Source> select_source(const Options& o, bool required) {
  if (!o.manifold.empty() && !o.input.empty()) throw InputError("give exactly one of --manifold and --input");
  if (!o.manifold.empty()) {
    const auto& rec = builtin(o.manifold);
    return Source{rec.name, rec.diamond, rec.chern};
  }
  if (!o.input.empty()) {
    auto rec = load(o.input);
    return Source{rec.name, rec.diamond, rec.chern};
  }
  if (required) throw InputError("a manifold is required: use --manifold <name> or --input <file>");
  return std::nullopt;
}

ValidationLevel level_of(const Options& o) { return o.strict ? ValidationLevel::Strict : ValidationLevel::Structural; }

json::Value jint(const Integer& i) { return json::Value::integer(i); }
json::Value jstr(std::string s) { return json::Value::string(std::move(s)); }

void emit_csv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// ---- chi ----------------------------------------------------------------

int cmd_chi(const Options& o, const Printer& pr, std::ostream& out) {
  const auto src = *select_source(o, true);
  require_valid(src.diamond, level_of(o));
  const auto chi = chi_y(src.diamond);
  const auto chi_minus = chi.with_negated_variable();
  const auto cv = classical_values(src.diamond);
  const std::string n = std::to_string(src.diamond.n());
  switch (pr.format) {
    case Format::Text:
      out << src.label << " (n=" << n << ")\n"
          << "chi_y     = " << format(chi) << '\n'
          << "chi_{-y}  = " << format(chi_minus) << '\n'
          << "euler     = " << cv.euler << '\n'
          << "todd      = " << cv.todd_genus << '\n'
          << "signature = " << cv.signature << '\n';
      break;
    case Format::Csv:
      emit_csv(out, {"manifold", "n", "chi_y", "chi_minus_y", "euler", "todd", "signature"},
               {{src.label, n, format(chi), format(chi_minus), cv.euler.get_str(), cv.todd_genus.get_str(),
                 cv.signature.get_str()}});
      break;
    case Format::Json: {
      auto obj = json::Value::object({{"manifold", jstr(src.label)},
                                      {"n", jint(src.diamond.n())},
                                      {"chi_y", jstr(format(chi))},
                                      {"chi_minus_y", jstr(format(chi_minus))},
                                      {"euler", jint(cv.euler)},
                                      {"todd", jint(cv.todd_genus)},
                                      {"signature", jint(cv.signature)}});
      out << json::dump(obj);
      break;
    }
  }
  return kSuccess;
}

// ---- strace -------------------------------------------------------------

int cmd_strace(const Options& o, const Printer& pr, std::ostream& out) {
  const auto src = *select_source(o, true);
  require_valid(src.diamond, level_of(o));
  const auto s = supertrace_poly(src.diamond);
  std::optional<SL2Element> u;
  Integer trace, value;
  if (!o.matrix.empty()) {
    u = SL2Element::parse(o.matrix);
    trace = u->trace();
    value = st_value(src.diamond, *u);
  }
  switch (pr.format) {
    case Format::Text:
      out << "S(t)=" << format(s, "t");
      if (u) out << "  S(" << trace << ")=" << value;
      out << '\n';
      break;
    case Format::Csv: {
      std::vector<std::string> header{"manifold", "n", "supertrace"};
      std::vector<std::string> row{src.label, std::to_string(src.diamond.n()), format(s, "t")};
      if (u) {
        header.insert(header.end(), {"trace", "value"});
        row.insert(row.end(), {trace.get_str(), value.get_str()});
      }
      emit_csv(out, header, {row});
      break;
    }
    case Format::Json: {
      auto obj = json::Value::object(
          {{"manifold", jstr(src.label)}, {"n", jint(src.diamond.n())}, {"supertrace", jstr(format(s, "t"))}});
      if (u) {
        obj.set("matrix", jstr(o.matrix));
        obj.set("trace", jint(trace));
        obj.set("value", jint(value));
      }
      out << json::dump(obj);
      break;
    }
  }
  return kSuccess;
}

// ---- verify -------------------------------------------------------------

struct VerifyOutcome {
  std::string label;
  int n;
  TheoremCheck check;
};

VerifyOutcome verify_one(const std::string& label, const HodgeDiamond& d, ValidationLevel level) {
  require_valid(d, level);
  return {label, d.n(), verify_theorem(d)};
}

std::string verify_text_line(const VerifyOutcome& v, const Printer& pr) {
  std::string line = pr.mark(v.check.passed, "PASS", "FAIL") + "  ST(t=y+1/y) = " + format(v.check.supertrace_y);
  line += v.check.passed ? " = " : " != " + format(v.check.normalized_genus) + " = ";
  line += "chi_{-y}/y^" + std::to_string(v.n);
  return line;
}

json::Value verify_json(const VerifyOutcome& v) {
  return json::Value::object({{"manifold", jstr(v.label)},
                              {"n", jint(v.n)},
                              {"result", jstr(v.check.passed ? "PASS" : "FAIL")},
                              {"supertrace_t", jstr(format(v.check.supertrace_t, "t"))},
                              {"supertrace_y", jstr(format(v.check.supertrace_y))},
                              {"normalized_genus", jstr(format(v.check.normalized_genus))}});
}

int cmd_verify(const Options& o, const Printer& pr, std::ostream& out) {
  std::vector<VerifyOutcome> results;
  if (o.all_builtin) {
    if (!o.manifold.empty() || !o.input.empty()) throw InputError("--all-builtin takes no manifold source");
    std::vector<std::future<VerifyOutcome>> pending;
    for (const auto& name : builtin_names()) {
      const auto& rec = builtin(name);
      pending.push_back(std::async(std::launch::async, verify_one, rec.name, rec.diamond, level_of(o)));
    }
    for (auto& f : pending) results.push_back(f.get());
  } else {
    const auto src = *select_source(o, true);
    results.push_back(verify_one(src.label, src.diamond, level_of(o)));
  }

  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.label.size());
  switch (pr.format) {
    case Format::Text:
      for (const auto& r : results) {
        if (o.all_builtin) out << std::left << std::setw(static_cast<int>(width) + 2) << r.label;
        out << verify_text_line(r, pr) << '\n';
      }
      break;
    case Format::Csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : results)
        rows.push_back({r.label, std::to_string(r.n), r.check.passed ? "PASS" : "FAIL",
                        format(r.check.supertrace_t, "t"), format(r.check.supertrace_y),
                        format(r.check.normalized_genus)});
      emit_csv(out, {"manifold", "n", "result", "supertrace_t", "supertrace_y", "normalized_genus"}, rows);
      break;
    }
    case Format::Json:
      if (o.all_builtin) {
        auto arr = json::Value::array();
        for (const auto& r : results) arr.push_back(verify_json(r));
        out << json::dump(arr);
      } else {
        out << json::dump(verify_json(results.front()));
      }
      break;
  }
  const bool all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.check.passed; });
  return all_passed ? kSuccess : kIdentityFailure;
}

// ---- decompose ----------------------------------------------------------

int cmd_decompose(const Options& o, const Printer& pr, std::ostream& out) {
  const auto src = *select_source(o, true);
  require_valid(src.diamond, level_of(o));
  const auto pt = primitive_multiplicities(src.diamond);
  const auto summands = irreducible_summands(pt);
  const int n = pt.n();
  switch (pr.format) {
    case Format::Text: {
      std::size_t w = 1;
      for (const auto& row : pt.rows())
        for (const auto& v : row) w = std::max(w, v.get_str().size());
      const int cw = static_cast<int>(w) + 1;
      out << src.label << " (n=" << n << "): primitive multiplicities h_eps^{p,q}\n";
      out << std::left << std::setw(5) << "p\\q" << std::right;
      for (int q = 0; q <= 2 * n; ++q) out << std::setw(cw) << q;
      out << '\n';
      for (int p = 0; p <= n; ++p) {
        out << std::left << std::setw(5) << p << std::right;
        for (int q = 0; q <= 2 * n; ++q) out << std::setw(cw) << pt(p, q).get_str();
        out << '\n';
      }
      out << "irreducible summands (dimension x multiplicity) by column:\n";
      for (int q = 0; q <= 2 * n; ++q) {
        out << "q=" << q << ":";
        bool any = false;
        for (const auto& s : summands)
          if (s.column == q) {
            out << ' ' << s.dimension << 'x' << s.multiplicity;
            any = true;
          }
        if (!any) out << " none";
        out << '\n';
      }
      break;
    }
    case Format::Csv: {
      std::vector<std::vector<std::string>> rows;
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= 2 * n; ++q)
          rows.push_back({src.label, std::to_string(p), std::to_string(q), std::to_string(n - p + 1),
                          pt(p, q).get_str()});
      emit_csv(out, {"manifold", "p", "q", "dimension", "multiplicity"}, rows);
      break;
    }
    case Format::Json: {
      auto prim = json::Value::array();
      for (const auto& row : pt.rows()) {
        auto r = json::Value::array();
        for (const auto& v : row) r.push_back(jint(v));
        prim.push_back(std::move(r));
      }
      auto sums = json::Value::array();
      for (const auto& s : summands)
        sums.push_back(json::Value::object(
            {{"q", jint(s.column)}, {"dimension", jint(s.dimension)}, {"multiplicity", jint(s.multiplicity)}}));
      out << json::dump(json::Value::object(
          {{"manifold", jstr(src.label)}, {"n", jint(n)}, {"primitive", std::move(prim)}, {"summands", std::move(sums)}}));
      break;
    }
  }
  return kSuccess;
}

// ---- rw -----------------------------------------------------------------

int cmd_rw(const Options& o, const Printer& pr, std::ostream& out) {
  if (o.matrix.empty()) throw InputError("rw needs --matrix \"a,b;c,d\"");
  const auto u = SL2Element::parse(o.matrix);
  const auto src = *select_source(o, true);
  const auto rw = rw_invariant(src.diamond, u);
  switch (pr.format) {
    case Format::Text:
      out << "Z_RW[T_U] = " << rw.value << "  U=" << u.to_string() << "  tr U=" << rw.trace
          << "  S(t)=" << format(rw.supertrace_t, "t") << '\n';
      break;
    case Format::Csv:
      emit_csv(out, {"manifold", "n", "matrix", "trace", "rw_invariant", "supertrace"},
               {{src.label, std::to_string(src.diamond.n()), "\"" + o.matrix + "\"", rw.trace.get_str(),
                 rw.value.get_str(), format(rw.supertrace_t, "t")}});
      break;
    case Format::Json:
      out << json::dump(json::Value::object({{"manifold", jstr(src.label)},
                                             {"n", jint(src.diamond.n())},
                                             {"matrix", jstr(o.matrix)},
                                             {"trace", jint(rw.trace)},
                                             {"rw_invariant", jint(rw.value)},
                                             {"supertrace", jstr(format(rw.supertrace_t, "t"))}}));
      break;
  }
  return kSuccess;
}

// ---- rr -----------------------------------------------------------------

ChernData chern_from_flags(const Options& o) {
  ChernData cd;
  cd.n = o.rr_n;
  auto put = [&](const std::string& key, const std::string& v) {
    if (!v.empty()) cd.values[key] = parse_integer(v);
  };
  if (o.rr_n == 1) {
    if (!o.c2sq.empty() || !o.c4.empty()) throw InputError("--c2sq and --c4 need --n 2");
    put("c2", o.c2);
  } else if (o.rr_n == 2) {
    if (!o.c2.empty()) throw InputError("--c2 alone is not a degree-4 Chern number; use --c2sq");
    put("c2^2", o.c2sq);
    put("c4", o.c4);
  } else {
    throw UnsupportedError("rr supports --n 1 or --n 2");
  }
  return cd;
}

int cmd_rr(const Options& o, const Printer& pr, std::ostream& out) {
  const auto src = select_source(o, false);
  const bool any_flag = !o.c2.empty() || !o.c2sq.empty() || !o.c4.empty();
  ChernData cd;
  if (!o.chern_file.empty()) {
    if (any_flag) throw InputError("give Chern numbers either by flags or by --chern, not both");
    cd = load_chern(o.chern_file);
  } else if (any_flag) {
    if (o.rr_n == 0) throw InputError("Chern flags need --n");
    cd = chern_from_flags(o);
  } else if (src && src->chern) {
    cd = *src->chern;
  } else {
    throw InputError("no Chern data: use --n with --c2/--c2sq/--c4, --chern <file>, or a manifold that carries some");
  }
  if (o.rr_n != 0 && o.rr_n != cd.n)
    throw InputError("--n " + std::to_string(o.rr_n) + " does not match Chern data for n=" + std::to_string(cd.n));
  const int n = cd.n;
  cd.require_complete();

  const auto chi_rr = chi_y_via_rr(n, cd);
  const auto mtf = mtf_integrand(n, cd);
  const bool substitution_ok = (substitute_t(mtf).shifted(n) == chi_rr);

  std::optional<LaurentPolynomial> hodge_chi, hodge_s;
  if (src) {
    if (src->diamond.n() != n)
      throw InputError("manifold has n=" + std::to_string(src->diamond.n()) + " but Chern data is for n=" +
                       std::to_string(n));
    require_valid(src->diamond, level_of(o));
    hodge_chi = chi_y(src->diamond).with_negated_variable();
    hodge_s = supertrace_poly(src->diamond);
  }
  const bool chi_match = !hodge_chi || *hodge_chi == chi_rr;
  const bool s_match = !hodge_s || *hodge_s == mtf;

  std::string chern_desc;
  for (const auto& [k, v] : cd.values) chern_desc += (chern_desc.empty() ? "" : " ") + k + "=" + v.get_str();

  switch (pr.format) {
    case Format::Text:
      out << "n=" << n << "  " << chern_desc << '\n';
      out << "chi_{-y} (Riemann-Roch)  = " << format(chi_rr) << '\n';
      out << "integrand S(t)           = " << format(mtf, "t") << '\n';
      out << "y^n S(y+1/y) = chi_{-y}:   " << pr.mark(substitution_ok, "PASS", "FAIL") << '\n';
      if (src) {
        out << "hodge chi_{-y} (" << src->label << ") = " << format(*hodge_chi) << "  "
            << pr.mark(chi_match, "MATCH", "MISMATCH") << '\n';
        out << "hodge S(t) (" << src->label << ")     = " << format(*hodge_s, "t") << "  "
            << pr.mark(s_match, "MATCH", "MISMATCH") << '\n';
      }
      break;
    case Format::Csv: {
      std::vector<std::string> header{"n", "chern", "chi_minus_y_rr", "integrand", "substitution"};
      std::vector<std::string> row{std::to_string(n), chern_desc, format(chi_rr), format(mtf, "t"),
                                   substitution_ok ? "PASS" : "FAIL"};
      if (src) {
        header.insert(header.end(), {"manifold", "hodge_chi_minus_y", "chi_match", "hodge_supertrace", "supertrace_match"});
        row.insert(row.end(), {src->label, format(*hodge_chi), chi_match ? "MATCH" : "MISMATCH", format(*hodge_s, "t"),
                               s_match ? "MATCH" : "MISMATCH"});
      }
      emit_csv(out, header, {row});
      break;
    }
    case Format::Json: {
      auto chern = json::Value::object();
      for (const auto& [k, v] : cd.values) chern.set(k, jint(v));
      auto obj = json::Value::object({{"n", jint(n)},
                                      {"chern", std::move(chern)},
                                      {"chi_minus_y_rr", jstr(format(chi_rr))},
                                      {"integrand", jstr(format(mtf, "t"))},
                                      {"substitution", jstr(substitution_ok ? "PASS" : "FAIL")}});
      if (src) {
        obj.set("manifold", jstr(src->label));
        obj.set("hodge_chi_minus_y", jstr(format(*hodge_chi)));
        obj.set("chi_match", json::Value::boolean(chi_match));
        obj.set("hodge_supertrace", jstr(format(*hodge_s, "t")));
        obj.set("supertrace_match", json::Value::boolean(s_match));
      }
      out << json::dump(obj);
      break;
    }
  }
  return (substitution_ok && chi_match && s_match) ? kSuccess : kIdentityFailure;
}

// ---- catalog ------------------------------------------------------------

int cmd_catalog(const Options&, const Printer& pr, std::ostream& out) {
  struct Row {
    std::string name;
    int n;
    ClassicalValues cv;
  };
  std::vector<Row> rows;
  for (const auto& name : builtin_names()) {
    const auto& rec = builtin(name);
    rows.push_back({rec.name, rec.diamond.n(), classical_values(rec.diamond)});
  }
  switch (pr.format) {
    case Format::Text:
      out << std::left << std::setw(8) << "name" << std::right << std::setw(3) << "n" << std::setw(10) << "euler"
          << std::setw(6) << "todd" << std::setw(12) << "signature" << '\n';
      for (const auto& r : rows)
        out << std::left << std::setw(8) << r.name << std::right << std::setw(3) << r.n << std::setw(10)
            << r.cv.euler.get_str() << std::setw(6) << r.cv.todd_genus.get_str() << std::setw(12)
            << r.cv.signature.get_str() << '\n';
      break;
    case Format::Csv: {
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : rows)
        cells.push_back({r.name, std::to_string(r.n), r.cv.euler.get_str(), r.cv.todd_genus.get_str(),
                         r.cv.signature.get_str()});
      emit_csv(out, {"name", "n", "euler", "todd", "signature"}, cells);
      break;
    }
    case Format::Json: {
      auto arr = json::Value::array();
      for (const auto& r : rows)
        arr.push_back(json::Value::object({{"name", jstr(r.name)},
                                           {"n", jint(r.n)},
                                           {"euler", jint(r.cv.euler)},
                                           {"todd", jint(r.cv.todd_genus)},
                                           {"signature", jint(r.cv.signature)}}));
      out << json::dump(arr);
      break;
    }
  }
  return kSuccess;
}

void add_source_options(CLI::App* sub, Options& o) {
  sub->add_option("--manifold", o.manifold, "Built-in manifold (K3, K3[2], ..., K3[5])");
  sub->add_option("--input", o.input, "Manifold file (.hodge.json)");
  sub->add_flag("--strict", o.strict, "Require STRICT (irreducible) validation");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  Options o;
  CLI::App app{"Exact chi_y genus, SL(2) super-trace and Riemann-Roch checks for hyper-Kaehler Hodge data",
               "hkchi"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* chi = app.add_subcommand("chi", "chi_y, chi_{-y}, Euler characteristic, Todd genus and signature");
  auto* strace = app.add_subcommand("strace", "Super-trace polynomial S(t), optionally evaluated at a matrix");
  auto* verify = app.add_subcommand("verify", "Check S(y+1/y) = chi_{-y}/y^n exactly");
  auto* decompose = app.add_subcommand("decompose", "Primitive multiplicities and SL(2) summands");
  auto* rw = app.add_subcommand("rw", "Rozansky-Witten invariant of the mapping torus of U");
  auto* rr = app.add_subcommand("rr", "Riemann-Roch side from Chern numbers");
  auto* cat = app.add_subcommand("catalog", "List built-in manifolds");
  for (auto* sub : {chi, strace, verify, decompose, rw, rr, cat}) {
    sub->add_option("--format", o.format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  }
  for (auto* sub : {chi, strace, verify, decompose, rw, rr}) add_source_options(sub, o);
  for (auto* sub : {strace, rw}) sub->add_option("--matrix", o.matrix, "SL(2,Z) element \"a,b;c,d\"");
  verify->add_flag("--all-builtin", o.all_builtin, "Verify every built-in manifold");
  rr->add_option("--n", o.rr_n, "Half the complex dimension (1 or 2)");
  rr->add_option("--c2", o.c2, "c_2 (n=1)");
  rr->add_option("--c2sq", o.c2sq, "c_2^2 (n=2)");
  rr->add_option("--c4", o.c4, "c_4 (n=2)");
  rr->add_option("--chern", o.chern_file, "Chern data file {\"n\":..,\"chern\":{..}}");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    const Printer pr{parse_format(o.format), color};
    if (chi->parsed()) return cmd_chi(o, pr, out);
    if (strace->parsed()) return cmd_strace(o, pr, out);
    if (verify->parsed()) return cmd_verify(o, pr, out);
    if (decompose->parsed()) return cmd_decompose(o, pr, out);
    if (rw->parsed()) return cmd_rw(o, pr, out);
    if (rr->parsed()) return cmd_rr(o, pr, out);
    if (cat->parsed()) return cmd_catalog(o, pr, out);
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInternalInconsistency;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hkchi::cli
