#include "charzero/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "charzero/error.hpp"
#include "charzero/number_theory.hpp"

#ifndef CHARZERO_DATA_DIR
#define CHARZERO_DATA_DIR "data"
#endif

namespace charzero {

using Json = nlohmann::ordered_json;

namespace {

using Kind = GroupSpecAst::Kind;

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  GroupSpecAst parse() {
    GroupSpecAst ast = atom();
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) break;
      if (std::tolower(static_cast<unsigned char>(text_[pos_])) != 'x') {
        fail("expected 'x' or end of input");
      }
      ++pos_;
      GroupSpecAst right = atom();
      GroupSpecAst product;
      product.kind = Kind::product;
      product.children.push_back(std::move(ast));
      product.children.push_back(std::move(right));
      ast = std::move(product);
    }
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at position " + std::to_string(pos_ + 1) + ": " + what +
                     " in \"" + text_ + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Letters followed by digits, lowercased.
  std::string word() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
    }
    while (!out.empty() && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_++];
    }
    return out;
  }

  std::uint64_t number() {
    skip_space();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) fail("integer is too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupSpecAst make(Kind kind, std::vector<std::uint64_t> args, std::string text = {}) {
    GroupSpecAst ast;
    ast.kind = kind;
    ast.args = std::move(args);
    ast.text = std::move(text);
    return ast;
  }

  GroupSpecAst atom() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = word();
    if (name.empty()) fail("expected a group name");
    if (name == "q8") return make(Kind::named, {}, "Q8");
    if (name == "sd16") return make(Kind::named, {}, "SD16");
    if (name == "d8") return make(Kind::dihedral, {8});
    if (name == "perm") {
      expect('(');
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos) fail("expected ')'");
      std::string path = text_.substr(pos_, close - pos_);
      const auto first = path.find_first_not_of(" \t");
      const auto last = path.find_last_not_of(" \t");
      if (first == std::string::npos) fail("empty perm path");
      pos_ = close + 1;
      return make(Kind::perm_file, {}, path.substr(first, last - first + 1));
    }
    if (name == "psl" || name == "sl") {
      expect('(');
      const std::size_t dim_pos = pos_;
      if (number() != 2) {
        pos_ = dim_pos;
        fail("only dimension 2 is supported");
      }
      expect(',');
      skip_space();
      const std::size_t q_pos = pos_;
      const std::uint64_t q = number();
      if (!as_prime_power(q)) {
        pos_ = q_pos;
        fail(std::to_string(q) + " is not a prime power");
      }
      expect(')');
      return make(name == "psl" ? Kind::psl2 : Kind::sl2, {q});
    }
    static const std::map<std::string, Kind> unary = {
        {"a", Kind::alt}, {"s", Kind::sym}, {"c", Kind::cyclic}, {"d", Kind::dihedral}, {"dic", Kind::dicyclic}};
    if (auto it = unary.find(name); it != unary.end()) {
      expect('(');
      const std::uint64_t n = number();
      expect(')');
      return make(it->second, {n});
    }
    if (name == "frob") {
      expect('(');
      std::vector<std::uint64_t> invariants{number()};
      for (;;) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          invariants.push_back(number());
        } else {
          break;
        }
      }
      expect(')');
      return make(Kind::frob, std::move(invariants));
    }
    pos_ = start;
    fail("unknown group name '" + name + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string json_string(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return {};
  if (!j[key].is_string()) throw InputError(where + ": '" + key + "' must be a string");
  return j[key].get<std::string>();
}

ExpectedVerdict parse_expected(const Json& j, const std::string& where) {
  ExpectedVerdict e;
  if (!j.is_object()) throw InputError(where + ": 'expected' must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "order") {
      e.order = value.get<std::uint64_t>();
    } else if (key == "classes") {
      e.classes = value.get<std::size_t>();
    } else if (key == "degrees") {
      e.degrees = value.get<std::vector<std::uint64_t>>();
    } else if (key == "star") {
      e.star = value.get<bool>();
    } else if (key == "star_star") {
      e.star_star = value.get<bool>();
    } else if (key == "theorem_b_case") {
      e.theorem_b_case = value.get<std::string>();
    } else if (key == "proposition3") {
      if (value.is_boolean()) {
        e.proposition3_holds = value.get<bool>();
      } else {
        e.proposition3_holds = value.at("holds").get<bool>();
        if (value.contains("case") && !value["case"].is_null()) {
          e.proposition3_case = value["case"].get<std::string>();
        }
      }
    } else {
      throw InputError(where + ": unknown expected field '" + key + "'");
    }
  }
  return e;
}

Json witness_json(const StarVerdict& v) {
  return v.witness ? Json(*v.witness) : Json(nullptr);
}

double rounded(double x, double scale) {
  const double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

Json coefficient_json(const mpz_class& c) {
  if (c.fits_slong_p()) return Json(c.get_si());
  return Json(c.get_str());
}

std::string approx_text(const Cyclotomic& v) {
  const auto z = v.approx();
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << rounded(z.real(), 1e4);
  const double im = rounded(z.imag(), 1e4);
  if (im != 0.0) out << (im > 0 ? "+" : "") << im << "i";
  return out.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

template <typename T>
std::string join(const std::vector<T>& items, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? sep : "") << items[i];
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Analysis {
  GroupSpecResult spec;
  CharacterTable table;
  VerdictReport report;
};

Analysis analyze(GroupSpecResult spec, std::uint64_t cap) {
  const auto start = std::chrono::steady_clock::now();
  CharacterTable table = character_table(spec.group, cap);
  VerdictReport report = verdict_report(spec, table);
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(spec), std::move(table), std::move(report)};
}

Json report_json(const VerdictReport& r) {
  Json j;
  j["group"] = r.group_label;
  j["order"] = r.order;
  j["classes"] = r.class_count;
  j["degrees"] = r.degrees;
  Json characters = Json::array();
  for (const auto& c : r.characters) {
    Json row;
    row["degree"] = c.degree;
    row["zero_classes"] = c.zero_classes;
    row["zero_class_count"] = c.zero_classes.size();
    characters.push_back(std::move(row));
  }
  j["characters"] = std::move(characters);
  j["star"] = r.star.holds;
  j["star_witness"] = witness_json(r.star);
  j["star_star"] = r.star_star.holds;
  j["star_star_witness"] = witness_json(r.star_star);
  j["theorem_b_case"] = to_string(r.theorem_b_case);
  j["proposition3"] = {{"holds", r.proposition3.holds},
                       {"case", r.proposition3.case_label.empty() ? Json(nullptr)
                                                                  : Json(r.proposition3.case_label)}};
  j["timing_ms"] = rounded(r.timing_ms, 1e3);
  return j;
}

std::string report_text(const VerdictReport& r) {
  std::ostringstream out;
  auto witness = [](const StarVerdict& v) {
    return v.witness ? " (witness row " + std::to_string(*v.witness) + ")" : std::string();
  };
  out << pad("group", 16) << r.group_label << "\n";
  out << pad("order", 16) << r.order << "\n";
  out << pad("classes", 16) << r.class_count << "\n";
  out << pad("degrees", 16) << join(r.degrees, " ") << "\n";
  out << pad("star", 16) << bool_text(r.star.holds) << witness(r.star) << "\n";
  out << pad("star_star", 16) << bool_text(r.star_star.holds) << witness(r.star_star) << "\n";
  out << pad("theorem_b_case", 16) << to_string(r.theorem_b_case) << "\n";
  out << pad("proposition3", 16) << bool_text(r.proposition3.holds);
  if (!r.proposition3.case_label.empty()) out << " (case " << r.proposition3.case_label << ")";
  out << "\n\n";
  out << lpad("row", 5) << lpad("degree", 8) << lpad("zeros", 7) << "  zero classes\n";
  for (std::size_t i = 0; i < r.characters.size(); ++i) {
    const auto& c = r.characters[i];
    out << lpad(std::to_string(i), 5) << lpad(std::to_string(c.degree), 8)
        << lpad(std::to_string(c.zero_classes.size()), 7) << "  "
        << (c.zero_classes.empty() ? "-" : join(c.zero_classes, " ")) << "\n";
  }
  std::ostringstream timing;
  timing << std::fixed << std::setprecision(1) << r.timing_ms;
  out << "\n" << pad("timing_ms", 16) << timing.str() << "\n";
  return out.str();
}

std::string spec_argument(const CommandOptions& options) {
  if (options.args.empty()) throw InputError(options.command + " needs a group spec");
  return join(options.args, " ");
}

std::filesystem::path catalog_path(const CommandOptions& options, bool positional) {
  if (!options.catalog.empty()) return options.catalog;
  if (positional && !options.args.empty()) return options.args.front();
  return bundled_catalog_path();
}

struct LoadedCatalog {
  std::filesystem::path path;
  std::vector<CatalogEntry> entries;
};

LoadedCatalog open_catalog(const CommandOptions& options, bool positional) {
  LoadedCatalog c;
  c.path = catalog_path(options, positional);
  c.entries = load_catalog(c.path);
  return c;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError(what + " must be a non-negative integer, got '" + text + "'");
  }
}

// ---- commands ----

int cmd_table(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  GroupSpecResult spec = build_group(spec_argument(options));
  const CharacterTable table = character_table(spec.group, cap);
  out << emit_table(spec, table, options.format);
  return 0;
}

int cmd_report(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  const Analysis a = analyze(build_group(spec_argument(options)), cap);
  out << emit_report(a.report, options.format);
  return 0;
}

int cmd_verify_catalog(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  const LoadedCatalog catalog = open_catalog(options, true);
  const auto base = catalog.path.parent_path();
  Json entries = Json::array();
  std::ostringstream text;
  std::size_t passed = 0, failed = 0;
  std::vector<std::pair<const CatalogEntry*, Fingerprint>> prints;
  for (const CatalogEntry& entry : catalog.entries) {
    const Analysis a = analyze(build_entry(entry, base), cap);
    const auto bad = mismatches(entry.expected, a.report);
    prints.emplace_back(&entry, fingerprint(a.table));
    const bool ok = bad.empty();
    (ok ? passed : failed) += 1;
    Json j;
    j["name"] = entry.name;
    j["ok"] = ok;
    j["mismatches"] = bad;
    j["report"] = report_json(a.report);
    entries.push_back(std::move(j));
    text << (ok ? "PASS  " : "FAIL  ") << pad(entry.name, 28) << lpad(std::to_string(a.report.order), 9)
         << "  star=" << pad(bool_text(a.report.star.holds), 6)
         << "star_star=" << pad(bool_text(a.report.star_star.holds), 6)
         << "B=" << pad(to_string(a.report.theorem_b_case), 22)
         << "prop3=" << bool_text(a.report.proposition3.holds);
    if (!a.report.proposition3.case_label.empty()) text << "(" << a.report.proposition3.case_label << ")";
    if (!ok) text << "  mismatch: " << join(bad, ", ");
    text << "\n";
  }

  // Fingerprints agree exactly when isomorphism tags agree.
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < prints.size(); ++i) {
    for (std::size_t j = i + 1; j < prints.size(); ++j) {
      const auto& [ea, fa] = prints[i];
      const auto& [eb, fb] = prints[j];
      if (ea->iso.empty() || eb->iso.empty()) continue;
      const bool same_iso = ea->iso == eb->iso;
      const bool same_print = fa == fb;
      if (same_iso && !same_print) {
        problems.push_back(ea->name + " and " + eb->name + " share an isomorphism tag but not a fingerprint");
      } else if (!same_iso && same_print) {
        problems.push_back(ea->name + " and " + eb->name + " collide on fingerprint");
      }
    }
  }
  const bool all_ok = failed == 0 && problems.empty();

  if (options.format == Format::json) {
    Json j;
    j["catalog"] = catalog.path.filename().string();
    j["entries"] = std::move(entries);
    j["fingerprint_integrity"] = {{"ok", problems.empty()}, {"problems", problems}};
    j["passed"] = passed;
    j["failed"] = failed;
    j["ok"] = all_ok;
    out << dump(j);
  } else {
    out << text.str() << "\n"
        << "fingerprint integrity: " << (problems.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& p : problems) out << "  " << p << "\n";
    out << passed << " passed, " << failed << " failed\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_verify_theorem_b(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  const LoadedCatalog catalog = open_catalog(options, true);
  Json entries = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const CatalogEntry& entry : catalog.entries) {
    const Analysis a = analyze(build_entry(entry, catalog.path.parent_path()), cap);
    const bool classified = a.report.theorem_b_case != TheoremBCase::none;
    const bool consistent = a.report.star.holds == classified;
    all &= consistent;
    entries.push_back({{"name", entry.name},
                       {"group", a.report.group_label},
                       {"star", a.report.star.holds},
                       {"theorem_b_case", to_string(a.report.theorem_b_case)},
                       {"consistent", consistent}});
    text << (consistent ? "ok    " : "FAIL  ") << pad(entry.name, 28)
         << "star=" << pad(bool_text(a.report.star.holds), 6) << "case=" << to_string(a.report.theorem_b_case)
         << "\n";
  }
  if (options.format == Format::json) {
    out << dump({{"command", "verify-theorem-b"}, {"entries", std::move(entries)}, {"consistent", all}});
  } else {
    out << text.str() << "\nstar <=> listed case: " << (all ? "holds on every entry" : "FAILED") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_verify_theorem_c(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  const LoadedCatalog catalog = open_catalog(options, true);
  // The listed groups, as reference fingerprints built on demand.
  std::vector<std::string> listed = {"PSL(2,7)"};
  for (unsigned f = 2; f <= 5; ++f) {
    const std::string base = "PSL(2," + std::to_string(1U << f) + ")";
    listed.push_back(base);
    listed.push_back(base + " x C(2)");
  }
  std::map<std::string, std::optional<Fingerprint>> references;
  auto reference = [&](const std::string& spec) -> const std::optional<Fingerprint>& {
    auto it = references.find(spec);
    if (it == references.end()) {
      GroupSpecResult g = build_group(spec);
      std::optional<Fingerprint> fp;
      if (g.group.order() <= cap) fp = fingerprint(character_table(g.group, cap));
      it = references.emplace(spec, std::move(fp)).first;
    }
    return it->second;
  };
  std::map<std::string, std::uint64_t> listed_order;
  for (const auto& s : listed) listed_order[s] = build_group(s).group.order();

  Json entries = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const CatalogEntry& entry : catalog.entries) {
    GroupSpecResult spec = build_entry(entry, catalog.path.parent_path());
    if (is_solvable(spec.group)) continue;
    const Analysis a = analyze(std::move(spec), cap);
    const Fingerprint fp = fingerprint(a.table);
    std::string match;
    for (const auto& s : listed) {
      if (listed_order[s] != a.report.order) continue;
      const auto& ref = reference(s);
      if (ref && *ref == fp) {
        match = s;
        break;
      }
    }
    const bool consistent = a.report.star_star.holds == !match.empty();
    all &= consistent;
    entries.push_back({{"name", entry.name},
                       {"group", a.report.group_label},
                       {"star_star", a.report.star_star.holds},
                       {"listed_as", match.empty() ? Json(nullptr) : Json(match)},
                       {"consistent", consistent}});
    text << (consistent ? "ok    " : "FAIL  ") << pad(entry.name, 28)
         << "star_star=" << pad(bool_text(a.report.star_star.holds), 6)
         << "listed=" << (match.empty() ? "-" : match) << "\n";
  }

  Json xi = Json::array();
  std::ostringstream xi_text;
  for (unsigned f = 2; f <= 4; ++f) {
    const XiCount c = theorem_c_xi_counts(f, cap);
    xi.push_back({{"f", c.f},
                  {"torus_order", c.torus_order},
                  {"exact_order_classes", c.exact_order_classes},
                  {"torus_classes", c.torus_classes},
                  {"claimed", c.claimed},
                  {"note", c.note}});
    xi_text << "  f=" << c.f << "  order " << c.torus_order << ": exact-order classes " << c.exact_order_classes
            << ", torus classes " << c.torus_classes << ", claimed " << c.claimed << "  (" << c.note << ")\n";
  }
  if (options.format == Format::json) {
    out << dump({{"command", "verify-theorem-c"}, {"entries", std::move(entries)}, {"xi_counts", std::move(xi)},
                 {"consistent", all}});
  } else {
    out << text.str() << "\nstar_star <=> listed group: " << (all ? "holds on every nonsolvable entry" : "FAILED")
        << "\n\nXi class counts (informational):\n"
        << xi_text.str();
  }
  return all ? 0 : 1;
}

struct DefectZeroResult {
  Json json;
  std::string text;
  bool holds = true;
};

DefectZeroResult defect_zero_for(const GroupSpecResult& spec, std::uint64_t cap) {
  const CharacterTable table = character_table(spec.group, cap);
  const ConjugacyClasses& cc = table.classes();
  const bool simple = cc.group_order() > 1 && is_simple(spec.group, cc) && table.size() != cc.group_order();
  DefectZeroResult r;
  Json pairs = Json::array();
  std::ostringstream text;
  bool vanishes_all = true;
  const auto found = defect_zero_search(table);
  for (const DefectZero& dz : found) {
    bool vanishes = true;
    for (std::size_t l = 0; l < cc.count(); ++l) {
      if (cc[l].element_order % dz.prime == 0) vanishes &= table.value(dz.row, l).is_zero();
    }
    vanishes_all &= vanishes;
    pairs.push_back({{"row", dz.row}, {"degree", table.degree(dz.row)}, {"prime", dz.prime}, {"vanishes", vanishes}});
    text << "    row " << dz.row << " degree " << table.degree(dz.row) << " p=" << dz.prime
         << (vanishes ? "  vanishes on p-singular classes" : "  DOES NOT VANISH") << "\n";
  }
  r.holds = vanishes_all && (!simple || !found.empty());
  r.json = {{"group", spec.label}, {"order", cc.group_order()}, {"nonabelian_simple", simple},
            {"defect_zero", std::move(pairs)}, {"holds", r.holds}};
  std::ostringstream head;
  head << (r.holds ? "ok    " : "FAIL  ") << spec.label << "  (" << (simple ? "non-abelian simple" : "not simple")
       << ", " << found.size() << " even-degree defect-zero pairs)\n";
  r.text = head.str() + text.str();
  return r;
}

int cmd_verify_defect_zero(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  std::vector<DefectZeroResult> results;
  if (!options.args.empty()) {
    results.push_back(defect_zero_for(build_group(spec_argument(options)), cap));
  } else {
    const LoadedCatalog catalog = open_catalog(options, false);
    for (const CatalogEntry& entry : catalog.entries) {
      GroupSpecResult spec = build_entry(entry, catalog.path.parent_path());
      if (spec.group.order() == 1 || spec.group.is_abelian() || !is_simple(spec.group)) continue;
      results.push_back(defect_zero_for(spec, cap));
    }
  }
  bool all = true;
  Json entries = Json::array();
  std::string text;
  for (auto& r : results) {
    all &= r.holds;
    entries.push_back(std::move(r.json));
    text += r.text;
  }
  if (options.format == Format::json) {
    out << dump({{"command", "verify-lemma-2-3"}, {"entries", std::move(entries)}, {"holds", all}});
  } else {
    out << text << "\n" << (all ? "all instances hold" : "FAILED") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_verify_step1(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  if (options.args.size() != 1) throw InputError("verify-step1 needs n");
  const std::size_t n = parse_count(options.args[0], "n");
  if (n < 8) throw InputError("verify-step1 needs n >= 8");
  const GroupSpecResult spec = build_alternating(n);
  const CharacterTable table = character_table(spec.group, cap);
  const LambdaRho lr = build_lambda_rho(table.shared_classes());
  const ConjugacyClasses& cc = table.classes();

  auto matching_row = [&](const ClassFunction& f) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < table.size(); ++i) {
      bool same = true;
      for (std::size_t l = 0; l < cc.count() && same; ++l) same = equal_values(table.value(i, l), f.values[l]);
      if (same) return i;
    }
    return std::nullopt;
  };
  auto summary = [&](const ClassFunction& f, std::int64_t expected_degree, bool& ok, std::ostringstream& text,
                     const char* name) {
    const Cyclotomic norm = inner_product(f, f);
    const auto row = matching_row(f);
    const mpz_class& degree = f.values[0].rational_part();
    const bool good = norm == Cyclotomic::integer(1) && row.has_value() && degree == expected_degree;
    ok &= good;
    text << pad(name, 8) << "degree " << degree.get_str() << " (expected " << expected_degree << "), norm "
         << norm.to_string() << ", table row " << (row ? std::to_string(*row) : "none") << "\n";
    return Json{{"degree", degree.get_si()},
                {"expected_degree", expected_degree},
                {"norm", norm.rational_part().get_si()},
                {"norm_is_one", norm == Cyclotomic::integer(1)},
                {"row", row ? Json(*row) : Json(nullptr)}};
  };

  bool ok = true;
  std::ostringstream text;
  const auto ni = static_cast<std::int64_t>(n);
  text << "A(" << n << "), " << cc.count() << " classes\n";
  Json lambda = summary(lr.lambda, (ni - 1) * (ni - 2) / 2, ok, text, "lambda");
  Json rho = summary(lr.rho, ni * (ni - 3) / 2, ok, text, "rho");

  const Step1Check check = verify_step1_vanishing(n, &cc);
  ok &= check.holds();
  auto elements = [&](const std::vector<Permutation>& gs, const std::vector<std::int64_t>& values, const char* tag) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      arr.push_back({{"element", gs[i].to_cycle_string()}, {"class", cc.class_of(gs[i])}, {"value", values[i]}});
      text << "  " << tag << i + 1 << " = " << pad(gs[i].to_cycle_string(), 34) << " class " << lpad(std::to_string(cc.class_of(gs[i])), 3)
           << "  value " << values[i] << "\n";
    }
    return arr;
  };
  text << "lambda at a_i:\n";
  Json a = elements(check.a, check.lambda_at_a, "a");
  text << "rho at b_i:\n";
  Json b = elements(check.b, check.rho_at_b, "b");
  text << "a_i in distinct classes: " << bool_text(check.a_distinct) << ", b_i in distinct classes: "
       << bool_text(check.b_distinct) << "\n"
       << (ok ? "verified" : "FAILED") << "\n";

  if (options.format == Format::json) {
    out << dump({{"command", "verify-step1"},
                 {"n", n},
                 {"classes", cc.count()},
                 {"lambda", std::move(lambda)},
                 {"rho", std::move(rho)},
                 {"vanishing",
                  {{"a", std::move(a)},
                   {"b", std::move(b)},
                   {"a_distinct", check.a_distinct},
                   {"b_distinct", check.b_distinct},
                   {"in_alternating", check.in_alternating},
                   {"holds", check.holds()}}},
                 {"holds", ok}});
  } else {
    out << text.str();
  }
  return ok ? 0 : 1;
}

int cmd_torus_count(const CommandOptions& options, std::uint64_t cap, std::ostream& out) {
  if (options.args.size() != 1) throw InputError("torus-count needs q");
  const std::uint64_t q = parse_count(options.args[0], "q");
  if (!as_prime_power(q)) throw InputError(std::to_string(q) + " is not a prime power");
  const TorusCount c = torus_class_count(q, options.side, cap);
  const std::string side = c.side == TorusSide::plus ? "plus" : "minus";
  if (options.format == Format::json) {
    out << dump({{"command", "torus-count"},
                 {"q", c.q},
                 {"side", side},
                 {"torus_order", c.torus_order},
                 {"class_count", c.class_count},
                 {"quarter", c.quarter ? Json(*c.quarter) : Json(nullptr)},
                 {"note", c.note}});
  } else {
    out << "PSL(2," << c.q << "), " << side << " torus of order " << c.torus_order << ": " << c.class_count
        << " classes\n"
        << "note: " << c.note << "\n";
  }
  return 0;
}

}  // namespace

GroupSpecAst parse_group_spec(const std::string& text) { return SpecParser(text).parse(); }

std::string render(const GroupSpecAst& ast) {
  auto one = [&](const char* head) { return std::string(head) + "(" + std::to_string(ast.args.at(0)) + ")"; };
  switch (ast.kind) {
    case Kind::psl2: return "PSL(2," + std::to_string(ast.args.at(0)) + ")";
    case Kind::sl2: return "SL(2," + std::to_string(ast.args.at(0)) + ")";
    case Kind::alt: return one("A");
    case Kind::sym: return one("S");
    case Kind::cyclic: return one("C");
    case Kind::dihedral: return one("D");
    case Kind::dicyclic: return one("Dic");
    case Kind::frob: return "Frob(" + join(ast.args, ",") + ")";
    case Kind::named: return ast.text;
    case Kind::perm_file: return "perm(" + ast.text + ")";
    case Kind::product: return render(ast.children.at(0)) + " x " + render(ast.children.at(1));
  }
  return {};
}

GroupSpecResult build_group(const GroupSpecAst& ast, const std::filesystem::path& base_dir) {
  GroupSpecResult result;
  switch (ast.kind) {
    case Kind::psl2: result = build_psl2(ast.args.at(0)); break;
    case Kind::sl2: result = build_sl2(ast.args.at(0)); break;
    case Kind::alt: result = build_alternating(ast.args.at(0)); break;
    case Kind::sym: result = build_symmetric(ast.args.at(0)); break;
    case Kind::cyclic: result = build_cyclic(ast.args.at(0)); break;
    case Kind::dihedral: result = build_dihedral(ast.args.at(0)); break;
    case Kind::dicyclic: result = build_dicyclic(ast.args.at(0)); break;
    case Kind::frob: result = build_frobenius_c2(ast.args); break;
    case Kind::named: result = build_named(ast.text); break;
    case Kind::perm_file: {
      std::filesystem::path path = ast.text;
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      result = load_perm_file(path, render(ast));
      break;
    }
    case Kind::product:
      result = direct_product(build_group(ast.children.at(0), base_dir), build_group(ast.children.at(1), base_dir));
      break;
  }
  result.label = render(ast);
  return result;
}

GroupSpecResult build_group(const std::string& spec, const std::filesystem::path& base_dir) {
  return build_group(parse_group_spec(spec), base_dir);
}

GroupSpecResult load_perm_file(const std::filesystem::path& path, const std::string& label) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open perm file " + path.string());
  std::string line;
  std::size_t line_number = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> generators;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string content = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    const std::string where = path.string() + ":" + std::to_string(line_number);
    if (!degree) {
      std::size_t used = 0;
      std::uint64_t d = 0;
      try {
        d = std::stoull(content, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != content.size() || d == 0 || d > kMaxDegree) {
        throw InputError(where + ": expected the degree (1.." + std::to_string(kMaxDegree) + ")");
      }
      degree = d;
      continue;
    }
    try {
      generators.push_back(parse_cycles(content, *degree));
    } catch (const Error& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (!degree) throw InputError(path.string() + ": missing degree line");
  GroupSpecResult result = from_generators(std::move(generators), *degree, label);
  result.family_tags.insert("perm-file");
  return result;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("catalog " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw InputError("catalog " + path.string() + " needs an 'entries' array");
  }
  std::vector<CatalogEntry> entries;
  std::size_t index = 0;
  for (const Json& j : doc["entries"]) {
    std::string where = "catalog entry " + std::to_string(index++);
    try {
      if (!j.is_object()) throw InputError(where + ": not an object");
      CatalogEntry e;
      e.name = json_string(j, "name", where);
      if (e.name.empty()) throw InputError(where + ": missing 'name'");
      where += " (" + e.name + ")";
      e.spec = json_string(j, "spec", where);
      e.iso = json_string(j, "iso", where);
      e.provenance = json_string(j, "provenance", where);
      const bool has_generators = j.contains("generators");
      if (e.spec.empty() == !has_generators) {
        throw InputError(where + ": give exactly one of 'spec' or 'generators'");
      }
      if (has_generators) {
        e.degree = j.at("degree").get<std::size_t>();
        if (e.degree == 0 || e.degree > kMaxDegree) throw InputError(where + ": bad degree");
        e.generators = j.at("generators").get<std::vector<std::vector<std::uint32_t>>>();
        for (const auto& g : e.generators) {
          std::vector<bool> seen(e.degree, false);
          bool valid = g.size() == e.degree;
          for (std::size_t k = 0; valid && k < g.size(); ++k) {
            valid = g[k] < e.degree && !seen[g[k]];
            if (valid) seen[g[k]] = true;
          }
          if (!valid) throw InputError(where + ": generator is not a permutation of degree " + std::to_string(e.degree));
        }
      } else {
        parse_group_spec(e.spec);
      }
      if (j.contains("expected")) e.expected = parse_expected(j["expected"], where);
      entries.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw InputError(where + ": " + ex.what());
    } catch (const InputError& ex) {
      const std::string msg = ex.what();
      throw InputError(msg.rfind("catalog entry", 0) == 0 ? msg : where + ": " + msg);
    }
  }
  return entries;
}

GroupSpecResult build_entry(const CatalogEntry& entry, const std::filesystem::path& base_dir) {
  if (!entry.spec.empty()) return build_group(entry.spec, base_dir);
  std::vector<Permutation> gens;
  for (const auto& g : entry.generators) gens.emplace_back(std::vector<Point>(g.begin(), g.end()));
  return from_generators(std::move(gens), entry.degree, entry.name);
}

std::vector<std::string> mismatches(const ExpectedVerdict& e, const VerdictReport& r) {
  std::vector<std::string> out;
  if (e.order && *e.order != r.order) out.push_back("order");
  if (e.classes && *e.classes != r.class_count) out.push_back("classes");
  if (e.degrees) {
    auto a = *e.degrees;
    auto b = r.degrees;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) out.push_back("degrees");
  }
  if (e.star && *e.star != r.star.holds) out.push_back("star");
  if (e.star_star && *e.star_star != r.star_star.holds) out.push_back("star_star");
  if (e.theorem_b_case && *e.theorem_b_case != to_string(r.theorem_b_case)) out.push_back("theorem_b_case");
  if (e.proposition3_holds && *e.proposition3_holds != r.proposition3.holds) out.push_back("proposition3");
  if (e.proposition3_case && *e.proposition3_case != r.proposition3.case_label) out.push_back("proposition3.case");
  return out;
}

std::string emit_report(const VerdictReport& report, Format format) {
  return format == Format::json ? dump(report_json(report)) : report_text(report);
}

std::string emit_table(const GroupSpecResult& spec, const CharacterTable& table, Format format) {
  const ConjugacyClasses& cc = table.classes();
  if (format == Format::json) {
    Json classes = Json::array();
    for (std::size_t l = 0; l < cc.count(); ++l) {
      classes.push_back({{"index", l},
                         {"representative", cc[l].representative.to_cycle_string()},
                         {"size", cc[l].size},
                         {"element_order", cc[l].element_order},
                         {"centralizer_order", cc[l].centralizer_order}});
    }
    Json characters = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      Json values = Json::array();
      for (const Cyclotomic& v : table.row(i)) {
        Json coeffs = Json::array();
        for (const auto& c : v.coeffs()) coeffs.push_back(coefficient_json(c));
        const auto z = v.approx();
        values.push_back({{"conductor", v.conductor()},
                          {"coeffs", std::move(coeffs)},
                          {"approx", {rounded(z.real(), 1e9), rounded(z.imag(), 1e9)}}});
      }
      characters.push_back({{"degree", table.degree(i)}, {"values", std::move(values)}});
    }
    return dump({{"group", spec.label},
                 {"order", cc.group_order()},
                 {"classes", std::move(classes)},
                 {"characters", std::move(characters)}});
  }

  // Text: one column per class; each cell is the exact value and its approximation.
  std::vector<std::vector<std::string>> cells(table.size() + 3, std::vector<std::string>(cc.count() + 1));
  cells[0][0] = "order";
  cells[1][0] = "size";
  cells[2][0] = "";
  for (std::size_t l = 0; l < cc.count(); ++l) {
    cells[0][l + 1] = std::to_string(cc[l].element_order);
    cells[1][l + 1] = std::to_string(cc[l].size);
    cells[2][l + 1] = "class " + std::to_string(l);
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    cells[i + 3][0] = "X" + std::to_string(i);
    for (std::size_t l = 0; l < cc.count(); ++l) {
      const Cyclotomic& v = table.value(i, l);
      cells[i + 3][l + 1] = v.is_rational() ? v.rational_part().get_str() : v.to_string() + " ~" + approx_text(v);
    }
  }
  std::vector<std::size_t> width(cc.count() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << spec.label << ", order " << cc.group_order() << ", " << cc.count() << " classes\n\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "  " : "") << (c ? lpad(row[c], width[c]) : pad(row[c], width[c]));
    out << "\n";
  }
  out << "\nrepresentatives:\n";
  for (std::size_t l = 0; l < cc.count(); ++l) {
    out << "  class " << l << ": " << cc[l].representative.to_cycle_string() << "\n";
  }
  return out.str();
}

std::filesystem::path bundled_catalog_path() {
  return std::filesystem::path(CHARZERO_DATA_DIR) / "catalog.json";
}

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  const std::uint64_t cap = std::min(options.max_order, kEnumerationCap);
  try {
    const std::string& c = options.command;
    if (c == "table") return cmd_table(options, cap, out);
    if (c == "check-star" || c == "check-starstar" || c == "classify") return cmd_report(options, cap, out);
    if (c == "verify-catalog") return cmd_verify_catalog(options, cap, out);
    if (c == "verify-theorem-b") return cmd_verify_theorem_b(options, cap, out);
    if (c == "verify-theorem-c") return cmd_verify_theorem_c(options, cap, out);
    if (c == "verify-lemma-2-3") return cmd_verify_defect_zero(options, cap, out);
    if (c == "verify-step1") return cmd_verify_step1(options, cap, out);
    if (c == "torus-count") return cmd_torus_count(options, cap, out);
    throw InputError("unknown command '" + c + "'");
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedGeneratorError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAMemberError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace charzero
