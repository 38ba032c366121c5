#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charzero/groups.hpp"
#include "charzero/props.hpp"

namespace charzero {

/// Parsed group spec.
///
///   spec := atom | spec "x" atom
///   atom := PSL(2,q) | SL(2,q) | A(n) | S(n) | C(n) | D(n) | Dic(n)
///         | Frob(m, ...) | Q8 | D8 | SD16 | perm(path)
///
/// Keywords are case-insensitive and whitespace between tokens is ignored.
struct GroupSpecAst {
  enum class Kind { psl2, sl2, alt, sym, cyclic, dihedral, dicyclic, frob, named, product, perm_file };

  Kind kind = Kind::named;
  std::vector<std::uint64_t> args;      // q, n or the Frobenius invariants
  std::string text;                     // name for named atoms, path for perm files
  std::vector<GroupSpecAst> children;   // left and right factor of a product

  friend bool operator==(const GroupSpecAst&, const GroupSpecAst&) = default;
};

/// Throws InputError with the offending position.
GroupSpecAst parse_group_spec(const std::string& text);

/// Canonical text; parse_group_spec(render(ast)) == ast.
std::string render(const GroupSpecAst& ast);

/// Relative perm paths resolve against `base_dir`.
GroupSpecResult build_group(const GroupSpecAst& ast, const std::filesystem::path& base_dir = {});
GroupSpecResult build_group(const std::string& spec, const std::filesystem::path& base_dir = {});

/// First line: degree. Each further non-empty line: one generator in
/// 1-based disjoint-cycle notation. Throws InputError.
GroupSpecResult load_perm_file(const std::filesystem::path& path, const std::string& label);

struct ExpectedVerdict {
  std::optional<std::uint64_t> order;
  std::optional<std::size_t> classes;
  std::optional<std::vector<std::uint64_t>> degrees;
  std::optional<bool> star;
  std::optional<bool> star_star;
  std::optional<std::string> theorem_b_case;
  std::optional<bool> proposition3_holds;
  std::optional<std::string> proposition3_case;
};

struct CatalogEntry {
  std::string name;
  std::string spec;                                // empty when generators are explicit
  std::size_t degree = 0;                          // explicit generators only
  std::vector<std::vector<std::uint32_t>> generators;  // 0-based image arrays
  std::string iso;                                 // isomorphism class tag
  std::string provenance;
  ExpectedVerdict expected;
};

/// Throws InputError naming the offending entry.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

GroupSpecResult build_entry(const CatalogEntry& entry, const std::filesystem::path& base_dir = {});

/// Field names of `report` that disagree with `expected`.
std::vector<std::string> mismatches(const ExpectedVerdict& expected, const VerdictReport& report);

enum class Format { text, json };

/// Stable key order; timing_ms last.
std::string emit_report(const VerdictReport& report, Format format);
std::string emit_table(const GroupSpecResult& spec, const CharacterTable& table, Format format);

struct CommandOptions {
  std::string command;
  std::vector<std::string> args;
  Format format = Format::text;
  std::uint64_t max_order = kEnumerationCap;
  TorusSide side = TorusSide::plus;
  std::string catalog;  // empty: bundled catalog
};

/// Exit status: 0 verified, 1 mismatch, 2 input or capacity error.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Path of the catalog shipped with the sources.
std::filesystem::path bundled_catalog_path();

}  // namespace charzero
