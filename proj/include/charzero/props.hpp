#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charzero/cyclotomic.hpp"
#include "charzero/dixon.hpp"
#include "charzero/groups.hpp"

namespace charzero {

/// A function constant on classes, indexed by class.
struct ClassFunction {
  std::shared_ptr<const ConjugacyClasses> classes;
  std::vector<Cyclotomic> values;
};

/// (1/|G|) sum_l |C_l| a(l) conj(b(l)). Throws DomainError when the class
/// references differ or the result is not an algebraic integer.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction table_row(const CharacterTable& table, std::size_t row);

/// Classes on which the row vanishes exactly.
std::vector<std::size_t> zero_classes(const CharacterTable& table, std::size_t row);

struct StarVerdict {
  bool holds = true;
  std::optional<std::size_t> witness;  // first violating row
};

/// Every even-degree row vanishes on exactly one class.
StarVerdict check_property_star(const CharacterTable& table);
/// Every even-degree row vanishes on at most two classes.
StarVerdict check_property_star_star(const CharacterTable& table);

/// Isomorphism surrogate.
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> class_sizes;                            // sorted
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_sizes;  // (element order, size), sorted
  std::vector<std::uint64_t> degrees;                                // sorted
  std::vector<std::size_t> zero_counts;                              // sorted

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const CharacterTable& table);

/// Fingerprints of the fixed comparison groups, computed once.
/// Keys: "SL(2,3)", "S(4)", "PSL(2,q)".
const Fingerprint& reference_fingerprint(const std::string& key);

enum class TheoremBCase { normal_abelian_sylow2, frobenius_c2, sl23, psl2_even, none };
std::string to_string(TheoremBCase c);

/// True when some index-c normal subgroup N > 1 (kernel of a linear
/// character of order c) and some t outside N of order c have |C_G(t)| = c.
/// For prime c this is a Frobenius group with complement <t>.
bool is_frobenius_with_prime_complement(const CharacterTable& table, std::uint64_t c);

/// First matching case (1) to (4), else none.
TheoremBCase classify_theorem_b(const PermGroup& group, const CharacterTable& table);

struct Proposition3Verdict {
  bool holds = true;
  /// "1".."4" for the matching case, "abelian" for abelian groups,
  /// "unmatched" when no case applies, empty when the check fails.
  std::string case_label;
};

/// Every nonlinear row vanishes on at most two classes.
Proposition3Verdict check_proposition3(const PermGroup& group, const CharacterTable& table);

struct DefectZero {
  std::size_t row;
  std::uint64_t prime;
};

/// Even-degree rows whose degree carries the full p-part of |G|.
std::vector<DefectZero> defect_zero_search(const CharacterTable& table);

struct LambdaRho {
  ClassFunction pi;      // fixed points
  ClassFunction delta;   // number of 2-cycles
  ClassFunction lambda;  // (pi-1)(pi-2)/2 - delta
  ClassFunction rho;     // pi(pi-3)/2 + delta
};

/// Class functions on the classes of A(n) in its natural action.
LambdaRho build_lambda_rho(std::shared_ptr<const ConjugacyClasses> classes);
LambdaRho build_lambda_rho(std::size_t n, std::uint64_t cap = kEnumerationCap);

std::int64_t lambda_value(const Permutation& g);
std::int64_t rho_value(const Permutation& g);

struct Step1Check {
  std::size_t n = 0;
  std::vector<Permutation> a;  // lambda vanishes here
  std::vector<Permutation> b;  // rho vanishes here
  std::vector<std::int64_t> lambda_at_a;
  std::vector<std::int64_t> rho_at_b;
  bool in_alternating = false;
  bool a_distinct = false;
  bool b_distinct = false;

  bool holds() const;
};

/// The three test elements for each function, in 1-based cycle notation.
std::vector<Permutation> step1_a_elements(std::size_t n);
std::vector<Permutation> step1_b_elements(std::size_t n);

/// Evaluates lambda at a_i and rho at b_i. Classes are distinguished by
/// `classes` when given (A(n) classes), otherwise by cycle type.
Step1Check verify_step1_vanishing(std::size_t n, const ConjugacyClasses* classes = nullptr);

enum class TorusSide { minus, plus };

struct TorusCount {
  std::uint64_t q = 0;
  TorusSide side = TorusSide::plus;
  std::uint64_t torus_order = 0;
  std::size_t class_count = 0;
  std::optional<std::uint64_t> quarter;  // (q-1)/4 when integral
  std::string note;
};

/// Classes of PSL(2,q) meeting the nontrivial elements of a cyclic torus
/// of order (q -/+ 1)/gcd(2, q-1).
TorusCount torus_class_count(std::uint64_t q, TorusSide side, std::uint64_t cap = kEnumerationCap);

struct XiCount {
  unsigned f = 0;
  std::uint64_t torus_order = 0;          // 2^f + 1
  std::size_t exact_order_classes = 0;    // elements of order exactly 2^f + 1
  std::size_t torus_classes = 0;          // nontrivial elements of the torus
  std::uint64_t claimed = 0;              // 2^(f-1)
  std::string note;
};

XiCount theorem_c_xi_counts(unsigned f, std::uint64_t cap = kEnumerationCap);

struct CharacterSummary {
  std::uint64_t degree = 0;
  std::vector<std::size_t> zero_classes;
};

struct VerdictReport {
  std::string group_label;
  std::uint64_t order = 0;
  std::size_t class_count = 0;
  std::vector<std::uint64_t> degrees;
  std::vector<CharacterSummary> characters;
  StarVerdict star;
  StarVerdict star_star;
  TheoremBCase theorem_b_case = TheoremBCase::none;
  Proposition3Verdict proposition3;
  double timing_ms = 0;
};

VerdictReport verdict_report(const GroupSpecResult& spec, const CharacterTable& table);

}  // namespace charzero
