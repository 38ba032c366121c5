#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "charzero/cyclotomic.hpp"
#include "charzero/perm_group.hpp"

namespace charzero {

/// Class multiplication coefficients for a fixed class i:
/// entry (j, l) = a(i,j,l) = #{(x, y) in C_i x C_j : x y = z_l} for the
/// fixed representative z_l of class l.
struct ClassMatrix {
  std::size_t class_index = 0;
  std::size_t size = 0;
  std::vector<std::uint64_t> entries;  // row-major, size x size

  std::uint64_t operator()(std::size_t j, std::size_t l) const { return entries[j * size + l]; }
};

/// Streams over the members of the inverse class of i; O(k |C_i|) rank lookups.
ClassMatrix class_matrix(const ConjugacyClasses& classes, const ElementList& elements,
                         std::size_t i);

/// Smallest prime p with p = 1 (mod exponent) and p > 2 sqrt(order).
std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t order);
std::uint64_t choose_prime(const ConjugacyClasses& classes);

/// Dense k x k matrix over GF(p), row-major.
using ModMatrix = std::vector<std::uint64_t>;

/// Supplies the class matrix of class i reduced mod p; called lazily for
/// i = 1, 2, ... until every common eigenspace is one-dimensional.
using ClassMatrixSource = std::function<ModMatrix(std::size_t)>;

/// Common right eigenvectors of the class matrices over GF(p), each scaled
/// so the identity-class coordinate is 1. Returned in no particular order.
/// Throws InternalError if splitting stalls.
std::vector<std::vector<std::uint64_t>> eigen_split(std::size_t k, std::uint64_t p,
                                                    const ClassMatrixSource& source);

/// Exact irreducible characters over the canonical class order.
class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const ConjugacyClasses> classes,
                 std::vector<std::vector<Cyclotomic>> rows);

  const ConjugacyClasses& classes() const { return *classes_; }
  std::shared_ptr<const ConjugacyClasses> shared_classes() const { return classes_; }

  std::size_t size() const { return rows_.size(); }
  const std::vector<Cyclotomic>& row(std::size_t i) const { return rows_[i]; }
  const Cyclotomic& value(std::size_t row, std::size_t cls) const { return rows_[row][cls]; }
  std::uint64_t degree(std::size_t row) const { return degrees_[row]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  std::uint64_t group_order() const { return classes_->group_order(); }

 private:
  std::shared_ptr<const ConjugacyClasses> classes_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<std::uint64_t> degrees_;
};

/// Recovers degrees and exact values from the mod-p central characters,
/// sorts rows by (degree, values) and validates the result. Throws
/// InternalError when any table invariant fails.
CharacterTable lift_table(const std::vector<std::vector<std::uint64_t>>& eigenvectors,
                          std::shared_ptr<const ConjugacyClasses> classes, std::uint64_t p);

struct TableCheck {
  bool square = false;
  bool degree_sum = false;        // sum of squared degrees equals |G|
  bool degrees_divide = false;
  bool first_orthogonality = false;
  bool second_orthogonality = false;
  bool burnside = false;          // every nonlinear row has an exact zero
  bool conductors = false;        // values at class l live in Q(zeta_o(l))

  bool ok() const {
    return square && degree_sum && degrees_divide && first_orthogonality &&
           second_orthogonality && burnside && conductors;
  }
  std::string failures() const;
};

TableCheck check_table(const CharacterTable& table);

/// Full pipeline. Throws CapacityError when the order exceeds `cap`.
CharacterTable character_table(const PermGroup& group, std::uint64_t cap = kEnumerationCap);
CharacterTable character_table(const PermGroup& group, const ElementList& elements);

}  // namespace charzero
