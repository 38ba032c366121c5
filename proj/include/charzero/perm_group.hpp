#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "charzero/permutation.hpp"

namespace charzero {

/// Groups larger than this are never enumerated element by element.
inline constexpr std::uint64_t kEnumerationCap = 2'000'000;

/// A permutation group with a base and strong generating set.
///
/// The stabilizer chain doubles as a perfect hash: every element has a
/// unique rank in [0, order), obtained from its base images alone, and
/// rank 0 is the identity. Immutable after construction.
class PermGroup {
 public:
  PermGroup() = default;

  /// Deterministic Schreier-Sims. Throws MalformedGeneratorError when a
  /// generator has the wrong degree.
  static PermGroup build(std::vector<Permutation> generators, std::size_t degree);

  static PermGroup trivial(std::size_t degree) { return build({}, degree); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Point>& base() const { return base_; }
  std::size_t base_length() const { return base_.size(); }

  bool contains(const Permutation& g) const;
  bool is_abelian() const;

  /// Rank of a member; throws NotAMemberError otherwise.
  std::uint64_t rank(const Permutation& g) const;

  /// Rank from base images: base_images[l] = g(base()[l]). The element is
  /// assumed to be a member; the result is unspecified otherwise.
  std::uint64_t rank_from_base_images(const Point* base_images) const;

  Permutation unrank(std::uint64_t rank) const;

  /// Writes the image array of the element of the given rank into `out`.
  void unrank_into(std::uint64_t rank, Point* out) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> strong;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_position;
    std::vector<Permutation> transversal;
  };

  void rebuild_orbit(Level& level) const;
  // Residue and the level where sifting stopped (levels_.size() if it passed).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;
  void finalize();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> strides_;
  // Flattened inverse transversal images: level offsets, then degree_ points per orbit entry.
  std::vector<std::size_t> inverse_offsets_;
  std::vector<Point> inverse_images_;
};

/// All group elements in rank order; index i holds the element of rank i.
class ElementList {
 public:
  ElementList(std::size_t degree, std::vector<Point> data)
      : degree_(degree), data_(std::move(data)) {}

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return degree_ == 0 ? 1 : data_.size() / degree_; }
  std::span<const Point> operator[](std::size_t i) const {
    return {data_.data() + i * degree_, degree_};
  }
  const Point* raw(std::size_t i) const { return data_.data() + i * degree_; }
  Permutation permutation(std::size_t i) const;

 private:
  std::size_t degree_;
  std::vector<Point> data_;
};

/// Throws CapacityError when the order exceeds `cap`.
ElementList enumerate_elements(const PermGroup& group, std::uint64_t cap = kEnumerationCap);

struct ConjugacyClass {
  Permutation representative;  // lexicographically smallest member
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::uint64_t centralizer_order = 0;
};

/// Conjugacy classes by exhaustive orbit partition, in canonical order:
/// (element order, class size, smallest member's image array).
class ConjugacyClasses {
 public:
  const PermGroup& group() const { return group_; }
  std::size_t count() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  std::span<const ConjugacyClass> classes() const { return classes_; }
  std::uint64_t group_order() const { return group_.order(); }
  std::uint64_t exponent() const { return exponent_; }

  std::size_t class_of_index(std::uint64_t element_index) const {
    return class_of_[element_index];
  }
  std::size_t class_of(const Permutation& g) const;

  /// Class of g_i^l for the representative g_i; l may be negative.
  std::size_t power_map(std::size_t i, std::int64_t l) const;
  std::size_t inverse_class(std::size_t i) const { return power_map(i, -1); }

  /// Element indices of the members of class i.
  std::span<const std::uint32_t> members(std::size_t i) const {
    return {members_.data() + member_offsets_[i],
            member_offsets_[i + 1] - member_offsets_[i]};
  }

 private:
  friend ConjugacyClasses conjugacy_classes(const PermGroup&, const ElementList&);

  PermGroup group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint16_t> class_of_;
  std::vector<std::vector<std::uint16_t>> power_maps_;
  std::vector<std::uint32_t> members_;
  std::vector<std::size_t> member_offsets_;
  std::uint64_t exponent_ = 1;
};

ConjugacyClasses conjugacy_classes(const PermGroup& group, const ElementList& elements);

/// Smallest normal subgroup containing `seed`. Throws NotAMemberError when
/// a seed element is not in the group.
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seed);

/// Throws DomainError for the trivial group.
bool is_simple(const PermGroup& group, const ConjugacyClasses& classes);
bool is_simple(const PermGroup& group);

PermGroup derived_subgroup(const PermGroup& group);
bool is_solvable(const PermGroup& group);

/// Subgroup generated by group elements; same domain.
PermGroup subgroup(const PermGroup& group, std::vector<Permutation> generators);

struct Sylow2 {
  PermGroup subgroup;
  bool is_normal = true;
  bool is_abelian = true;
};

/// Greedy construction: grow a 2-subgroup by 2-elements of its normalizer.
Sylow2 sylow_2(const PermGroup& group, const ElementList& elements);
Sylow2 sylow_2(const PermGroup& group);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace charzero
