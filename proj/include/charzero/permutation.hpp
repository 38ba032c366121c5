#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charzero {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 65535;

/// A permutation of {0..degree-1}, stored as its image array.
///
/// Products compose left to right: (a * b)(x) = b(a(x)), so a * b means
/// "apply a, then b". Conjugation follows the same convention:
/// x.conjugate_by(g) = g^-1 * x * g.
class Permutation {
 public:
  struct Unchecked {};

  Permutation() = default;

  /// Throws MalformedGeneratorError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles given with 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  Permutation conjugate_by(const Permutation& g) const;

  /// Acts on the disjoint union of domains: this on the low block, other shifted.
  Permutation extended(std::size_t new_degree, std::size_t offset) const;

  std::uint64_t order() const;
  bool is_identity() const;
  std::size_t fixed_points() const;
  std::size_t cycles_of_length(std::size_t length) const;

  /// Disjoint-cycle notation with 1-based points; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Commutator a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
Permutation parse_cycles(const std::string& text, std::size_t degree);

}  // namespace charzero
