#pragma once

#include <cstdint>
#include <vector>

namespace charzero {

/// GF(q) with elements indexed 0..q-1 by their base-p digit vectors in the
/// polynomial basis; index 0 is zero and index 1 is one.
///
/// Prime fields use modular arithmetic. Extension fields use a fixed
/// modulus table and precomputed addition and multiplication tables.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Throws DomainError when q is not a prime power or no modulus is known.
  static FiniteField make(std::uint64_t q);

  std::uint64_t size() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  /// Ascending coefficients of the defining polynomial; {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  /// A fixed generator of the multiplicative group.
  Element generator() const { return generator_; }
  Element from_integer(std::int64_t n) const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws DomainError for zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  std::uint64_t multiplicative_order(Element a) const;

 private:
  FiniteField() = default;
  Element poly_mul(Element a, Element b) const;

  std::uint64_t q_ = 0;
  std::uint64_t p_ = 0;
  unsigned f_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_ = 0;
  std::vector<Element> add_;  // q x q, extension fields only
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

}  // namespace charzero
