#include "charzero/finite_field.hpp"

#include <map>
#include <string>

#include "charzero/error.hpp"
#include "charzero/number_theory.hpp"

namespace charzero {

namespace {

// Defining polynomials, ascending coefficients.
const std::map<std::uint64_t, std::vector<std::uint32_t>>& moduli() {
  static const std::map<std::uint64_t, std::vector<std::uint32_t>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {9, {1, 0, 1}},
      {27, {1, 2, 0, 1}},
      {25, {2, 4, 1}},
      {49, {3, 6, 1}},
  };
  return table;
}

}  // namespace

FiniteField FiniteField::make(std::uint64_t q) {
  const auto power = as_prime_power(q);
  if (!power) throw DomainError(std::to_string(q) + " is not a prime power");
  FiniteField field;
  field.q_ = q;
  field.p_ = power->prime;
  field.f_ = power->exponent;
  if (field.f_ == 1) {
    field.modulus_ = {0, 1};
  } else {
    const auto it = moduli().find(q);
    if (it == moduli().end()) {
      throw DomainError("GF(" + std::to_string(q) + ") is unsupported");
    }
    field.modulus_ = it->second;
    field.add_.resize(q * q);
    field.mul_.resize(q * q);
    field.neg_.resize(q);
    field.inv_.assign(q, 0);
    const std::uint64_t p = field.p_;
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        Element sum = 0, place = 1, x = a, y = b;
        for (unsigned d = 0; d < field.f_; ++d) {
          sum += static_cast<Element>(((x % p) + (y % p)) % p * place);
          x /= static_cast<Element>(p);
          y /= static_cast<Element>(p);
          place *= static_cast<Element>(p);
        }
        field.add_[a * q + b] = sum;
        if (sum == 0) field.neg_[a] = b;
      }
    }
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        const Element product = field.poly_mul(a, b);
        field.mul_[a * q + b] = product;
        if (product == 1) field.inv_[a] = b;
      }
    }
    for (Element a = 1; a < q; ++a) {
      if (field.inv_[a] == 0) throw InternalError("modulus for GF(" + std::to_string(q) + ") is reducible");
    }
  }
  for (Element g = 1; g < q; ++g) {
    if (field.multiplicative_order(g) == q - 1) {
      field.generator_ = g;
      break;
    }
  }
  if (q == 2) field.generator_ = 1;
  return field;
}

FiniteField::Element FiniteField::poly_mul(Element a, Element b) const {
  const std::uint64_t p = p_;
  std::vector<std::uint64_t> x(f_), y(f_), prod(2 * f_, 0);
  for (unsigned d = 0; d < f_; ++d) {
    x[d] = a % p;
    y[d] = b % p;
    a /= static_cast<Element>(p);
    b /= static_cast<Element>(p);
  }
  for (unsigned i = 0; i < f_; ++i) {
    for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  // Monic modulus: x^f = -sum modulus[d] x^d.
  for (unsigned t = 2 * f_ - 1; t >= f_; --t) {
    const std::uint64_t c = prod[t];
    if (c == 0) continue;
    prod[t] = 0;
    for (unsigned d = 0; d < f_; ++d) {
      prod[t - f_ + d] = (prod[t - f_ + d] + (p - c) * modulus_[d]) % p;
    }
  }
  Element out = 0, place = 1;
  for (unsigned d = 0; d < f_; ++d) {
    out += static_cast<Element>(prod[d] * place);
    place *= static_cast<Element>(p);
  }
  return out;
}

FiniteField::Element FiniteField::from_integer(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Element>(((n % p) + p) % p);
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (f_ == 1) return static_cast<Element>((a + b) % p_);
  return add_[a * q_ + b];
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (f_ == 1) return a == 0 ? 0 : static_cast<Element>(p_ - a);
  return neg_[a];
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (f_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  return mul_[a * q_ + b];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  if (f_ == 1) return static_cast<Element>(inverse_mod(a, p_));
  return inv_[a];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::uint64_t FiniteField::multiplicative_order(Element a) const {
  if (a == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t order = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++order;
  return order;
}

}  // namespace charzero
