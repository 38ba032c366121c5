#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charzero {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator image array is not a bijection of {0..degree-1}.
class MalformedGeneratorError : public Error {
 public:
  using Error::Error;
};

/// The group is too large to enumerate.
class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t order, std::uint64_t cap)
      : Error("group order " + std::to_string(order) +
              " exceeds the enumeration cap of " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  std::uint64_t order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotAMemberError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: group specs, perm files, catalogs.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computed object violated an invariant that must hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Two groups share a fingerprint but are declared non-isomorphic.
class FingerprintCollisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace charzero
