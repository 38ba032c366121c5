#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace charzero {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Product of the distinct primes dividing n.
std::uint64_t radical(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Smallest primitive root modulo a prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

}  // namespace charzero
