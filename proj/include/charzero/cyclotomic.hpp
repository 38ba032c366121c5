#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charzero {

/// Dense integer polynomial, ascending degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  std::vector<mpz_class> coeffs_;
};

std::uint64_t euler_phi(std::uint64_t n);

/// The n-th cyclotomic polynomial. Throws DomainError for n = 0.
/// Results are cached; safe to call from several threads.
const IntPolynomial& cyclotomic_polynomial(std::uint64_t n);

/// An element of Z[zeta_n], zeta_n = exp(2 pi i / n), stored as its
/// canonical residue modulo Phi_n in the power basis 1, zeta, ...,
/// zeta^(phi(n)-1). Equal values at equal conductor have equal coefficients.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}

  static Cyclotomic zero(std::uint64_t conductor);
  static Cyclotomic integer(std::uint64_t conductor, const mpz_class& value);
  static Cyclotomic integer(const mpz_class& value) { return integer(1, value); }
  static Cyclotomic root_of_unity(std::uint64_t conductor, std::int64_t exponent);

  /// raw[j] is the coefficient of zeta_n^j; exponents are taken modulo n.
  static Cyclotomic reduce(std::uint64_t conductor, std::span<const mpz_class> raw);
  static Cyclotomic reduce(std::uint64_t conductor, std::span<const long> raw);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value at zeta^0 when rational.
  const mpz_class& rational_part() const { return coeffs_[0]; }

  /// Throws DomainError on conductor mismatch.
  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic scaled(const mpz_class& factor) const;

  /// zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const;
  Cyclotomic abs_square() const { return *this * conjugate(); }
  /// zeta -> zeta^l.
  Cyclotomic galois(std::int64_t l) const;
  /// Same value at a conductor that is a multiple of this one.
  Cyclotomic lifted(std::uint64_t multiple) const;

  /// Numeric value; display only.
  std::complex<double> approx() const;

  /// "[c0,c1,...]@n".
  std::string to_string() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
  /// Serialization order: conductor, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint64_t conductor, std::vector<mpz_class> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  std::uint64_t conductor_;
  std::vector<mpz_class> coeffs_;
};

/// Equality of values that may live at different conductors.
bool equal_values(const Cyclotomic& a, const Cyclotomic& b);

/// Accumulates a sum of cyclotomic terms at one conductor without reducing
/// each term; used for long sums such as orthogonality checks.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(std::uint64_t conductor);

  std::uint64_t conductor() const { return conductor_; }

  /// Adds scale * a; the conductor of a must divide this conductor.
  void add(const Cyclotomic& a, const mpz_class& scale = 1);
  /// Adds scale * a * conjugate(b).
  void add_product_conj(const Cyclotomic& a, const Cyclotomic& b, const mpz_class& scale = 1);
  void add_integer(const mpz_class& value) { raw_[0] += value; }

  /// Exact zero test through the prime-power tensor decomposition of
  /// Z[zeta_n]; never reduces modulo Phi_n itself.
  bool is_zero() const;
  Cyclotomic value() const { return Cyclotomic::reduce(conductor_, raw_); }

 private:
  std::uint64_t conductor_;
  std::vector<mpz_class> raw_;
};

/// Zero test for sum_j raw[j] zeta_n^j, independent of the power-basis reduction.
bool is_zero_tensor(std::uint64_t conductor, std::span<const mpz_class> raw);

}  // namespace charzero
