#include "charzero/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "charzero/error.hpp"
#include "charzero/number_theory.hpp"

namespace charzero {

namespace {

struct SparseModulus {
  std::size_t degree;
  // Nonzero (power, coefficient) terms below the leading one.
  std::vector<std::pair<std::size_t, mpz_class>> lower;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, IntPolynomial>& poly_cache() {
  static std::map<std::uint64_t, IntPolynomial> cache;
  return cache;
}

std::map<std::uint64_t, SparseModulus>& sparse_cache() {
  static std::map<std::uint64_t, SparseModulus> cache;
  return cache;
}

const SparseModulus& sparse_cyclotomic(std::uint64_t n) {
  {
    std::lock_guard lock(cache_mutex());
    auto it = sparse_cache().find(n);
    if (it != sparse_cache().end()) return it->second;
  }
  const IntPolynomial& phi = cyclotomic_polynomial(n);
  SparseModulus sparse{static_cast<std::size_t>(phi.degree()), {}};
  for (std::size_t t = 0; t + 1 < phi.coeffs().size(); ++t) {
    if (phi[t] != 0) sparse.lower.emplace_back(t, phi[t]);
  }
  std::lock_guard lock(cache_mutex());
  return sparse_cache().emplace(n, std::move(sparse)).first->second;
}

// Exact division by a monic polynomial.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> quotient(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const mpz_class c = num[i];
    quotient[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw InternalError("cyclotomic division left a remainder");
  }
  return quotient;
}

void check_same_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    throw DomainError("conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                      std::to_string(b.conductor()));
  }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

const IntPolynomial& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial of index 0");
  {
    std::lock_guard lock(cache_mutex());
    auto it = poly_cache().find(n);
    if (it != poly_cache().end()) return it->second;
  }
  std::vector<mpz_class> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    poly = divide_monic(std::move(poly), cyclotomic_polynomial(d).coeffs());
  }
  std::lock_guard lock(cache_mutex());
  return poly_cache().emplace(n, IntPolynomial(std::move(poly))).first->second;
}

Cyclotomic Cyclotomic::zero(std::uint64_t conductor) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  return Cyclotomic(conductor, std::vector<mpz_class>(euler_phi(conductor)));
}

Cyclotomic Cyclotomic::integer(std::uint64_t conductor, const mpz_class& value) {
  Cyclotomic out = zero(conductor);
  out.coeffs_[0] = value;
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t conductor, std::int64_t exponent) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  std::vector<mpz_class> raw(conductor);
  const auto n = static_cast<std::int64_t>(conductor);
  raw[static_cast<std::size_t>(((exponent % n) + n) % n)] = 1;
  return reduce(conductor, raw);
}

Cyclotomic Cyclotomic::reduce(std::uint64_t conductor, std::span<const mpz_class> raw) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  const auto n = static_cast<std::size_t>(conductor);
  std::vector<mpz_class> folded(n);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] != 0) folded[j % n] += raw[j];
  }
  if (n == 1) return Cyclotomic(1, std::move(folded));

  // Phi_n(x) = Phi_r(x^s) with r = rad(n), s = n / r; reduce each residue
  // class of exponents modulo s separately as a polynomial in x^s.
  const std::size_t r = radical(conductor);
  const std::size_t s = n / r;
  const SparseModulus& modulus = sparse_cyclotomic(r);
  const std::size_t phr = modulus.degree;
  std::vector<mpz_class> coeffs(s * phr);
  std::vector<mpz_class> fiber(r);
  for (std::size_t b = 0; b < s; ++b) {
    for (std::size_t a = 0; a < r; ++a) fiber[a].swap(folded[b + s * a]);
    for (std::size_t a = r; a-- > phr;) {
      if (fiber[a] == 0) continue;
      const mpz_class c = fiber[a];
      for (const auto& [t, ct] : modulus.lower) {
        mpz_submul(fiber[a - phr + t].get_mpz_t(), c.get_mpz_t(), ct.get_mpz_t());
      }
      fiber[a] = 0;
    }
    for (std::size_t a = 0; a < phr; ++a) coeffs[b + s * a].swap(fiber[a]);
  }
  return Cyclotomic(conductor, std::move(coeffs));
}

Cyclotomic Cyclotomic::reduce(std::uint64_t conductor, std::span<const long> raw) {
  std::vector<mpz_class> big(raw.begin(), raw.end());
  return reduce(conductor, big);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  check_same_conductor(*this, rhs);
  Cyclotomic out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
  check_same_conductor(*this, rhs);
  Cyclotomic out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::scaled(const mpz_class& factor) const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  check_same_conductor(*this, rhs);
  const auto n = static_cast<std::size_t>(conductor_);
  std::vector<mpz_class> raw(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      mpz_addmul(raw[(i + j) % n].get_mpz_t(), coeffs_[i].get_mpz_t(),
                 rhs.coeffs_[j].get_mpz_t());
    }
  }
  return reduce(conductor_, raw);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(std::int64_t l) const {
  const auto n = static_cast<std::int64_t>(conductor_);
  const std::int64_t e = ((l % n) + n) % n;
  if (std::gcd(e, n) != 1) {
    throw DomainError("galois exponent " + std::to_string(l) + " not coprime to conductor " +
                      std::to_string(conductor_));
  }
  std::vector<mpz_class> raw(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    raw[static_cast<std::size_t>((static_cast<std::int64_t>(k) * e) % n)] += coeffs_[k];
  }
  return reduce(conductor_, raw);
}

Cyclotomic Cyclotomic::lifted(std::uint64_t multiple) const {
  if (multiple == 0 || multiple % conductor_ != 0) {
    throw DomainError("cannot lift conductor " + std::to_string(conductor_) + " to " +
                      std::to_string(multiple));
  }
  if (multiple == conductor_) return *this;
  const std::uint64_t f = multiple / conductor_;
  std::vector<mpz_class> raw(multiple);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * f] = coeffs_[k];
  return reduce(multiple, raw);
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> sum = 0.0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(conductor_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = step * static_cast<double>(k);
    sum += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ',';
    out += coeffs_[k].get_str();
  }
  return out + "]@" + std::to_string(conductor_);
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    const int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool equal_values(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return a == b;
  const std::uint64_t common = std::lcm(a.conductor(), b.conductor());
  return a.lifted(common) == b.lifted(common);
}

CyclotomicSum::CyclotomicSum(std::uint64_t conductor)
    : conductor_(conductor), raw_(static_cast<std::size_t>(conductor)) {
  if (conductor == 0) throw DomainError("conductor must be positive");
}

void CyclotomicSum::add(const Cyclotomic& a, const mpz_class& scale) {
  if (conductor_ % a.conductor() != 0) {
    throw DomainError("term conductor " + std::to_string(a.conductor()) + " does not divide " +
                      std::to_string(conductor_));
  }
  const std::uint64_t f = conductor_ / a.conductor();
  const auto& c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) mpz_addmul(raw_[k * f].get_mpz_t(), c[k].get_mpz_t(), scale.get_mpz_t());
  }
}

void CyclotomicSum::add_product_conj(const Cyclotomic& a, const Cyclotomic& b,
                                     const mpz_class& scale) {
  if (conductor_ % a.conductor() != 0 || conductor_ % b.conductor() != 0) {
    throw DomainError("term conductor does not divide " + std::to_string(conductor_));
  }
  const std::uint64_t n = conductor_;
  const std::uint64_t fa = n / a.conductor();
  const std::uint64_t fb = n / b.conductor();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  mpz_class term;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      const std::uint64_t idx = (i * fa + n - (j * fb) % n) % n;
      mpz_mul(term.get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
      mpz_addmul(raw_[idx].get_mpz_t(), term.get_mpz_t(), scale.get_mpz_t());
    }
  }
}

bool CyclotomicSum::is_zero() const { return is_zero_tensor(conductor_, raw_); }

bool is_zero_tensor(std::uint64_t conductor, std::span<const mpz_class> raw) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  const auto n = static_cast<std::size_t>(conductor);
  const auto factors = factorize(conductor);

  // Z[zeta_n] is the tensor product of Z[zeta_q] over the prime-power
  // factors q of n; zeta_n^j has coordinates c_t = j * (n/q_t)^-1 mod q_t.
  struct Axis {
    std::size_t prime;
    std::size_t q;
    std::size_t stride;
    std::size_t multiplier;
  };
  std::vector<Axis> axes;
  std::size_t stride = 1;
  for (const auto& [p, e] : factors) {
    std::size_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    const std::size_t cofactor = n / q;
    axes.push_back({p, q, stride, static_cast<std::size_t>(inverse_mod(cofactor % q, q))});
    stride *= q;
  }

  std::vector<mpz_class> tensor(n);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] == 0) continue;
    const std::size_t jj = j % n;
    std::size_t flat = 0;
    for (const auto& axis : axes) flat += (jj * axis.multiplier % axis.q) * axis.stride;
    tensor[flat] += raw[j];
  }

  for (const auto& axis : axes) {
    const std::size_t h = axis.q / axis.prime;
    const std::size_t phi = axis.q - h;
    for (std::size_t origin = 0; origin < n; ++origin) {
      if ((origin / axis.stride) % axis.q != 0) continue;
      for (std::size_t e = axis.q; e-- > phi;) {
        mpz_class& top = tensor[origin + e * axis.stride];
        if (top == 0) continue;
        for (std::size_t k = 1; k < axis.prime; ++k) {
          tensor[origin + (e - k * h) * axis.stride] -= top;
        }
        top = 0;
      }
    }
  }
  for (const auto& c : tensor) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace charzero
