#pragma once

// Brute-force reference computations that share no code with the library
// beyond the Permutation value type.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "charzero/charzero.hpp"

namespace oracle {

using Images = std::vector<charzero::Point>;

inline Images compose(const Images& a, const Images& b) {
  Images out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

inline Images invert(const Images& a) {
  Images out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<charzero::Point>(x);
  return out;
}

inline Images identity(std::size_t n) {
  Images out(n);
  std::iota(out.begin(), out.end(), charzero::Point{0});
  return out;
}

/// Every element of the group generated by `gens`, by breadth-first closure.
inline std::set<Images> closure(const std::vector<charzero::Permutation>& gens, std::size_t degree) {
  std::set<Images> seen{identity(degree)};
  std::deque<Images> queue{identity(degree)};
  while (!queue.empty()) {
    const Images x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Images y = compose(x, Images(g.images().begin(), g.images().end()));
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

inline std::uint64_t element_order(const Images& x) {
  std::uint64_t order = 1;
  Images power = x;
  const Images id = identity(x.size());
  while (power != id) {
    power = compose(power, x);
    ++order;
  }
  return order;
}

/// Conjugacy classes of an explicit element set: (size, element order) per class.
inline std::vector<std::set<Images>> class_partition(const std::set<Images>& elements) {
  std::vector<std::set<Images>> classes;
  std::set<Images> assigned;
  for (const auto& x : elements) {
    if (assigned.count(x)) continue;
    std::set<Images> cls;
    for (const auto& g : elements) cls.insert(compose(compose(invert(g), x), g));
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (d * d > n) break;
    if (n % d == 0) return false;
  }
  return true;
}

/// The literal prime rule: smallest prime p, p = 1 mod e, p > 2 sqrt(order).
inline std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  for (std::uint64_t p = 2;; ++p) {
    if (p % exponent == 1 % exponent && static_cast<double>(p) > 2.0 * std::sqrt(static_cast<double>(order)) &&
        is_prime(p)) {
      return p;
    }
  }
}

/// Characters of an abelian group as homomorphisms to the exponent-th roots
/// of unity, found by testing every assignment of roots to generators.
/// Returns rows over the library's class order (classes are singletons).
inline std::vector<std::vector<charzero::Cyclotomic>> abelian_characters(const charzero::ConjugacyClasses& cc) {
  const auto& gens = cc.group().generators();
  const std::uint64_t e = cc.exponent();
  const std::size_t degree = cc.group().degree();
  std::vector<std::vector<charzero::Cyclotomic>> rows;
  std::vector<std::uint64_t> assignment(gens.size(), 0);
  for (;;) {
    // Walk the Cayley graph, tracking exponents of zeta_e.
    std::map<Images, std::uint64_t> value{{identity(degree), 0}};
    std::deque<Images> queue{identity(degree)};
    bool consistent = true;
    while (!queue.empty() && consistent) {
      const Images x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Images y = compose(x, Images(gens[i].images().begin(), gens[i].images().end()));
        const std::uint64_t v = (value[x] + assignment[i]) % e;
        auto [it, fresh] = value.emplace(y, v);
        if (fresh) {
          queue.push_back(y);
        } else if (it->second != v) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      std::vector<charzero::Cyclotomic> row(cc.count());
      for (std::size_t l = 0; l < cc.count(); ++l) {
        const auto& rep = cc[l].representative;
        const std::uint64_t k = value.at(Images(rep.images().begin(), rep.images().end()));
        const std::uint64_t o = cc[l].element_order;
        row[l] = charzero::Cyclotomic::root_of_unity(o, static_cast<std::int64_t>(k / (e / o)));
      }
      rows.push_back(std::move(row));
    }
    std::size_t i = 0;
    while (i < assignment.size() && ++assignment[i] == e) assignment[i++] = 0;
    if (i == assignment.size()) break;
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

/// Numeric sum_j raw[j] exp(2 pi i j / n).
inline std::complex<double> numeric_sum(std::uint64_t n, const std::vector<long>& raw) {
  std::complex<double> out = 0;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    out += static_cast<double>(raw[j]) * std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n));
  }
  return out;
}

}  // namespace oracle
