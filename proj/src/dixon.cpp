#include "charzero/dixon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "charzero/error.hpp"
#include "charzero/number_theory.hpp"

namespace charzero {

namespace {

using Vec = std::vector<std::uint64_t>;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t width, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = inverse_mod(rows[rank][col], p);
    for (auto& x : rows[rank]) x = mul_mod(x, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (std::size_t c = 0; c < width; ++c) {
        rows[r][c] = sub_mod(rows[r][c], mul_mod(f, rows[rank][c], p), p);
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Basis of {c : A c = 0} for a square matrix given as rows.
std::vector<Vec> nullspace(std::vector<Vec> a, std::size_t width, std::uint64_t p) {
  const auto pivots = rref(a, width, p);
  std::vector<bool> is_pivot(width, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Vec v(width, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub_mod(0, a[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial det(xI - A), ascending coefficients, via
// reduction to upper Hessenberg form.
Vec characteristic_polynomial(std::vector<Vec> h, std::uint64_t p) {
  const std::size_t d = h.size();
  for (std::size_t m = 1; m + 1 < d; ++m) {
    std::size_t i = m;
    while (i < d && h[i][m - 1] == 0) ++i;
    if (i == d) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const std::uint64_t inv = inverse_mod(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < d; ++r) {
      const std::uint64_t u = mul_mod(h[r][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < d; ++c) h[r][c] = sub_mod(h[r][c], mul_mod(u, h[m][c], p), p);
      for (std::size_t c = 0; c < d; ++c) h[c][m] = (h[c][m] + mul_mod(u, h[c][r], p)) % p;
    }
  }
  // polys[m] = charpoly of the leading m x m block.
  std::vector<Vec> polys(d + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = polys[m - 1];
    const std::uint64_t diag = h[m - 1][m - 1];
    for (std::size_t t = 0; t < prev.size(); ++t) {
      next[t + 1] = (next[t + 1] + prev[t]) % p;
      next[t] = sub_mod(next[t], mul_mod(diag, prev[t], p), p);
    }
    std::uint64_t sub_product = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      sub_product = mul_mod(sub_product, h[i + 1][i], p);
      const std::uint64_t coef = mul_mod(h[i][m - 1], sub_product, p);
      if (coef == 0) continue;
      for (std::size_t t = 0; t < polys[i].size(); ++t) {
        next[t] = sub_mod(next[t], mul_mod(coef, polys[i][t], p), p);
      }
    }
    polys[m] = std::move(next);
  }
  return polys[d];
}

std::vector<std::uint64_t> roots_mod_p(const Vec& poly, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t t = poly.size(); t-- > 0;) acc = (mul_mod(acc, x, p) + poly[t]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

struct Subspace {
  std::vector<Vec> basis;  // RREF rows
  std::vector<std::size_t> pivots;
};

}  // namespace

ClassMatrix class_matrix(const ConjugacyClasses& classes, const ElementList& elements,
                         std::size_t i) {
  const std::size_t k = classes.count();
  const PermGroup& group = classes.group();
  const auto& base = group.base();
  const std::size_t m = base.size();
  ClassMatrix out{i, k, std::vector<std::uint64_t>(k * k, 0)};
  const auto inverse_members = classes.members(classes.inverse_class(i));
  std::array<Point, 64> images{};
  for (std::size_t l = 0; l < k; ++l) {
    const Point* z = elements.raw(group.rank(classes[l].representative));
    for (std::uint32_t u_index : inverse_members) {
      // x in C_i, u = x^-1, and y = x^-1 z sends b to z(u(b)).
      const Point* u = elements.raw(u_index);
      for (std::size_t b = 0; b < m; ++b) images[b] = z[u[base[b]]];
      const std::size_t j = classes.class_of_index(group.rank_from_base_images(images.data()));
      ++out.entries[j * k + l];
    }
  }
  return out;
}

std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t order) {
  for (std::uint64_t p = exponent + 1;; p += exponent) {
    // p > 2 sqrt(order)  <=>  p^2 > 4 order
    if (static_cast<unsigned __int128>(p) * p <= static_cast<unsigned __int128>(order) * 4) {
      continue;
    }
    if (is_prime(p)) return p;
  }
}

std::uint64_t choose_prime(const ConjugacyClasses& classes) {
  return choose_prime(classes.exponent(), classes.group_order());
}

std::vector<std::vector<std::uint64_t>> eigen_split(std::size_t k, std::uint64_t p,
                                                    const ClassMatrixSource& source) {
  Subspace whole;
  for (std::size_t r = 0; r < k; ++r) {
    Vec v(k, 0);
    v[r] = 1;
    whole.basis.push_back(std::move(v));
    whole.pivots.push_back(r);
  }
  std::vector<Subspace> spaces{std::move(whole)};
  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(),
                       [](const Subspace& s) { return s.basis.size() > 1; });
  };

  std::size_t next_class = 1;
  while (unsplit()) {
    if (next_class >= k) throw InternalError("eigenspace splitting stalled");
    const ModMatrix matrix = source(next_class++);
    std::vector<Subspace> refined;
    for (auto& space : spaces) {
      const std::size_t d = space.basis.size();
      if (d == 1) {
        refined.push_back(std::move(space));
        continue;
      }
      // Restriction of the matrix to the invariant subspace, in basis coordinates.
      std::vector<Vec> images(d, Vec(k, 0));
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t j = 0; j < k; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < k; ++l) {
            const std::uint64_t b = space.basis[s][l];
            if (b != 0) acc = (acc + mul_mod(matrix[j * k + l], b, p)) % p;
          }
          images[s][j] = acc;
        }
      }
      std::vector<Vec> restricted(d, Vec(d, 0));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) restricted[r][s] = images[s][space.pivots[r]];
      }
      const auto roots = roots_mod_p(characteristic_polynomial(restricted, p), p);
      if (roots.size() == 1) {
        refined.push_back(std::move(space));
        continue;
      }
      std::size_t total = 0;
      for (std::uint64_t lambda : roots) {
        std::vector<Vec> shifted = restricted;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = sub_mod(shifted[r][r], lambda, p);
        Subspace part;
        for (const Vec& c : nullspace(std::move(shifted), d, p)) {
          Vec v(k, 0);
          for (std::size_t s = 0; s < d; ++s) {
            if (c[s] == 0) continue;
            for (std::size_t l = 0; l < k; ++l) {
              v[l] = (v[l] + mul_mod(c[s], space.basis[s][l], p)) % p;
            }
          }
          part.basis.push_back(std::move(v));
        }
        part.pivots = rref(part.basis, k, p);
        total += part.basis.size();
        refined.push_back(std::move(part));
      }
      if (total != d) throw InternalError("class matrix is not diagonalizable mod p");
    }
    spaces = std::move(refined);
  }

  std::vector<Vec> out;
  for (auto& space : spaces) {
    Vec v = std::move(space.basis.front());
    if (v[0] == 0) throw InternalError("central character vanishes at the identity class");
    const std::uint64_t inv = inverse_mod(v[0], p);
    for (auto& x : v) x = mul_mod(x, inv, p);
    out.push_back(std::move(v));
  }
  return out;
}

CharacterTable::CharacterTable(std::shared_ptr<const ConjugacyClasses> classes,
                               std::vector<std::vector<Cyclotomic>> rows)
    : classes_(std::move(classes)), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.empty() || !row[0].is_rational() || row[0].rational_part() <= 0) {
      throw InternalError("character row without a positive degree");
    }
    degrees_.push_back(row[0].rational_part().get_ui());
  }
}

CharacterTable lift_table(const std::vector<std::vector<std::uint64_t>>& eigenvectors,
                          std::shared_ptr<const ConjugacyClasses> classes, std::uint64_t p) {
  const ConjugacyClasses& cc = *classes;
  const std::size_t k = cc.count();
  const std::uint64_t order = cc.group_order();
  const std::uint64_t root = smallest_primitive_root(p);

  std::vector<std::uint64_t> size_inverse(k);
  for (std::size_t l = 0; l < k; ++l) size_inverse[l] = inverse_mod(cc[l].size % p, p);
  std::uint64_t max_degree = 1;
  while ((max_degree + 1) * (max_degree + 1) <= order) ++max_degree;

  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& w : eigenvectors) {
    std::uint64_t s = 0;
    for (std::size_t l = 0; l < k; ++l) {
      s = (s + mul_mod(mul_mod(w[l], w[cc.inverse_class(l)], p), size_inverse[l], p)) % p;
    }
    if (s == 0) throw InternalError("degenerate central character");
    const std::uint64_t degree_square = mul_mod(order % p, inverse_mod(s, p), p);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
      if (d * d % p == degree_square) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw InternalError("no character degree matches the central character");

    std::vector<std::uint64_t> chi(k);
    for (std::size_t l = 0; l < k; ++l) {
      chi[l] = mul_mod(mul_mod(w[l], degree, p), size_inverse[l], p);
    }

    std::vector<Cyclotomic> row;
    for (std::size_t l = 0; l < k; ++l) {
      const std::uint64_t o = cc[l].element_order;
      const std::uint64_t zeta_inv = inverse_mod(pow_mod(root, (p - 1) / o, p), p);
      std::vector<std::uint64_t> powers(o);
      powers[0] = 1;
      for (std::uint64_t e = 1; e < o; ++e) powers[e] = mul_mod(powers[e - 1], zeta_inv, p);
      const std::uint64_t o_inv = inverse_mod(o % p, p);
      std::vector<mpz_class> multiplicities(o);
      for (std::uint64_t j = 0; j < o; ++j) {
        std::uint64_t acc = 0;
        for (std::uint64_t t = 0; t < o; ++t) {
          const std::uint64_t value = chi[cc.power_map(l, static_cast<std::int64_t>(t))];
          acc = (acc + mul_mod(value, powers[(j * t) % o], p)) % p;
        }
        acc = mul_mod(acc, o_inv, p);
        if (acc > degree) throw InternalError("eigenvalue multiplicity exceeds the degree");
        multiplicities[j] = static_cast<unsigned long>(acc);
      }
      row.push_back(Cyclotomic::reduce(o, multiplicities));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const int c = cmp(a[0].rational_part(), b[0].rational_part());
    if (c != 0) return c < 0;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });

  CharacterTable table(std::move(classes), std::move(rows));
  const TableCheck check = check_table(table);
  if (!check.ok()) throw InternalError("character table failed validation: " + check.failures());
  return table;
}

std::string TableCheck::failures() const {
  std::string out;
  auto note = [&](bool passed, const char* name) {
    if (passed) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  note(square, "square");
  note(degree_sum, "degree sum");
  note(degrees_divide, "degree divisibility");
  note(first_orthogonality, "first orthogonality");
  note(second_orthogonality, "second orthogonality");
  note(burnside, "zero existence");
  note(conductors, "conductors");
  return out.empty() ? "none" : out;
}

TableCheck check_table(const CharacterTable& table) {
  TableCheck check;
  const ConjugacyClasses& cc = table.classes();
  const std::size_t k = cc.count();
  const std::uint64_t order = cc.group_order();

  check.square = table.size() == k;
  for (std::size_t i = 0; i < table.size(); ++i) check.square &= table.row(i).size() == k;
  if (!check.square) return check;

  mpz_class degree_sum = 0;
  check.degrees_divide = true;
  for (std::uint64_t d : table.degrees()) {
    degree_sum += mpz_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    check.degrees_divide &= order % d == 0;
  }
  check.degree_sum = degree_sum == static_cast<unsigned long>(order);

  check.conductors = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      check.conductors &= table.value(i, l).conductor() == cc[l].element_order;
    }
  }
  if (!check.conductors) return check;

  check.first_orthogonality = true;
  for (std::size_t i = 0; i < k && check.first_orthogonality; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      CyclotomicSum sum(cc.exponent());
      for (std::size_t l = 0; l < k; ++l) {
        sum.add_product_conj(table.value(i, l), table.value(j, l),
                             mpz_class(static_cast<unsigned long>(cc[l].size)));
      }
      if (i == j) sum.add_integer(-mpz_class(static_cast<unsigned long>(order)));
      if (!sum.is_zero()) {
        check.first_orthogonality = false;
        break;
      }
    }
  }

  check.second_orthogonality = true;
  for (std::size_t l = 0; l < k && check.second_orthogonality; ++l) {
    for (std::size_t m = l; m < k; ++m) {
      CyclotomicSum sum(std::lcm(cc[l].element_order, cc[m].element_order));
      for (std::size_t i = 0; i < k; ++i) sum.add_product_conj(table.value(i, l), table.value(i, m));
      if (l == m) sum.add_integer(-mpz_class(static_cast<unsigned long>(cc[l].centralizer_order)));
      if (!sum.is_zero()) {
        check.second_orthogonality = false;
        break;
      }
    }
  }

  check.burnside = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (table.degree(i) == 1) continue;
    const auto& row = table.row(i);
    check.burnside &= std::any_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v.is_zero(); });
  }
  return check;
}

CharacterTable character_table(const PermGroup& group, const ElementList& elements) {
  auto classes = std::make_shared<const ConjugacyClasses>(conjugacy_classes(group, elements));
  const std::size_t k = classes->count();
  const std::uint64_t p = choose_prime(*classes);
  auto source = [&](std::size_t i) {
    const ClassMatrix cm = class_matrix(*classes, elements, i);
    ModMatrix reduced(cm.entries.size());
    for (std::size_t e = 0; e < reduced.size(); ++e) reduced[e] = cm.entries[e] % p;
    return reduced;
  };
  const auto eigenvectors = eigen_split(k, p, source);
  return lift_table(eigenvectors, std::move(classes), p);
}

CharacterTable character_table(const PermGroup& group, std::uint64_t cap) {
  const ElementList elements = enumerate_elements(group, cap);
  return character_table(group, elements);
}

}  // namespace charzero
