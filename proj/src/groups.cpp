#include "charzero/groups.hpp"

#include <array>
#include <numeric>

#include "charzero/error.hpp"
#include "charzero/finite_field.hpp"

namespace charzero {

namespace {

using Matrix2 = std::array<FiniteField::Element, 4>;  // row-major

std::uint64_t factorial(std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

void expect_order(const PermGroup& group, std::uint64_t expected, const std::string& label) {
  if (group.order() != expected) {
    throw InternalError(label + " has order " + std::to_string(group.order()) + ", expected " +
                        std::to_string(expected));
  }
}

void add_solvability_tag(GroupSpecResult& result) {
  result.family_tags.insert(is_solvable(result.group) ? "solvable" : "nonsolvable");
}

Permutation cycle(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<std::size_t> c;
  for (std::size_t i = first; i <= last; ++i) c.push_back(i);
  return Permutation::from_cycles(degree, {c});
}

std::vector<Matrix2> sl2_generators(const FiniteField& field) {
  const auto w = field.generator();
  const auto one = field.one();
  const auto zero = field.zero();
  std::vector<Matrix2> gens = {
      {one, one, zero, one},
      {one, zero, one, one},
      {zero, one, field.neg(one), zero},
  };
  if (field.size() > 3) {
    gens.push_back({w, zero, zero, field.inv(w)});
    gens.push_back({one, w, zero, one});
  }
  return gens;
}

}  // namespace

GroupSpecResult build_psl2(std::uint64_t q) {
  const FiniteField field = FiniteField::make(q);
  const std::size_t degree = q + 1;
  std::vector<Permutation> gens;
  for (const Matrix2& m : sl2_generators(field)) {
    std::vector<Point> images(degree);
    for (std::size_t point = 0; point < degree; ++point) {
      const auto a = point == q ? field.zero() : field.one();
      const auto b = point == q ? field.one() : static_cast<FiniteField::Element>(point);
      const auto x = field.add(field.mul(a, m[0]), field.mul(b, m[2]));
      const auto y = field.add(field.mul(a, m[1]), field.mul(b, m[3]));
      images[point] = x == 0 ? static_cast<Point>(q) : static_cast<Point>(field.mul(y, field.inv(x)));
    }
    gens.emplace_back(std::move(images));
  }
  GroupSpecResult result{PermGroup::build(std::move(gens), degree),
                         "PSL(2," + std::to_string(q) + ")",
                         {"psl2"}};
  expect_order(result.group, q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1), result.label);
  if (q >= 4) result.family_tags.insert("simple-psl2");
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_sl2(std::uint64_t q) {
  const FiniteField field = FiniteField::make(q);
  const std::size_t degree = q * q - 1;
  std::vector<Permutation> gens;
  for (const Matrix2& m : sl2_generators(field)) {
    std::vector<Point> images(degree);
    for (std::size_t point = 0; point < degree; ++point) {
      const auto a = static_cast<FiniteField::Element>((point + 1) % q);
      const auto b = static_cast<FiniteField::Element>((point + 1) / q);
      const auto x = field.add(field.mul(a, m[0]), field.mul(b, m[2]));
      const auto y = field.add(field.mul(a, m[1]), field.mul(b, m[3]));
      images[point] = static_cast<Point>(x + q * y - 1);
    }
    gens.emplace_back(std::move(images));
  }
  GroupSpecResult result{PermGroup::build(std::move(gens), degree),
                         "SL(2," + std::to_string(q) + ")",
                         {"sl2"}};
  expect_order(result.group, q * (q * q - 1), result.label);
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_alternating(std::size_t n) {
  if (n == 0) throw DomainError("A(0) is undefined");
  const std::size_t degree = n;
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(cycle(degree, 0, 2));
    gens.push_back(n % 2 == 1 ? cycle(degree, 0, n - 1) : cycle(degree, 1, n - 1));
  }
  GroupSpecResult result{PermGroup::build(std::move(gens), degree),
                         "A(" + std::to_string(n) + ")",
                         {"alternating"}};
  expect_order(result.group, n < 2 ? 1 : factorial(n) / 2, result.label);
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_symmetric(std::size_t n) {
  if (n == 0) throw DomainError("S(0) is undefined");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(cycle(n, 0, 1));
    gens.push_back(cycle(n, 0, n - 1));
  }
  GroupSpecResult result{PermGroup::build(std::move(gens), n),
                         "S(" + std::to_string(n) + ")",
                         {"symmetric"}};
  expect_order(result.group, factorial(n), result.label);
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_cyclic(std::size_t n) {
  if (n == 0) throw DomainError("C(0) is undefined");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle(n, 0, n - 1));
  GroupSpecResult result{PermGroup::build(std::move(gens), n),
                         "C(" + std::to_string(n) + ")",
                         {"cyclic", "abelian"}};
  expect_order(result.group, n, result.label);
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_dihedral(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw DomainError("D(n) needs an even order, got " + std::to_string(n));
  GroupSpecResult result;
  result.label = "D(" + std::to_string(n) + ")";
  result.family_tags = {"dihedral"};
  const std::size_t m = n / 2;
  if (m <= 2) {
    // Orders 2 and 4 have no faithful action on m points.
    std::vector<Permutation> gens = {Permutation::from_cycles(2 * m, {{0, 1}})};
    if (m == 2) gens.push_back(Permutation::from_cycles(4, {{2, 3}}));
    result.group = PermGroup::build(std::move(gens), 2 * m);
  } else {
    std::vector<Point> reflection(m);
    for (std::size_t x = 0; x < m; ++x) reflection[x] = static_cast<Point>((m - x) % m);
    result.group = PermGroup::build({cycle(m, 0, m - 1), Permutation(reflection)}, m);
  }
  expect_order(result.group, n, result.label);
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_dicyclic(std::size_t n) {
  if (n < 4 || n % 4 != 0) throw DomainError("Dic(n) needs an order divisible by 4, got " + std::to_string(n));
  const std::size_t m = n / 4;
  const std::size_t r = 2 * m;  // order of a
  // Point i + r e is a^i x^e; generators act by right multiplication.
  std::vector<Point> by_a(n), by_x(n);
  for (std::size_t i = 0; i < r; ++i) {
    by_a[i] = static_cast<Point>((i + 1) % r);
    by_a[i + r] = static_cast<Point>((i + r - 1) % r + r);
    by_x[i] = static_cast<Point>(i + r);
    by_x[i + r] = static_cast<Point>((i + m) % r);
  }
  GroupSpecResult result{PermGroup::build({Permutation(by_a), Permutation(by_x)}, n),
                         "Dic(" + std::to_string(n) + ")",
                         {"dicyclic"}};
  expect_order(result.group, n, result.label);
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_frobenius_c2(const std::vector<std::uint64_t>& invariants) {
  if (invariants.empty()) throw DomainError("Frob needs at least one invariant");
  std::size_t degree = 0;
  std::uint64_t order = 2;
  std::string label = "Frob(";
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    const std::uint64_t m = invariants[i];
    if (m < 3 || m % 2 == 0) {
      throw DomainError("Frob invariants must be odd and at least 3, got " + std::to_string(m));
    }
    degree += m;
    order *= m;
    label += (i ? "," : "") + std::to_string(m);
  }
  label += ")";
  if (degree > kMaxDegree) throw DomainError(label + " is too large");

  std::vector<Permutation> gens;
  std::vector<Point> inversion(degree);
  std::size_t offset = 0;
  for (std::uint64_t m : invariants) {
    std::vector<Point> shift(degree);
    std::iota(shift.begin(), shift.end(), Point{0});
    for (std::size_t x = 0; x < m; ++x) {
      shift[offset + x] = static_cast<Point>(offset + (x + 1) % m);
      inversion[offset + x] = static_cast<Point>(offset + (m - x) % m);
    }
    gens.emplace_back(std::move(shift));
    offset += m;
  }
  gens.emplace_back(std::move(inversion));
  PermGroup group = PermGroup::build(gens, degree);
  if (group.order() != order) {
    // Regular action on pairs (a, e), a in the abelian group, e in {0, 1}.
    const std::uint64_t a_size = order / 2;
    if (order > kMaxDegree) throw DomainError(label + " is too large");
    auto decode = [&](std::uint64_t idx) {
      std::vector<std::uint64_t> digits;
      for (std::uint64_t m : invariants) {
        digits.push_back(idx % m);
        idx /= m;
      }
      return digits;
    };
    auto encode = [&](const std::vector<std::uint64_t>& digits) {
      std::uint64_t idx = 0, place = 1;
      for (std::size_t i = 0; i < invariants.size(); ++i) {
        idx += digits[i] * place;
        place *= invariants[i];
      }
      return idx;
    };
    std::vector<Permutation> regular;
    for (std::size_t g = 0; g <= invariants.size(); ++g) {
      std::vector<Point> images(order);
      for (std::uint64_t point = 0; point < order; ++point) {
        auto digits = decode(point % a_size);
        std::uint64_t e = point / a_size;
        if (g < invariants.size()) {
          // (a, e) * shift_g: translation acts through the twist (-1)^e.
          const std::uint64_t m = invariants[g];
          digits[g] = e == 0 ? (digits[g] + 1) % m : (digits[g] + m - 1) % m;
        } else {
          e ^= 1U;
        }
        images[point] = static_cast<Point>(encode(digits) + e * a_size);
      }
      regular.emplace_back(std::move(images));
    }
    group = PermGroup::build(std::move(regular), order);
  }
  GroupSpecResult result{std::move(group), label, {"frobenius-c2"}};
  expect_order(result.group, order, result.label);
  add_solvability_tag(result);
  return result;
}

GroupSpecResult build_named(const std::string& name) {
  if (name == "Q8") {
    GroupSpecResult result = build_dicyclic(8);
    result.label = "Q8";
    result.family_tags = {"quaternion", "solvable"};
    return result;
  }
  if (name == "D8") return build_dihedral(8);
  if (name == "SD16") {
    std::vector<Point> rotation(8), twist(8);
    for (Point x = 0; x < 8; ++x) {
      rotation[x] = static_cast<Point>((x + 1) % 8);
      twist[x] = static_cast<Point>((3 * x) % 8);
    }
    GroupSpecResult result{PermGroup::build({Permutation(rotation), Permutation(twist)}, 8),
                           "SD16",
                           {"semidihedral", "solvable"}};
    expect_order(result.group, 16, result.label);
    return result;
  }
  throw DomainError("unknown group name " + name);
}

GroupSpecResult direct_product(const GroupSpecResult& a, const GroupSpecResult& b) {
  const std::size_t da = a.group.degree();
  const std::size_t db = b.group.degree();
  const std::size_t degree = da + db;
  if (degree > kMaxDegree) throw DomainError("direct product degree is too large");
  std::vector<Permutation> gens;
  for (const auto& g : a.group.generators()) gens.push_back(g.extended(degree, 0));
  for (const auto& g : b.group.generators()) gens.push_back(g.extended(degree, da));
  GroupSpecResult result{PermGroup::build(std::move(gens), degree),
                         a.label + " x " + b.label,
                         {"product"}};
  expect_order(result.group, a.group.order() * b.group.order(), result.label);
  const bool solvable = a.family_tags.count("solvable") && b.family_tags.count("solvable");
  result.family_tags.insert(solvable ? "solvable" : "nonsolvable");
  return result;
}

GroupSpecResult from_generators(std::vector<Permutation> generators, std::size_t degree,
                                std::string label) {
  GroupSpecResult result{PermGroup::build(std::move(generators), degree), std::move(label),
                         {"explicit"}};
  add_solvability_tag(result);
  return result;
}

}  // namespace charzero
