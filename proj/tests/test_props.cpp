#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace charzero;

namespace {

struct Built {
  GroupSpecResult spec;
  CharacterTable table;
};

Built built(GroupSpecResult spec) {
  auto table = character_table(spec.group);
  return {std::move(spec), std::move(table)};
}

std::optional<std::size_t> row_of_degree(const CharacterTable& t, std::uint64_t d) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) == d) return i;
  }
  return std::nullopt;
}

bool same_values(const ClassFunction& a, const ClassFunction& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t l = 0; l < a.values.size(); ++l) {
    if (!equal_values(a.values[l], b.values[l])) return false;
  }
  return true;
}

ClassFunction trivial_function(const CharacterTable& t) { return table_row(t, 0); }

std::vector<Built> assorted() {
  std::vector<Built> out;
  for (auto spec : {build_cyclic(6), build_symmetric(3), build_dihedral(10), build_named("Q8"), build_named("D8"),
                    build_named("SD16"), build_sl2(3), build_symmetric(4), build_alternating(4),
                    build_frobenius_c2({3, 3}), build_dicyclic(12), build_psl2(4), build_psl2(7), build_psl2(8),
                    build_alternating(6), build_sl2(5), build_symmetric(5), direct_product(build_psl2(4), build_cyclic(2)),
                    direct_product(build_psl2(4), build_cyclic(3)), direct_product(build_symmetric(3), build_cyclic(2))}) {
    out.push_back(built(std::move(spec)));
  }
  return out;
}

bool is_linear_trivial(const CharacterTable& t, std::size_t row) {
  for (const auto& v : t.row(row)) {
    if (!(v.is_rational() && v.rational_part() == 1)) return false;
  }
  return true;
}

}  // namespace

TEST(InnerProduct, Basics) {
  const auto a5 = character_table(build_alternating(5).group);
  for (std::size_t i = 0; i < a5.size(); ++i) {
    for (std::size_t j = 0; j < a5.size(); ++j) {
      EXPECT_EQ(inner_product(table_row(a5, i), table_row(a5, j)), Cyclotomic::integer(i == j ? 1 : 0));
    }
  }
  const auto other = character_table(build_alternating(5).group);
  EXPECT_THROW(inner_product(table_row(a5, 0), table_row(other, 0)), DomainError);
  // A half-integral class function has a non-integral norm.
  auto half = table_row(a5, 0);
  half.values[0] = Cyclotomic::integer(0);
  EXPECT_THROW(inner_product(half, half), DomainError);
}

TEST(InnerProduct, PermutationCharacterIsTransitive) {
  for (std::size_t n : {5, 6, 7, 8}) {
    const auto lr = build_lambda_rho(n);
    ClassFunction one{lr.pi.classes, std::vector<Cyclotomic>(lr.pi.values.size(), Cyclotomic::integer(1))};
    EXPECT_EQ(inner_product(one, one), Cyclotomic::integer(1));
    EXPECT_EQ(inner_product(lr.pi, one), Cyclotomic::integer(1)) << n;
    EXPECT_EQ(inner_product(lr.pi, lr.pi), Cyclotomic::integer(2)) << n;  // doubly transitive
  }
}

TEST(ZeroClasses, Examples) {
  const auto s3 = character_table(build_symmetric(3).group);
  EXPECT_TRUE(zero_classes(s3, 0).empty());
  EXPECT_TRUE(zero_classes(s3, 1).empty());
  EXPECT_EQ(zero_classes(s3, 2), (std::vector<std::size_t>{1}));

  const auto l27 = character_table(build_psl2(7).group);
  const auto six = row_of_degree(l27, 6);
  ASSERT_TRUE(six);
  const auto z = zero_classes(l27, *six);
  ASSERT_EQ(z.size(), 2u);
  std::set<std::uint64_t> orders;
  for (auto c : z) orders.insert(l27.classes()[c].element_order);
  EXPECT_EQ(orders, (std::set<std::uint64_t>{3, 4}));
}

TEST(ZeroClasses, LinearRowsNeverVanish) {
  for (const auto& b : assorted()) {
    for (std::size_t i = 0; i < b.table.size(); ++i) {
      if (b.table.degree(i) == 1) {
        EXPECT_TRUE(zero_classes(b.table, i).empty()) << b.spec.label;
      } else {
        EXPECT_FALSE(zero_classes(b.table, i).empty()) << b.spec.label;
      }
    }
  }
}

TEST(PropertyStar, EvenCharacteristicPsl) {
  for (std::uint64_t q : {4, 8, 16}) {
    const auto t = character_table(build_psl2(q).group);
    EXPECT_TRUE(check_property_star(t).holds) << q;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.degree(i) % 2 == 0) EXPECT_EQ(zero_classes(t, i).size(), 1u) << q;
    }
  }
}

TEST(PropertyStar, Examples) {
  EXPECT_TRUE(check_property_star(character_table(build_sl2(3).group)).holds);
  EXPECT_TRUE(check_property_star(character_table(build_cyclic(5).group)).holds);  // no even rows
  const auto q8 = check_property_star(character_table(build_named("Q8").group));
  EXPECT_FALSE(q8.holds);
  EXPECT_EQ(q8.witness, std::optional<std::size_t>(4));
  EXPECT_FALSE(check_property_star(character_table(build_psl2(7).group)).holds);
}

TEST(PropertyStarStar, Examples) {
  EXPECT_TRUE(check_property_star_star(character_table(build_psl2(7).group)).holds);
  EXPECT_TRUE(check_property_star_star(character_table(direct_product(build_psl2(4), build_cyclic(2)).group)).holds);
  const auto a6 = character_table(build_alternating(6).group);
  const auto verdict = check_property_star_star(a6);
  ASSERT_FALSE(verdict.holds);
  ASSERT_TRUE(verdict.witness);
  EXPECT_EQ(a6.degree(*verdict.witness) % 2, 0u);
  EXPECT_GT(zero_classes(a6, *verdict.witness).size(), 2u);
}

TEST(PropertyStarStar, ImpliedByStar) {
  for (const auto& b : assorted()) {
    const auto star = check_property_star(b.table);
    const auto star_star = check_property_star_star(b.table);
    if (star.holds) EXPECT_TRUE(star_star.holds) << b.spec.label;
    bool some_even_over_two = false;
    for (std::size_t i = 0; i < b.table.size(); ++i) {
      some_even_over_two |= b.table.degree(i) % 2 == 0 && zero_classes(b.table, i).size() > 2;
    }
    EXPECT_EQ(star_star.holds, !some_even_over_two) << b.spec.label;
  }
}

TEST(CaseClassifier, Classification) {
  const auto label = [](GroupSpecResult s) {
    const auto t = character_table(s.group);
    return to_string(classify_theorem_b(s.group, t));
  };
  EXPECT_EQ(label(build_cyclic(6)), "normal-abelian-sylow2");
  EXPECT_EQ(label(build_dihedral(10)), "frobenius-c2");
  EXPECT_EQ(label(build_frobenius_c2({3, 5})), "frobenius-c2");
  EXPECT_EQ(label(build_sl2(3)), "sl23");
  EXPECT_EQ(label(build_psl2(8)), "psl2-even");
  EXPECT_EQ(label(build_alternating(5)), "psl2-even");
  EXPECT_EQ(label(build_symmetric(4)), "none");
  EXPECT_EQ(label(build_named("Q8")), "none");
  EXPECT_EQ(label(build_alternating(6)), "none");
  // A4 has a normal Klein four Sylow subgroup; the first listed case wins.
  EXPECT_EQ(label(build_alternating(4)), "normal-abelian-sylow2");
}

TEST(CaseClassifier, MatchesPropertyStar) {
  for (const auto& b : assorted()) {
    EXPECT_EQ(check_property_star(b.table).holds, classify_theorem_b(b.spec.group, b.table) != TheoremBCase::none)
        << b.spec.label;
  }
}

TEST(CaseClassifier, ReferenceFingerprintsDiffer) {
  EXPECT_NE(reference_fingerprint("SL(2,3)"), reference_fingerprint("S(4)"));
  EXPECT_EQ(reference_fingerprint("SL(2,3)").degrees, (std::vector<std::uint64_t>{1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(reference_fingerprint("S(4)").degrees, (std::vector<std::uint64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(reference_fingerprint("PSL(2,8)").order, 504u);
}

TEST(TwoZeroClasses, Examples) {
  const auto verdict = [](GroupSpecResult s) {
    const auto t = character_table(s.group);
    return check_proposition3(s.group, t);
  };
  const auto s4 = verdict(build_symmetric(4));
  EXPECT_TRUE(s4.holds);
  EXPECT_EQ(s4.case_label, "3");
  const auto l24 = verdict(build_psl2(4));
  EXPECT_TRUE(l24.holds);
  EXPECT_EQ(l24.case_label, "4");
  const auto l27 = verdict(build_psl2(7));
  EXPECT_TRUE(l27.holds);
  EXPECT_EQ(l27.case_label, "4");
  const auto a6 = verdict(build_alternating(6));
  EXPECT_FALSE(a6.holds);
  EXPECT_EQ(a6.case_label, "");
  EXPECT_EQ(verdict(build_cyclic(4)).case_label, "abelian");
}

TEST(DefectZero, Examples) {
  const auto contains = [](const CharacterTable& t, std::uint64_t degree, std::uint64_t p) {
    for (const auto& d : defect_zero_search(t)) {
      if (t.degree(d.row) == degree && d.prime == p) return true;
    }
    return false;
  };
  EXPECT_TRUE(contains(character_table(build_alternating(5).group), 4, 2));
  EXPECT_TRUE(contains(character_table(build_alternating(7).group), 14, 7));
  EXPECT_TRUE(contains(character_table(build_psl2(8).group), 8, 2));
  EXPECT_TRUE(defect_zero_search(character_table(build_cyclic(8).group)).empty());
}

TEST(DefectZero, VanishesOnPSingularClasses) {
  for (const auto& b : assorted()) {
    for (const auto& d : defect_zero_search(b.table)) {
      EXPECT_EQ(b.table.degree(d.row) % 2, 0u);
      EXPECT_EQ(p_part(b.table.degree(d.row), d.prime), p_part(b.table.group_order(), d.prime));
      for (std::size_t l = 0; l < b.table.classes().count(); ++l) {
        if (b.table.classes()[l].element_order % d.prime == 0) {
          EXPECT_TRUE(b.table.value(d.row, l).is_zero()) << b.spec.label;
        }
      }
    }
  }
}

TEST(LambdaRho, PointValues) {
  EXPECT_EQ(lambda_value(Permutation::identity(8)), 21);
  EXPECT_EQ(rho_value(Permutation::identity(8)), 20);
  EXPECT_EQ(lambda_value(parse_cycles("(1,2,3,4,5,6,7)", 8)), 0);
  // pi = 4, delta = 2.
  const auto g = parse_cycles("(1,2)(3,4)", 8);
  EXPECT_EQ(lambda_value(g), 1);
  EXPECT_EQ(rho_value(g), 4);
}

TEST(LambdaRho, AreIrreducibleRows) {
  for (std::size_t n : {8, 9}) {
    const auto t = character_table(build_alternating(n).group);
    const auto lr = build_lambda_rho(t.shared_classes());
    EXPECT_EQ(lr.lambda.values[0], Cyclotomic::integer(1, (n - 1) * (n - 2) / 2));
    EXPECT_EQ(lr.rho.values[0], Cyclotomic::integer(1, n * (n - 3) / 2));
    EXPECT_EQ(inner_product(lr.lambda, lr.lambda), Cyclotomic::integer(1)) << n;
    EXPECT_EQ(inner_product(lr.rho, lr.rho), Cyclotomic::integer(1)) << n;
    EXPECT_EQ(inner_product(lr.lambda, lr.rho), Cyclotomic::integer(0)) << n;
    bool lambda_row = false, rho_row = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      lambda_row |= same_values(table_row(t, i), lr.lambda);
      rho_row |= same_values(table_row(t, i), lr.rho);
    }
    EXPECT_TRUE(lambda_row) << n;
    EXPECT_TRUE(rho_row) << n;
  }
  const auto a5 = character_table(build_alternating(5).group);
  EXPECT_EQ(inner_product(trivial_function(a5), trivial_function(a5)), Cyclotomic::integer(1));
}

TEST(AlternatingVanishing, VanishingHolds) {
  for (std::size_t n : {8, 9, 10, 11, 12}) {
    const auto check = verify_step1_vanishing(n);
    EXPECT_TRUE(check.holds()) << n;
    ASSERT_EQ(check.a.size(), 3u);
    ASSERT_EQ(check.b.size(), 3u);
    for (auto v : check.lambda_at_a) EXPECT_EQ(v, 0);
    for (auto v : check.rho_at_b) EXPECT_EQ(v, 0);
    for (const auto& x : check.a) EXPECT_EQ(lambda_value(x), 0);
    for (const auto& x : check.b) EXPECT_EQ(rho_value(x), 0);
  }
  const auto t8 = character_table(build_alternating(8).group);
  EXPECT_TRUE(verify_step1_vanishing(8, &t8.classes()).holds());
  EXPECT_THROW(step1_a_elements(7), DomainError);
  EXPECT_THROW(step1_b_elements(5), DomainError);
}

TEST(Torus, ClassCounts) {
  const auto q9 = torus_class_count(9, TorusSide::plus);
  EXPECT_EQ(q9.torus_order, 5u);
  EXPECT_EQ(q9.class_count, 2u);
  EXPECT_EQ(q9.quarter, std::optional<std::uint64_t>(2));
  const auto q13 = torus_class_count(13, TorusSide::plus);
  EXPECT_EQ(q13.class_count, 3u);
  EXPECT_EQ(q13.quarter, std::optional<std::uint64_t>(3));
  const auto q7 = torus_class_count(7, TorusSide::plus);
  EXPECT_EQ(q7.torus_order, 4u);
  EXPECT_EQ(q7.class_count, 2u);
  EXPECT_FALSE(q7.quarter);
  EXPECT_FALSE(q7.note.empty());
  EXPECT_EQ(torus_class_count(8, TorusSide::minus).class_count, 3u);  // order 7 in L2(8)
  EXPECT_EQ(torus_class_count(8, TorusSide::plus).class_count, 4u);   // order 9: orders 3 and 9
}

TEST(Torus, XiCounts) {
  const auto f2 = theorem_c_xi_counts(2);
  EXPECT_EQ(f2.torus_order, 5u);
  EXPECT_EQ(f2.exact_order_classes, 2u);
  EXPECT_EQ(f2.claimed, 2u);
  const auto f3 = theorem_c_xi_counts(3);
  EXPECT_EQ(f3.exact_order_classes, 3u);
  EXPECT_EQ(f3.torus_classes, 4u);
  EXPECT_EQ(f3.claimed, 4u);
  const auto f4 = theorem_c_xi_counts(4);
  EXPECT_EQ(f4.exact_order_classes, 8u);
  EXPECT_EQ(f4.torus_classes, 8u);
}

TEST(VerdictReport, Fields) {
  const auto spec = build_psl2(8);
  const auto t = character_table(spec.group);
  const auto r = verdict_report(spec, t);
  EXPECT_EQ(r.group_label, "PSL(2,8)");
  EXPECT_EQ(r.order, 504u);
  EXPECT_EQ(r.class_count, 9u);
  EXPECT_EQ(r.characters.size(), 9u);
  EXPECT_TRUE(r.star.holds && r.star_star.holds);
  EXPECT_EQ(r.theorem_b_case, TheoremBCase::psl2_even);
  EXPECT_TRUE(is_linear_trivial(t, 0));
  for (const auto& c : r.characters) {
    if (c.degree > 1) EXPECT_FALSE(c.zero_classes.empty());
  }
}
