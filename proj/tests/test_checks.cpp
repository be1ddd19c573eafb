#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace ginv;
using test::g;
using test::ints;

namespace {

std::string failed_condition(const CheckResult& r) { return r.witness ? r.witness->condition : std::string(); }

} // namespace

TEST(Registry, NamesUniqueAndReferencesNonEmpty) {
  std::set<std::string_view> names;
  for (const auto& info : kCheckRegistry) {
    EXPECT_TRUE(names.insert(info.name).second) << info.name;
    EXPECT_FALSE(info.reference.empty());
    EXPECT_EQ(reference_for(info.name), info.reference);
  }
  EXPECT_THROW(reference_for("nope"), ArgumentError);
}

TEST(MwgDefinition, Examples) {
  const CMatrix a = test::sample4();
  for (std::size_t m = 1; m <= 3; ++m) EXPECT_TRUE(check_mwg_definition(a, m_weak_group(a, m), m).pass());

  const CMatrix b = ints({{2, 1}, {1, 1}});
  const auto r = check_mwg_definition(b, CMatrix(2, 2), 1);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_EQ(failed_condition(r), "X A^(k+1) = A^k");
  ASSERT_TRUE(r.witness->lhs && r.witness->rhs);
  EXPECT_EQ(*r.witness->rhs, CMatrix::identity(2));

  EXPECT_TRUE(check_mwg_definition(test::jordan_nilpotent(3), CMatrix(3, 3), 2).pass());
}

TEST(MwgDefinition, WrongMFailsOnThirdEquation) {
  const CMatrix a = test::sample4();
  const auto r = check_mwg_definition(a, m_weak_group(a, 2), 1);
  EXPECT_EQ(failed_condition(r), "(A^k)* A^(m+1) X = (A^k)* A^m");
}

TEST(Decomposition, ForcedFailures) {
  const CMatrix j2 = test::jordan_nilpotent(2);
  const auto r1 = check_decomposition(j2, {1, j2, CMatrix(2, 2)});
  EXPECT_EQ(r1.verdict, Verdict::Fail);
  EXPECT_EQ(failed_condition(r1), "x group invertible");

  const CMatrix b = ints({{2, 1}, {1, 1}});
  const auto r2 = check_decomposition(b, {1, CMatrix(2, 2), b});
  EXPECT_EQ(failed_condition(r2), "y nilpotent");

  auto d = mwg_decompose(test::sample4(), 2);
  d.y(0, 0) += g(1);
  EXPECT_EQ(failed_condition(check_decomposition(test::sample4(), d)), "A = x + y");
}

TEST(RelaxedAndPolar, Examples) {
  const CMatrix b = ints({{2, 1}, {1, 1}});
  for (const CMatrix& a : {test::e_worked(), b, test::jordan_nilpotent(3), test::sample3(), test::sample4()}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      EXPECT_TRUE(check_relaxed_systems(a, m).pass()) << a.to_string();
      EXPECT_TRUE(check_polar(a, m).pass()) << a.to_string();
    }
  }
  EXPECT_TRUE(polar_idempotent(b, 1).is_zero());
}

TEST(Laws, Examples) {
  const CMatrix e11 = ints({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const CMatrix j = ints({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}});
  for (std::size_t m = 1; m <= 3; ++m) {
    EXPECT_TRUE(check_laws(LawKind::Additive, e11, j, m).pass());
    EXPECT_EQ(m_weak_group(CMatrix(e11 + j), m), e11);
    EXPECT_TRUE(check_laws(LawKind::Additive, test::sample4(), CMatrix(4, 4), m).pass());
  }

  const CMatrix a = CMatrix::diagonal({g(2), g(0)});
  const CMatrix bd = CMatrix::diagonal({g(3), g(5)});
  EXPECT_TRUE(check_laws(LawKind::Product, a, bd, 2).pass());
  EXPECT_EQ(m_weak_group(CMatrix(a * bd), 2), CMatrix::diagonal({test::gs("1/6", "0"), g(0)}));
  EXPECT_TRUE(check_laws(LawKind::Product, test::sample4(), CMatrix::identity(4), 2).pass());

  const CMatrix two = CMatrix::identity(4) * g(2);
  EXPECT_TRUE(check_laws(LawKind::Product, test::sample4(), two, 3).pass());
}

TEST(Laws, HypothesisViolationsAreNotFailures) {
  const auto r = check_laws(LawKind::Product, test::e_worked(), ints({{0, 0}, {1, 0}}), 1);
  EXPECT_EQ(r.verdict, Verdict::HypothesisViolated);
  EXPECT_EQ(failed_condition(r), "a b = b a");
  const auto r2 = check_laws(LawKind::Additive, test::e_worked(), test::e_worked(), 1);
  EXPECT_EQ(r2.verdict, Verdict::HypothesisViolated);
}

TEST(BlocksCommutation, Examples) {
  const CMatrix e = test::e_worked();
  EXPECT_TRUE(check_blocks_and_commutation(e, 1, 2).pass());
  EXPECT_NE(m_weak_group(e, 1), core_ep(e));
  EXPECT_EQ(core_ep(e), ints({{1, 0}, {0, 0}}));
  EXPECT_FALSE(pierce_blocks(e, 1).c[0].is_zero());

  const CMatrix b = ints({{2, 1}, {1, 1}});
  EXPECT_TRUE(check_blocks_and_commutation(b, 2, 3).pass());
  EXPECT_EQ(power(m_weak_group(b, 2), 3), weak_group(power(b, 3)));
  EXPECT_THROW(check_blocks_and_commutation(b, 2, 2), ArgumentError);
}

TEST(BlocksCommutation, NormalFamilyHasZeroCorner) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = gen_product_pair({1 + seed % 5, 1, 3, seed}, ProductFamily::Diagonalizable);
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto blocks = pierce_blocks(p.a, m);
      EXPECT_TRUE(blocks.s.is_zero());
      EXPECT_TRUE(blocks.c[m - 1].is_zero());
      EXPECT_EQ(m_weak_group(p.a, m), core_ep(p.a));
    }
  }
}

TEST(OtherChecks, PassOnFixedMatrices) {
  for (const CMatrix& a : {test::e_worked(), test::jordan_nilpotent(3), test::sample3(), test::sample4()}) {
    EXPECT_TRUE(check_penrose(a).pass());
    EXPECT_TRUE(check_drazin_definition(a).pass());
    EXPECT_TRUE(check_gg_inverse(a).pass());
    EXPECT_TRUE(check_m1_reduction(a).pass());
    EXPECT_TRUE(check_weak_group_definition(a, weak_group(a)).pass());
    for (std::size_t m = 1; m <= 3; ++m) {
      EXPECT_TRUE(check_path_agreement(a, m).pass());
      EXPECT_TRUE(check_identities(a, m).pass());
      EXPECT_TRUE(check_double_inverse(a, m).pass());
      EXPECT_TRUE(check_triple_inverse(a, m).pass());
      EXPECT_TRUE(check_weak_group_of_inverse(a, m).pass());
      EXPECT_TRUE(check_core_ep_equivalence(a, m).pass());
      EXPECT_TRUE(check_power_reduction(a, m).pass());
      EXPECT_TRUE(check_reduction_coherence(a, m).pass());
      EXPECT_TRUE(check_cline_formula(a, m).pass());
    }
  }
}

TEST(WeakGroupDefinition, RejectsCoreEP) {
  const auto r = check_weak_group_definition(test::e_worked(), core_ep(test::e_worked()));
  EXPECT_EQ(r.verdict, Verdict::Fail);
}

TEST(Suite, ScalarSmokeRun) {
  const auto results = run_suite({1, 0, 3, 0}, 1, {1});
  const auto s = summarize(results);
  EXPECT_GT(s.total, 0u);
  EXPECT_EQ(s.failed, 0u);
  EXPECT_EQ(s.hypothesis_violated, 0u);
  EXPECT_EQ(s.passed, s.total);
}

TEST(Suite, DeterministicAndLabelled) {
  const auto r1 = run_suite({4, 2, 3, 9}, 3, {1, 2});
  const auto r2 = run_suite({4, 2, 3, 9}, 3, {1, 2});
  ASSERT_EQ(r1.size(), r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    EXPECT_EQ(r1[i].name, r2[i].name);
    EXPECT_EQ(r1[i].instance, r2[i].instance);
    EXPECT_EQ(r1[i].verdict, r2[i].verdict);
    EXPECT_EQ(r1[i].reference, reference_for(r1[i].name));
  }
  EXPECT_EQ(summarize(r1).failed, 0u);
  EXPECT_THROW(run_suite({4, 2, 3, 9}, 0, {1}), ArgumentError);
  EXPECT_THROW(run_suite({4, 2, 3, 9}, 1, {0}), ArgumentError);
}

TEST(Suite, SummaryTalliesVerdicts) {
  std::vector<CheckResult> rs(5);
  rs[1].verdict = Verdict::Fail;
  rs[3].verdict = Verdict::HypothesisViolated;
  const auto s = summarize(rs);
  EXPECT_EQ(s.total, 5u);
  EXPECT_EQ(s.passed, 3u);
  EXPECT_EQ(s.failed, 1u);
  EXPECT_EQ(s.hypothesis_violated, 1u);
}
