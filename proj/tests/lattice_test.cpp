#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "group_checks.hpp"
#include "oracles.hpp"
#include "profscope/lattice.hpp"

using namespace profscope;

namespace {

const FiniteGroup kS3 = make_dihedral(3);
const FiniteGroup kV4 = direct_power(make_cyclic(2), 2);

std::set<Element> as_set(const Subgroup& s) {
  auto v = s.elements();
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Closure, EmptyGeneratorsGiveTrivial) {
  EXPECT_TRUE(closure(make_cyclic(8), {}).is_trivial());
}

TEST(Closure, CyclicArithmetic) {
  EXPECT_EQ(as_set(closure(make_cyclic(8), {2})), (std::set<Element>{0, 2, 4, 6}));
}

TEST(Closure, TranspositionAndThreeCycleGenerateS3) {
  // Elements (x, y) ↦ 2x + y: 1 is a reflection, 2 is a rotation.
  for (Element refl : {1u, 3u, 5u})
    for (Element rot : {2u, 4u}) EXPECT_TRUE(closure(kS3, {refl, rot}).is_whole());
}

TEST(AllSubgroups, KleinFourMatchesPowersetOracle) {
  EXPECT_EQ(all_subgroups(kV4).size(), 5u);
  EXPECT_EQ(oracle::powerset_subgroup_count(kV4), 5u);
}

TEST(AllSubgroups, CyclicTwoGroupIsAChain) {
  const auto lat = all_subgroups(make_cyclic(8));
  ASSERT_EQ(lat.size(), 4u);
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) EXPECT_TRUE(lat.subgroups[i].subset_of(lat.subgroups[i + 1]));
  EXPECT_EQ(lat.covers.size(), 3u);
}

TEST(AllSubgroups, S3CountsAndNormality) {
  const auto lat = all_subgroups(kS3);
  EXPECT_EQ(lat.size(), 6u);
  std::size_t normal = std::count(lat.normal_mask.begin(), lat.normal_mask.end(), true);
  std::size_t oracle_normal = 0;
  for (auto mask : oracle::powerset_subgroups(kS3)) oracle_normal += oracle::conj_closed(kS3, mask);
  EXPECT_EQ(normal, oracle_normal);
  EXPECT_EQ(normal, 3u);  // 1, A3, S3
}

TEST(AllSubgroups, CountsMatchPowersetOracle) {
  for (const auto& g : corpus::small_groups()) {
    if (g.order() > 18) continue;
    EXPECT_EQ(all_subgroups(g).size(), oracle::powerset_subgroup_count(g)) << g.label();
  }
}

TEST(AllSubgroups, BudgetError) {
  EXPECT_THROW(all_subgroups(make_cyclic(600)), BudgetExceeded);
  EXPECT_NO_THROW(all_subgroups(make_cyclic(600), 1024));
}

TEST(AllSubgroups, CanonicalOrderAndValidity) {
  for (const auto& g : corpus::small_groups()) {
    const auto lat = all_subgroups(g);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      EXPECT_TRUE(lat.subgroups[i].is_valid());
      if (i) {
        EXPECT_LT(lat.subgroups[i - 1], lat.subgroups[i]);
      }
    }
    EXPECT_TRUE(lat.subgroups.front().is_trivial());
    EXPECT_TRUE(lat.subgroups.back().is_whole());
  }
}

TEST(AllSubgroups, MeetsAndJoinsStayInTheList) {
  for (const auto& g : corpus::small_groups()) {
    const auto lat = all_subgroups(g);
    for (const auto& a : lat.subgroups)
      for (const auto& b : lat.subgroups) {
        ASSERT_LT(lat.index_of(intersection(a, b)), lat.size()) << g.label();
        ASSERT_LT(lat.index_of(join(a, b)), lat.size()) << g.label();
      }
  }
}

TEST(AllSubgroups, CoversAreExactlyTheCoveringRelation) {
  for (const auto& g : corpus::small_groups()) {
    if (g.order() > 32) continue;
    const auto lat = all_subgroups(g);
    std::set<std::pair<std::size_t, std::size_t>> expect;
    const auto& s = lat.subgroups;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == j || !s[i].subset_of(s[j])) continue;
        bool between = false;
        for (std::size_t m = 0; m < s.size() && !between; ++m)
          between = m != i && m != j && s[i].subset_of(s[m]) && s[m].subset_of(s[j]);
        if (!between) expect.emplace(i, j);
      }
    std::set<std::pair<std::size_t, std::size_t>> got(lat.covers.begin(), lat.covers.end());
    EXPECT_EQ(got, expect) << g.label();
  }
}

TEST(NormalSubgroups, NormalEnumerationMatchesFilteredLattice) {
  for (const auto& g : corpus::small_groups()) {
    EXPECT_EQ(normal_subgroups(g), all_subgroups(g).normal_subgroups()) << g.label();
  }
}

TEST(NormalSubgroups, AbelianGroupsHaveOnlyNormalSubgroups) {
  EXPECT_EQ(normal_subgroups(kV4).size(), 5u);
}

TEST(NormalSubgroups, LargeGroupWithinNormalBudget) {
  const auto g = direct_product(make_dihedral(4), make_cyclic(128));  // order 1024
  const auto normals = normal_subgroups(g);
  EXPECT_GT(normals.size(), 2u);
  for (const auto& n : normals) EXPECT_TRUE(is_normal(n));
}

TEST(Maximal, CyclicTwoGroupHasUniqueMaximal) {
  const auto m = maximal_subgroups(make_cyclic(8));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.front(), closure(make_cyclic(8), {2}));
}

TEST(Maximal, MaximalNormalOfS3IsA3) {
  const auto m = maximal_normal_subgroups(kS3);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.front().order(), 3u);
}

TEST(Frattini, Examples) {
  const auto c8 = make_cyclic(8);
  EXPECT_EQ(frattini(c8), closure(c8, {2}));
  EXPECT_TRUE(frattini(kV4).is_trivial());
  EXPECT_TRUE(psi(kV4).is_trivial());
  EXPECT_TRUE(frattini(kS3).is_trivial());
  EXPECT_EQ(psi(kS3).order(), 3u);
  EXPECT_TRUE(frattini(make_cyclic(1)).is_trivial());
  EXPECT_TRUE(psi(make_cyclic(1)).is_trivial());
}

TEST(Frattini, SupplementBiconditional) {
  for (const auto& g : corpus::small_groups()) EXPECT_EQ(checks::frattini_supplement_biconditional(g), "");
}

TEST(Frattini, ContainedInPsiAndEqualForNilpotent) {
  for (const auto& g : corpus::small_groups()) {
    const auto phi = frattini(g), ps = psi(g);
    EXPECT_TRUE(phi.subset_of(ps)) << g.label();
    if (is_nilpotent(g)) {
      EXPECT_EQ(phi, ps) << g.label();
    }
  }
}

TEST(Frattini, PrimeSetsOfOrderAndFrattiniIndexAgree) {
  for (const auto& g : corpus::small_groups())
    EXPECT_EQ(checks::primes_of(g.order()), checks::primes_of(frattini(g).index())) << g.label();
}

TEST(Nilpotent, StructuralDecision) {
  EXPECT_TRUE(is_nilpotent(make_dihedral(4)));
  EXPECT_TRUE(is_nilpotent(direct_product(make_dihedral(4), make_cyclic(3))));
  EXPECT_FALSE(is_nilpotent(kS3));
  EXPECT_FALSE(is_nilpotent(corpus::alternating4()));
}

TEST(CenterDerived, S3) {
  EXPECT_TRUE(center(kS3).is_trivial());
  EXPECT_EQ(derived_subgroup(kS3).order(), 3u);
}

TEST(CenterDerived, AbelianCase) {
  const auto g = direct_product(make_cyclic(2), make_cyclic(6));
  EXPECT_TRUE(center(g).is_whole());
  EXPECT_TRUE(derived_subgroup(g).is_trivial());
}

TEST(CenterDerived, MatchOracles) {
  for (const auto& g : corpus::small_groups()) {
    EXPECT_EQ(center(g).order(), oracle::center_size(g)) << g.label();
    EXPECT_EQ(as_set(derived_subgroup(g)), oracle::derived_by_saturation(g)) << g.label();
  }
}

TEST(CenterDerived, SchurBound) {
  for (const auto& g : corpus::small_groups()) {
    const std::size_t idx = center(g).index();
    std::size_t bound = 1;
    for (std::size_t i = 0; i < idx; ++i) bound *= idx;
    EXPECT_LE(derived_subgroup(g).order(), bound) << g.label();
  }
}

TEST(HomCount, Examples) {
  EXPECT_EQ(hom_count(make_cyclic(4), make_cyclic(2)), 2u);
  EXPECT_EQ(hom_count(kV4, make_cyclic(2)), 4u);
  EXPECT_EQ(hom_count(kS3, make_cyclic(3)), 1u);
  EXPECT_EQ(oracle::hom_count_exhaustive(kS3, make_cyclic(3)), 1u);
}

TEST(HomCount, MatchesExhaustiveOracle) {
  const std::vector<FiniteGroup> sources{make_cyclic(4), kV4, kS3, make_cyclic(6), make_dihedral(4)};
  const std::vector<FiniteGroup> targets{make_cyclic(2), make_cyclic(3), make_cyclic(4), kV4};
  for (const auto& h : sources)
    for (const auto& a : targets)
      EXPECT_EQ(hom_count(h, a), oracle::hom_count_exhaustive(h, a)) << h.label() << " -> " << a.label();
}

TEST(HomCount, RejectsNonAbelianTarget) { EXPECT_THROW(hom_count(make_cyclic(2), kS3), InvalidArgument); }

TEST(Complements, KleinFour) {
  const auto first = closure(kV4, {2});  // (1,0)
  const auto comps = complements(kV4, first);
  EXPECT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps.size(), hom_count(make_cyclic(2), make_cyclic(2)));
}

TEST(Complements, NonSplitCyclic) {
  const auto c4 = make_cyclic(4);
  EXPECT_TRUE(complements(c4, closure(c4, {2})).empty());
}

TEST(Complements, C2xC4) {
  const auto g = direct_product(make_cyclic(2), make_cyclic(4));
  const auto n = closure(g, {1});  // 0 × C4
  ASSERT_EQ(n.order(), 4u);
  EXPECT_EQ(complements(g, n).size(), 2u);
  EXPECT_EQ(hom_count(make_cyclic(2), make_cyclic(4)), 2u);
}

TEST(Complements, RejectsNonNormal) {
  EXPECT_THROW(complements(kS3, closure(kS3, {1})), NotNormal);
}

TEST(Complements, CentralSplitIdentity) {
  const auto instances = checks::central_split_instances(corpus::small_groups());
  EXPECT_GE(instances.size(), 20u);
  for (const auto& inst : instances)
    EXPECT_EQ(inst.complement_count, inst.hom_count) << inst.group.label() << " N order " << inst.central.order();
}

TEST(Dot, ChainExport) {
  const auto dot = to_dot(all_subgroups(make_cyclic(8)), "C8");
  EXPECT_NE(dot.find("n0 [label=\"o=1N\"]"), std::string::npos);
  EXPECT_NE(dot.find("n3 [label=\"o=8N\"]"), std::string::npos);
  EXPECT_NE(dot.find("n2 -> n3;"), std::string::npos);
  EXPECT_EQ(dot, to_dot(all_subgroups(make_cyclic(8)), "C8"));
}

TEST(Dot, NonNormalNodesUnmarked) {
  const auto dot = to_dot(all_subgroups(kS3));
  EXPECT_NE(dot.find("[label=\"o=2\"]"), std::string::npos);
}

TEST(MinGenerators, SmallGroups) {
  EXPECT_EQ(min_generator_count(make_cyclic(1)), 0u);
  EXPECT_EQ(min_generator_count(make_cyclic(12)), 1u);
  EXPECT_EQ(min_generator_count(direct_power(make_cyclic(2), 3)), 3u);
  EXPECT_EQ(min_generator_count(kS3), 2u);
}

TEST(Frattini, NilpotentShortcutMatchesLattice) {
  for (const auto& g : corpus::small_groups()) {
    if (!is_nilpotent(g)) {
      EXPECT_THROW(frattini_nilpotent(g), InvalidArgument);
      continue;
    }
    EXPECT_EQ(frattini_nilpotent(g), frattini(g)) << g.label();
    EXPECT_EQ(frattini_any(g), frattini(g)) << g.label();
  }
}
