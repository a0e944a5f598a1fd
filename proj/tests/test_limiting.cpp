#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "support/brute_force.hpp"
#include "symwalk/limiting.hpp"

namespace symwalk {
namespace {

constexpr double kPi = std::numbers::pi;

WalkSpectrum cycle_walk(int p, int n) {
  return spectrum(ClassFunction::indicator(Partition::cycle_class(p, n)));
}

BigRational hook_ratio(int k, int p, int n) {
  const Partition hook = Partition::hook(k, n);
  return BigRational(character(hook, Partition::cycle_class(p, n)), dimension(hook));
}

TEST(EigenvalueGroups, DistinctEigenvaluesOnS3) {
  const auto groups = eigenvalue_groups(cycle_walk(2, 3));
  ASSERT_EQ(groups.groups.size(), 3u);
  EXPECT_EQ(groups.groups[0], std::vector<Partition>{Partition{3}});
  EXPECT_EQ(groups.groups[1], std::vector<Partition>{Partition({2, 1})});
  EXPECT_EQ(groups.groups[2], std::vector<Partition>{Partition::identity(3)});
}

TEST(EigenvalueGroups, ZeroFunctionIsOneGroup) {
  const auto groups = eigenvalue_groups(spectrum(ClassFunction(6)));
  ASSERT_EQ(groups.groups.size(), 1u);
  EXPECT_EQ(groups.groups[0].size(), 11u);
}

TEST(EigenvalueGroups, MirroredHooksCollideForOddCycles) {
  const int n = 5;
  const auto spec = cycle_walk(3, n);
  const auto groups = eigenvalue_groups(spec);
  for (int k = 1; k <= n; ++k)
    for (int k2 = 1; k2 <= n; ++k2) {
      const bool same = groups.group_of(Partition::hook(k, n)) ==
                        groups.group_of(Partition::hook(k2, n));
      EXPECT_EQ(same, k == k2 || k == n - k2 + 1) << "k=" << k << " k'=" << k2;
    }
}

TEST(EigenvalueGroups, FormAPartitionByExactEigenvalue) {
  for (int n = 2; n <= 8; ++n) {
    auto table = std::make_shared<const CharacterTable>(character_table(n));
    for (const auto& gamma : table->partitions) {
      if (gamma.is_identity()) continue;
      const WalkSpectrum spec(ClassFunction::indicator(gamma), table);
      const auto groups = eigenvalue_groups(spec);
      std::set<Partition> covered;
      for (const auto& g : groups.groups)
        for (const auto& nu : g) EXPECT_TRUE(covered.insert(nu).second);
      EXPECT_EQ(covered.size(), table->order());
      for (const auto& a : spec.lines())
        for (const auto& b : spec.lines())
          EXPECT_EQ(groups.group_of(a.rep) == groups.group_of(b.rep),
                    a.eigenvalue == b.eigenvalue);
    }
  }
}

TEST(LimitingDistribution, TranspositionsOnS3) {
  const auto dist = limiting_class_distribution(cycle_walk(2, 3), Partition::identity(3));
  EXPECT_EQ(dist.per_element(Partition{3}), BigRational(1, 6));
  // C(4,2)/(3!)^2
  EXPECT_EQ(dist.per_element(Partition{3}), BigRational(binomial(4, 2), 36));
  EXPECT_EQ(dist.total(), 1);
}

TEST(LimitingDistribution, ThreeCyclesOnS3) {
  const auto dist = limiting_class_distribution(cycle_walk(3, 3), Partition::identity(3));
  EXPECT_EQ(dist.per_element(Partition{3}), BigRational(2, 9));
  EXPECT_EQ(dist.probability(Partition({2, 1})), 0);
}

TEST(LimitingDistribution, ConservesMassExactly) {
  for (int n = 1; n <= 8; ++n) {
    auto table = std::make_shared<const CharacterTable>(character_table(n));
    for (const auto& gamma : table->partitions) {
      if (gamma.is_identity()) continue;
      const WalkSpectrum spec(ClassFunction::indicator(gamma), table);
      for (const auto& mu : {Partition::identity(n), Partition{n}}) {
        const auto dist = limiting_class_distribution(spec, mu);
        EXPECT_EQ(dist.total(), 1) << "n=" << n << " gamma=" << gamma.to_string();
        for (const auto& c : dist.classes) {
          EXPECT_GE(c.probability, 0);
          EXPECT_LE(c.probability, 1);
          EXPECT_EQ(c.per_element * c.class_size, c.probability);
        }
      }
    }
  }
}

TEST(TableRow, Selection) {
  EXPECT_EQ(table_row(6, 2), TableRow::even_p_low);
  EXPECT_EQ(table_row(7, 4), TableRow::even_p_low);
  EXPECT_EQ(table_row(8, 6), TableRow::even_n_even_p_high);
  EXPECT_EQ(table_row(9, 6), TableRow::odd_n_even_p_high);
  EXPECT_EQ(table_row(8, 8), TableRow::even_n_full_cycle);
  EXPECT_EQ(table_row(2, 2), TableRow::even_n_full_cycle);
  EXPECT_EQ(table_row(8, 5), TableRow::even_n_odd_p);
  EXPECT_EQ(table_row(9, 5), TableRow::odd_p_low);
  EXPECT_EQ(table_row(9, 7), TableRow::odd_p_high);
  EXPECT_EQ(table_row(9, 9), TableRow::odd_n_full_cycle);
  EXPECT_THROW(table_row(5, 1), DomainError);
  EXPECT_THROW(table_ncycle_probability(5, 6), DomainError);
}

TEST(TableNCycleProbability, ClosedFormRows) {
  EXPECT_EQ(table_ncycle_probability(8, 3).value, 0);
  for (int n = 2; n <= 10; ++n) {
    const BigInt order = factorial(n);
    EXPECT_EQ(table_ncycle_probability(n, 2).value,
              BigRational(binomial(2 * n - 2, n - 1), order * order));
  }
  const BigInt o9 = factorial(9);
  BigInt sum = 0;
  for (int k = 1; k <= 3; ++k) sum += binomial(8, k - 1) * binomial(8, k - 1);
  const BigRational expected =
      BigRational(2 * sum, o9 * o9) + BigRational(4 * binomial(7, 5) * binomial(7, 5), o9 * o9);
  EXPECT_EQ(table_ncycle_probability(9, 6).value, expected);
}

TEST(TableNCycleProbability, CertifiedByEigenvalueGrouping) {
  for (int n = 2; n <= 10; ++n) {
    auto table = std::make_shared<const CharacterTable>(character_table(n));
    for (int p = 2; p <= n; ++p) {
      const WalkSpectrum spec(ClassFunction::indicator(Partition::cycle_class(p, n)), table);
      const auto dist = limiting_class_distribution(spec, Partition::identity(n));
      const auto entry = table_ncycle_probability(n, p);
      EXPECT_EQ(entry.value, dist.per_element(Partition{n}))
          << "n=" << n << " p=" << p << " row " << row_label(entry.row);
    }
  }
}

TEST(TableNCycleProbability, EvenFullCycleMatchesTranspositions) {
  for (int n = 2; n <= 10; n += 2) {
    const auto full = limiting_class_distribution(cycle_walk(n, n), Partition::identity(n));
    const auto swaps = limiting_class_distribution(cycle_walk(2, n), Partition::identity(n));
    EXPECT_EQ(full.per_element(Partition{n}), swaps.per_element(Partition{n}));
  }
}

TEST(HookRatio, InjectiveForSmallEvenCycles) {
  for (int n = 3; n <= 10; ++n)
    for (int p = 2; p <= (n + 1) / 2; p += 2) {
      std::set<BigRational> values;
      for (int k = 1; k <= n; ++k) {
        values.insert(hook_ratio(k, p, n));
        if (k > 1) {
          EXPECT_GT(hook_ratio(k, p, n), hook_ratio(k - 1, p, n));
        }
      }
      EXPECT_EQ(values.size(), static_cast<std::size_t>(n)) << "n=" << n << " p=" << p;
    }
}

TEST(HookRatio, MirrorSymmetricForSmallOddCycles) {
  for (int n = 3; n <= 9; n += 2)
    for (int p = 3; p <= (n + 1) / 2; p += 2)
      for (int k = 1; k <= n; ++k)
        for (int k2 = 1; k2 <= n; ++k2)
          EXPECT_EQ(hook_ratio(k, p, n) == hook_ratio(k2, p, n), k == k2 || k == n - k2 + 1)
              << "n=" << n << " p=" << p << " k=" << k << " k'=" << k2;
}

TEST(TvDistance, UniformIsZero) {
  const int n = 5;
  ExactDistribution uniform;
  uniform.n = n;
  for (const auto& p : enumerate_partitions(n)) {
    const BigInt size = class_size(p);
    uniform.classes.push_back({p, size, BigRational(size, factorial(n)), BigRational(1, factorial(n))});
  }
  EXPECT_EQ(tv_distance(uniform, Support::symmetric_group), 0);
  EXPECT_THROW(tv_distance(uniform, Support::alternating_group), SupportMismatch);
}

TEST(TvDistance, TranspositionBoundOnS7) {
  const int n = 7;
  const auto dist = limiting_class_distribution(cycle_walk(2, n), Partition::identity(n));
  const BigRational tv = tv_distance(dist, Support::symmetric_group);
  const BigRational pointwise = BigRational(1, 7) - BigRational(4096, 7 * 5040);
  EXPECT_GT(pointwise, 0);
  EXPECT_EQ(pointwise_tv_lower_bound(n), pointwise);
  EXPECT_GE(tv, pointwise);
  EXPECT_GE(tv, symmetric_tv_lower_bound(n));
}

TEST(TvDistance, AlternatingBoundOnS5) {
  const int n = 5;
  const auto dist = limiting_class_distribution(cycle_walk(3, n), Partition::identity(n));
  const BigRational bound = BigRational(2, 5) - BigRational(2 * binomial(8, 4), 5 * 120) +
                            BigRational(binomial(4, 2) * binomial(4, 2), 5 * 120);
  EXPECT_EQ(alternating_tv_lower_bound(n), bound);
  EXPECT_GE(tv_distance(dist, Support::alternating_group), bound);
}

TEST(TimeAverage, ShortWindowStaysAtStart) {
  const auto spec = cycle_walk(2, 4);
  const auto avg = time_averaged_distribution(spec, Partition({2, 1, 1}), 1e-9, 4);
  EXPECT_NEAR(avg.probability(Partition({2, 1, 1})), 1.0, 1e-12);
  EXPECT_THROW(time_averaged_distribution(spec, Partition::identity(4), 0.0, 4), DomainError);
  EXPECT_THROW(time_averaged_distribution(spec, Partition::identity(4), 1.0, 0), DomainError);
}

TEST(TimeAverage, ConvergesToExactLimit) {
  const auto spec = cycle_walk(2, 4);
  const auto exact = limiting_class_distribution(spec, Partition::identity(4));
  const auto avg = time_averaged_distribution(spec, Partition::identity(4), 2 * kPi, 4096);
  for (const auto& c : exact.classes)
    EXPECT_NEAR(avg.probability(c.partition), to_double(c.probability), 1e-4);
}

TEST(TimeAverage, OnePeriodEqualsTenPeriods) {
  const auto spec = cycle_walk(2, 5);
  const auto one = time_averaged_distribution(spec, Partition::identity(5), 2 * kPi, 4096);
  const auto ten = time_averaged_distribution(spec, Partition::identity(5), 20 * kPi, 4096);
  for (std::size_t c = 0; c < one.classes.size(); ++c)
    EXPECT_NEAR(one.classes[c].probability, ten.classes[c].probability, 1e-6);
}

TEST(TimeAverage, AgreesWithExactEngineForEveryGenerator) {
  for (int n = 2; n <= 6; ++n) {
    auto table = std::make_shared<const CharacterTable>(character_table(n));
    for (const auto& gamma : table->partitions) {
      if (gamma.is_identity()) continue;
      const WalkSpectrum spec(ClassFunction::indicator(gamma), table);
      const auto exact = limiting_class_distribution(spec, Partition::identity(n));
      const auto avg = time_averaged_distribution(spec, Partition::identity(n), 2 * kPi, 2048);
      for (const auto& c : exact.classes)
        EXPECT_NEAR(avg.probability(c.partition), to_double(c.probability), 1e-9)
            << "n=" << n << " gamma=" << gamma.to_string();
    }
  }
}

TEST(TimeAverage, TranspositionNCycleIntegral) {
  // (1/2pi) * integral of (2 sin(tn/2))^{2n-2} dt = C(2n-2, n-1), which the
  // table divides by (n!)^2.
  for (int n = 2; n <= 8; ++n) {
    const double integral = testing::simpson(
        [n](double t) { return std::pow(2 * std::sin(t * n / 2), 2 * n - 2); }, 0, 2 * kPi, 4096);
    const BigInt order = factorial(n);
    const double central = to_double(table_ncycle_probability(n, 2).value * order * order);
    EXPECT_NEAR(integral / (2 * kPi), central, 1e-10 * central) << "n=" << n;
  }
}

}  // namespace
}  // namespace symwalk
