#include <cmath>
#include <cstring>
#include <limits>

#include <gtest/gtest.h>

#include "autorake/termstats.hpp"
#include "support/hp_oracle.hpp"
#include "support/properties.hpp"
#include "support/synthetic.hpp"

using namespace autorake;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(TermStats, CountsCfAndDf) {
  const Corpus corpus(std::vector<Document>{{"doc1", "a b a"}, {"doc2", "a c"}});
  const TermStatsTable t = compute_term_stats(corpus);
  EXPECT_EQ(t.documents(), 2u);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(*t.find("a"), (TermStats{"a", 3, 2}));
  EXPECT_EQ(*t.find("b"), (TermStats{"b", 1, 1}));
  EXPECT_EQ(*t.find("c"), (TermStats{"c", 1, 1}));
  EXPECT_EQ(t.total_occurrences(), 5u);
}

TEST(TermStats, KeysAreNormalized) {
  const Corpus corpus(std::vector<Document>{{"d", "Łódź ŁÓDŹ łódź"}});
  const TermStatsTable t = compute_term_stats(corpus);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.find("łódź")->cf, 3u);
}

TEST(TermStats, SingleEmptyDocument) {
  const TermStatsTable t = compute_term_stats(Corpus(std::vector<Document>{{"empty", ""}}));
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.documents(), 1u);
}

TEST(TermStats, DocumentOrderAndThreadsDoNotMatter) {
  test::Rng rng(5);
  auto docs = test::random_documents(rng, 30, 30, 80);
  const TermStatsTable a = compute_term_stats(Corpus(docs));
  std::shuffle(docs.begin(), docs.end(), rng);
  TermStatsTable manual;
  for (const auto& d : docs) manual.add_document(tokenize(d.text));
  EXPECT_EQ(a, manual);
  EXPECT_EQ(a, compute_term_stats(Corpus(docs), {}, 7));
}

TEST(TermStats, MergeIsCommutative) {
  TermStatsTable x, y;
  x.add_document(tokenize("a b"));
  y.add_document(tokenize("b c c"));
  TermStatsTable xy = x, yx = y;
  xy.merge(y);
  yx.merge(x);
  EXPECT_EQ(xy, yx);
  EXPECT_EQ(*xy.find("b"), (TermStats{"b", 2, 2}));
  EXPECT_EQ(xy.documents(), 2u);
}

TEST(TermStats, SortedByCfThenWord) {
  const TermStatsTable t(10, {{"b", 2, 1}, {"a", 2, 2}, {"c", 5, 3}});
  const auto rows = t.sorted_by_cf();
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].word, "c");
  EXPECT_EQ(rows[1].word, "a");
  EXPECT_EQ(rows[2].word, "b");
}

TEST(TermStats, ExplicitTableValidatesCounts) {
  EXPECT_THROW(TermStatsTable(5, {{"x", 1, 2}}), ConsistencyError);
  EXPECT_THROW(TermStatsTable(5, {{"x", 9, 6}}), ConsistencyError);
  EXPECT_THROW(TermStatsTable(5, {{"x", 0, 0}}), ConsistencyError);
  EXPECT_THROW(TermStatsTable(5, {{"x", 2, 1}, {"x", 3, 1}}), ConsistencyError);
}

TEST(OccurrenceModel, Validation) {
  EXPECT_THROW(OccurrenceModel::poisson(0), DomainError);
  EXPECT_THROW(OccurrenceModel::negative_binomial(10, 0.0), DomainError);
  EXPECT_THROW(OccurrenceModel::negative_binomial(10, -1.0), DomainError);
  EXPECT_THROW(OccurrenceModel::negative_binomial(10, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_EQ(OccurrenceModel::negative_binomial(10, 0.5).dispersion(), 0.5);
  EXPECT_FALSE(OccurrenceModel::poisson(10).dispersion().has_value());
}

TEST(ExpectedDf, ZeroCfGivesZero) {
  EXPECT_EQ(expected_df(OccurrenceModel::poisson(100), 0.0), 0.0);
  EXPECT_EQ(expected_df(OccurrenceModel::negative_binomial(100, 0.42), 0.0), 0.0);
}

TEST(ExpectedDf, NegativeOrNanCfIsDomainError) {
  const auto m = OccurrenceModel::poisson(10);
  EXPECT_THROW(expected_df(m, -1.0), DomainError);
  EXPECT_THROW(expected_df(m, std::nan("")), DomainError);
}

TEST(ExpectedDf, PoissonAtPaperScale) {
  // 11000 * (1 - e^-1), mpmath at 40 digits
  const double want = 6953.326147114134462449;
  EXPECT_LE(rel_err(expected_df(OccurrenceModel::poisson(11000), 11000), want), 1e-14);
}

TEST(ExpectedDf, NegativeBinomialWithFittedR) {
  // 11000 * (1 - (1 + 1/0.42)^-0.42), mpmath at 40 digits
  const double want = 4405.281190853030233036;
  EXPECT_LE(rel_err(expected_df(OccurrenceModel::negative_binomial(11000, 0.42), 11000), want), 1e-14);
}

TEST(ExpectedDf, AgreesWithHighPrecisionOracle) {
  for (double n : {1.0, 100.0, 11000.0}) {
    for (double cf : {1e-3, 0.5, 1.0, 37.0, 1e3, 1e5, 1e7}) {
      const auto nd = static_cast<std::size_t>(n);
      EXPECT_LE(rel_err(expected_df(OccurrenceModel::poisson(nd), cf), test::hp_poisson_df(n, cf)), 1e-13)
          << n << " " << cf;
      for (double r : {1e-3, 0.42, 1.0, 10.0, 1e4}) {
        EXPECT_LE(rel_err(expected_df(OccurrenceModel::negative_binomial(nd, r), cf), test::hp_negbin_df(n, r, cf)),
                  1e-13)
            << n << " " << r << " " << cf;
      }
    }
  }
}

TEST(ExpectedDf, ConvergesToPoissonForLargeR) {
  for (std::size_t n : {100u, 11000u}) {
    const auto poisson = OccurrenceModel::poisson(n);
    const auto nb = OccurrenceModel::negative_binomial(n, 1e6);
    for (double cf : {1.0, double(n), 10.0 * double(n)}) {
      EXPECT_LE(rel_err(expected_df(nb, cf), expected_df(poisson, cf)), 1e-4) << n << " " << cf;
    }
  }
}

TEST(ExpectedDfProperty, MonotoneAndBounded) {
  const auto r = test::check_expected_df_shape(99, 2000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(RandomnessRatio, WordOnThePoissonCurveScoresOne) {
  // N(1 - e^{-1/N}) is 1 to within 1/(2N)
  const auto m = OccurrenceModel::poisson(1000000000);
  EXPECT_NEAR(randomness_ratio({"w", 1, 1}, m), 1.0, 1e-9);
}

TEST(RandomnessRatio, ClusteredWordScoresHigh) {
  const auto m = OccurrenceModel::negative_binomial(1000, 0.42);
  EXPECT_GT(randomness_ratio({"miasto", 500, 20}, m), 1.6);
}

TEST(RandomnessRatio, DirectEvaluation) {
  // 100 (1 - e^-1) / 80, mpmath at 40 digits
  EXPECT_NEAR(randomness_ratio({"w", 100, 80}, OccurrenceModel::poisson(100)), 0.7901506985356970980, 1e-15);
}

TEST(RandomnessRatio, ZeroDfIsDomainError) {
  EXPECT_THROW(randomness_ratio({"w", 3, 0}, OccurrenceModel::poisson(10)), DomainError);
}

TEST(FitNegBin, RecoversPlantedDispersion) {
  const Corpus corpus = test::negbin_corpus({});
  const NegBinFit fit = fit_negbin_r(compute_term_stats(corpus));
  const double r = *fit.model.dispersion();
  EXPECT_GE(r, 0.32);
  EXPECT_LE(r, 0.52);
  EXPECT_FALSE(fit.at_boundary);
  EXPECT_EQ(fit.model.documents(), 2000u);
}

TEST(FitNegBin, ExactCurveDataRecoversR) {
  // df rounded from the r = 2 curve at a large N: rounding moves log df by
  // at most ~1e-6, so r comes back to well under 1e-3.
  const std::size_t n = 10000000;
  const auto truth = OccurrenceModel::negative_binomial(n, 2.0);
  std::vector<TermStats> entries;
  for (int i = 0; i < 60; ++i) {
    const double cf = std::round(1e6 * std::pow(1.15, i));
    entries.push_back({test::word_name("w", static_cast<std::size_t>(i)), static_cast<std::uint64_t>(cf),
                       static_cast<std::uint64_t>(std::llround(expected_df(truth, cf)))});
  }
  const NegBinFit fit = fit_negbin_r(TermStatsTable(n, entries));
  EXPECT_NEAR(*fit.model.dispersion(), 2.0, 2e-3);
  EXPECT_FALSE(fit.at_boundary);
}

TEST(FitNegBin, PoissonDataHitsUpperBound) {
  const std::size_t n = 1000000;
  const auto poisson = OccurrenceModel::poisson(n);
  std::vector<TermStats> entries;
  for (int i = 0; i < 40; ++i) {
    const double cf = std::round(1e5 * std::pow(1.2, i));
    entries.push_back({test::word_name("p", static_cast<std::size_t>(i)), static_cast<std::uint64_t>(cf),
                       static_cast<std::uint64_t>(std::llround(expected_df(poisson, cf)))});
  }
  const NegBinFit fit = fit_negbin_r(TermStatsTable(n, entries));
  EXPECT_EQ(*fit.model.dispersion(), 1e3);
  EXPECT_TRUE(fit.at_boundary);
  EXPECT_FALSE(fit.flat);
}

TEST(FitNegBin, SingleWordDoesNotCrash) {
  const NegBinFit fit = fit_negbin_r(TermStatsTable(1, {{"jedno", 1, 1}}));
  const double r = *fit.model.dispersion();
  EXPECT_GE(r, 1e-3);
  EXPECT_LE(r, 1e3);
  EXPECT_TRUE(fit.at_boundary);
}

TEST(FitNegBin, FlatObjectiveReturnsUpperBoundFlagged) {
  // cf tiny relative to N: expected_df == cf for every r in double precision.
  const NegBinFit fit = fit_negbin_r(TermStatsTable(1000000000000000000ull, {{"a", 1, 1}, {"b", 2, 2}}));
  EXPECT_TRUE(fit.flat);
  EXPECT_TRUE(fit.at_boundary);
  EXPECT_EQ(*fit.model.dispersion(), 1e3);
}

TEST(FitNegBin, EmptyTableIsFitError) {
  EXPECT_THROW(fit_negbin_r(TermStatsTable{}), FitError);
  EXPECT_THROW(fit_negbin_r(TermStatsTable(3, {})), FitError);
}

TEST(FitNegBin, Deterministic) {
  const TermStatsTable t = compute_term_stats(test::negbin_corpus({.seed = 3, .documents = 300, .vocabulary = 120}));
  const double a = *fit_negbin_r(t).model.dispersion();
  const double b = *fit_negbin_r(t).model.dispersion();
  EXPECT_EQ(std::memcmp(&a, &b, sizeof a), 0);
}

TEST(TermStatsProperty, CountBounds) {
  const auto r = test::check_term_stats_bounds(17, 200);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
