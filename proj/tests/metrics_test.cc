// Copyright 2026 The ProFL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "profl/error.h"
#include "profl/metrics.h"
#include "oracles.h"
#include "profl/profl.h"
#include "worked_examples.h"

namespace profl {
namespace {

using testing::E;

std::vector<BugResult> Results(const std::vector<std::size_t>& first,
                               const std::vector<double>& avg) {
  std::vector<BugResult> out;
  for (std::size_t i = 0; i < first.size(); ++i) {
    out.push_back({"Bug-" + std::to_string(i + 1), first[i], avg[i]});
  }
  return out;
}

TEST(BugResultTest, Math40Rankings) {
  const BugData bug = testing::Math40Bug();
  ProflOptions options;
  options.source = *bug.base_scores;
  EXPECT_EQ(ComputeBugResult("Math-40", ProflRank(bug.spectra, bug.matrix, options),
                             bug.truth)
                .first_rank,
            1u);
  EXPECT_EQ(ComputeBugResult("Math-40", SbflRank(bug.spectra, *bug.base_scores),
                             bug.truth)
                .first_rank,
            4u);
}

TEST(BugResultTest, AverageOverBuggyElements) {
  std::vector<RankEntry> entries;
  for (int i = 1; i <= 6; ++i) {
    entries.push_back({E(i), std::nullopt, 1.0 - i / 10.0, true, 0});
  }
  const RankedList ranking = RankedList::Build(entries);
  const BugResult r = ComputeBugResult("x", ranking, {{E(2), E(6)}});
  EXPECT_EQ(r.first_rank, 2u);
  EXPECT_DOUBLE_EQ(r.avg_rank, 4.0);
  EXPECT_THROW(ComputeBugResult("x", ranking, {{E(9)}}), MissingElementError);
}

TEST(EvalReportTest, HandFixtures) {
  const auto a = Results({1, 4}, {1, 4});
  const MetricSummary s = Summarize(a);
  EXPECT_EQ(s.top1, 1u);
  EXPECT_EQ(s.top3, 1u);
  EXPECT_EQ(s.top5, 2u);
  EXPECT_DOUBLE_EQ(s.mfr, 2.5);

  const MetricSummary all_first = Summarize(Results({1, 1, 1}, {1, 1, 1}));
  EXPECT_EQ(all_first.top1, 3u);
  EXPECT_DOUBLE_EQ(all_first.mfr, 1.0);

  const MetricSummary c = Summarize(Results({2, 2, 6}, {2, 3, 7}));
  EXPECT_EQ(c.top1, 0u);
  EXPECT_EQ(c.top3, 2u);
  EXPECT_EQ(c.top5, 2u);
  EXPECT_NEAR(c.mfr, 10.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(c.mar, 4.0);
}

TEST(EvalReportTest, EmptyInputRejected) {
  EXPECT_THROW(MakeEvalReport(std::vector<BugResult>{}), EmptyInputError);
}

TEST(EvalReportTest, PerSubjectAndPooledMeans) {
  std::vector<BugResult> r{{"Math-1", 1, 1}, {"Math-2", 3, 3}, {"Lang-1", 8, 8}};
  const EvalReport report = MakeEvalReport(r);
  EXPECT_DOUBLE_EQ(report.overall.mfr, 4.0);
  EXPECT_DOUBLE_EQ(report.per_subject.at("Math").mfr, 2.0);
  EXPECT_DOUBLE_EQ(report.per_subject.at("Lang").mfr, 8.0);
  EXPECT_DOUBLE_EQ(report.mfr_subject_mean, 5.0);
  EXPECT_EQ(SubjectOf("Closure-61"), "Closure");
  EXPECT_EQ(SubjectOf("synth-a-0003"), "synth-a");
}

TEST(EvalReportTest, TopNMonotoneAndOrderFree) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::size_t> rank(1, 12);
  for (int i = 0; i < 500; ++i) {
    std::vector<BugResult> r;
    for (int b = 0; b < 10; ++b) {
      const std::size_t f = rank(rng);
      r.push_back({"S-" + std::to_string(b), f, static_cast<double>(f)});
    }
    for (std::size_t n = 1; n < 15; ++n) {
      ASSERT_LE(TopN(r, n), TopN(r, n + 1));
    }
    const MetricSummary before = Summarize(r);
    std::shuffle(r.begin(), r.end(), rng);
    const MetricSummary after = Summarize(r);
    ASSERT_EQ(before.top1, after.top1);
    ASSERT_EQ(before.top5, after.top5);
    ASSERT_NEAR(before.mfr, after.mfr, 1e-12);
    ASSERT_NEAR(before.mar, after.mar, 1e-12);
    ASSERT_LE(after.top5, r.size());
  }
}

TEST(RatioBTest, Fixtures) {
  const BugData bug = testing::Math40Bug();
  EXPECT_EQ(RatioB(bug.matrix, bug.truth, PatchGroup::kCleanFix), 1.0);
  EXPECT_EQ(RatioB(bug.matrix, bug.truth, PatchGroup::kNegFix), 0.0);
  // NoisyFix patches sit on e4 and e5.
  EXPECT_EQ(RatioB(bug.matrix, bug.truth, PatchGroup::kNoisyFix), 0.5);
  const auto m = testing::MatrixFromStrings("FP", {{"e1", "FF"}});
  EXPECT_FALSE(RatioB(m, {{E(1)}}, PatchGroup::kCleanFix).has_value());
}

TEST(WilcoxonTest, ExactMatchesEnumeration) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> value(0, 6);
  for (int i = 0; i < 1000; ++i) {
    const int n = len(rng);
    std::vector<double> a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = value(rng);
      b[k] = value(rng);
    }
    const WilcoxonResult r = WilcoxonSignedRank(a, b);
    ASSERT_NEAR(r.p_value, testing::EnumeratedWilcoxonP(a, b), 1e-12);
    ASSERT_NEAR(WilcoxonSignedRank(b, a).p_value, r.p_value, 1e-12);
  }
}

TEST(WilcoxonTest, SpotValues) {
  const std::vector<double> a{1, 2, 3, 4, 5, 6};
  const std::vector<double> zero(6, 0.0);
  const WilcoxonResult r = WilcoxonSignedRank(a, zero);
  EXPECT_EQ(r.method, WilcoxonMethod::kExact);
  EXPECT_NEAR(r.p_value, 2.0 / 64.0, 1e-15);
  const WilcoxonResult same = WilcoxonSignedRank(a, a);
  EXPECT_EQ(same.method, WilcoxonMethod::kDegenerate);
  EXPECT_EQ(same.p_value, 1.0);
}

TEST(WilcoxonTest, NormalApproximationAboveExactLimit) {
  // Reference from scipy.stats.wilcoxon(d, correction=True, method="approx").
  std::vector<double> d;
  for (int i = 1; i <= 30; ++i) {
    d.push_back((i % 3 == 0 ? -1 : 1) * (i % 7 + 1));
  }
  const std::vector<double> zero(d.size(), 0.0);
  const WilcoxonResult r = WilcoxonSignedRank(d, zero);
  EXPECT_EQ(r.method, WilcoxonMethod::kNormal);
  EXPECT_NEAR(r.p_value, 0.19046363885639161, 1e-9);
}

TEST(WilcoxonTest, RejectsMismatchedInput) {
  const std::vector<double> a{1, 2};
  const std::vector<double> b{1};
  EXPECT_THROW(WilcoxonSignedRank(a, b), ValidationError);
  EXPECT_THROW(WilcoxonSignedRank(std::vector<double>{}, std::vector<double>{}),
               ValidationError);
}

}  // namespace
}  // namespace profl
