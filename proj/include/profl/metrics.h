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

// Evaluation metrics over worst-rank rankings: Top-N recall, mean first rank
// (MFR), mean average rank (MAR), the per-group buggy ratio and the Wilcoxon
// signed-rank test used to compare techniques bug by bug.

#ifndef PROFL_METRICS_H_
#define PROFL_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "profl/data_model.h"
#include "profl/patch_analysis.h"
#include "profl/ranking.h"

namespace profl {

struct BugResult {
  std::string bug;
  std::size_t first_rank = 0;  // worst rank of the best-ranked buggy element
  double avg_rank = 0.0;       // mean worst rank over all buggy elements
};

// Throws MissingElementError if a buggy element is not ranked.
BugResult ComputeBugResult(const std::string& bug, const RankedList& ranking,
                           const BugGroundTruth& truth);

struct MetricSummary {
  std::size_t bugs = 0;
  std::size_t top1 = 0;
  std::size_t top3 = 0;
  std::size_t top5 = 0;
  double mfr = 0.0;
  double mar = 0.0;
};

struct EvalReport {
  // Pooled over every bug; the canonical figures.
  MetricSummary overall;
  // Keyed by subject (bug id up to its last '-', or the whole id).
  std::map<std::string, MetricSummary> per_subject;
  // Unweighted means of the per-subject MFR/MAR.
  double mfr_subject_mean = 0.0;
  double mar_subject_mean = 0.0;
};

std::size_t TopN(std::span<const BugResult> results, std::size_t n);
MetricSummary Summarize(std::span<const BugResult> results);
// Throws EmptyInputError on an empty list.
EvalReport MakeEvalReport(std::span<const BugResult> results);
std::string SubjectOf(const std::string& bug);

// Fraction of elements with at least one patch in `group` that are buggy;
// nullopt when no element has such a patch.
std::optional<double> RatioB(const PatchExecutionMatrix& matrix,
                             const BugGroundTruth& truth, PatchGroup group);

enum class WilcoxonMethod { kExact, kNormal, kDegenerate };

struct WilcoxonResult {
  double p_value = 1.0;
  double w_plus = 0.0;       // sum of ranks of positive differences
  std::size_t n = 0;         // non-zero differences
  WilcoxonMethod method = WilcoxonMethod::kDegenerate;
};

// Largest number of non-zero differences handled by the exact distribution.
inline constexpr std::size_t kWilcoxonExactMax = 25;

// Two-sided signed-rank test on paired samples. Zero differences are
// dropped, tied magnitudes receive mid-ranks. For n <= 25 the p-value comes
// from the exact permutation distribution of W+ (given the mid-ranks); above
// that a normal approximation with tie and continuity corrections is used.
// All-zero differences report p = 1 with method kDegenerate. Throws
// ValidationError on size mismatch or empty input.
WilcoxonResult WilcoxonSignedRank(std::span<const double> a,
                                  std::span<const double> b);

std::string_view ToString(WilcoxonMethod method);

}  // namespace profl

#endif  // PROFL_METRICS_H_
