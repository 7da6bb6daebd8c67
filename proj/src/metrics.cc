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

#include "profl/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "profl/error.h"

namespace profl {

BugResult ComputeBugResult(const std::string& bug, const RankedList& ranking,
                           const BugGroundTruth& truth) {
  if (truth.buggy_elements.empty()) {
    throw ValidationError("bug '" + bug + "' has no buggy element");
  }
  BugResult result;
  result.bug = bug;
  double sum = 0;
  std::size_t first = 0;
  for (const auto& element : truth.buggy_elements) {
    const RankEntry* entry = ranking.Find(element);
    if (entry == nullptr) throw MissingElementError(element.str());
    sum += static_cast<double>(entry->worst_rank);
    if (first == 0 || entry->worst_rank < first) first = entry->worst_rank;
  }
  result.first_rank = first;
  result.avg_rank = sum / static_cast<double>(truth.buggy_elements.size());
  return result;
}

std::size_t TopN(std::span<const BugResult> results, std::size_t n) {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(),
                    [n](const BugResult& r) { return r.first_rank <= n; }));
}

MetricSummary Summarize(std::span<const BugResult> results) {
  MetricSummary summary;
  summary.bugs = results.size();
  summary.top1 = TopN(results, 1);
  summary.top3 = TopN(results, 3);
  summary.top5 = TopN(results, 5);
  if (results.empty()) return summary;
  double first = 0;
  double avg = 0;
  for (const auto& r : results) {
    first += static_cast<double>(r.first_rank);
    avg += r.avg_rank;
  }
  summary.mfr = first / static_cast<double>(results.size());
  summary.mar = avg / static_cast<double>(results.size());
  return summary;
}

std::string SubjectOf(const std::string& bug) {
  const auto dash = bug.rfind('-');
  if (dash == std::string::npos || dash == 0) return bug;
  return bug.substr(0, dash);
}

EvalReport MakeEvalReport(std::span<const BugResult> results) {
  if (results.empty()) throw EmptyInputError("no bug results to evaluate");
  EvalReport report;
  report.overall = Summarize(results);
  std::map<std::string, std::vector<BugResult>> by_subject;
  for (const auto& r : results) by_subject[SubjectOf(r.bug)].push_back(r);
  for (const auto& [subject, list] : by_subject) {
    const MetricSummary summary = Summarize(list);
    report.mfr_subject_mean += summary.mfr;
    report.mar_subject_mean += summary.mar;
    report.per_subject.emplace(subject, summary);
  }
  report.mfr_subject_mean /= static_cast<double>(by_subject.size());
  report.mar_subject_mean /= static_cast<double>(by_subject.size());
  return report;
}

std::optional<double> RatioB(const PatchExecutionMatrix& matrix,
                             const BugGroundTruth& truth, PatchGroup group) {
  std::set<ElementId> in_group;
  for (std::size_t p = 0; p < matrix.patches().size(); ++p) {
    if (Categorize(matrix, p) == group) {
      in_group.insert(matrix.patches()[p].target);
    }
  }
  if (in_group.empty()) return std::nullopt;
  std::size_t buggy = 0;
  for (const auto& element : in_group) {
    if (truth.buggy_elements.contains(element)) ++buggy;
  }
  return static_cast<double>(buggy) / static_cast<double>(in_group.size());
}

namespace {

// Mid-ranks of the absolute differences, doubled so they are integers.
std::vector<std::int64_t> DoubledMidRanks(const std::vector<double>& magnitudes) {
  std::vector<std::size_t> order(magnitudes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return magnitudes[x] < magnitudes[y];
  });
  std::vector<std::int64_t> ranks(magnitudes.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && magnitudes[order[j]] == magnitudes[order[i]]) {
      ++j;
    }
    // Positions i..j-1 (1-based i+1..j) share rank (i+1+j)/2.
    const auto doubled = static_cast<std::int64_t>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = doubled;
    i = j;
  }
  return ranks;
}

}  // namespace

WilcoxonResult WilcoxonSignedRank(std::span<const double> a,
                                  std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("wilcoxon: samples differ in length (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  if (a.empty()) throw ValidationError("wilcoxon: empty samples");

  std::vector<double> magnitudes;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d == 0) continue;
    magnitudes.push_back(std::abs(d));
    positive.push_back(d > 0);
  }
  WilcoxonResult result;
  result.n = magnitudes.size();
  if (result.n == 0) return result;  // degenerate: p = 1

  const std::vector<std::int64_t> ranks = DoubledMidRanks(magnitudes);
  std::int64_t w_plus2 = 0;
  std::int64_t total2 = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    total2 += ranks[i];
    if (positive[i]) w_plus2 += ranks[i];
  }
  result.w_plus = static_cast<double>(w_plus2) / 2.0;

  if (result.n <= kWilcoxonExactMax) {
    result.method = WilcoxonMethod::kExact;
    // Number of sign assignments giving each doubled W+ value.
    std::vector<double> ways(static_cast<std::size_t>(total2) + 1, 0.0);
    ways[0] = 1.0;
    std::int64_t reach = 0;
    for (const std::int64_t r : ranks) {
      for (std::int64_t s = reach; s >= 0; --s) {
        if (ways[static_cast<std::size_t>(s)] != 0.0) {
          ways[static_cast<std::size_t>(s + r)] +=
              ways[static_cast<std::size_t>(s)];
        }
      }
      reach += r;
    }
    const double all = std::ldexp(1.0, static_cast<int>(result.n));
    double lower = 0;
    double upper = 0;
    for (std::int64_t s = 0; s <= total2; ++s) {
      const double w = ways[static_cast<std::size_t>(s)];
      if (s <= w_plus2) lower += w;
      if (s >= w_plus2) upper += w;
    }
    result.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / all);
    return result;
  }

  result.method = WilcoxonMethod::kNormal;
  const double n = static_cast<double>(result.n);
  const double mean = n * (n + 1) / 4.0;
  double tie_term = 0;
  {
    std::vector<std::int64_t> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i);
      tie_term += t * t * t - t;
      i = j;
    }
  }
  const double variance = n * (n + 1) * (2 * n + 1) / 24.0 - tie_term / 48.0;
  const double deviation =
      std::max(0.0, std::abs(result.w_plus - mean) - 0.5);
  const double z = deviation / std::sqrt(variance);
  result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

std::string_view ToString(WilcoxonMethod method) {
  switch (method) {
    case WilcoxonMethod::kExact:
      return "exact";
    case WilcoxonMethod::kNormal:
      return "normal";
    case WilcoxonMethod::kDegenerate:
      return "degenerate";
  }
  return "?";
}

}  // namespace profl
