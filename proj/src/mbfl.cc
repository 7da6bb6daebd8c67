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

#include "profl/mbfl.h"

#include <cmath>
#include <vector>

#include "profl/patch_analysis.h"

namespace profl {

MutantImpact ImpactOf(const PatchExecutionMatrix& matrix, std::size_t patch,
                      std::size_t test) {
  const CellResult& cell = matrix.patches().at(patch).results.at(test);
  if (cell.is_unknown()) return MutantImpact::kNoImpact;
  const auto& original = matrix.original().at(test);
  const bool originally_failed = original.outcome == TestOutcome::kFailed;
  if (originally_failed != cell.is_fail()) return MutantImpact::kOutcomeFlip;
  if (originally_failed && original.message_digest != cell.message_digest) {
    return MutantImpact::kMessageChange;
  }
  return MutantImpact::kNoImpact;
}

ImpactCounts CountImpacts(const PatchExecutionMatrix& matrix,
                          std::size_t patch) {
  ImpactCounts counts;
  for (std::size_t t = 0; t < matrix.test_count(); ++t) {
    if (ImpactOf(matrix, patch, t) == MutantImpact::kNoImpact) continue;
    if (matrix.original()[t].outcome == TestOutcome::kFailed) {
      ++counts.kf;
    } else {
      ++counts.kp;
    }
  }
  return counts;
}

double MetallaxisMutantScore(const ImpactCounts& impacts,
                             std::size_t failing_total) {
  SpectrumCounts counts;
  counts.ef = static_cast<std::int64_t>(impacts.kf);
  counts.nf = static_cast<std::int64_t>(failing_total) - counts.ef;
  counts.ep = static_cast<std::int64_t>(impacts.kp);
  return StatementSuspiciousness(counts, Formula::kOchiai);
}

ElementScores MuseScores(const CoverageSpectra& spectra,
                         const PatchExecutionMatrix& matrix) {
  const double failing = static_cast<double>(matrix.failed_count());
  const double passing = static_cast<double>(matrix.passed_count());

  std::vector<FlipCounts> flips;
  flips.reserve(matrix.patches().size());
  double f2p_total = 0;
  double p2f_total = 0;
  for (std::size_t p = 0; p < matrix.patches().size(); ++p) {
    flips.push_back(CountFlips(matrix, p));
    f2p_total += static_cast<double>(flips.back().f2p);
    p2f_total += static_cast<double>(flips.back().p2f);
  }
  const double alpha =
      (p2f_total == 0 || failing == 0) ? 0.0
                                       : (f2p_total / failing) *
                                             (passing / p2f_total);

  std::map<ElementId, std::pair<double, std::size_t>> sums;
  for (std::size_t p = 0; p < matrix.patches().size(); ++p) {
    double term = failing == 0 ? 0.0 : static_cast<double>(flips[p].f2p) / failing;
    if (passing > 0) {
      term -= alpha * static_cast<double>(flips[p].p2f) / passing;
    }
    auto& [sum, count] = sums[matrix.patches()[p].target];
    sum += term;
    ++count;
  }

  ElementScores out;
  for (const auto& element : spectra.ElementUniverse()) {
    auto it = sums.find(element);
    if (it == sums.end()) {
      out.emplace(element, ElementScore{0.0, false});
    } else {
      const auto& [sum, count] = it->second;
      out.emplace(element,
                  ElementScore{sum / static_cast<double>(count), true});
    }
  }
  return out;
}

ElementScores MetallaxisScores(const CoverageSpectra& spectra,
                               const PatchExecutionMatrix& matrix) {
  ElementScores out;
  for (const auto& element : spectra.ElementUniverse()) {
    out.emplace(element, ElementScore{0.0, true});
  }
  const std::size_t failing = matrix.failed_count();
  for (std::size_t p = 0; p < matrix.patches().size(); ++p) {
    const double score =
        MetallaxisMutantScore(CountImpacts(matrix, p), failing);
    auto& entry = out.at(matrix.patches()[p].target);
    if (score > entry.score) entry.score = score;
  }
  return out;
}

ElementScores McbflScores(const CoverageSpectra& spectra,
                          const PatchExecutionMatrix& matrix,
                          const SuspiciousnessSource& source) {
  const ElementScores spectrum = ComputeElementScores(spectra, source);
  const ElementScores mutation = MetallaxisScores(spectra, matrix);
  ElementScores out;
  for (const auto& [element, score] : spectrum) {
    out.emplace(element,
                ElementScore{(score.score + mutation.at(element).score) / 2,
                             true});
  }
  return out;
}

RankedList MuseRank(const CoverageSpectra& spectra,
                    const PatchExecutionMatrix& matrix) {
  CheckConsistency(spectra, matrix);
  std::vector<RankEntry> entries;
  for (const auto& [element, score] : MuseScores(spectra, matrix)) {
    entries.push_back({element, std::nullopt, score.score, score.has_evidence, 0});
  }
  return RankedList::Build(std::move(entries));
}

RankedList MetallaxisRank(const CoverageSpectra& spectra,
                          const PatchExecutionMatrix& matrix) {
  CheckConsistency(spectra, matrix);
  std::vector<RankEntry> entries;
  for (const auto& [element, score] : MetallaxisScores(spectra, matrix)) {
    entries.push_back({element, std::nullopt, score.score, true, 0});
  }
  return RankedList::Build(std::move(entries));
}

RankedList McbflRank(const CoverageSpectra& spectra,
                     const PatchExecutionMatrix& matrix,
                     const SuspiciousnessSource& source) {
  CheckConsistency(spectra, matrix);
  std::vector<RankEntry> entries;
  for (const auto& [element, score] : McbflScores(spectra, matrix, source)) {
    entries.push_back({element, std::nullopt, score.score, true, 0});
  }
  return RankedList::Build(std::move(entries));
}

}  // namespace profl
