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

// Mutation-based baselines over a patch execution matrix. Patches and
// mutants are interchangeable here: both are single-element program changes
// with a row of test results.
//
// MUSE, per element e with patches P(e):
//   score(e) = 1/|P(e)| * sum_p [ f2p(p)/|Tf| - alpha * p2f(p)/|Tp| ]
//   alpha    = (F2P/|Tf|) * (|Tp|/P2F)
// where F2P/P2F are totals over all patches. alpha is 0 when P2F is 0 and the
// second term is dropped when |Tp| is 0. Elements without patches rank last.
//
// Metallaxis, per patch: kf/kp = originally failing/passing tests the patch
// impacts; mutant score = Ochiai(ef=kf, nf=|Tf|-kf, ep=kp); element score is
// the max over its patches (0 without patches).
//
// MCBFL: mean of the spectrum score and the Metallaxis score.

#ifndef PROFL_MBFL_H_
#define PROFL_MBFL_H_

#include <cstddef>
#include <map>

#include "profl/data_model.h"
#include "profl/ranking.h"
#include "profl/sbfl.h"

namespace profl {

enum class MutantImpact { kNoImpact, kOutcomeFlip, kMessageChange };

// Impact of a patch cell relative to the original outcome of test `test`.
// Unknown cells have no impact.
MutantImpact ImpactOf(const PatchExecutionMatrix& matrix, std::size_t patch,
                      std::size_t test);

struct ImpactCounts {
  std::size_t kf = 0;
  std::size_t kp = 0;
};

ImpactCounts CountImpacts(const PatchExecutionMatrix& matrix,
                          std::size_t patch);

double MetallaxisMutantScore(const ImpactCounts& impacts,
                             std::size_t failing_total);

ElementScores MuseScores(const CoverageSpectra& spectra,
                         const PatchExecutionMatrix& matrix);
ElementScores MetallaxisScores(const CoverageSpectra& spectra,
                               const PatchExecutionMatrix& matrix);
ElementScores McbflScores(const CoverageSpectra& spectra,
                          const PatchExecutionMatrix& matrix,
                          const SuspiciousnessSource& source = Formula::kOchiai);

RankedList MuseRank(const CoverageSpectra& spectra,
                    const PatchExecutionMatrix& matrix);
RankedList MetallaxisRank(const CoverageSpectra& spectra,
                          const PatchExecutionMatrix& matrix);
RankedList McbflRank(const CoverageSpectra& spectra,
                     const PatchExecutionMatrix& matrix,
                     const SuspiciousnessSource& source = Formula::kOchiai);

}  // namespace profl

#endif  // PROFL_MBFL_H_
