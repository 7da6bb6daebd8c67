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

// The four-layer feedback-driven ranking pipeline:
//   1. element suspiciousness (spectrum formula or supplied base scores),
//   2. patch categorization from the execution matrix,
//   3. best-group aggregation per element,
//   4. reranking by (group, suspiciousness).
// Each stage's output is kept so the layers can be audited independently.

#ifndef PROFL_PROFL_H_
#define PROFL_PROFL_H_

#include <map>
#include <vector>

#include "profl/data_model.h"
#include "profl/io.h"
#include "profl/patch_analysis.h"
#include "profl/ranking.h"
#include "profl/sbfl.h"

namespace profl {

struct ProflOptions {
  SuspiciousnessSource source = Formula::kOchiai;
  CategorizationRule rule = CategorizationRule::kBasic;
};

struct ProflStages {
  ElementScores suspiciousness;                   // layer 1
  std::vector<PatchCategory> patch_groups;        // layer 2
  std::map<ElementId, ElementGroup> element_groups;  // layer 3
  RankedList ranking;                             // layer 4
};

// Throws ConsistencyError when the matrix disagrees with the spectra.
ProflStages RunProfl(const CoverageSpectra& spectra,
                     const PatchExecutionMatrix& matrix,
                     const ProflOptions& options = {});

RankedList ProflRank(const CoverageSpectra& spectra,
                     const PatchExecutionMatrix& matrix,
                     const ProflOptions& options = {});

// Layer 4 on its own: rerank precomputed scores with precomputed groups.
RankedList Rerank(const ElementScores& scores,
                  const std::map<ElementId, ElementGroup>& groups);

// Plain spectrum ranking: every element in one group.
RankedList SbflRank(const CoverageSpectra& spectra,
                    const SuspiciousnessSource& source = Formula::kOchiai);
RankedList RankByScores(const ElementScores& scores);

Json ProflStagesToJson(const ProflStages& stages, const ProflOptions& options);

}  // namespace profl

#endif  // PROFL_PROFL_H_
