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

#ifndef PROFL_EVALUATION_H_
#define PROFL_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profl/data_model.h"
#include "profl/metrics.h"
#include "profl/patch_analysis.h"
#include "profl/ranking.h"
#include "profl/sbfl.h"

namespace profl {

enum class Technique { kProfl, kSbfl, kMuse, kMetallaxis, kMcbfl };

std::string_view ToString(Technique technique);
std::optional<Technique> ParseTechnique(std::string_view name);

struct BugData {
  std::string id;
  CoverageSpectra spectra;
  PatchExecutionMatrix matrix;
  BugGroundTruth truth;
  std::optional<BaseScores> base_scores;
};

struct TechniqueOptions {
  Formula formula = Formula::kOchiai;
  CategorizationRule rule = CategorizationRule::kBasic;
  // Prefer a bug's base scores over `formula` when it has them.
  bool use_base_scores = true;
};

SuspiciousnessSource SourceFor(const BugData& bug,
                               const TechniqueOptions& options);

RankedList RunTechnique(Technique technique, const BugData& bug,
                        const TechniqueOptions& options = {});

// One bug directory: spectra.json, matrix.json, truth.json and optionally
// base_scores.json. Throws on malformed or inconsistent files.
BugData LoadBugDirectory(const std::filesystem::path& dir);

// Writes `bug` in the directory layout read by LoadBugDirectory.
void WriteBugDirectory(const BugData& bug, const std::filesystem::path& dir);

struct TechniqueReport {
  Technique technique;
  std::vector<BugResult> results;  // sorted by bug id
  EvalReport report;
};

// Evaluates every technique on every bug using up to `jobs` worker threads.
// Output does not depend on `jobs`.
std::vector<TechniqueReport> EvaluateCorpus(
    std::span<const BugData> bugs, std::span<const Technique> techniques,
    const TechniqueOptions& options = {}, std::size_t jobs = 1);

}  // namespace profl

#endif  // PROFL_EVALUATION_H_
