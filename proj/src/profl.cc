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

#include "profl/profl.h"

#include "profl/error.h"

namespace profl {

RankedList Rerank(const ElementScores& scores,
                  const std::map<ElementId, ElementGroup>& groups) {
  std::vector<RankEntry> entries;
  entries.reserve(scores.size());
  for (const auto& [element, score] : scores) {
    auto it = groups.find(element);
    if (it == groups.end()) {
      throw ValidationError("no group for element '" + element.str() + "'");
    }
    entries.push_back({element, it->second, score.score, score.has_evidence, 0});
  }
  return RankedList::Build(std::move(entries));
}

ProflStages RunProfl(const CoverageSpectra& spectra,
                     const PatchExecutionMatrix& matrix,
                     const ProflOptions& options) {
  CheckConsistency(spectra, matrix);
  ProflStages stages;
  stages.suspiciousness = ComputeElementScores(spectra, options.source);
  stages.patch_groups = CategorizeAll(matrix);
  stages.element_groups =
      AggregateGroups(matrix, spectra.ElementUniverse(), options.rule);
  stages.ranking = Rerank(stages.suspiciousness, stages.element_groups);
  return stages;
}

RankedList ProflRank(const CoverageSpectra& spectra,
                     const PatchExecutionMatrix& matrix,
                     const ProflOptions& options) {
  return RunProfl(spectra, matrix, options).ranking;
}

RankedList RankByScores(const ElementScores& scores) {
  std::vector<RankEntry> entries;
  entries.reserve(scores.size());
  for (const auto& [element, score] : scores) {
    entries.push_back(
        {element, std::nullopt, score.score, score.has_evidence, 0});
  }
  return RankedList::Build(std::move(entries));
}

RankedList SbflRank(const CoverageSpectra& spectra,
                    const SuspiciousnessSource& source) {
  return RankByScores(ComputeElementScores(spectra, source));
}

Json ProflStagesToJson(const ProflStages& stages, const ProflOptions& options) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  if (const auto* formula = std::get_if<Formula>(&options.source)) {
    doc["source"] = FormulaName(*formula);
  } else {
    doc["source"] = "base-scores";
  }
  doc["rule"] = ToString(options.rule);

  Json layer1 = Json::object();
  for (const auto& [element, score] : stages.suspiciousness) {
    layer1[element.str()] = {{"score", score.score},
                             {"has_evidence", score.has_evidence}};
  }
  doc["suspiciousness"] = std::move(layer1);

  Json layer2 = Json::array();
  for (const auto& category : stages.patch_groups) {
    layer2.push_back({{"patch", category.patch.str()},
                      {"target", category.target.str()},
                      {"group", ToString(category.group)},
                      {"finer_group", ToString(category.finer)},
                      {"f2p", category.flips.f2p},
                      {"p2f", category.flips.p2f}});
  }
  doc["patch_groups"] = std::move(layer2);

  Json layer3 = Json::object();
  for (const auto& [element, group] : stages.element_groups) {
    layer3[element.str()] = {{"group", ToString(group.label)},
                             {"level", group.level},
                             {"no_patch_evidence", group.no_patch_evidence}};
  }
  doc["element_groups"] = std::move(layer3);
  doc["ranking"] = RankedListToJson(stages.ranking)["entries"];
  return doc;
}

}  // namespace profl
