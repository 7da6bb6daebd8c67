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

#include "profl/patch_analysis.h"

#include <algorithm>

#include "profl/error.h"

namespace profl {

FlipCounts CountFlips(const PatchExecutionMatrix& matrix, std::size_t patch) {
  const auto& row = matrix.patches().at(patch);
  FlipCounts flips;
  for (std::size_t t = 0; t < row.results.size(); ++t) {
    const CellResult& cell = row.results[t];
    if (cell.is_unknown()) continue;
    if (matrix.original()[t].outcome == TestOutcome::kFailed) {
      ++flips.known_fail_total;
      if (cell.is_pass()) ++flips.f2p;
    } else {
      ++flips.known_pass_total;
      if (cell.is_fail()) ++flips.p2f;
    }
  }
  return flips;
}

FlipCounts CountFlips(const PatchExecutionMatrix& matrix,
                      const PatchId& patch) {
  return CountFlips(matrix, matrix.PatchIndex(patch));
}

PatchGroup BasicGroupFromFlips(const FlipCounts& flips) {
  if (flips.f2p > 0) {
    return flips.p2f == 0 ? PatchGroup::kCleanFix : PatchGroup::kNoisyFix;
  }
  return flips.p2f == 0 ? PatchGroup::kNoneFix : PatchGroup::kNegFix;
}

PatchGroup Categorize(const PatchExecutionMatrix& matrix, std::size_t patch) {
  return BasicGroupFromFlips(CountFlips(matrix, patch));
}

PatchGroup Categorize(const PatchExecutionMatrix& matrix,
                      const PatchId& patch) {
  return Categorize(matrix, matrix.PatchIndex(patch));
}

FinerPatchGroup CategorizeFiner(const PatchExecutionMatrix& matrix,
                                std::size_t patch) {
  const FlipCounts flips = CountFlips(matrix, patch);
  const bool all_failing_fixed = flips.f2p == matrix.failed_count();
  switch (BasicGroupFromFlips(flips)) {
    case PatchGroup::kCleanFix:
      return all_failing_fixed ? FinerPatchGroup::kCleanAllFix
                               : FinerPatchGroup::kCleanPartFix;
    case PatchGroup::kNoisyFix:
      return all_failing_fixed ? FinerPatchGroup::kNoisyAllFix
                               : FinerPatchGroup::kNoisyPartFix;
    case PatchGroup::kNoneFix:
      return FinerPatchGroup::kNoneFix;
    case PatchGroup::kNegFix:
      return FinerPatchGroup::kNegFix;
  }
  return FinerPatchGroup::kNoneFix;
}

FinerPatchGroup CategorizeFiner(const PatchExecutionMatrix& matrix,
                                const PatchId& patch) {
  return CategorizeFiner(matrix, matrix.PatchIndex(patch));
}

PatchGroup ToBasic(FinerPatchGroup group) {
  switch (group) {
    case FinerPatchGroup::kCleanAllFix:
    case FinerPatchGroup::kCleanPartFix:
      return PatchGroup::kCleanFix;
    case FinerPatchGroup::kNoisyAllFix:
    case FinerPatchGroup::kNoisyPartFix:
      return PatchGroup::kNoisyFix;
    case FinerPatchGroup::kNoneFix:
      return PatchGroup::kNoneFix;
    case FinerPatchGroup::kNegFix:
      return PatchGroup::kNegFix;
  }
  return PatchGroup::kNoneFix;
}

namespace {

GroupLabel BasicLabel(PatchGroup group) {
  switch (group) {
    case PatchGroup::kCleanFix:
      return GroupLabel::kCleanFix;
    case PatchGroup::kNoisyFix:
      return GroupLabel::kNoisyFix;
    case PatchGroup::kNoneFix:
      return GroupLabel::kNoneFix;
    case PatchGroup::kNegFix:
      return GroupLabel::kNegFix;
  }
  return GroupLabel::kNoneFix;
}

GroupLabel FineLabel(FinerPatchGroup group) {
  switch (group) {
    case FinerPatchGroup::kCleanAllFix:
      return GroupLabel::kCleanAllFix;
    case FinerPatchGroup::kCleanPartFix:
      return GroupLabel::kCleanPartFix;
    case FinerPatchGroup::kNoisyAllFix:
      return GroupLabel::kNoisyAllFix;
    case FinerPatchGroup::kNoisyPartFix:
      return GroupLabel::kNoisyPartFix;
    case FinerPatchGroup::kNoneFix:
      return GroupLabel::kNoneFix;
    case FinerPatchGroup::kNegFix:
      return GroupLabel::kNegFix;
  }
  return GroupLabel::kNoneFix;
}

bool SplitsClean(CategorizationRule rule) {
  return rule == CategorizationRule::kR1 || rule == CategorizationRule::kR2;
}

bool SplitsNoisy(CategorizationRule rule) {
  return rule == CategorizationRule::kR3 || rule == CategorizationRule::kR4;
}

}  // namespace

GroupLabel LabelUnder(CategorizationRule rule, FinerPatchGroup group) {
  const PatchGroup basic = ToBasic(group);
  if (basic == PatchGroup::kCleanFix && SplitsClean(rule)) {
    return FineLabel(group);
  }
  if (basic == PatchGroup::kNoisyFix && SplitsNoisy(rule)) {
    return FineLabel(group);
  }
  return BasicLabel(basic);
}

int LevelUnder(CategorizationRule rule, GroupLabel label) {
  // NegFix=1, NoneFix=2, then the rule-specific upper levels.
  switch (label) {
    case GroupLabel::kNegFix:
      return 1;
    case GroupLabel::kNoneFix:
      return 2;
    default:
      break;
  }
  const bool noisy = label == GroupLabel::kNoisyFix ||
                     label == GroupLabel::kNoisyAllFix ||
                     label == GroupLabel::kNoisyPartFix;
  const int noisy_base = 3;
  const int clean_base = SplitsNoisy(rule) ? 5 : 4;
  if (noisy) {
    if (!SplitsNoisy(rule)) return noisy_base;
    const bool all_first = rule == CategorizationRule::kR3;
    if (label == GroupLabel::kNoisyAllFix) return all_first ? 4 : 3;
    if (label == GroupLabel::kNoisyPartFix) return all_first ? 3 : 4;
    return noisy_base;
  }
  if (!SplitsClean(rule)) return clean_base;
  const bool all_first = rule == CategorizationRule::kR1;
  if (label == GroupLabel::kCleanAllFix) return all_first ? 5 : 4;
  if (label == GroupLabel::kCleanPartFix) return all_first ? 4 : 5;
  return clean_base;
}

std::vector<PatchCategory> CategorizeAll(const PatchExecutionMatrix& matrix) {
  std::vector<PatchCategory> out;
  out.reserve(matrix.patches().size());
  for (std::size_t p = 0; p < matrix.patches().size(); ++p) {
    const auto& row = matrix.patches()[p];
    const FlipCounts flips = CountFlips(matrix, p);
    const FinerPatchGroup finer = CategorizeFiner(matrix, p);
    out.push_back({row.id, row.target, ToBasic(finer), finer, flips});
  }
  return out;
}

std::map<ElementId, ElementGroup> AggregateGroups(
    const PatchExecutionMatrix& matrix, const std::vector<ElementId>& elements,
    CategorizationRule rule) {
  std::map<ElementId, ElementGroup> out;
  const ElementGroup empty{GroupLabel::kNoneFix,
                           LevelUnder(rule, GroupLabel::kNoneFix), true};
  for (const auto& element : elements) out.emplace(element, empty);

  for (std::size_t p = 0; p < matrix.patches().size(); ++p) {
    const auto& row = matrix.patches()[p];
    auto it = out.find(row.target);
    if (it == out.end()) {
      throw ValidationError("patch '" + row.id.str() + "' targets '" +
                            row.target.str() +
                            "', which is not in the element list");
    }
    const GroupLabel label = LabelUnder(rule, CategorizeFiner(matrix, p));
    const int level = LevelUnder(rule, label);
    ElementGroup& current = it->second;
    if (current.no_patch_evidence || level > current.level) {
      current = ElementGroup{label, level, false};
    }
  }
  return out;
}

std::string_view ToString(PatchGroup group) {
  switch (group) {
    case PatchGroup::kCleanFix:
      return "CleanFix";
    case PatchGroup::kNoisyFix:
      return "NoisyFix";
    case PatchGroup::kNoneFix:
      return "NoneFix";
    case PatchGroup::kNegFix:
      return "NegFix";
  }
  return "?";
}

std::string_view ToString(FinerPatchGroup group) {
  switch (group) {
    case FinerPatchGroup::kCleanAllFix:
      return "CleanAllFix";
    case FinerPatchGroup::kCleanPartFix:
      return "CleanPartFix";
    case FinerPatchGroup::kNoisyAllFix:
      return "NoisyAllFix";
    case FinerPatchGroup::kNoisyPartFix:
      return "NoisyPartFix";
    case FinerPatchGroup::kNoneFix:
      return "NoneFix";
    case FinerPatchGroup::kNegFix:
      return "NegFix";
  }
  return "?";
}

std::string_view ToString(GroupLabel label) {
  switch (label) {
    case GroupLabel::kCleanFix:
      return "CleanFix";
    case GroupLabel::kCleanAllFix:
      return "CleanAllFix";
    case GroupLabel::kCleanPartFix:
      return "CleanPartFix";
    case GroupLabel::kNoisyFix:
      return "NoisyFix";
    case GroupLabel::kNoisyAllFix:
      return "NoisyAllFix";
    case GroupLabel::kNoisyPartFix:
      return "NoisyPartFix";
    case GroupLabel::kNoneFix:
      return "NoneFix";
    case GroupLabel::kNegFix:
      return "NegFix";
  }
  return "?";
}

std::string_view ToString(CategorizationRule rule) {
  switch (rule) {
    case CategorizationRule::kBasic:
      return "basic";
    case CategorizationRule::kR1:
      return "r1";
    case CategorizationRule::kR2:
      return "r2";
    case CategorizationRule::kR3:
      return "r3";
    case CategorizationRule::kR4:
      return "r4";
  }
  return "?";
}

std::optional<CategorizationRule> ParseRule(std::string_view name) {
  for (auto rule : {CategorizationRule::kBasic, CategorizationRule::kR1,
                    CategorizationRule::kR2, CategorizationRule::kR3,
                    CategorizationRule::kR4}) {
    if (ToString(rule) == name) return rule;
  }
  return std::nullopt;
}

std::optional<PatchGroup> ParsePatchGroup(std::string_view name) {
  for (auto group : {PatchGroup::kCleanFix, PatchGroup::kNoisyFix,
                     PatchGroup::kNoneFix, PatchGroup::kNegFix}) {
    if (ToString(group) == name) return group;
  }
  return std::nullopt;
}

}  // namespace profl
