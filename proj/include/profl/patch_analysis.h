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

// Patch categorization from execution outcomes and aggregation of patch
// groups onto the program elements the patches modify.

#ifndef PROFL_PATCH_ANALYSIS_H_
#define PROFL_PATCH_ANALYSIS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "profl/data_model.h"

namespace profl {

// Ordered worst to best so that a larger value is a better group.
enum class PatchGroup { kNegFix, kNoneFix, kNoisyFix, kCleanFix };

enum class FinerPatchGroup {
  kNegFix,
  kNoneFix,
  kNoisyPartFix,
  kNoisyAllFix,
  kCleanPartFix,
  kCleanAllFix,
};

enum class CategorizationRule { kBasic, kR1, kR2, kR3, kR4 };

// Label an element carries under some rule. The basic labels double as the
// merged labels of rules that split only one of CleanFix/NoisyFix.
enum class GroupLabel {
  kNegFix,
  kNoneFix,
  kNoisyFix,
  kNoisyPartFix,
  kNoisyAllFix,
  kCleanFix,
  kCleanPartFix,
  kCleanAllFix,
};

struct FlipCounts {
  std::size_t f2p = 0;  // originally failing, now passing
  std::size_t p2f = 0;  // originally passing, now failing
  std::size_t known_fail_total = 0;  // known cells on originally failing tests
  std::size_t known_pass_total = 0;  // known cells on originally passing tests

  bool operator==(const FlipCounts&) const = default;
};

FlipCounts CountFlips(const PatchExecutionMatrix& matrix, std::size_t patch);
// Throws UnknownIdError.
FlipCounts CountFlips(const PatchExecutionMatrix& matrix, const PatchId& patch);

PatchGroup BasicGroupFromFlips(const FlipCounts& flips);

PatchGroup Categorize(const PatchExecutionMatrix& matrix, std::size_t patch);
PatchGroup Categorize(const PatchExecutionMatrix& matrix, const PatchId& patch);

// The "All" variants require every originally failing test to have a known,
// passing cell; an unexecuted failing test counts as not fixed.
FinerPatchGroup CategorizeFiner(const PatchExecutionMatrix& matrix,
                                std::size_t patch);
FinerPatchGroup CategorizeFiner(const PatchExecutionMatrix& matrix,
                                const PatchId& patch);

PatchGroup ToBasic(FinerPatchGroup group);

GroupLabel LabelUnder(CategorizationRule rule, FinerPatchGroup group);
// Position of `label` in the rule's total order; larger is better. Labels
// that the rule does not use map to the level of their basic parent.
int LevelUnder(CategorizationRule rule, GroupLabel label);

struct ElementGroup {
  GroupLabel label = GroupLabel::kNoneFix;
  int level = 0;
  // Set when no patch targets the element; such elements share the NoneFix
  // bucket.
  bool no_patch_evidence = false;

  bool operator==(const ElementGroup&) const = default;
};

struct PatchCategory {
  PatchId patch;
  ElementId target;
  PatchGroup group;
  FinerPatchGroup finer;
  FlipCounts flips;
};

std::vector<PatchCategory> CategorizeAll(const PatchExecutionMatrix& matrix);

// Best group per element under `rule`. Every patch target must appear in
// `elements` (ValidationError otherwise).
std::map<ElementId, ElementGroup> AggregateGroups(
    const PatchExecutionMatrix& matrix, const std::vector<ElementId>& elements,
    CategorizationRule rule);

std::string_view ToString(PatchGroup group);
std::string_view ToString(FinerPatchGroup group);
std::string_view ToString(GroupLabel label);
std::string_view ToString(CategorizationRule rule);
std::optional<CategorizationRule> ParseRule(std::string_view name);
std::optional<PatchGroup> ParsePatchGroup(std::string_view name);

}  // namespace profl

#endif  // PROFL_PATCH_ANALYSIS_H_
