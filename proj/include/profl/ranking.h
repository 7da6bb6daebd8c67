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

#ifndef PROFL_RANKING_H_
#define PROFL_RANKING_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "profl/data_model.h"
#include "profl/io.h"
#include "profl/patch_analysis.h"

namespace profl {

struct RankEntry {
  ElementId element;
  // Absent for techniques that do not group elements.
  std::optional<ElementGroup> group;
  double score = 0.0;
  bool has_evidence = true;
  // Number of elements whose sort key is >= this element's key.
  std::size_t worst_rank = 0;

  bool operator==(const RankEntry&) const = default;
};

// Sort key: group level, then evidence, then score, all descending. Two
// entries with equal keys are tied and share the last tied position.
bool RanksAtLeast(const RankEntry& a, const RankEntry& b);
bool SameRankKey(const RankEntry& a, const RankEntry& b);

class RankedList {
 public:
  // Sorts by key (ties broken by element id, ascending) and assigns worst
  // ranks. Element ids must be unique (ValidationError).
  static RankedList Build(std::vector<RankEntry> entries);

  const std::vector<RankEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  // nullptr when absent.
  const RankEntry* Find(const ElementId& element) const;
  std::vector<ElementId> Order() const;

  bool operator==(const RankedList&) const = default;

 private:
  std::vector<RankEntry> entries_;
};

Json RankedListToJson(const RankedList& ranking);

}  // namespace profl

#endif  // PROFL_RANKING_H_
