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

#include "profl/ranking.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "profl/error.h"

namespace profl {
namespace {

auto Key(const RankEntry& e) {
  return std::make_tuple(e.group ? e.group->level : 0, e.has_evidence, e.score);
}

}  // namespace

bool RanksAtLeast(const RankEntry& a, const RankEntry& b) {
  return Key(a) >= Key(b);
}

bool SameRankKey(const RankEntry& a, const RankEntry& b) {
  return Key(a) == Key(b);
}

RankedList RankedList::Build(std::vector<RankEntry> entries) {
  std::set<ElementId> seen;
  for (const auto& entry : entries) {
    if (!seen.insert(entry.element).second) {
      throw ValidationError("element '" + entry.element.str() +
                            "' appears twice in a ranking");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const RankEntry& a, const RankEntry& b) {
              const auto ka = Key(a);
              const auto kb = Key(b);
              if (ka != kb) return ka > kb;
              return a.element < b.element;
            });
  std::size_t begin = 0;
  while (begin < entries.size()) {
    std::size_t end = begin + 1;
    while (end < entries.size() && SameRankKey(entries[begin], entries[end])) {
      ++end;
    }
    for (std::size_t i = begin; i < end; ++i) entries[i].worst_rank = end;
    begin = end;
  }
  RankedList list;
  list.entries_ = std::move(entries);
  return list;
}

const RankEntry* RankedList::Find(const ElementId& element) const {
  for (const auto& entry : entries_) {
    if (entry.element == element) return &entry;
  }
  return nullptr;
}

std::vector<ElementId> RankedList::Order() const {
  std::vector<ElementId> order;
  order.reserve(entries_.size());
  for (const auto& entry : entries_) order.push_back(entry.element);
  return order;
}

Json RankedListToJson(const RankedList& ranking) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  Json entries = Json::array();
  for (const auto& entry : ranking.entries()) {
    Json item = Json::object();
    item["element"] = entry.element.str();
    if (entry.group) {
      item["group"] = ToString(entry.group->label);
      item["group_level"] = entry.group->level;
      item["no_patch_evidence"] = entry.group->no_patch_evidence;
    } else {
      item["group"] = nullptr;
    }
    item["score"] = entry.score;
    item["has_evidence"] = entry.has_evidence;
    item["worst_rank"] = entry.worst_rank;
    entries.push_back(std::move(item));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

}  // namespace profl
