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

#include <gtest/gtest.h>

#include <random>

#include "profl/error.h"
#include "profl/profl.h"
#include "random_fixtures.h"
#include "worked_examples.h"

namespace profl {
namespace {

using testing::E;

ProflOptions WithBaseScores(const BugData& bug) {
  ProflOptions options;
  options.source = *bug.base_scores;
  return options;
}

std::vector<std::string> Names(const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(id.str());
  return out;
}

TEST(ProflRankTest, Math40FinalOrder) {
  const BugData bug = testing::Math40Bug();
  const RankedList ranking = ProflRank(bug.spectra, bug.matrix, WithBaseScores(bug));
  EXPECT_EQ(Names(ranking.Order()),
            (std::vector<std::string>{"e4", "e5", "e3", "e1", "e2"}));
  EXPECT_EQ(ranking.Find(E(4))->worst_rank, 1u);
}

TEST(ProflRankTest, Closure61PutsBuggyFirst) {
  const BugData bug = testing::Closure61Bug();
  const RankedList ranking = ProflRank(bug.spectra, bug.matrix, WithBaseScores(bug));
  EXPECT_EQ(Names(ranking.Order()),
            (std::vector<std::string>{"e4", "e5", "e1", "e2", "e3"}));
  EXPECT_EQ(ranking.Find(E(4))->worst_rank, 1u);
}

TEST(ProflRankTest, PartialMath40KeepsBuggyOnTop) {
  BugData bug = testing::Math40NineTestBug();
  bug.matrix = testing::Math40PartialMatrix();
  const RankedList ranking = ProflRank(bug.spectra, bug.matrix, WithBaseScores(bug));
  // e1..e3 all fall into NoneFix here, so their tail follows the scores.
  EXPECT_EQ(Names(ranking.Order()),
            (std::vector<std::string>{"e4", "e5", "e1", "e2", "e3"}));
}

TEST(SbflRankTest, Math40PutsBuggyFourth) {
  const BugData bug = testing::Math40Bug();
  const RankedList ranking = SbflRank(bug.spectra, *bug.base_scores);
  EXPECT_EQ(Names(ranking.Order()),
            (std::vector<std::string>{"e1", "e2", "e3", "e4", "e5"}));
  EXPECT_EQ(ranking.Find(E(4))->worst_rank, 4u);
}

TEST(SbflRankTest, TiesTakeTheWorstPosition) {
  ElementScores scores{{E(1), {0.9, true}}, {E(2), {0.9, true}}, {E(3), {0.1, true}}};
  const RankedList ranking = RankByScores(scores);
  EXPECT_EQ(ranking.Find(E(1))->worst_rank, 2u);
  EXPECT_EQ(ranking.Find(E(2))->worst_rank, 2u);
  EXPECT_EQ(ranking.Find(E(3))->worst_rank, 3u);
  EXPECT_EQ(RankByScores({{E(7), {0.0, false}}}).Find(E(7))->worst_rank, 1u);
}

TEST(RankedListTest, RejectsDuplicates) {
  RankEntry a{E(1), std::nullopt, 1.0, true, 0};
  EXPECT_THROW(RankedList::Build({a, a}), ValidationError);
}

TEST(ProflRankTest, ConstantGroupMatchesSbfl) {
  const BugData bug = testing::Math40NineTestBug();
  const PatchExecutionMatrix none = testing::MatrixFromStrings(
      "FPPPPPPPP", {{"e1", "FPPPPPPPP"}, {"e2", "FPPPPPPPP"},
                    {"e3", "FPPPPPPPP"}, {"e4", "FPPPPPPPP"},
                    {"e5", "FPPPPPPPP"}});
  EXPECT_EQ(ProflRank(bug.spectra, none, WithBaseScores(bug)).Order(),
            SbflRank(bug.spectra, *bug.base_scores).Order());
}

TEST(ProflRankTest, StagesSerializeWithVersion) {
  const BugData bug = testing::Math40NineTestBug();
  const ProflOptions options = WithBaseScores(bug);
  const ProflStages stages = RunProfl(bug.spectra, bug.matrix, options);
  EXPECT_EQ(stages.patch_groups.size(), 6u);
  EXPECT_EQ(stages.element_groups.size(), 5u);
  const Json doc = ProflStagesToJson(stages, options);
  EXPECT_EQ(doc["v"], 1);
  EXPECT_EQ(RankedListToJson(stages.ranking)["entries"][0]["element"], "e4");
}

TEST(ProflRankTest, InconsistentInputsAreRejected) {
  BugData bug = testing::Math40NineTestBug();
  const PatchExecutionMatrix other =
      testing::MatrixFromStrings("PFPPPPPPP", {{"e1", "PPPPPPPPP"}});
  EXPECT_THROW(ProflRank(bug.spectra, other), ConsistencyError);
}

// Random scores and groups over a handful of elements, with plenty of ties.
struct RandomLayer {
  ElementScores scores;
  std::map<ElementId, ElementGroup> groups;
};

RandomLayer MakeLayer(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> level(1, 4);
  std::uniform_int_distribution<int> score(0, 4);
  RandomLayer layer;
  for (std::size_t i = 0; i < n; ++i) {
    const ElementId e("e" + std::to_string(i + 1));
    layer.scores[e] = {score(rng) / 4.0, true};
    const int l = level(rng);
    layer.groups[e] = {static_cast<GroupLabel>(l - 1), l, false};
  }
  return layer;
}

TEST(RerankPropertyTest, ComparatorIsTotalPreorder) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const RandomLayer layer = MakeLayer(rng, 3);
    const RankedList list = Rerank(layer.scores, layer.groups);
    const auto& x = list.entries();
    for (const auto& a : x) {
      ASSERT_TRUE(RanksAtLeast(a, a));
      for (const auto& b : x) {
        ASSERT_TRUE(RanksAtLeast(a, b) || RanksAtLeast(b, a));
        for (const auto& c : x) {
          if (RanksAtLeast(a, b) && RanksAtLeast(b, c)) {
            ASSERT_TRUE(RanksAtLeast(a, c));
          }
        }
      }
    }
  }
}

TEST(RerankPropertyTest, GroupDominanceAndWithinGroupOrder) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const RandomLayer layer = MakeLayer(rng, 8);
    const RankedList list = Rerank(layer.scores, layer.groups);
    const RankedList sbfl = RankByScores(layer.scores);
    const auto& entries = list.entries();
    for (std::size_t a = 0; a + 1 < entries.size(); ++a) {
      ASSERT_GE(entries[a].group->level, entries[a + 1].group->level);
    }
    for (int level = 1; level <= 4; ++level) {
      std::vector<ElementId> in_list, in_sbfl;
      for (const auto& e : entries) {
        if (e.group->level == level) in_list.push_back(e.element);
      }
      for (const auto& e : sbfl.entries()) {
        if (layer.groups.at(e.element).level == level) in_sbfl.push_back(e.element);
      }
      ASSERT_EQ(in_list, in_sbfl);
    }
    // worst_rank counts every element whose key is at least as high.
    for (const auto& e : entries) {
      std::size_t at_least = 0;
      for (const auto& other : entries) at_least += RanksAtLeast(other, e);
      ASSERT_EQ(e.worst_rank, at_least);
    }
  }
}

TEST(RerankPropertyTest, PositiveScalingKeepsPermutation) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  for (int i = 0; i < 500; ++i) {
    RandomLayer layer = MakeLayer(rng, 8);
    const auto before = Rerank(layer.scores, layer.groups).Order();
    const double k = factor(rng);
    for (auto& [e, s] : layer.scores) s.score *= k;
    ASSERT_EQ(Rerank(layer.scores, layer.groups).Order(), before);
  }
}

TEST(RerankPropertyTest, SameGroupEverywhereEqualsSbfl) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    RandomLayer layer = MakeLayer(rng, 8);
    for (auto& [e, g] : layer.groups) g = {GroupLabel::kNoisyFix, 3, false};
    ASSERT_EQ(Rerank(layer.scores, layer.groups).Order(),
              RankByScores(layer.scores).Order());
  }
}

}  // namespace
}  // namespace profl
