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

// Seeded generator of synthetic bugs: coverage spectra, a full patch
// execution matrix and ground truth. Patch rows are drawn per element from a
// group profile and realized with a minimal witness (the first failing test
// in suite order fixed and/or one broken passing test), so categorizing a
// generated patch always gives back the drawn group.

#ifndef PROFL_SYNTH_H_
#define PROFL_SYNTH_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "profl/evaluation.h"
#include "profl/io.h"
#include "profl/patch_analysis.h"

namespace profl {

// Probability of each basic group, indexed by PatchGroup.
using GroupDistribution = std::array<double, 4>;

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t n_elements = 20;
  std::size_t statements_per_element = 3;
  std::size_t n_tests = 40;
  std::size_t n_failing = 2;
  std::size_t patches_per_element = 2;
  std::size_t n_buggy = 1;
  // Correct elements that every failing test also executes; they compete
  // with the buggy element for the top spectrum rank.
  std::size_t n_confounders = 2;
  // Chance that a passing test executes a given element.
  double coverage_probability = 0.3;
  // Chance that a patch changes the failure message of a still-failing test.
  double message_change_probability = 0.0;
  GroupDistribution buggy_profile{};
  GroupDistribution correct_profile{};
  // Corpus generation only.
  std::size_t n_bugs = 1;
  std::string name_prefix = "synth";
};

// Correct elements never receive CleanFix or NoisyFix patches.
GeneratorConfig OracleFaithfulPreset();
// Like the oracle-faithful preset but with a small CleanFix/NoisyFix rate on
// correct elements.
GeneratorConfig NoisyPreset();

// Throws ConfigError.
void ValidateConfig(const GeneratorConfig& config);

// Accepts every GeneratorConfig field by name plus an optional "preset"
// ("oracle-faithful" or "noisy") applied before the other fields. Profiles
// are objects keyed by group name. Throws ConfigError / ParseError.
GeneratorConfig ParseGeneratorConfig(std::string_view json_text);
Json GeneratorConfigToJson(const GeneratorConfig& config);

struct SyntheticBug {
  BugData data;
  // Drawn group of every patch, in matrix row order.
  std::vector<PatchGroup> drawn_groups;
};

// Deterministic for a given config.
SyntheticBug Generate(const GeneratorConfig& config);

// `config.n_bugs` bugs named "<prefix>-NNNN", each generated from a seed
// derived from `config.seed` and its index.
std::vector<SyntheticBug> GenerateCorpus(const GeneratorConfig& config);

}  // namespace profl

#endif  // PROFL_SYNTH_H_
