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

#include "profl/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "profl/error.h"

namespace profl {
namespace {

// mt19937_64's output sequence is fixed by the standard; the standard
// distributions are not, so sampling is done by hand to keep datasets
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::size_t Index(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % bound);
  }

  // Uniform in [0, 1).
  double Unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Chance(double p) { return Unit() < p; }

  PatchGroup Group(const GroupDistribution& dist) {
    const double u = Unit();
    double acc = 0;
    for (std::size_t g = 0; g < dist.size(); ++g) {
      acc += dist[g];
      if (u < acc) return static_cast<PatchGroup>(g);
    }
    // Rounding slack: last group with nonzero mass.
    for (std::size_t g = dist.size(); g-- > 0;) {
      if (dist[g] > 0) return static_cast<PatchGroup>(g);
    }
    return PatchGroup::kNoneFix;
  }

  // k distinct indices from [0, n), in increasing order.
  std::vector<std::size_t> Sample(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + Index(n - i)]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

std::string Padded(char prefix, std::size_t index, std::size_t width) {
  std::string digits = std::to_string(index);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return std::string(1, prefix) + digits;
}

std::size_t WidthFor(std::size_t count) {
  return std::to_string(count == 0 ? 0 : count - 1).size();
}

GroupDistribution Dist(double clean, double noisy, double none, double neg) {
  GroupDistribution d{};
  d[static_cast<std::size_t>(PatchGroup::kCleanFix)] = clean;
  d[static_cast<std::size_t>(PatchGroup::kNoisyFix)] = noisy;
  d[static_cast<std::size_t>(PatchGroup::kNoneFix)] = none;
  d[static_cast<std::size_t>(PatchGroup::kNegFix)] = neg;
  return d;
}

void CheckDistribution(const GroupDistribution& dist, const char* name) {
  double sum = 0;
  for (double p : dist) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ConfigError(std::string(name) + " has a negative or invalid probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError(std::string(name) + " probabilities sum to " +
                      std::to_string(sum) + ", expected 1");
  }
}

std::uint64_t BugSeed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

GeneratorConfig OracleFaithfulPreset() {
  GeneratorConfig config;
  config.buggy_profile = Dist(0.35, 0.25, 0.2, 0.2);
  config.correct_profile = Dist(0.0, 0.0, 0.5, 0.5);
  return config;
}

GeneratorConfig NoisyPreset() {
  GeneratorConfig config = OracleFaithfulPreset();
  config.correct_profile = Dist(0.02, 0.05, 0.46, 0.47);
  return config;
}

void ValidateConfig(const GeneratorConfig& config) {
  if (config.n_elements == 0) throw ConfigError("n_elements must be positive");
  if (config.statements_per_element == 0) {
    throw ConfigError("statements_per_element must be positive");
  }
  if (config.n_failing == 0) throw ConfigError("n_failing must be at least 1");
  if (config.n_tests <= config.n_failing) {
    throw ConfigError("n_tests must exceed n_failing (need a passing test)");
  }
  if (config.n_buggy == 0 || config.n_buggy > config.n_elements) {
    throw ConfigError("n_buggy must be in [1, n_elements]");
  }
  if (config.n_buggy + config.n_confounders > config.n_elements) {
    throw ConfigError("n_buggy + n_confounders exceeds n_elements");
  }
  if (config.n_bugs == 0) throw ConfigError("n_bugs must be positive");
  for (double p : {config.coverage_probability,
                   config.message_change_probability}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError("probabilities must lie in [0, 1]");
    }
  }
  CheckDistribution(config.buggy_profile, "buggy profile");
  CheckDistribution(config.correct_profile, "correct profile");
}

SyntheticBug Generate(const GeneratorConfig& config) {
  ValidateConfig(config);
  Rng rng(config.seed);

  const std::size_t element_width = WidthFor(config.n_elements);
  const std::size_t test_width = WidthFor(config.n_tests);
  std::vector<ElementId> elements;
  std::vector<std::vector<StatementId>> statements;
  std::map<StatementId, ElementId> mapping;
  for (std::size_t e = 0; e < config.n_elements; ++e) {
    elements.emplace_back(Padded('e', e, element_width));
    statements.emplace_back();
    for (std::size_t s = 0; s < config.statements_per_element; ++s) {
      StatementId statement(elements.back().str() + ".s" + std::to_string(s));
      mapping.emplace(statement, elements.back());
      statements.back().push_back(statement);
    }
  }

  // Buggy elements, then confounders drawn from the rest.
  const std::vector<std::size_t> special =
      rng.Sample(config.n_elements, config.n_buggy + config.n_confounders);
  std::vector<std::size_t> shuffled = special;
  for (std::size_t i = shuffled.size(); i > 1; --i) {
    std::swap(shuffled[i - 1], shuffled[rng.Index(i)]);
  }
  std::set<std::size_t> buggy(shuffled.begin(),
                              shuffled.begin() + config.n_buggy);
  std::set<std::size_t> confounders(shuffled.begin() + config.n_buggy,
                                    shuffled.end());
  // Statement carrying the fault (or the confounding coverage) per element.
  std::vector<std::size_t> hot_statement(config.n_elements);
  for (auto& s : hot_statement) s = rng.Index(config.statements_per_element);

  const std::vector<std::size_t> failing_tests =
      rng.Sample(config.n_tests, config.n_failing);
  const std::set<std::size_t> failing(failing_tests.begin(),
                                      failing_tests.end());

  std::vector<TestRecord> tests;
  std::vector<PatchExecutionMatrix::OriginalEntry> original;
  for (std::size_t t = 0; t < config.n_tests; ++t) {
    TestRecord record;
    record.id = TestId(Padded('t', t, test_width));
    const bool fails = failing.contains(t);
    record.outcome = fails ? TestOutcome::kFailed : TestOutcome::kPassed;
    for (std::size_t e = 0; e < config.n_elements; ++e) {
      const bool special_element = buggy.contains(e) || confounders.contains(e);
      double p = config.coverage_probability;
      if (fails && special_element) {
        p = 1.0;
      } else if (confounders.contains(e)) {
        p /= 2;  // confounders look cleaner than the fault to passing tests
      }
      if (!rng.Chance(p)) continue;
      record.covered.insert(statements[e][hot_statement[e]]);
      for (std::size_t s = 0; s < config.statements_per_element; ++s) {
        if (s != hot_statement[e] && rng.Chance(0.5)) {
          record.covered.insert(statements[e][s]);
        }
      }
    }
    original.push_back(
        {record.id, record.outcome,
         fails ? std::optional<std::string>("m" + record.id.str())
               : std::nullopt});
    tests.push_back(std::move(record));
  }

  std::vector<std::size_t> passing_tests;
  for (std::size_t t = 0; t < config.n_tests; ++t) {
    if (!failing.contains(t)) passing_tests.push_back(t);
  }

  std::vector<PatchRow> rows;
  std::vector<PatchGroup> drawn;
  const std::size_t patch_width =
      WidthFor(config.n_elements * config.patches_per_element);
  std::size_t patch_counter = 0;
  for (std::size_t e = 0; e < config.n_elements; ++e) {
    const auto& profile =
        buggy.contains(e) ? config.buggy_profile : config.correct_profile;
    for (std::size_t k = 0; k < config.patches_per_element; ++k) {
      const PatchGroup group = rng.Group(profile);
      PatchRow row{PatchId(Padded('p', patch_counter++, patch_width)),
                   elements[e], {}};
      row.results.reserve(config.n_tests);
      for (const auto& entry : original) {
        row.results.push_back(entry.outcome == TestOutcome::kFailed
                                  ? CellResult::Fail(entry.message_digest)
                                  : CellResult::Pass());
      }
      const bool fix = group == PatchGroup::kCleanFix ||
                       group == PatchGroup::kNoisyFix;
      const bool breaks = group == PatchGroup::kNoisyFix ||
                          group == PatchGroup::kNegFix;
      if (fix) row.results[failing_tests.front()] = CellResult::Pass();
      if (breaks) {
        const std::size_t t = passing_tests[rng.Index(passing_tests.size())];
        row.results[t] =
            CellResult::Fail("m" + original[t].test.str() + "@" + row.id.str());
      }
      for (const std::size_t t : failing_tests) {
        if (row.results[t].is_fail() &&
            rng.Chance(config.message_change_probability)) {
          row.results[t].message_digest =
              "m" + original[t].test.str() + "@" + row.id.str();
        }
      }
      rows.push_back(std::move(row));
      drawn.push_back(group);
    }
  }

  BugGroundTruth truth;
  for (const std::size_t e : buggy) truth.buggy_elements.insert(elements[e]);

  SyntheticBug bug{
      BugData{config.name_prefix,
              CoverageSpectra::Create(std::move(tests), std::move(mapping)),
              PatchExecutionMatrix::FromRows(std::move(original),
                                             std::move(rows)),
              std::move(truth), std::nullopt},
      std::move(drawn)};
  return bug;
}

std::vector<SyntheticBug> GenerateCorpus(const GeneratorConfig& config) {
  ValidateConfig(config);
  std::vector<SyntheticBug> corpus;
  corpus.reserve(config.n_bugs);
  const std::size_t width = std::max<std::size_t>(4, WidthFor(config.n_bugs));
  for (std::size_t i = 0; i < config.n_bugs; ++i) {
    GeneratorConfig single = config;
    single.seed = BugSeed(config.seed, i);
    single.n_bugs = 1;
    SyntheticBug bug = Generate(single);
    std::string index = std::to_string(i);
    index.insert(0, width - std::min(width, index.size()), '0');
    bug.data.id = config.name_prefix + "-" + index;
    corpus.push_back(std::move(bug));
  }
  return corpus;
}

namespace {

GroupDistribution ParseDistribution(const Json& value, const char* name) {
  if (!value.is_object()) {
    throw ConfigError(std::string(name) + " must be an object of group -> probability");
  }
  GroupDistribution dist{};
  for (const auto& [key, p] : value.items()) {
    auto group = ParsePatchGroup(key);
    if (!group) throw ConfigError(std::string(name) + ": unknown group '" + key + "'");
    if (!p.is_number()) {
      throw ConfigError(std::string(name) + ": probability of " + key + " must be a number");
    }
    dist[static_cast<std::size_t>(*group)] = p.get<double>();
  }
  return dist;
}

Json DistributionToJson(const GroupDistribution& dist) {
  Json out = Json::object();
  for (auto g : {PatchGroup::kCleanFix, PatchGroup::kNoisyFix,
                 PatchGroup::kNoneFix, PatchGroup::kNegFix}) {
    out[std::string(ToString(g))] = dist[static_cast<std::size_t>(g)];
  }
  return out;
}

template <typename T>
void ReadNumber(const Json& doc, const char* key, T& out) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  if constexpr (std::is_floating_point_v<T>) {
    if (!it->is_number()) throw ConfigError(std::string(key) + " must be a number");
    out = it->get<T>();
  } else {
    if (!it->is_number_unsigned()) {
      throw ConfigError(std::string(key) + " must be a non-negative integer");
    }
    out = it->get<T>();
  }
}

}  // namespace

GeneratorConfig ParseGeneratorConfig(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("generator config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("generator config must be an object");

  static const std::set<std::string> kKnown = {
      "v", "preset", "seed", "n_elements", "statements_per_element", "n_tests",
      "n_failing", "patches_per_element", "n_buggy", "n_confounders",
      "coverage_probability", "message_change_probability", "group_profile",
      "n_bugs", "name_prefix"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKnown.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }

  GeneratorConfig config = OracleFaithfulPreset();
  if (auto it = doc.find("preset"); it != doc.end()) {
    const std::string preset = it->is_string() ? it->get<std::string>() : "";
    if (preset == "oracle-faithful") {
      config = OracleFaithfulPreset();
    } else if (preset == "noisy") {
      config = NoisyPreset();
    } else {
      throw ConfigError("unknown preset " + it->dump());
    }
  }
  ReadNumber(doc, "seed", config.seed);
  ReadNumber(doc, "n_elements", config.n_elements);
  ReadNumber(doc, "statements_per_element", config.statements_per_element);
  ReadNumber(doc, "n_tests", config.n_tests);
  ReadNumber(doc, "n_failing", config.n_failing);
  ReadNumber(doc, "patches_per_element", config.patches_per_element);
  ReadNumber(doc, "n_buggy", config.n_buggy);
  ReadNumber(doc, "n_confounders", config.n_confounders);
  ReadNumber(doc, "coverage_probability", config.coverage_probability);
  ReadNumber(doc, "message_change_probability",
             config.message_change_probability);
  ReadNumber(doc, "n_bugs", config.n_bugs);
  if (auto it = doc.find("name_prefix"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>().empty()) {
      throw ConfigError("name_prefix must be a non-empty string");
    }
    config.name_prefix = it->get<std::string>();
  }
  if (auto it = doc.find("group_profile"); it != doc.end()) {
    if (!it->is_object()) throw ConfigError("group_profile must be an object");
    for (const auto& [key, value] : it->items()) {
      if (key == "buggy") {
        config.buggy_profile = ParseDistribution(value, "buggy profile");
      } else if (key == "correct") {
        config.correct_profile = ParseDistribution(value, "correct profile");
      } else {
        throw ConfigError("group_profile key must be buggy or correct, got '" + key + "'");
      }
    }
  }
  ValidateConfig(config);
  return config;
}

Json GeneratorConfigToJson(const GeneratorConfig& config) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  doc["seed"] = config.seed;
  doc["n_elements"] = config.n_elements;
  doc["statements_per_element"] = config.statements_per_element;
  doc["n_tests"] = config.n_tests;
  doc["n_failing"] = config.n_failing;
  doc["patches_per_element"] = config.patches_per_element;
  doc["n_buggy"] = config.n_buggy;
  doc["n_confounders"] = config.n_confounders;
  doc["coverage_probability"] = config.coverage_probability;
  doc["message_change_probability"] = config.message_change_probability;
  doc["group_profile"] = {{"buggy", DistributionToJson(config.buggy_profile)},
                          {"correct", DistributionToJson(config.correct_profile)}};
  doc["n_bugs"] = config.n_bugs;
  doc["name_prefix"] = config.name_prefix;
  return doc;
}

}  // namespace profl
