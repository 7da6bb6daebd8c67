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

#include "profl/evaluation.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "profl/error.h"
#include "profl/io.h"
#include "profl/mbfl.h"
#include "profl/profl.h"

namespace profl {

std::string_view ToString(Technique technique) {
  switch (technique) {
    case Technique::kProfl:
      return "profl";
    case Technique::kSbfl:
      return "sbfl";
    case Technique::kMuse:
      return "muse";
    case Technique::kMetallaxis:
      return "metallaxis";
    case Technique::kMcbfl:
      return "mcbfl";
  }
  return "?";
}

std::optional<Technique> ParseTechnique(std::string_view name) {
  for (auto t : {Technique::kProfl, Technique::kSbfl, Technique::kMuse,
                 Technique::kMetallaxis, Technique::kMcbfl}) {
    if (ToString(t) == name) return t;
  }
  return std::nullopt;
}

SuspiciousnessSource SourceFor(const BugData& bug,
                               const TechniqueOptions& options) {
  if (options.use_base_scores && bug.base_scores) return *bug.base_scores;
  return options.formula;
}

RankedList RunTechnique(Technique technique, const BugData& bug,
                        const TechniqueOptions& options) {
  switch (technique) {
    case Technique::kProfl:
      return ProflRank(bug.spectra, bug.matrix,
                       ProflOptions{SourceFor(bug, options), options.rule});
    case Technique::kSbfl:
      return SbflRank(bug.spectra, SourceFor(bug, options));
    case Technique::kMuse:
      return MuseRank(bug.spectra, bug.matrix);
    case Technique::kMetallaxis:
      return MetallaxisRank(bug.spectra, bug.matrix);
    case Technique::kMcbfl:
      return McbflRank(bug.spectra, bug.matrix, SourceFor(bug, options));
  }
  throw ValidationError("unknown technique");
}

BugData LoadBugDirectory(const std::filesystem::path& dir) {
  CoverageSpectra spectra = LoadSpectra(dir / "spectra.json");
  PatchExecutionMatrix matrix = LoadPatchMatrix(dir / "matrix.json", spectra);
  BugGroundTruth truth = LoadGroundTruth(dir / "truth.json");
  ValidateGroundTruth(truth, spectra.ElementUniverse());
  std::optional<BaseScores> base;
  if (std::filesystem::exists(dir / "base_scores.json")) {
    base = LoadBaseScores(dir / "base_scores.json");
  }
  return BugData{dir.filename().string(), std::move(spectra),
                 std::move(matrix), std::move(truth), std::move(base)};
}

void WriteBugDirectory(const BugData& bug, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteJsonFile(dir / "spectra.json", SpectraToJson(bug.spectra));
  WriteJsonFile(dir / "matrix.json", PatchMatrixToJson(bug.matrix));
  WriteJsonFile(dir / "truth.json", GroundTruthToJson(bug.truth));
  if (bug.base_scores) {
    WriteJsonFile(dir / "base_scores.json", BaseScoresToJson(*bug.base_scores));
  }
}

std::vector<TechniqueReport> EvaluateCorpus(
    std::span<const BugData> bugs, std::span<const Technique> techniques,
    const TechniqueOptions& options, std::size_t jobs) {
  if (bugs.empty()) throw EmptyInputError("no bugs to evaluate");
  // results[t][b]
  std::vector<std::vector<BugResult>> results(
      techniques.size(), std::vector<BugResult>(bugs.size()));
  std::atomic<std::size_t> next{0};
  // The failure of the lowest-indexed bug wins so errors do not depend on
  // scheduling.
  std::exception_ptr failure;
  std::size_t failure_index = bugs.size();
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t b = next++; b < bugs.size(); b = next++) {
      try {
        for (std::size_t t = 0; t < techniques.size(); ++t) {
          results[t][b] = ComputeBugResult(
              bugs[b].id, RunTechnique(techniques[t], bugs[b], options),
              bugs[b].truth);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (b < failure_index) {
          failure_index = b;
          failure = std::current_exception();
        }
      }
    }
  };

  jobs = std::clamp<std::size_t>(jobs, 1, bugs.size());
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TechniqueReport> out;
  for (std::size_t t = 0; t < techniques.size(); ++t) {
    auto& list = results[t];
    std::sort(list.begin(), list.end(),
              [](const BugResult& x, const BugResult& y) { return x.bug < y.bug; });
    out.push_back({techniques[t], list, MakeEvalReport(list)});
  }
  return out;
}

}  // namespace profl
