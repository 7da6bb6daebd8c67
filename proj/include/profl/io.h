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

// JSON readers and writers for the dataset files. Every top-level document
// carries `"v": 1`. Writers emit a canonical form: partial patch rows omit
// unexecuted tests, statement maps and coverage sets are sorted.

#ifndef PROFL_IO_H_
#define PROFL_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "profl/data_model.h"

namespace profl {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

CoverageSpectra ParseSpectra(std::string_view text);
CoverageSpectra LoadSpectra(const std::filesystem::path& path);
Json SpectraToJson(const CoverageSpectra& spectra);

PatchExecutionMatrix ParsePatchMatrix(std::string_view text);
PatchExecutionMatrix LoadPatchMatrix(const std::filesystem::path& path);
// Loads and cross-checks against `spectra` (see CheckConsistency).
PatchExecutionMatrix LoadPatchMatrix(const std::filesystem::path& path,
                                     const CoverageSpectra& spectra);
Json PatchMatrixToJson(const PatchExecutionMatrix& matrix);

BugGroundTruth ParseGroundTruth(std::string_view text);
BugGroundTruth LoadGroundTruth(const std::filesystem::path& path);
Json GroundTruthToJson(const BugGroundTruth& truth);

BaseScores ParseBaseScores(std::string_view text);
BaseScores LoadBaseScores(const std::filesystem::path& path);
Json BaseScoresToJson(const BaseScores& scores);

// Reads a whole file; throws IoError.
std::string ReadFile(const std::filesystem::path& path);
// Writes `json` pretty-printed with a trailing newline; throws IoError.
void WriteJsonFile(const std::filesystem::path& path, const Json& json);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string DumpJson(const Json& json);

}  // namespace profl

#endif  // PROFL_IO_H_
