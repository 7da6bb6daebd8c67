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

#include "profl/io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "profl/error.h"

namespace profl {
namespace {

Json ParseDocument(std::string_view text, std::string_view what) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(std::string(what) + ": top level must be an object");
  }
  return doc;
}

void RequireVersion(const Json& doc, std::string_view what,
                    bool required = true) {
  auto it = doc.find("v");
  if (it == doc.end()) {
    if (!required) return;
    throw ParseError(std::string(what) + ": missing schema version \"v\"");
  }
  if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
    throw ParseError(std::string(what) + ": unsupported schema version " +
                     it->dump());
  }
}

const Json& Member(const Json& object, const char* key,
                   const std::string& context) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(context + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::string StringField(const Json& object, const char* key,
                        const std::string& context) {
  const Json& value = Member(object, key, context);
  if (!value.is_string()) {
    throw ParseError(context + ": field \"" + key + "\" must be a string");
  }
  return value.get<std::string>();
}

TestOutcome ParseOutcome(const Json& value, const std::string& context) {
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s == "pass") return TestOutcome::kPassed;
    if (s == "fail") return TestOutcome::kFailed;
  }
  throw ParseError(context + ": outcome must be \"pass\" or \"fail\", got " +
                   value.dump());
}

CellResult ParseCell(const Json& value, const std::string& context) {
  // Both the object form {"r": ..., "msg": ...} and a bare "pass"/"fail"
  // string are accepted.
  const Json* r = &value;
  std::optional<std::string> digest;
  if (value.is_object()) {
    r = &Member(value, "r", context);
    if (auto msg = value.find("msg"); msg != value.end()) {
      if (!msg->is_string()) {
        throw ParseError(context + ": \"msg\" must be a string");
      }
      digest = msg->get<std::string>();
    }
  }
  const TestOutcome outcome = ParseOutcome(*r, context);
  if (outcome == TestOutcome::kPassed) {
    if (digest) {
      throw ParseError(context + ": passing cell carries a failure digest");
    }
    return CellResult::Pass();
  }
  return CellResult::Fail(std::move(digest));
}

Json CellToJson(const CellResult& cell) {
  Json out = Json::object();
  out["r"] = cell.is_pass() ? "pass" : "fail";
  if (cell.message_digest) out["msg"] = *cell.message_digest;
  return out;
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void WriteJsonFile(const std::filesystem::path& path, const Json& json) {
  WriteTextFile(path, DumpJson(json));
}

CoverageSpectra ParseSpectra(std::string_view text) {
  const Json doc = ParseDocument(text, "spectra");
  RequireVersion(doc, "spectra");

  const Json& statements = Member(doc, "statements", "spectra");
  if (!statements.is_object()) {
    throw ParseError("spectra: \"statements\" must be an object");
  }
  std::map<StatementId, ElementId> mapping;
  for (const auto& [statement, element] : statements.items()) {
    if (!element.is_string()) {
      throw ParseError("spectra: statement '" + statement +
                       "' must map to a string element id");
    }
    mapping.emplace(StatementId(statement),
                    ElementId(element.get<std::string>()));
  }

  const Json& tests = Member(doc, "tests", "spectra");
  if (!tests.is_array()) throw ParseError("spectra: \"tests\" must be an array");
  std::vector<TestRecord> records;
  records.reserve(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const Json& entry = tests[i];
    std::string context = "spectra test #" + std::to_string(i);
    if (!entry.is_object()) throw ParseError(context + ": must be an object");
    TestRecord record;
    record.id = TestId(StringField(entry, "id", context));
    context = "spectra test '" + record.id.str() + "'";
    record.outcome = ParseOutcome(Member(entry, "outcome", context), context);
    const Json& covered = Member(entry, "covered", context);
    if (!covered.is_array()) {
      throw ParseError(context + ": \"covered\" must be an array");
    }
    for (const Json& statement : covered) {
      if (!statement.is_string()) {
        throw ParseError(context + ": covered ids must be strings");
      }
      record.covered.emplace(statement.get<std::string>());
    }
    records.push_back(std::move(record));
  }
  return CoverageSpectra::Create(std::move(records), std::move(mapping));
}

CoverageSpectra LoadSpectra(const std::filesystem::path& path) {
  return ParseSpectra(ReadFile(path));
}

Json SpectraToJson(const CoverageSpectra& spectra) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  Json tests = Json::array();
  for (const auto& test : spectra.tests()) {
    Json entry = Json::object();
    entry["id"] = test.id.str();
    entry["outcome"] = ToString(test.outcome);
    Json covered = Json::array();
    for (const auto& statement : test.covered) covered.push_back(statement.str());
    entry["covered"] = std::move(covered);
    tests.push_back(std::move(entry));
  }
  doc["tests"] = std::move(tests);
  Json statements = Json::object();
  for (const auto& [statement, element] : spectra.statement_to_element()) {
    statements[statement.str()] = element.str();
  }
  doc["statements"] = std::move(statements);
  return doc;
}

PatchExecutionMatrix ParsePatchMatrix(std::string_view text) {
  const Json doc = ParseDocument(text, "matrix");
  RequireVersion(doc, "matrix");

  const Json& original = Member(doc, "original", "matrix");
  if (!original.is_object()) {
    throw ParseError("matrix: \"original\" must be an object");
  }
  std::vector<PatchExecutionMatrix::OriginalEntry> row;
  row.reserve(original.size());
  for (const auto& [test, value] : original.items()) {
    const std::string context = "matrix original '" + test + "'";
    PatchExecutionMatrix::OriginalEntry entry;
    entry.test = TestId(test);
    CellResult cell = ParseCell(value, context);
    entry.outcome = cell.is_fail() ? TestOutcome::kFailed : TestOutcome::kPassed;
    entry.message_digest = std::move(cell.message_digest);
    row.push_back(std::move(entry));
  }

  const Json& patches = Member(doc, "patches", "matrix");
  if (!patches.is_array()) {
    throw ParseError("matrix: \"patches\" must be an array");
  }
  std::vector<PatchExecutionMatrix::PatchSpec> specs;
  specs.reserve(patches.size());
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const Json& entry = patches[i];
    std::string context = "matrix patch #" + std::to_string(i);
    if (!entry.is_object()) throw ParseError(context + ": must be an object");
    PatchExecutionMatrix::PatchSpec spec;
    spec.id = PatchId(StringField(entry, "id", context));
    context = "matrix patch '" + spec.id.str() + "'";
    spec.target = ElementId(StringField(entry, "target", context));
    const Json& results = Member(entry, "results", context);
    if (!results.is_object()) {
      throw ParseError(context + ": \"results\" must be an object");
    }
    for (const auto& [test, value] : results.items()) {
      spec.results.emplace(TestId(test),
                           ParseCell(value, context + " test '" + test + "'"));
    }
    specs.push_back(std::move(spec));
  }
  return PatchExecutionMatrix::Create(std::move(row), std::move(specs));
}

PatchExecutionMatrix LoadPatchMatrix(const std::filesystem::path& path) {
  return ParsePatchMatrix(ReadFile(path));
}

PatchExecutionMatrix LoadPatchMatrix(const std::filesystem::path& path,
                                     const CoverageSpectra& spectra) {
  PatchExecutionMatrix matrix = LoadPatchMatrix(path);
  CheckConsistency(spectra, matrix);
  return matrix;
}

Json PatchMatrixToJson(const PatchExecutionMatrix& matrix) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  Json original = Json::object();
  for (const auto& entry : matrix.original()) {
    if (entry.message_digest) {
      original[entry.test.str()] = CellToJson(CellResult::Fail(entry.message_digest));
    } else {
      original[entry.test.str()] = ToString(entry.outcome);
    }
  }
  doc["original"] = std::move(original);
  Json patches = Json::array();
  for (const auto& row : matrix.patches()) {
    Json entry = Json::object();
    entry["id"] = row.id.str();
    entry["target"] = row.target.str();
    Json results = Json::object();
    for (std::size_t t = 0; t < row.results.size(); ++t) {
      if (row.results[t].is_unknown()) continue;
      results[matrix.original()[t].test.str()] = CellToJson(row.results[t]);
    }
    entry["results"] = std::move(results);
    patches.push_back(std::move(entry));
  }
  doc["patches"] = std::move(patches);
  return doc;
}

BugGroundTruth ParseGroundTruth(std::string_view text) {
  const Json doc = ParseDocument(text, "truth");
  RequireVersion(doc, "truth");
  const Json& buggy = Member(doc, "buggy_elements", "truth");
  if (!buggy.is_array()) {
    throw ParseError("truth: \"buggy_elements\" must be an array");
  }
  BugGroundTruth truth;
  for (const Json& element : buggy) {
    if (!element.is_string() || element.get<std::string>().empty()) {
      throw ParseError("truth: buggy element ids must be non-empty strings");
    }
    truth.buggy_elements.emplace(element.get<std::string>());
  }
  if (truth.buggy_elements.empty()) {
    throw ValidationError("truth: no buggy element listed");
  }
  return truth;
}

BugGroundTruth LoadGroundTruth(const std::filesystem::path& path) {
  return ParseGroundTruth(ReadFile(path));
}

Json GroundTruthToJson(const BugGroundTruth& truth) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  Json buggy = Json::array();
  for (const auto& element : truth.buggy_elements) buggy.push_back(element.str());
  doc["buggy_elements"] = std::move(buggy);
  return doc;
}

BaseScores ParseBaseScores(std::string_view text) {
  const Json doc = ParseDocument(text, "base scores");
  RequireVersion(doc, "base scores", /*required=*/false);
  const Json& scores = Member(doc, "scores", "base scores");
  if (!scores.is_object()) {
    throw ParseError("base scores: \"scores\" must be an object");
  }
  BaseScores out;
  for (const auto& [element, value] : scores.items()) {
    if (!value.is_number() || !std::isfinite(value.get<double>())) {
      throw ParseError("base scores: score of '" + element +
                       "' must be a finite number");
    }
    if (element.empty()) throw ParseError("base scores: empty element id");
    out.scores.emplace(ElementId(element), value.get<double>());
  }
  return out;
}

BaseScores LoadBaseScores(const std::filesystem::path& path) {
  return ParseBaseScores(ReadFile(path));
}

Json BaseScoresToJson(const BaseScores& scores) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  Json map = Json::object();
  for (const auto& [element, value] : scores.scores) map[element.str()] = value;
  doc["scores"] = std::move(map);
  return doc;
}

}  // namespace profl
