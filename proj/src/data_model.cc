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

#include "profl/data_model.h"

#include <algorithm>
#include <set>

#include "profl/error.h"

namespace profl {

CoverageSpectra CoverageSpectra::Create(
    std::vector<TestRecord> tests,
    std::map<StatementId, ElementId> statement_to_element) {
  for (const auto& [statement, element] : statement_to_element) {
    if (statement.empty()) {
      throw ValidationError("empty statement id in statement mapping");
    }
    if (element.empty()) {
      throw ValidationError("statement '" + statement.str() +
                            "' maps to an empty element id");
    }
  }

  std::set<TestId> seen;
  std::size_t failed = 0;
  for (const auto& test : tests) {
    if (test.id.empty()) {
      throw ValidationError("empty test id");
    }
    if (!seen.insert(test.id).second) {
      throw ValidationError("duplicate test id '" + test.id.str() + "'");
    }
    for (const auto& statement : test.covered) {
      if (!statement_to_element.contains(statement)) {
        throw ValidationError("covered statement '" + statement.str() +
                              "' of test '" + test.id.str() +
                              "' has no element mapping");
      }
    }
    if (test.outcome == TestOutcome::kFailed) ++failed;
  }
  if (failed == 0) {
    throw ValidationError("no-failing-tests: spectra contain no failing test");
  }

  CoverageSpectra spectra;
  spectra.tests_ = std::move(tests);
  spectra.statement_to_element_ = std::move(statement_to_element);
  spectra.failed_count_ = failed;
  return spectra;
}

bool CoverageSpectra::HasStatement(const StatementId& statement) const {
  return statement_to_element_.contains(statement);
}

const ElementId& CoverageSpectra::ElementOf(
    const StatementId& statement) const {
  auto it = statement_to_element_.find(statement);
  if (it == statement_to_element_.end()) {
    throw UnknownIdError("statement", statement.str());
  }
  return it->second;
}

std::vector<ElementId> CoverageSpectra::ElementUniverse() const {
  std::set<ElementId> unique;
  for (const auto& [statement, element] : statement_to_element_) {
    unique.insert(element);
  }
  return {unique.begin(), unique.end()};
}

std::vector<StatementId> CoverageSpectra::StatementsOf(
    const ElementId& element) const {
  std::vector<StatementId> out;
  for (const auto& [statement, owner] : statement_to_element_) {
    if (owner == element) out.push_back(statement);
  }
  return out;
}

namespace {

std::map<TestId, std::size_t> IndexTests(
    const std::vector<PatchExecutionMatrix::OriginalEntry>& original) {
  std::map<TestId, std::size_t> index;
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i].test.empty()) {
      throw ValidationError("empty test id in original row");
    }
    if (!index.emplace(original[i].test, i).second) {
      throw ValidationError("duplicate test id '" + original[i].test.str() +
                            "' in original row");
    }
  }
  return index;
}

}  // namespace

PatchExecutionMatrix PatchExecutionMatrix::Create(
    std::vector<OriginalEntry> original, std::vector<PatchSpec> patches) {
  auto test_index = IndexTests(original);
  std::vector<PatchRow> rows;
  rows.reserve(patches.size());
  for (auto& spec : patches) {
    PatchRow row{std::move(spec.id), std::move(spec.target),
                 std::vector<CellResult>(original.size())};
    for (auto& [test, cell] : spec.results) {
      auto it = test_index.find(test);
      if (it == test_index.end()) {
        throw ValidationError("patch '" + row.id.str() +
                              "' has a result for unknown test '" +
                              test.str() + "'");
      }
      if (cell.is_unknown()) {
        throw ValidationError("patch '" + row.id.str() +
                              "' writes an explicit unknown cell for '" +
                              test.str() + "'");
      }
      row.results[it->second] = std::move(cell);
    }
    rows.push_back(std::move(row));
  }
  return FromRows(std::move(original), std::move(rows));
}

PatchExecutionMatrix PatchExecutionMatrix::FromRows(
    std::vector<OriginalEntry> original, std::vector<PatchRow> rows) {
  PatchExecutionMatrix matrix;
  matrix.test_index_ = IndexTests(original);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.id.empty()) throw ValidationError("empty patch id");
    if (row.target.empty()) {
      throw ValidationError("patch '" + row.id.str() + "' has no target");
    }
    if (row.results.size() != original.size()) {
      throw ValidationError("patch '" + row.id.str() + "' has " +
                            std::to_string(row.results.size()) +
                            " cells, expected " +
                            std::to_string(original.size()));
    }
    if (!matrix.patch_index_.emplace(row.id, i).second) {
      throw ValidationError("duplicate patch id '" + row.id.str() + "'");
    }
  }
  matrix.original_ = std::move(original);
  matrix.patches_ = std::move(rows);
  return matrix;
}

Completeness PatchExecutionMatrix::completeness() const {
  return known_cell_count() == total_cell_count() ? Completeness::kFull
                                                  : Completeness::kPartial;
}

std::size_t PatchExecutionMatrix::known_cell_count() const {
  std::size_t known = 0;
  for (const auto& row : patches_) {
    known += static_cast<std::size_t>(
        std::count_if(row.results.begin(), row.results.end(),
                      [](const CellResult& c) { return !c.is_unknown(); }));
  }
  return known;
}

std::optional<std::size_t> PatchExecutionMatrix::FindTest(
    const TestId& test) const {
  auto it = test_index_.find(test);
  if (it == test_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PatchExecutionMatrix::PatchIndex(const PatchId& patch) const {
  auto it = patch_index_.find(patch);
  if (it == patch_index_.end()) throw UnknownIdError("patch", patch.str());
  return it->second;
}

std::size_t PatchExecutionMatrix::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(original_.begin(), original_.end(), [](const auto& e) {
        return e.outcome == TestOutcome::kFailed;
      }));
}

std::string_view ToString(TestOutcome outcome) {
  return outcome == TestOutcome::kFailed ? "fail" : "pass";
}

void ValidateGroundTruth(const BugGroundTruth& truth,
                         const std::vector<ElementId>& universe) {
  if (truth.buggy_elements.empty()) {
    throw ValidationError("ground truth lists no buggy element");
  }
  for (const auto& element : truth.buggy_elements) {
    if (!std::binary_search(universe.begin(), universe.end(), element)) {
      throw ValidationError("buggy element '" + element.str() +
                            "' is not in the element universe");
    }
  }
}

void CheckConsistency(const CoverageSpectra& spectra,
                      const PatchExecutionMatrix& matrix) {
  if (spectra.tests().size() != matrix.test_count()) {
    throw ConsistencyError(
        "matrix original row has " + std::to_string(matrix.test_count()) +
        " tests, spectra has " + std::to_string(spectra.tests().size()));
  }
  for (const auto& test : spectra.tests()) {
    auto index = matrix.FindTest(test.id);
    if (!index) {
      throw ConsistencyError("test '" + test.id.str() +
                             "' missing from matrix original row");
    }
    if (matrix.original()[*index].outcome != test.outcome) {
      throw ConsistencyError(
          "original outcome of '" + test.id.str() + "' is " +
          std::string(ToString(matrix.original()[*index].outcome)) +
          " in the matrix but " + std::string(ToString(test.outcome)) +
          " in the spectra");
    }
  }
  const auto universe = spectra.ElementUniverse();
  for (const auto& row : matrix.patches()) {
    if (!std::binary_search(universe.begin(), universe.end(), row.target)) {
      throw ConsistencyError("patch '" + row.id.str() + "' targets '" +
                             row.target.str() +
                             "', which is not in the spectra element universe");
    }
  }
}

}  // namespace profl
