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

// In-memory representation of coverage spectra, patch execution matrices and
// bug ground truth. All types are immutable once constructed through their
// validating factories, so they can be shared freely across threads.

#ifndef PROFL_DATA_MODEL_H_
#define PROFL_DATA_MODEL_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace profl {

// Opaque string identifier tagged by namespace so that, e.g., a TestId cannot
// be passed where an ElementId is expected.
template <typename Tag>
class StrongId {
 public:
  StrongId() = default;
  explicit StrongId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  auto operator<=>(const StrongId&) const = default;
  bool operator==(const StrongId&) const = default;

 private:
  std::string value_;
};

using StatementId = StrongId<struct StatementTag>;
using ElementId = StrongId<struct ElementTag>;
using TestId = StrongId<struct TestTag>;
using PatchId = StrongId<struct PatchTag>;

// Outcome of a test on the original, unpatched program.
enum class TestOutcome { kPassed, kFailed };

// One cell of a patch row: the test passed, failed (optionally with a
// fingerprint of the failure output), or was never executed.
struct CellResult {
  enum class Kind { kPass, kFail, kUnknown };

  Kind kind = Kind::kUnknown;
  std::optional<std::string> message_digest;

  static CellResult Pass() { return {Kind::kPass, std::nullopt}; }
  static CellResult Fail(std::optional<std::string> digest = std::nullopt) {
    return {Kind::kFail, std::move(digest)};
  }
  static CellResult Unknown() { return {Kind::kUnknown, std::nullopt}; }

  bool is_pass() const { return kind == Kind::kPass; }
  bool is_fail() const { return kind == Kind::kFail; }
  bool is_unknown() const { return kind == Kind::kUnknown; }

  bool operator==(const CellResult&) const = default;
};

struct TestRecord {
  TestId id;
  TestOutcome outcome = TestOutcome::kPassed;
  std::set<StatementId> covered;

  bool operator==(const TestRecord&) const = default;
};

class CoverageSpectra {
 public:
  // Validates the invariants and throws ValidationError naming the offending
  // record: duplicate or empty test ids, covered statements without an
  // element mapping, empty element ids, or no failing test at all.
  static CoverageSpectra Create(
      std::vector<TestRecord> tests,
      std::map<StatementId, ElementId> statement_to_element);

  const std::vector<TestRecord>& tests() const { return tests_; }
  const std::map<StatementId, ElementId>& statement_to_element() const {
    return statement_to_element_;
  }

  std::size_t failed_count() const { return failed_count_; }
  std::size_t passed_count() const { return tests_.size() - failed_count_; }

  bool HasStatement(const StatementId& statement) const;
  // Throws UnknownIdError for statements outside the mapping.
  const ElementId& ElementOf(const StatementId& statement) const;

  // Sorted, duplicate-free list of every element reachable from the
  // statement mapping.
  std::vector<ElementId> ElementUniverse() const;

  // Statements mapped onto `element`, in id order.
  std::vector<StatementId> StatementsOf(const ElementId& element) const;

  bool operator==(const CoverageSpectra&) const = default;

 private:
  std::vector<TestRecord> tests_;
  std::map<StatementId, ElementId> statement_to_element_;
  std::size_t failed_count_ = 0;
};

enum class Completeness { kFull, kPartial };

struct PatchRow {
  PatchId id;
  ElementId target;
  // Indexed by the matrix's test index; always tests().size() long.
  std::vector<CellResult> results;

  bool operator==(const PatchRow&) const = default;
};

// Patches x tests grid plus the original program's outcome row. Test order is
// the suite order as given at construction; it drives partial-execution
// simulation.
class PatchExecutionMatrix {
 public:
  struct OriginalEntry {
    TestId test;
    TestOutcome outcome = TestOutcome::kPassed;
    std::optional<std::string> message_digest;

    bool operator==(const OriginalEntry&) const = default;
  };

  struct PatchSpec {
    PatchId id;
    ElementId target;
    // Absent tests become Unknown.
    std::map<TestId, CellResult> results;
  };

  // Throws ValidationError on duplicate ids, empty targets, result keys that
  // are not in the original row, or Unknown cells written explicitly.
  static PatchExecutionMatrix Create(std::vector<OriginalEntry> original,
                                     std::vector<PatchSpec> patches);

  // Row-major construction; each row must have one cell per original test.
  static PatchExecutionMatrix FromRows(std::vector<OriginalEntry> original,
                                       std::vector<PatchRow> rows);

  const std::vector<OriginalEntry>& original() const { return original_; }
  std::size_t test_count() const { return original_.size(); }
  const std::vector<PatchRow>& patches() const { return patches_; }

  // Full iff no cell is Unknown.
  Completeness completeness() const;
  std::size_t known_cell_count() const;
  std::size_t total_cell_count() const {
    return original_.size() * patches_.size();
  }

  std::optional<std::size_t> FindTest(const TestId& test) const;
  // Throws UnknownIdError.
  std::size_t PatchIndex(const PatchId& patch) const;
  const PatchRow& Patch(const PatchId& patch) const {
    return patches_[PatchIndex(patch)];
  }

  std::size_t failed_count() const;
  std::size_t passed_count() const { return test_count() - failed_count(); }

  bool operator==(const PatchExecutionMatrix& other) const {
    return original_ == other.original_ && patches_ == other.patches_;
  }

 private:
  std::vector<OriginalEntry> original_;
  std::vector<PatchRow> patches_;
  std::map<TestId, std::size_t> test_index_;
  std::map<PatchId, std::size_t> patch_index_;
};

struct BugGroundTruth {
  std::set<ElementId> buggy_elements;

  bool operator==(const BugGroundTruth&) const = default;
};

// Externally supplied element suspiciousness (e.g. from a learning-based
// technique) that replaces spectrum-based Layer 1 scores.
struct BaseScores {
  std::map<ElementId, double> scores;

  bool operator==(const BaseScores&) const = default;
};

std::string_view ToString(TestOutcome outcome);

// Checks that every buggy element belongs to `universe` (sorted) and that the
// set is non-empty. Throws ValidationError.
void ValidateGroundTruth(const BugGroundTruth& truth,
                         const std::vector<ElementId>& universe);

// Checks that the matrix's original row agrees with the spectra outcomes
// (same tests, same outcomes) and that every patch targets an element of the
// spectra universe. Throws ConsistencyError.
void CheckConsistency(const CoverageSpectra& spectra,
                      const PatchExecutionMatrix& matrix);

}  // namespace profl

template <typename Tag>
struct std::hash<profl::StrongId<Tag>> {
  std::size_t operator()(const profl::StrongId<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

#endif  // PROFL_DATA_MODEL_H_
