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

#include "profl/partial_sim.h"

#include "profl/error.h"

namespace profl {

std::string_view ToString(TestOrdering ordering) {
  switch (ordering) {
    case TestOrdering::kOrgOrder:
      return "org";
    case TestOrdering::kFailFirst:
      return "failfirst";
    case TestOrdering::kPassFirst:
      return "passfirst";
  }
  return "?";
}

std::optional<TestOrdering> ParseOrdering(std::string_view name) {
  for (auto o : {TestOrdering::kOrgOrder, TestOrdering::kFailFirst,
                 TestOrdering::kPassFirst}) {
    if (ToString(o) == name) return o;
  }
  return std::nullopt;
}

std::vector<std::size_t> ExecutionOrder(const PatchExecutionMatrix& matrix,
                                        TestOrdering ordering) {
  std::vector<std::size_t> failing;
  std::vector<std::size_t> passing;
  std::vector<std::size_t> all;
  for (std::size_t t = 0; t < matrix.test_count(); ++t) {
    all.push_back(t);
    (matrix.original()[t].outcome == TestOutcome::kFailed ? failing : passing)
        .push_back(t);
  }
  switch (ordering) {
    case TestOrdering::kOrgOrder:
      return all;
    case TestOrdering::kFailFirst:
      failing.insert(failing.end(), passing.begin(), passing.end());
      return failing;
    case TestOrdering::kPassFirst:
      passing.insert(passing.end(), failing.begin(), failing.end());
      return passing;
  }
  return all;
}

CostReport& CostReport::operator+=(const CostReport& other) {
  *this = MakeCostReport(executed_cells + other.executed_cells,
                         total_cells + other.total_cells);
  return *this;
}

CostReport MakeCostReport(std::size_t executed, std::size_t total) {
  CostReport cost;
  cost.executed_cells = executed;
  cost.total_cells = total;
  cost.reduction_ratio =
      total == 0 ? 0.0
                 : 1.0 - static_cast<double>(executed) /
                             static_cast<double>(total);
  return cost;
}

Truncation Truncate(const PatchExecutionMatrix& full, TestOrdering ordering) {
  if (full.completeness() != Completeness::kFull) {
    throw NotFullMatrixError("truncation needs a full matrix; " +
                             std::to_string(full.total_cell_count() -
                                            full.known_cell_count()) +
                             " cells are unknown");
  }
  const std::vector<std::size_t> order = ExecutionOrder(full, ordering);
  std::vector<PatchRow> rows;
  rows.reserve(full.patches().size());
  std::size_t executed = 0;
  for (const auto& source : full.patches()) {
    PatchRow row{source.id, source.target,
                 std::vector<CellResult>(full.test_count())};
    for (const std::size_t t : order) {
      row.results[t] = source.results[t];
      ++executed;
      if (source.results[t].is_fail()) break;
    }
    rows.push_back(std::move(row));
  }
  return {PatchExecutionMatrix::FromRows(full.original(), std::move(rows)),
          MakeCostReport(executed, full.total_cell_count())};
}

Json CostReportToJson(const CostReport& cost, TestOrdering ordering) {
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  doc["order"] = ToString(ordering);
  doc["executed_cells"] = cost.executed_cells;
  doc["total_cells"] = cost.total_cells;
  doc["reduction_ratio"] = cost.reduction_ratio;
  return doc;
}

std::vector<OrderingStudyRow> RunOrderingStudy(
    std::span<const BugData> bugs,
    std::span<const std::optional<TestOrdering>> orderings,
    std::span<const Technique> techniques, const TechniqueOptions& options,
    std::size_t jobs) {
  std::vector<OrderingStudyRow> rows;
  for (const auto& ordering : orderings) {
    std::vector<BugData> variant;
    variant.reserve(bugs.size());
    CostReport cost;
    for (const auto& bug : bugs) {
      BugData copy = bug;
      if (ordering) {
        Truncation truncation = Truncate(bug.matrix, *ordering);
        copy.matrix = std::move(truncation.partial);
        cost += truncation.cost;
      } else {
        cost += MakeCostReport(bug.matrix.total_cell_count(),
                               bug.matrix.total_cell_count());
      }
      variant.push_back(std::move(copy));
    }
    for (auto& evaluation :
         EvaluateCorpus(variant, techniques, options, jobs)) {
      rows.push_back({ordering, std::move(evaluation), cost});
    }
  }
  return rows;
}

}  // namespace profl
