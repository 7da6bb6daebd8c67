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

// Simulation of early-terminated patch validation: every patch runs the
// suite in a chosen order and stops after its first failing test. Cost is
// counted in executed test cells.

#ifndef PROFL_PARTIAL_SIM_H_
#define PROFL_PARTIAL_SIM_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "profl/data_model.h"
#include "profl/evaluation.h"
#include "profl/io.h"

namespace profl {

enum class TestOrdering { kOrgOrder, kFailFirst, kPassFirst };

std::string_view ToString(TestOrdering ordering);
std::optional<TestOrdering> ParseOrdering(std::string_view name);

// Test indices in execution order. FailFirst puts originally failing tests
// first, PassFirst puts them last; each block keeps suite order.
std::vector<std::size_t> ExecutionOrder(const PatchExecutionMatrix& matrix,
                                        TestOrdering ordering);

struct CostReport {
  std::size_t executed_cells = 0;
  std::size_t total_cells = 0;
  double reduction_ratio = 0.0;  // 1 - executed/total, 0 for empty matrices

  CostReport& operator+=(const CostReport& other);
};

CostReport MakeCostReport(std::size_t executed, std::size_t total);

struct Truncation {
  PatchExecutionMatrix partial;
  CostReport cost;
};

// Reveals each patch row in `ordering` up to and including its first Fail
// cell; the rest become Unknown. Throws NotFullMatrixError on partial input.
Truncation Truncate(const PatchExecutionMatrix& full, TestOrdering ordering);

Json CostReportToJson(const CostReport& cost, TestOrdering ordering);

struct OrderingStudyRow {
  std::optional<TestOrdering> ordering;  // nullopt: full matrix
  TechniqueReport evaluation;
  CostReport cost;  // summed over bugs
};

// For each ordering: truncate every bug's full matrix, then evaluate each
// technique on the partial data. A std::nullopt ordering means "no
// truncation" (the full-matrix reference row).
std::vector<OrderingStudyRow> RunOrderingStudy(
    std::span<const BugData> bugs,
    std::span<const std::optional<TestOrdering>> orderings,
    std::span<const Technique> techniques,
    const TechniqueOptions& options = {}, std::size_t jobs = 1);

}  // namespace profl

#endif  // PROFL_PARTIAL_SIM_H_
