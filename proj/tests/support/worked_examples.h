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

// Hand-built fixtures for the Math-40 and Closure-61 examples and the
// nine-test Math-40 matrix with its early-terminated counterpart.

#ifndef PROFL_TESTS_SUPPORT_WORKED_EXAMPLES_H_
#define PROFL_TESTS_SUPPORT_WORKED_EXAMPLES_H_

#include <string>
#include <vector>

#include "profl/evaluation.h"

namespace profl::testing {

ElementId E(int i);
PatchId P(int i);
TestId T(int i);

// Five elements e1..e5, patches P1..P6, the nine tests t1..t9 whose outcomes
// change on some patch followed by 3169 tests that pass everywhere. Carries
// base scores [0.57, 0.33, 0.28, 0.27, 0.20]; e4 is buggy.
BugData Math40Bug();

// Only the nine tests t1..t9 of the Math-40 matrix.
BugData Math40NineTestBug();

// The early-terminated matrix for t1..t9 in suite order, written out cell by
// cell.
PatchExecutionMatrix Math40PartialMatrix();

// Five elements, patches P7..P11, 3 failing and 7082 passing tests. Carries
// base scores [0.34, 0.33, 0.27, 0.18, 0.09]; e4 is buggy.
BugData Closure61Bug();

// Spectra where every listed element owns one statement executed by every
// failing test; `failing` failing tests and `passing` passing tests.
CoverageSpectra FlatSpectra(const std::vector<ElementId>& elements,
                            std::size_t failing, std::size_t passing);

// Builds a matrix from strings of 'P', 'F' and '?' per patch, one character
// per test. `original` holds 'P'/'F' per test. Targets are given per row.
PatchExecutionMatrix MatrixFromStrings(
    const std::string& original,
    const std::vector<std::pair<std::string, std::string>>& target_and_row);

std::vector<std::string> Labels(const std::vector<PatchGroup>& groups);

}  // namespace profl::testing

#endif  // PROFL_TESTS_SUPPORT_WORKED_EXAMPLES_H_
