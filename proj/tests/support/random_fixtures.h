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

// Seeded random spectra and matrices for property tests.

#ifndef PROFL_TESTS_SUPPORT_RANDOM_FIXTURES_H_
#define PROFL_TESTS_SUPPORT_RANDOM_FIXTURES_H_

#include <random>

#include "profl/data_model.h"

namespace profl::testing {

using Rng = std::mt19937_64;

struct RandomShape {
  std::size_t tests = 8;
  std::size_t failing = 2;
  std::size_t elements = 4;
  std::size_t statements_per_element = 3;
  std::size_t patches = 6;
  double coverage = 0.4;
  double flip = 0.3;
};

// Tests t1..tN with the first `failing` failing.
CoverageSpectra RandomSpectra(Rng& rng, const RandomShape& shape);

// Full matrix over the tests of RandomSpectra with patches targeting random
// elements e1..eK. Each cell flips the original outcome with probability
// `shape.flip`.
PatchExecutionMatrix RandomFullMatrix(Rng& rng, const RandomShape& shape);

// Replaces each known cell by Unknown with probability `hide`.
PatchExecutionMatrix HideCells(Rng& rng, const PatchExecutionMatrix& matrix,
                               double hide);

}  // namespace profl::testing

#endif  // PROFL_TESTS_SUPPORT_RANDOM_FIXTURES_H_
