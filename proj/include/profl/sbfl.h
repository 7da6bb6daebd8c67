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

// Spectrum-based suspiciousness: the formula registry, per-statement scores
// and max-aggregation of statement scores onto program elements.

#ifndef PROFL_SBFL_H_
#define PROFL_SBFL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "profl/data_model.h"

namespace profl {

struct SpectrumCounts {
  std::int64_t ef = 0;  // failed tests covering the statement
  std::int64_t ep = 0;  // passed tests covering it
  std::int64_t nf = 0;  // failed tests not covering it
  std::int64_t np = 0;  // passed tests not covering it

  bool operator==(const SpectrumCounts&) const = default;
};

enum class Formula {
  kOchiai,
  kOchiai2,
  kTarantula,
  kSbi,
  kJaccard,
  kKulczynski1,
  kKulczynski2,
  kDstar2,
  kAmple,
  kHamann,
  kHamming,
  kSorensenDice,
  kGoodman,
  kM1,
  kM2,
  kOverlap,
  kRogersTanimoto,
  kSimpleMatching,
  kSokal,
  kAnderberg,
  kZoltar,
  kWong1,
  kWong2,
  kWong3,
  kEuclid,
  kEr1a,
  kEr1b,
  kEr5a,
  kEr5b,
  kEr5c,
  kGp02,
  kGp03,
  kGp13,
  kGp19,
};

struct FormulaInfo {
  Formula id;
  std::string_view name;
};

inline constexpr std::size_t kFormulaCount = 34;

// All registered formulae in declaration order.
std::span<const FormulaInfo> FormulaRegistry();
std::string_view FormulaName(Formula formula);
// Case-insensitive lookup by registry name.
std::optional<Formula> ParseFormula(std::string_view name);

// Throws UnknownIdError for statements outside the spectra mapping.
SpectrumCounts ComputeSpectrumCounts(const CoverageSpectra& spectra,
                                     const StatementId& statement);
// Counts for every mapped statement in one pass over the tests.
std::map<StatementId, SpectrumCounts> ComputeAllSpectrumCounts(
    const CoverageSpectra& spectra);

// Total: any zero denominator yields 0, and the result is always finite.
double StatementSuspiciousness(const SpectrumCounts& counts, Formula formula);

struct ElementScore {
  double score = 0.0;
  // False when no statement of the element is covered by any test, or when
  // a base-score override omits the element. Such elements rank below every
  // element with evidence.
  bool has_evidence = false;

  bool operator==(const ElementScore&) const = default;
};

using ElementScores = std::map<ElementId, ElementScore>;

std::map<StatementId, double> ComputeStatementScores(
    const CoverageSpectra& spectra, Formula formula);

// susp(e) = max over the element's statements; every element of the universe
// receives an entry.
ElementScores AggregateToElements(const CoverageSpectra& spectra,
                                  Formula formula);

// Layer-1 input: either a registry formula or externally supplied scores.
using SuspiciousnessSource = std::variant<Formula, BaseScores>;

// Resolves `source` against the spectra universe. Base scores naming elements
// outside the universe raise ValidationError.
ElementScores ComputeElementScores(const CoverageSpectra& spectra,
                                   const SuspiciousnessSource& source);

}  // namespace profl

#endif  // PROFL_SBFL_H_
