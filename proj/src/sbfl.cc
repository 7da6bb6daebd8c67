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

#include "profl/sbfl.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "profl/error.h"

namespace profl {
namespace {

constexpr std::array<FormulaInfo, kFormulaCount> kRegistry = {{
    {Formula::kOchiai, "Ochiai"},
    {Formula::kOchiai2, "Ochiai2"},
    {Formula::kTarantula, "Tarantula"},
    {Formula::kSbi, "SBI"},
    {Formula::kJaccard, "Jaccard"},
    {Formula::kKulczynski1, "Kulczynski1"},
    {Formula::kKulczynski2, "Kulczynski2"},
    {Formula::kDstar2, "Dstar2"},
    {Formula::kAmple, "Ample"},
    {Formula::kHamann, "Hamann"},
    {Formula::kHamming, "Hamming"},
    {Formula::kSorensenDice, "SorensenDice"},
    {Formula::kGoodman, "Goodman"},
    {Formula::kM1, "M1"},
    {Formula::kM2, "M2"},
    {Formula::kOverlap, "Overlap"},
    {Formula::kRogersTanimoto, "RogersTanimoto"},
    {Formula::kSimpleMatching, "SimpleMatching"},
    {Formula::kSokal, "Sokal"},
    {Formula::kAnderberg, "Anderberg"},
    {Formula::kZoltar, "Zoltar"},
    {Formula::kWong1, "Wong1"},
    {Formula::kWong2, "Wong2"},
    {Formula::kWong3, "Wong3"},
    {Formula::kEuclid, "Euclid"},
    {Formula::kEr1a, "ER1a"},
    {Formula::kEr1b, "ER1b"},
    {Formula::kEr5a, "ER5a"},
    {Formula::kEr5b, "ER5b"},
    {Formula::kEr5c, "ER5c"},
    {Formula::kGp02, "GP02"},
    {Formula::kGp03, "GP03"},
    {Formula::kGp13, "GP13"},
    {Formula::kGp19, "GP19"},
}};

double Div(double numerator, double denominator) {
  return denominator == 0.0 ? 0.0 : numerator / denominator;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::span<const FormulaInfo> FormulaRegistry() { return kRegistry; }

std::string_view FormulaName(Formula formula) {
  return kRegistry[static_cast<std::size_t>(formula)].name;
}

std::optional<Formula> ParseFormula(std::string_view name) {
  for (const auto& info : kRegistry) {
    if (EqualsIgnoreCase(info.name, name)) return info.id;
  }
  return std::nullopt;
}

SpectrumCounts ComputeSpectrumCounts(const CoverageSpectra& spectra,
                                     const StatementId& statement) {
  if (!spectra.HasStatement(statement)) {
    throw UnknownIdError("statement", statement.str());
  }
  SpectrumCounts counts;
  for (const auto& test : spectra.tests()) {
    const bool covers = test.covered.contains(statement);
    if (test.outcome == TestOutcome::kFailed) {
      ++(covers ? counts.ef : counts.nf);
    } else {
      ++(covers ? counts.ep : counts.np);
    }
  }
  return counts;
}

std::map<StatementId, SpectrumCounts> ComputeAllSpectrumCounts(
    const CoverageSpectra& spectra) {
  std::map<StatementId, SpectrumCounts> all;
  for (const auto& [statement, element] : spectra.statement_to_element()) {
    all.emplace(statement, SpectrumCounts{});
  }
  for (const auto& test : spectra.tests()) {
    const bool failed = test.outcome == TestOutcome::kFailed;
    for (const auto& statement : test.covered) {
      auto& counts = all.at(statement);
      ++(failed ? counts.ef : counts.ep);
    }
  }
  const auto failed = static_cast<std::int64_t>(spectra.failed_count());
  const auto passed = static_cast<std::int64_t>(spectra.passed_count());
  for (auto& [statement, counts] : all) {
    counts.nf = failed - counts.ef;
    counts.np = passed - counts.ep;
  }
  return all;
}

double StatementSuspiciousness(const SpectrumCounts& counts, Formula formula) {
  const double ef = static_cast<double>(counts.ef);
  const double ep = static_cast<double>(counts.ep);
  const double nf = static_cast<double>(counts.nf);
  const double np = static_cast<double>(counts.np);

  switch (formula) {
    case Formula::kOchiai:
      return Div(ef, std::sqrt((ef + nf) * (ef + ep)));
    case Formula::kOchiai2:
      return Div(ef * np,
                 std::sqrt((ef + ep) * (nf + np) * (ef + np) * (nf + ep)));
    case Formula::kTarantula: {
      const double fail_ratio = Div(ef, ef + nf);
      const double pass_ratio = Div(ep, ep + np);
      return Div(fail_ratio, fail_ratio + pass_ratio);
    }
    case Formula::kSbi:
      return Div(ef, ef + ep);
    case Formula::kJaccard:
      return Div(ef, ef + nf + ep);
    case Formula::kKulczynski1:
      return Div(ef, nf + ep);
    case Formula::kKulczynski2:
      return 0.5 * (Div(ef, ef + nf) + Div(ef, ef + ep));
    case Formula::kDstar2:
      return Div(ef * ef, ep + nf);
    case Formula::kAmple:
      return std::abs(Div(ef, ef + nf) - Div(ep, ep + np));
    case Formula::kHamann:
      return Div(ef + np - ep - nf, ef + ep + nf + np);
    case Formula::kHamming:
      return ef + np;
    case Formula::kSorensenDice:
      return Div(2 * ef, 2 * ef + ep + nf);
    case Formula::kGoodman:
      return Div(2 * ef - nf - ep, 2 * ef + nf + ep);
    case Formula::kM1:
      return Div(ef + np, nf + ep);
    case Formula::kM2:
      return Div(ef, ef + np + 2 * (nf + ep));
    case Formula::kOverlap:
      return Div(ef, std::min({ef, ep, nf}));
    case Formula::kRogersTanimoto:
      return Div(ef + np, ef + np + 2 * (nf + ep));
    case Formula::kSimpleMatching:
      return Div(ef + np, ef + ep + nf + np);
    case Formula::kSokal:
      return Div(2 * (ef + np), 2 * (ef + np) + nf + ep);
    case Formula::kAnderberg:
      return Div(ef, ef + 2 * (nf + ep));
    case Formula::kZoltar:
      return Div(ef, ef + nf + ep + Div(10000 * nf * ep, ef));
    case Formula::kWong1:
      return ef;
    case Formula::kWong2:
      return ef - ep;
    case Formula::kWong3: {
      double h = ep;
      if (ep > 10) {
        h = 2.8 + 0.001 * (ep - 10);
      } else if (ep > 2) {
        h = 2 + 0.1 * (ep - 2);
      }
      return ef - h;
    }
    case Formula::kEuclid:
      return std::sqrt(ef + np);
    case Formula::kEr1a:
      return nf > 0 ? -1.0 : np;
    case Formula::kEr1b:
      return ef - Div(ep, ep + np + 1);
    case Formula::kEr5a:
      return ef;
    case Formula::kEr5b:
      return Div(ef, ef + nf + ep + np);
    case Formula::kEr5c:
      return nf > 0 ? 0.0 : 1.0;
    case Formula::kGp02:
      return 2 * (ef + std::sqrt(np)) + std::sqrt(ep);
    case Formula::kGp03:
      return std::sqrt(std::abs(ef * ef - std::sqrt(ep)));
    case Formula::kGp13:
      return ef * (1 + Div(1, 2 * ep + ef));
    case Formula::kGp19:
      return ef * std::sqrt(std::abs(ep - ef + nf - np));
  }
  return 0.0;
}

std::map<StatementId, double> ComputeStatementScores(
    const CoverageSpectra& spectra, Formula formula) {
  std::map<StatementId, double> scores;
  for (const auto& [statement, counts] : ComputeAllSpectrumCounts(spectra)) {
    scores.emplace(statement, StatementSuspiciousness(counts, formula));
  }
  return scores;
}

ElementScores AggregateToElements(const CoverageSpectra& spectra,
                                  Formula formula) {
  ElementScores out;
  for (const auto& element : spectra.ElementUniverse()) {
    out.emplace(element, ElementScore{});
  }
  for (const auto& [statement, counts] : ComputeAllSpectrumCounts(spectra)) {
    if (counts.ef + counts.ep == 0) continue;  // never executed
    auto& entry = out.at(spectra.ElementOf(statement));
    const double score = StatementSuspiciousness(counts, formula);
    if (!entry.has_evidence || score > entry.score) entry.score = score;
    entry.has_evidence = true;
  }
  return out;
}

ElementScores ComputeElementScores(const CoverageSpectra& spectra,
                                   const SuspiciousnessSource& source) {
  if (const auto* formula = std::get_if<Formula>(&source)) {
    return AggregateToElements(spectra, *formula);
  }
  const auto& base = std::get<BaseScores>(source);
  ElementScores out;
  for (const auto& element : spectra.ElementUniverse()) {
    out.emplace(element, ElementScore{});
  }
  for (const auto& [element, score] : base.scores) {
    auto it = out.find(element);
    if (it == out.end()) {
      throw ValidationError("base score given for '" + element.str() +
                            "', which is not in the element universe");
    }
    it->second = ElementScore{score, true};
  }
  return out;
}

}  // namespace profl
