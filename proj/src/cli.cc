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

#include "profl/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "profl/error.h"
#include "profl/evaluation.h"
#include "profl/io.h"
#include "profl/mbfl.h"
#include "profl/metrics.h"
#include "profl/partial_sim.h"
#include "profl/profl.h"
#include "profl/sbfl.h"
#include "profl/synth.h"

namespace profl {
namespace {

namespace fs = std::filesystem;

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& detail) : Error("usage", detail) {}
};

std::shared_ptr<spdlog::logger> Logger() {
  static std::shared_ptr<spdlog::logger> logger = [] {
    auto l = spdlog::stderr_logger_mt("profl");
    l->set_pattern("[%l] %v");
    return l;
  }();
  return logger;
}

void ConfigureLogging() {
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("PROFL_LOG")) {
    const std::string value(env);
    if (value == "error") level = spdlog::level::err;
    if (value == "warn") level = spdlog::level::warn;
    if (value == "info") level = spdlog::level::info;
    if (value == "debug") level = spdlog::level::debug;
  }
  Logger()->set_level(level);
}

std::string OneLine(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

std::string FormatNumber(double value) { return fmt::format("{}", value); }

// Config files for flag values: JSON objects or CLI11's TOML/INI dialect.
// Reads the root `--config` file and attaches every top-level item to the
// selected subcommand chain.
class JsonOrTomlConfig : public CLI::Config {
 public:
  explicit JsonOrTomlConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool defaults, bool write_desc,
                        std::string prefix) const override {
    return toml_.to_config(app, defaults, write_desc, std::move(prefix));
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> items = Parse(input);
    std::vector<std::string> chain;
    for (const CLI::App* app = root_;;) {
      const auto selected = app->get_subcommands();
      if (selected.empty()) break;
      app = selected.front();
      chain.push_back(app->get_name());
    }
    for (auto& item : items) {
      if (item.parents.empty()) item.parents = chain;
    }
    return items;
  }

 private:
  std::vector<CLI::ConfigItem> Parse(std::istream& input) const {
    std::string text{std::istreambuf_iterator<char>(input),
                     std::istreambuf_iterator<char>()};
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream stream(text);
      return toml_.from_config(stream);
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw CLI::ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      CLI::ConfigItem item;
      item.name = key;
      auto scalar = [](const nlohmann::json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
      };
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

  const CLI::App* root_;
  CLI::ConfigTOML toml_;
};

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

std::vector<std::string> FormulaNames() {
  std::vector<std::string> names;
  for (const auto& info : FormulaRegistry()) names.emplace_back(info.name);
  return names;
}

Formula FormulaOrThrow(const std::string& name) {
  auto formula = ParseFormula(name);
  if (!formula) throw UsageError("unknown formula '" + name + "'");
  return *formula;
}

CategorizationRule RuleOrThrow(const std::string& name) {
  auto rule = ParseRule(name);
  if (!rule) throw UsageError("unknown rule '" + name + "'");
  return *rule;
}

TestOrdering OrderingOrThrow(const std::string& name) {
  auto ordering = ParseOrdering(name);
  if (!ordering) throw UsageError("unknown order '" + name + "'");
  return *ordering;
}

// ---------------------------------------------------------------------------

struct RankArgs {
  std::string spectra, matrix, formula = "Ochiai", rule = "basic";
  std::string base_scores, output, stages;
};

int RunRank(const RankArgs& args, std::ostream& out) {
  const CoverageSpectra spectra = LoadSpectra(args.spectra);
  const PatchExecutionMatrix matrix = LoadPatchMatrix(args.matrix, spectra);
  ProflOptions options;
  options.rule = RuleOrThrow(args.rule);
  if (!args.base_scores.empty()) {
    options.source = LoadBaseScores(args.base_scores);
  } else {
    options.source = FormulaOrThrow(args.formula);
  }
  const ProflStages stages = RunProfl(spectra, matrix, options);
  if (!args.stages.empty()) {
    WriteJsonFile(args.stages, ProflStagesToJson(stages, options));
  }
  Emit(args.output, DumpJson(RankedListToJson(stages.ranking)), out);
  return kExitOk;
}

struct SbflArgs {
  std::string spectra, formula = "Ochiai", level = "element", output;
};

int RunSbfl(const SbflArgs& args, std::ostream& out) {
  const CoverageSpectra spectra = LoadSpectra(args.spectra);
  const Formula formula = FormulaOrThrow(args.formula);
  std::string csv = "id,score\n";
  if (args.level == "statement") {
    const auto scores = ComputeStatementScores(spectra, formula);
    std::vector<std::pair<StatementId, double>> rows(scores.begin(),
                                                     scores.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return a.second > b.second;
    });
    for (const auto& [id, score] : rows) {
      csv += CsvField(id.str()) + "," + FormatNumber(score) + "\n";
    }
  } else {
    const RankedList ranking = SbflRank(spectra, formula);
    for (const auto& entry : ranking.entries()) {
      csv += CsvField(entry.element.str()) + "," + FormatNumber(entry.score) + "\n";
    }
  }
  Emit(args.output, csv, out);
  return kExitOk;
}

struct MbflArgs {
  std::string technique, spectra, matrix, formula = "Ochiai", output;
};

int RunMbfl(const MbflArgs& args, std::ostream& out) {
  const CoverageSpectra spectra = LoadSpectra(args.spectra);
  const PatchExecutionMatrix matrix = LoadPatchMatrix(args.matrix, spectra);
  RankedList ranking;
  if (args.technique == "muse") {
    ranking = MuseRank(spectra, matrix);
  } else if (args.technique == "metallaxis") {
    ranking = MetallaxisRank(spectra, matrix);
  } else {
    ranking = McbflRank(spectra, matrix, FormulaOrThrow(args.formula));
  }
  Emit(args.output, DumpJson(RankedListToJson(ranking)), out);
  return kExitOk;
}

struct CategorizeArgs {
  std::string matrix, spectra, rule = "basic", patches_out, elements_out;
  bool finer = false;
};

int RunCategorize(const CategorizeArgs& args, std::ostream& out) {
  const PatchExecutionMatrix matrix = LoadPatchMatrix(args.matrix);
  const CategorizationRule rule = RuleOrThrow(args.rule);
  std::vector<ElementId> elements;
  if (!args.spectra.empty()) {
    const CoverageSpectra spectra = LoadSpectra(args.spectra);
    CheckConsistency(spectra, matrix);
    elements = spectra.ElementUniverse();
  } else {
    std::set<ElementId> targets;
    for (const auto& row : matrix.patches()) targets.insert(row.target);
    elements.assign(targets.begin(), targets.end());
  }

  std::string patches = "patch,target,group\n";
  for (const auto& category : CategorizeAll(matrix)) {
    const std::string_view group =
        args.finer ? ToString(category.finer) : ToString(category.group);
    patches += CsvField(category.patch.str()) + "," +
               CsvField(category.target.str()) + "," + std::string(group) + "\n";
  }
  std::string element_csv = "element,group,no_patch_evidence\n";
  for (const auto& [element, group] : AggregateGroups(matrix, elements, rule)) {
    element_csv += CsvField(element.str()) + "," +
                   std::string(ToString(group.label)) + "," +
                   (group.no_patch_evidence ? "true" : "false") + "\n";
  }

  if (args.patches_out.empty() && args.elements_out.empty()) {
    out << patches << "\n" << element_csv;
    return kExitOk;
  }
  if (!args.patches_out.empty()) Emit(args.patches_out, patches, out);
  if (!args.elements_out.empty()) Emit(args.elements_out, element_csv, out);
  return kExitOk;
}

struct SimulateArgs {
  std::string matrix, order = "org", output, cost;
};

int RunSimulate(const SimulateArgs& args, std::ostream& out) {
  const PatchExecutionMatrix matrix = LoadPatchMatrix(args.matrix);
  const TestOrdering ordering = OrderingOrThrow(args.order);
  const Truncation truncation = Truncate(matrix, ordering);
  const Json cost = CostReportToJson(truncation.cost, ordering);
  if (!args.cost.empty()) {
    WriteJsonFile(args.cost, cost);
  } else {
    Logger()->info("cost: {}", cost.dump());
  }
  Emit(args.output, DumpJson(PatchMatrixToJson(truncation.partial)), out);
  return kExitOk;
}

struct EvalArgs {
  std::string dataset, techniques = "profl,sbfl,muse,metallaxis,mcbfl";
  std::string report, subject_report, bug_report, ratio_report;
  std::string formula = "Ochiai", rule = "basic", order;
  std::size_t jobs = 0;
  bool no_base_scores = false;
};

std::vector<Technique> ParseTechniqueList(const std::string& list) {
  std::vector<Technique> out;
  std::stringstream stream(list);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (name.empty()) continue;
    auto technique = ParseTechnique(name);
    if (!technique) throw UsageError("unknown technique '" + name + "'");
    out.push_back(*technique);
  }
  if (out.empty()) throw UsageError("no technique selected");
  return out;
}

int RunEval(const EvalArgs& args, std::ostream& out) {
  const std::vector<Technique> techniques = ParseTechniqueList(args.techniques);
  TechniqueOptions options;
  options.formula = FormulaOrThrow(args.formula);
  options.rule = RuleOrThrow(args.rule);
  options.use_base_scores = !args.no_base_scores;
  std::optional<TestOrdering> ordering;
  if (!args.order.empty()) ordering = OrderingOrThrow(args.order);

  if (!fs::is_directory(args.dataset)) {
    throw IoError("dataset '" + args.dataset + "' is not a directory");
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(args.dataset)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());

  std::vector<BugData> bugs;
  std::size_t skipped = 0;
  for (const auto& dir : dirs) {
    bool complete = true;
    for (const char* name : {"spectra.json", "matrix.json", "truth.json"}) {
      if (!fs::exists(dir / name)) {
        Logger()->warn("skipping '{}': missing {}", dir.filename().string(), name);
        complete = false;
        break;
      }
    }
    if (!complete) {
      ++skipped;
      continue;
    }
    Logger()->debug("loading '{}'", dir.string());
    bugs.push_back(LoadBugDirectory(dir));
  }
  if (bugs.empty()) throw EmptyInputError("dataset contains no usable bug directory");

  const std::size_t jobs =
      args.jobs > 0 ? args.jobs
                    : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::optional<TestOrdering> study[] = {ordering};
  const std::vector<OrderingStudyRow> rows =
      RunOrderingStudy(bugs, study, techniques, options, jobs);

  std::string csv = "technique,top1,top3,top5,mfr,mar\n";
  std::string subjects = "technique,subject,top1,top3,top5,mfr,mar\n";
  std::string per_bug = "technique,bug,first_rank,avg_rank\n";
  for (const auto& row : rows) {
    const auto& evaluation = row.evaluation;
    const std::string name(ToString(evaluation.technique));
    const MetricSummary& all = evaluation.report.overall;
    csv += fmt::format("{},{},{},{},{},{}\n", name, all.top1, all.top3,
                       all.top5, FormatNumber(all.mfr), FormatNumber(all.mar));
    for (const auto& [subject, s] : evaluation.report.per_subject) {
      subjects += fmt::format("{},{},{},{},{},{},{}\n", name, CsvField(subject),
                              s.top1, s.top3, s.top5, FormatNumber(s.mfr),
                              FormatNumber(s.mar));
    }
    for (const auto& r : evaluation.results) {
      per_bug += fmt::format("{},{},{},{}\n", name, CsvField(r.bug),
                             r.first_rank, FormatNumber(r.avg_rank));
    }
  }
  if (skipped > 0) {
    csv += fmt::format("# skipped_bugs={}\n", skipped);
    Logger()->warn("{} bug directories skipped", skipped);
  }
  if (ordering) {
    Logger()->info("partial execution ({}): {} of {} cells executed",
                   ToString(*ordering), rows.front().cost.executed_cells,
                   rows.front().cost.total_cells);
  }
  Emit(args.report, csv, out);
  if (!args.subject_report.empty()) WriteTextFile(args.subject_report, subjects);
  if (!args.bug_report.empty()) WriteTextFile(args.bug_report, per_bug);

  if (!args.ratio_report.empty()) {
    std::string ratios = "bug,group,ratio_b\n";
    for (const auto& bug : bugs) {
      PatchExecutionMatrix matrix = bug.matrix;
      if (ordering) matrix = Truncate(bug.matrix, *ordering).partial;
      for (auto group : {PatchGroup::kCleanFix, PatchGroup::kNoisyFix,
                         PatchGroup::kNoneFix, PatchGroup::kNegFix}) {
        const auto ratio = RatioB(matrix, bug.truth, group);
        ratios += fmt::format("{},{},{}\n", CsvField(bug.id), ToString(group),
                              ratio ? FormatNumber(*ratio) : "");
      }
    }
    WriteTextFile(args.ratio_report, ratios);
  }
  return kExitOk;
}

struct SynthArgs {
  std::string config, preset, out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n_bugs;
};

// Converts a TOML generator config into the equivalent JSON document.
std::string TomlToJson(const std::string& text) {
  std::istringstream stream(text);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(stream);
  } catch (const CLI::Error& e) {
    throw ParseError(std::string("generator config: ") + e.what());
  }
  Json doc = Json::object();
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    Json* node = &doc;
    for (const auto& parent : item.parents) node = &(*node)[parent];
    Json value;
    if (item.inputs.size() == 1) {
      try {
        value = Json::parse(item.inputs.front());
      } catch (const Json::parse_error&) {
        value = item.inputs.front();
      }
    } else {
      value = item.inputs;
    }
    (*node)[item.name] = std::move(value);
  }
  return doc.dump();
}

int RunSynth(const SynthArgs& args, std::ostream& out) {
  GeneratorConfig config = OracleFaithfulPreset();
  if (!args.config.empty()) {
    std::string text = ReadFile(args.config);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] != '{') text = TomlToJson(text);
    config = ParseGeneratorConfig(text);
  }
  if (!args.preset.empty()) {
    GeneratorConfig preset =
        args.preset == "noisy" ? NoisyPreset() : OracleFaithfulPreset();
    config.buggy_profile = preset.buggy_profile;
    config.correct_profile = preset.correct_profile;
  }
  if (args.seed) config.seed = *args.seed;
  if (args.n_bugs) config.n_bugs = *args.n_bugs;
  ValidateConfig(config);

  const fs::path root(args.out);
  if (config.n_bugs == 1) {
    SyntheticBug bug = Generate(config);
    WriteBugDirectory(bug.data, root);
  } else {
    for (const auto& bug : GenerateCorpus(config)) {
      WriteBugDirectory(bug.data, root / bug.data.id);
    }
  }
  Logger()->info("wrote {} synthetic bug(s) under '{}'", config.n_bugs,
                 root.string());
  (void)out;
  return kExitOk;
}

struct WilcoxonArgs {
  std::string a, b, output;
};

std::vector<double> LoadNumberArray(const std::string& path) {
  const std::string text = ReadFile(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  if (!doc.is_array()) throw ParseError("'" + path + "' must hold a JSON array");
  std::vector<double> values;
  for (const auto& v : doc) {
    if (!v.is_number()) throw ParseError("'" + path + "' holds a non-number");
    values.push_back(v.get<double>());
  }
  return values;
}

int RunWilcoxon(const WilcoxonArgs& args, std::ostream& out) {
  const auto a = LoadNumberArray(args.a);
  const auto b = LoadNumberArray(args.b);
  const WilcoxonResult result = WilcoxonSignedRank(a, b);
  if (result.method == WilcoxonMethod::kDegenerate) {
    Logger()->warn("all paired differences are zero; reporting p = 1");
  }
  Json doc = Json::object();
  doc["v"] = kSchemaVersion;
  doc["n"] = result.n;
  doc["w_plus"] = result.w_plus;
  doc["p_value"] = result.p_value;
  doc["method"] = ToString(result.method);
  Emit(args.output, DumpJson(doc), out);
  return kExitOk;
}

}  // namespace

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  ConfigureLogging();

  CLI::App app{"Fault localization driven by patch execution feedback", "profl"};
  app.config_formatter(std::make_shared<JsonOrTomlConfig>(&app));
  app.set_config("--config", "", "Flag defaults file (TOML or JSON)");
  app.fallthrough();
  app.require_subcommand(1);

  const auto formula_check = CLI::IsMember(FormulaNames(), CLI::ignore_case);
  const auto rule_check = CLI::IsMember({"basic", "r1", "r2", "r3", "r4"});
  const auto order_check = CLI::IsMember({"org", "failfirst", "passfirst"});

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank elements with the feedback-driven pipeline");
  rank_cmd->add_option("--spectra", rank.spectra, "Spectra JSON")->required();
  rank_cmd->add_option("--matrix", rank.matrix, "Patch matrix JSON")->required();
  rank_cmd->add_option("--formula", rank.formula, "SBFL formula")->check(formula_check);
  rank_cmd->add_option("--rule", rank.rule, "Group aggregation rule")->check(rule_check);
  rank_cmd->add_option("--base-scores", rank.base_scores, "Element score override JSON");
  rank_cmd->add_option("-o,--output", rank.output, "ranking.json path (default stdout)");
  rank_cmd->add_option("--stages", rank.stages, "Write every pipeline layer to this JSON file");

  SbflArgs sbfl;
  auto* sbfl_cmd = app.add_subcommand("sbfl", "Spectrum-based suspiciousness");
  sbfl_cmd->add_option("--spectra", sbfl.spectra, "Spectra JSON")->required();
  sbfl_cmd->add_option("--formula", sbfl.formula, "SBFL formula")->check(formula_check);
  sbfl_cmd->add_option("--level", sbfl.level, "statement or element")
      ->check(CLI::IsMember({"statement", "element"}));
  sbfl_cmd->add_option("-o,--output", sbfl.output, "CSV path (default stdout)");

  MbflArgs mbfl;
  auto* mbfl_cmd = app.add_subcommand("mbfl", "Mutation-based baselines");
  mbfl_cmd->add_option("--technique", mbfl.technique, "muse, metallaxis or mcbfl")
      ->required()
      ->check(CLI::IsMember({"muse", "metallaxis", "mcbfl"}));
  mbfl_cmd->add_option("--spectra", mbfl.spectra, "Spectra JSON")->required();
  mbfl_cmd->add_option("--matrix", mbfl.matrix, "Patch matrix JSON")->required();
  mbfl_cmd->add_option("--formula", mbfl.formula, "SBFL formula for mcbfl")->check(formula_check);
  mbfl_cmd->add_option("-o,--output", mbfl.output, "ranking.json path (default stdout)");

  CategorizeArgs categorize;
  auto* categorize_cmd = app.add_subcommand("categorize", "Patch and element groups");
  categorize_cmd->add_option("--matrix", categorize.matrix, "Patch matrix JSON")->required();
  categorize_cmd->add_option("--spectra", categorize.spectra,
                             "Spectra JSON; adds unpatched elements");
  categorize_cmd->add_flag("--finer", categorize.finer, "Report finer patch groups");
  categorize_cmd->add_option("--rule", categorize.rule, "Group aggregation rule")->check(rule_check);
  categorize_cmd->add_option("--patches-out", categorize.patches_out, "Patch CSV path");
  categorize_cmd->add_option("--elements-out", categorize.elements_out, "Element CSV path");

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate-partial", "Truncate a full matrix");
  simulate_cmd->add_option("--matrix", simulate.matrix, "Full patch matrix JSON")->required();
  simulate_cmd->add_option("--order", simulate.order, "Test order")->check(order_check);
  simulate_cmd->add_option("-o,--output", simulate.output, "partial.json path (default stdout)");
  simulate_cmd->add_option("--cost", simulate.cost, "cost.json path");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate techniques over a dataset");
  eval_cmd->add_option("--dataset", eval.dataset, "Directory of bug directories")->required();
  eval_cmd->add_option("--techniques", eval.techniques, "Comma-separated techniques");
  eval_cmd->add_option("--report", eval.report, "Summary CSV path (default stdout)");
  eval_cmd->add_option("--subject-report", eval.subject_report, "Per-subject CSV path");
  eval_cmd->add_option("--bug-report", eval.bug_report, "Per-bug rank CSV path");
  eval_cmd->add_option("--ratio-report", eval.ratio_report, "Per-bug Ratio_b CSV path");
  eval_cmd->add_option("--formula", eval.formula, "SBFL formula")->check(formula_check);
  eval_cmd->add_option("--rule", eval.rule, "Group aggregation rule")->check(rule_check);
  eval_cmd->add_option("--order", eval.order, "Evaluate on partial matrices")->check(order_check);
  eval_cmd->add_option("--jobs", eval.jobs, "Worker threads (default: logical cores)");
  eval_cmd->add_flag("--no-base-scores", eval.no_base_scores, "Ignore base_scores.json");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic bugs");
  synth_cmd->add_option("--config", synth.config, "Generator config (TOML or JSON)");
  synth_cmd->add_option("--preset", synth.preset, "oracle-faithful or noisy")
      ->check(CLI::IsMember({"oracle-faithful", "noisy"}));
  synth_cmd->add_option("--seed", synth.seed, "Override the seed");
  synth_cmd->add_option("--n-bugs", synth.n_bugs, "Override the bug count");
  synth_cmd->add_option("--out", synth.out, "Output directory")->required();

  WilcoxonArgs wilcoxon;
  auto* stats_cmd = app.add_subcommand("stats", "Statistical tests");
  stats_cmd->require_subcommand(1);
  auto* wilcoxon_cmd = stats_cmd->add_subcommand("wilcoxon", "Wilcoxon signed-rank test");
  wilcoxon_cmd->add_option("--a", wilcoxon.a, "JSON array")->required();
  wilcoxon_cmd->add_option("--b", wilcoxon.b, "JSON array")->required();
  wilcoxon_cmd->add_option("-o,--output", wilcoxon.output, "Result JSON path (default stdout)");

  std::vector<const char*> argv{"profl"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ERROR usage: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (rank_cmd->parsed()) return RunRank(rank, out);
    if (sbfl_cmd->parsed()) return RunSbfl(sbfl, out);
    if (mbfl_cmd->parsed()) return RunMbfl(mbfl, out);
    if (categorize_cmd->parsed()) return RunCategorize(categorize, out);
    if (simulate_cmd->parsed()) return RunSimulate(simulate, out);
    if (eval_cmd->parsed()) return RunEval(eval, out);
    if (synth_cmd->parsed()) return RunSynth(synth, out);
    if (wilcoxon_cmd->parsed()) return RunWilcoxon(wilcoxon, out);
  } catch (const UsageError& e) {
    err << "ERROR usage: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "ERROR " << e.code() << ": " << OneLine(e.what()) << "\n";
    return kExitValidation;
  } catch (const fs::filesystem_error& e) {
    err << "ERROR io: " << OneLine(e.what()) << "\n";
    return kExitValidation;
  }
  err << "ERROR usage: no subcommand\n";
  return kExitUsage;
}

}  // namespace profl
