// eaga: k-degree anonymization of undirected graphs and evaluation of the
// privacy/utility trade-off.
//
//   eaga anonymize  --input g.txt --k 3 --seed 7 --out-dir out
//   eaga evaluate   --input g.txt --anonymized out/g_k3.txt
//   eaga risk       --input g.txt --max-level 2
//   eaga experiment --dataset karate --k-range 2..5 --reps 10 --out-dir out
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 infeasible k, 4 convergence,
// 5 reconstruction.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eaga/error.hpp"
#include "eaga/graph_io.hpp"
#include "eaga/metrics.hpp"
#include "eaga/pipeline.hpp"
#include "eaga/report.hpp"

namespace fs = std::filesystem;

namespace {

int exit_code(eaga::ErrorCategory category) {
  switch (category) {
    case eaga::ErrorCategory::kParse:
    case eaga::ErrorCategory::kValidation: return 2;
    case eaga::ErrorCategory::kInfeasible: return 3;
    case eaga::ErrorCategory::kConvergence: return 4;
    case eaga::ErrorCategory::kReconstruction: return 5;
    case eaga::ErrorCategory::kContract: return 1;
  }
  return 1;
}

struct InputOptions {
  std::string input;
  std::string dataset;
  std::string format = "edgelist";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input", input, "Graph file");
    cmd->add_option("--dataset", dataset, "Bundled dataset (karate, football, jazz)");
    cmd->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"edgelist", "gml"}));
  }

  eaga::Graph load() const {
    if (!dataset.empty()) return eaga::load_dataset(dataset);
    if (input.empty()) throw eaga::ContractViolation("one of --input or --dataset is required");
    return eaga::read_graph(input, eaga::parse_format(format));
  }

  std::string name() const {
    if (!dataset.empty()) return dataset;
    return fs::path(input).stem().string();
  }
};

struct EvolutionOptions {
  std::size_t population = 100;
  std::size_t offspring = 100;
  std::size_t max_generations = 5000;
  std::size_t max_retries = eaga::kDefaultMaxRetries;
  std::uint64_t seed = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--population", population, "Population size");
    cmd->add_option("--offspring", offspring, "Offspring per generation");
    cmd->add_option("--max-generations", max_generations, "Generation limit");
    cmd->add_option("--max-retries", max_retries, "Reconstruction restarts");
  }

  eaga::EvolutionParams params(int k) const {
    eaga::EvolutionParams p;
    p.population_size = population;
    p.offspring_per_generation = offspring;
    p.max_generations = max_generations;
    p.target_k = k;
    p.rng_seed = seed;
    return p;
  }
};

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eaga::ContractViolation("cannot write '" + path.string() + "'");
  return out;
}

int run_anonymize(const InputOptions& in, const EvolutionOptions& evo, int k,
                  const std::string& out_dir, bool trace) {
  const eaga::Graph g = in.load();
  eaga::PipelineConfig config;
  config.evolution = evo.params(k);
  config.max_retries = evo.max_retries;
  config.record_trace = trace;
  const auto result = eaga::anonymize(g, config);

  fs::create_directories(out_dir);
  const std::string stem = in.name() + "_k" + std::to_string(k);
  eaga::write_graph(fs::path(out_dir) / (stem + ".txt"), result.anonymization.graph);
  const auto summary = eaga::result_json(in.name(), g, result, k);
  open_output(fs::path(out_dir) / (stem + ".json")) << summary.dump(2) << '\n';
  if (trace) {
    auto t = open_output(fs::path(out_dir) / (stem + "_trace.csv"));
    eaga::write_trace_csv(t, result.evolution.trace);
    auto r = open_output(fs::path(out_dir) / (stem + "_rotations.csv"));
    eaga::write_rotation_log_csv(r, g, result.anonymization.log);
  }
  std::cout << summary.dump() << '\n';
  return 0;
}

int run_evaluate(const InputOptions& in, const std::string& anonymized_path,
                 const std::string& anonymized_format, const std::string& out_dir) {
  const eaga::Graph original = in.load();
  const eaga::Graph raw =
      eaga::read_graph(anonymized_path, eaga::parse_format(anonymized_format));
  const eaga::Graph anonymized = eaga::align_labels(raw, original);
  const auto report = eaga::evaluate(original, anonymized);
  const auto json = eaga::to_json(report);
  std::cout << json.dump(2) << '\n';
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    open_output(fs::path(out_dir) / "metrics.json") << json.dump(2) << '\n';
    auto csv = open_output(fs::path(out_dir) / "metrics.csv");
    eaga::write_metrics_csv(csv, in.name(), fs::path(anonymized_path).stem().string(), report);
    auto hist = open_output(fs::path(out_dir) / "degree_histogram.csv");
    const std::pair<std::string, std::map<int, std::size_t>> cols[] = {
        {"original", report.histogram_original}, {"anonymized", report.histogram_anonymized}};
    eaga::write_histogram_csv(hist, cols);
  }
  return 0;
}

int run_risk(const InputOptions& in, std::size_t max_level, const std::string& out_dir) {
  if (max_level < 1) throw eaga::ContractViolation("--max-level must be >= 1");
  const eaga::Graph g = in.load();
  std::vector<eaga::RiskReport> reports;
  for (std::size_t level = 1; level <= max_level; ++level) {
    reports.push_back(eaga::risk_report(g, level));
  }
  eaga::write_risk_bands_csv(std::cout, reports);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    auto bands = open_output(fs::path(out_dir) / "risk_bands.csv");
    eaga::write_risk_bands_csv(bands, reports);
    auto classes = open_output(fs::path(out_dir) / "risk_classes.csv");
    eaga::write_risk_classes_csv(classes, reports);
  }
  return 0;
}

int run_experiment(const InputOptions& in, const EvolutionOptions& evo, const std::string& k_range,
                   std::size_t reps, const std::string& out_dir) {
  const eaga::Graph g = in.load();
  eaga::ExperimentConfig config;
  config.dataset = in.name();
  config.k_range = eaga::parse_k_range(k_range);
  config.repetitions = reps;
  config.master_seed = evo.seed;
  config.evolution = evo.params(config.k_range.first);
  config.max_retries = evo.max_retries;
  const auto output = eaga::run_experiment(g, config);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  auto runs = open_output(dir / "runs.csv");
  eaga::write_rows_csv(runs, output.rows);
  auto summary = open_output(dir / "summary.csv");
  eaga::write_summary_csv(summary, output.summaries);
  auto timings = open_output(dir / "timings.csv");
  eaga::write_timings_csv(timings, output.rows);

  std::vector<std::pair<std::string, std::map<int, std::size_t>>> cols;
  cols.emplace_back("original", output.histogram_original);
  for (const auto& [k, hist] : output.histogram_by_k) cols.emplace_back("k" + std::to_string(k), hist);
  auto hist = open_output(dir / "degree_histograms.csv");
  eaga::write_histogram_csv(hist, cols);

  eaga::write_summary_csv(std::cout, output.summaries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-degree graph anonymization via evolutionary degree-sequence search"};
  app.require_subcommand(1);

  InputOptions in;
  EvolutionOptions evo;
  int k = 2;
  std::string k_range = "2..5";
  std::size_t reps = 1;
  std::size_t max_level = 1;
  std::string out_dir = ".";
  std::string eval_out_dir;
  std::string anonymized_path;
  std::string anonymized_format = "edgelist";
  bool trace = false;

  auto* anon = app.add_subcommand("anonymize", "Anonymize a graph to a target k");
  in.add_to(anon);
  evo.add_to(anon);
  anon->add_option("--k", k, "Target k")->required();
  anon->add_option("--out-dir", out_dir, "Output directory");
  anon->add_flag("--trace", trace, "Write evolution trace and rotation log CSVs");

  auto* eval = app.add_subcommand("evaluate", "Compare an anonymized graph with its original");
  in.add_to(eval);
  eval->add_option("--anonymized", anonymized_path, "Anonymized graph file")->required();
  eval->add_option("--anonymized-format", anonymized_format, "Anonymized graph format")
      ->check(CLI::IsMember({"edgelist", "gml"}));
  eval->add_option("--out-dir", eval_out_dir, "Also write metrics.json/csv here");

  auto* risk = app.add_subcommand("risk", "Vertex refinement re-identification audit");
  in.add_to(risk);
  risk->add_option("--max-level", max_level, "Highest refinement level");
  risk->add_option("--out-dir", eval_out_dir, "Also write risk_bands.csv and risk_classes.csv");

  auto* exp = app.add_subcommand("experiment", "Repeated seeded runs over a k range");
  in.add_to(exp);
  evo.add_to(exp);
  exp->add_option("--k-range", k_range, "Inclusive range A..B");
  exp->add_option("--k", k_range, "Single k (alias of --k-range K)");
  exp->add_option("--reps", reps, "Repetitions per k");
  exp->add_option("--out-dir", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*anon) return run_anonymize(in, evo, k, out_dir, trace);
    if (*eval) return run_evaluate(in, anonymized_path, anonymized_format, eval_out_dir);
    if (*risk) return run_risk(in, max_level, eval_out_dir);
    if (*exp) return run_experiment(in, evo, k_range, reps, out_dir);
  } catch (const eaga::Error& e) {
    nlohmann::ordered_json err = {{"error", eaga::category_name(e.category())},
                                  {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    nlohmann::ordered_json err = {{"error", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 1;
}
