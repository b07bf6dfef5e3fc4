#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaga/graph.hpp"
#include "eaga/graph_reconstructor.hpp"
#include "eaga/metrics.hpp"
#include "eaga/sequence_anonymizer.hpp"

namespace eaga {

struct PipelineConfig {
  EvolutionParams evolution;
  std::size_t max_retries = kDefaultMaxRetries;
  bool record_trace = false;
};

struct PipelineResult {
  EvolutionResult evolution;
  AnonymizationResult anonymization;
};

/// Both anonymization steps on one random stream seeded by evolution.rng_seed.
PipelineResult anonymize(const Graph& g, const PipelineConfig& config);

/// Inclusive k range parsed from "A..B" or a single "K".
struct KRange {
  int first = 2;
  int last = 2;
};

KRange parse_k_range(std::string_view text);

struct ExperimentConfig {
  std::string dataset;
  KRange k_range;
  std::size_t repetitions = 1;
  std::uint64_t master_seed = 1;
  EvolutionParams evolution;  // target_k and rng_seed are overwritten per run
  std::size_t max_retries = kDefaultMaxRetries;

  void validate() const;
};

struct ExperimentRow {
  std::string dataset;
  int k = 0;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";  // "ok" or an error category name
  int achieved_k = 0;
  std::int64_t delta = 0;
  std::size_t generations = 0;
  std::size_t rotations = 0;
  std::size_t restarts = 0;
  double edge_intersection = 0.0;
  double rms_betweenness = 0.0;
  double rms_closeness = 0.0;
  double rms_degree = 0.0;
  RiskBands bands;
  double wall_time = 0.0;  // seconds; written to the timings file only

  bool ok() const { return status == "ok"; }
};

/// Per-k medians over successful rows.
struct KSummary {
  int k = 0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double median_delta = 0.0;
  double median_edge_intersection = 0.0;
  double median_rms_betweenness = 0.0;
  double median_rms_closeness = 0.0;
  double median_rms_degree = 0.0;
  RiskBands median_bands;
};

struct ExperimentOutput {
  std::vector<ExperimentRow> rows;
  std::vector<KSummary> summaries;
  std::map<int, std::size_t> histogram_original;
  /// Degree histogram of the first successful run per k.
  std::map<int, std::map<int, std::size_t>> histogram_by_k;
};

/// Runs the pipeline for every (k, repetition) in order. Per-run failures are
/// recorded in the row's status and do not stop the experiment.
ExperimentOutput run_experiment(const Graph& g, const ExperimentConfig& config);

double median(std::vector<double> values);

/// Bundled datasets: karate, football, jazz.
struct DatasetInfo {
  std::string name;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  /// FNV-1a 64 of the bundled file; nullopt when the file is user-supplied.
  std::optional<std::uint64_t> checksum;
};

const std::vector<DatasetInfo>& known_datasets();

/// EAGA_DATA_DIR if set, else the data directory this build was configured with.
std::filesystem::path data_directory();

/// Loads a bundled dataset, verifying its checksum (when known) and its node
/// and edge counts. Looks for `<name>.txt` (edge list) then `<name>.gml`.
Graph load_dataset(std::string_view name);

bool dataset_available(std::string_view name);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace eaga
