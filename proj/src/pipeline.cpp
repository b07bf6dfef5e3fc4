#include "eaga/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iterator>

#include "eaga/error.hpp"
#include "eaga/graph_io.hpp"

#ifndef EAGA_DEFAULT_DATA_DIR
#define EAGA_DEFAULT_DATA_DIR "data"
#endif

namespace eaga {

PipelineResult anonymize(const Graph& g, const PipelineConfig& config) {
  Rng rng(config.evolution.rng_seed);
  PipelineResult out;
  out.evolution = evolve(degree_sequence(g), config.evolution, rng, config.record_trace);
  out.anonymization = apply_edge_rotations(g, out.evolution.sequence, rng, config.max_retries);
  out.anonymization.rng_seed = config.evolution.rng_seed;
  return out;
}

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ContractViolation("invalid integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

KRange parse_k_range(std::string_view text) {
  const auto dots = text.find("..");
  KRange r;
  if (dots == std::string_view::npos) {
    r.first = r.last = parse_int(text);
  } else {
    r.first = parse_int(text.substr(0, dots));
    r.last = parse_int(text.substr(dots + 2));
  }
  if (r.first > r.last) throw ContractViolation("empty k range '" + std::string(text) + "'");
  if (r.first < 2) throw InfeasibleError("every k must be >= 2 (every graph is 1-anonymous)");
  return r;
}

void ExperimentConfig::validate() const {
  if (k_range.first > k_range.last) throw ContractViolation("empty k range");
  if (k_range.first < 2) throw InfeasibleError("every k must be >= 2");
  if (repetitions < 1) throw ContractViolation("repetitions must be >= 1");
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

ExperimentOutput run_experiment(const Graph& g, const ExperimentConfig& config) {
  config.validate();
  ExperimentOutput out;
  out.histogram_original = degree_histogram(g);
  const auto original_betweenness = betweenness(g);
  const auto original_closeness = closeness(g);
  const auto original_degree = degree_centrality(g);

  for (int k = config.k_range.first; k <= config.k_range.last; ++k) {
    KSummary summary;
    summary.k = k;
    std::vector<double> deltas, eis, rbs, rcs, rds, direct, high, moderate, low;
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      ExperimentRow row;
      row.dataset = config.dataset;
      row.k = k;
      row.repetition = rep;
      row.seed = derive_seed(config.master_seed, static_cast<std::uint64_t>(k), rep);

      PipelineConfig pc;
      pc.evolution = config.evolution;
      pc.evolution.target_k = k;
      pc.evolution.rng_seed = row.seed;
      pc.max_retries = config.max_retries;

      const auto start = std::chrono::steady_clock::now();
      try {
        const PipelineResult result = anonymize(g, pc);
        const Graph& anon = result.anonymization.graph;
        row.achieved_k = result.anonymization.achieved_k;
        row.delta = result.anonymization.delta;
        row.generations = result.evolution.generations;
        row.rotations = result.anonymization.rotations_applied;
        row.restarts = result.anonymization.restarts;
        row.edge_intersection = edge_intersection(g, anon);
        row.rms_betweenness = rms_difference(original_betweenness, betweenness(anon));
        row.rms_closeness = rms_difference(original_closeness, closeness(anon));
        row.rms_degree = rms_difference(original_degree, degree_centrality(anon));
        row.bands = risk_bands(candidate_sets(anon, 1));
        if (!out.histogram_by_k.contains(k)) out.histogram_by_k[k] = degree_histogram(anon);
      } catch (const Error& e) {
        row.status = std::string(category_name(e.category()));
      }
      row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      ++summary.runs;
      if (row.ok()) {
        ++summary.successes;
        deltas.push_back(static_cast<double>(row.delta));
        eis.push_back(row.edge_intersection);
        rbs.push_back(row.rms_betweenness);
        rcs.push_back(row.rms_closeness);
        rds.push_back(row.rms_degree);
        direct.push_back(row.bands.direct);
        high.push_back(row.bands.high);
        moderate.push_back(row.bands.moderate);
        low.push_back(row.bands.low);
      }
      out.rows.push_back(std::move(row));
    }
    summary.median_delta = median(deltas);
    summary.median_edge_intersection = median(eis);
    summary.median_rms_betweenness = median(rbs);
    summary.median_rms_closeness = median(rcs);
    summary.median_rms_degree = median(rds);
    summary.median_bands = {median(direct), median(high), median(moderate), median(low)};
    out.summaries.push_back(summary);
  }
  return out;
}

const std::vector<DatasetInfo>& known_datasets() {
  static const std::vector<DatasetInfo> datasets = {
      {"karate", 34, 78, 0x315339fd6fe4844fULL},
      {"football", 115, 613, std::nullopt},
      {"jazz", 198, 2742, std::nullopt},
  };
  return datasets;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("EAGA_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return EAGA_DEFAULT_DATA_DIR;
}

namespace {

const DatasetInfo& find_dataset(std::string_view name) {
  for (const auto& d : known_datasets()) {
    if (d.name == name) return d;
  }
  throw ContractViolation("unknown dataset '" + std::string(name) + "'");
}

std::optional<std::pair<std::filesystem::path, GraphFormat>> locate(std::string_view name) {
  const auto dir = data_directory();
  const std::pair<const char*, GraphFormat> options[] = {{".txt", GraphFormat::kEdgeList},
                                                         {".gml", GraphFormat::kGml}};
  for (const auto& [ext, format] : options) {
    auto path = dir / (std::string(name) + ext);
    if (std::filesystem::exists(path)) return std::make_pair(path, format);
  }
  return std::nullopt;
}

}  // namespace

bool dataset_available(std::string_view name) {
  find_dataset(name);
  return locate(name).has_value();
}

Graph load_dataset(std::string_view name) {
  const DatasetInfo& info = find_dataset(name);
  const auto found = locate(name);
  if (!found) {
    throw ParseError(0, "dataset '" + info.name + "' not found in " + data_directory().string() +
                            " (expected " + info.name + ".txt or " + info.name + ".gml)");
  }
  const auto& [path, format] = *found;
  std::ifstream in(path, std::ios::binary);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (info.checksum && fnv1a64(bytes) != *info.checksum) {
    throw ValidationError("checksum mismatch for bundled dataset '" + path.string() + "'");
  }
  Graph g = format == GraphFormat::kGml ? parse_gml_subset(bytes) : parse_edge_list(bytes);
  if (g.node_count() != info.nodes || g.edge_count() != info.edges) {
    throw ValidationError("dataset '" + info.name + "' has " + std::to_string(g.node_count()) +
                          " nodes / " + std::to_string(g.edge_count()) + " edges, expected " +
                          std::to_string(info.nodes) + " / " + std::to_string(info.edges));
  }
  return g;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace eaga
