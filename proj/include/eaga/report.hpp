#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "eaga/graph.hpp"
#include "eaga/metrics.hpp"
#include "eaga/pipeline.hpp"

#include <json.hpp>

namespace eaga {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double x);

nlohmann::ordered_json to_json(const RiskBands& bands);
nlohmann::ordered_json to_json(const RiskReport& report);
nlohmann::ordered_json to_json(const MetricsReport& report);
nlohmann::ordered_json to_json(const GraphSummary& summary);

/// Result summary written next to an anonymized graph.
nlohmann::ordered_json result_json(const std::string& dataset, const Graph& original,
                                   const PipelineResult& result, int target_k);

/// Header plus one flat row.
void write_metrics_csv(std::ostream& out, const std::string& original_name,
                       const std::string& anonymized_name, const MetricsReport& report);

/// degree,<column>... with zero-filled gaps.
void write_histogram_csv(std::ostream& out,
                         std::span<const std::pair<std::string, std::map<int, std::size_t>>> columns);

void write_risk_bands_csv(std::ostream& out, std::span<const RiskReport> reports);
void write_risk_classes_csv(std::ostream& out, std::span<const RiskReport> reports);

/// Run rows without timing, so identical configs give identical bytes.
void write_rows_csv(std::ostream& out, std::span<const ExperimentRow> rows);
void write_summary_csv(std::ostream& out, std::span<const KSummary> summaries);
void write_timings_csv(std::ostream& out, std::span<const ExperimentRow> rows);

}  // namespace eaga
