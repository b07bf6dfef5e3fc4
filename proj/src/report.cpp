#include "eaga/report.hpp"

#include <charconv>
#include <ostream>
#include <set>

namespace eaga {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

nlohmann::ordered_json to_json(const RiskBands& bands) {
  return {{"direct", bands.direct},
          {"high", bands.high},
          {"moderate", bands.moderate},
          {"low", bands.low}};
}

nlohmann::ordered_json to_json(const RiskReport& report) {
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"degree", c.degree}, {"size", c.members.size()}});
  }
  return {{"level", report.level},
          {"min_class_size", report.min_class_size},
          {"bands", to_json(report.bands)},
          {"classes", classes}};
}

static nlohmann::ordered_json histogram_json(const std::map<int, std::size_t>& hist) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [degree, count] : hist) out[std::to_string(degree)] = count;
  return out;
}

nlohmann::ordered_json to_json(const MetricsReport& report) {
  return {{"edge_intersection", report.edge_intersection},
          {"rms",
           {{"betweenness", report.rms_betweenness},
            {"closeness", report.rms_closeness},
            {"degree", report.rms_degree}}},
          {"risk_original", to_json(report.risk_original)},
          {"risk_anonymized", to_json(report.risk_anonymized)},
          {"histogram_original", histogram_json(report.histogram_original)},
          {"histogram_anonymized", histogram_json(report.histogram_anonymized)}};
}

nlohmann::ordered_json to_json(const GraphSummary& s) {
  return {{"nodes", s.nodes},
          {"edges", s.edges},
          {"avg_degree", s.avg_degree},
          {"avg_distance", s.avg_distance},
          {"diameter", s.diameter},
          {"distance_undefined", s.distance_undefined}};
}

nlohmann::ordered_json result_json(const std::string& dataset, const Graph& original,
                                   const PipelineResult& result, int target_k) {
  const auto& a = result.anonymization;
  return {{"dataset", dataset},
          {"target_k", target_k},
          {"achieved_k", a.achieved_k},
          {"seed", a.rng_seed},
          {"delta", a.delta},
          {"generations", result.evolution.generations},
          {"rotations_applied", a.rotations_applied},
          {"restarts", a.restarts},
          {"nodes", a.graph.node_count()},
          {"edges", a.graph.edge_count()},
          {"edge_intersection", edge_intersection(original, a.graph)}};
}

void write_metrics_csv(std::ostream& out, const std::string& original_name,
                       const std::string& anonymized_name, const MetricsReport& r) {
  out << "original,anonymized,edge_intersection,rms_betweenness,rms_closeness,rms_degree,"
         "k_original,k_anonymized,direct,high,moderate,low\n";
  out << original_name << ',' << anonymized_name << ',' << format_double(r.edge_intersection)
      << ',' << format_double(r.rms_betweenness) << ',' << format_double(r.rms_closeness) << ','
      << format_double(r.rms_degree) << ',' << r.risk_original.min_class_size << ','
      << r.risk_anonymized.min_class_size << ',' << format_double(r.risk_anonymized.bands.direct)
      << ',' << format_double(r.risk_anonymized.bands.high) << ','
      << format_double(r.risk_anonymized.bands.moderate) << ','
      << format_double(r.risk_anonymized.bands.low) << '\n';
}

void write_histogram_csv(std::ostream& out,
                         std::span<const std::pair<std::string, std::map<int, std::size_t>>> columns) {
  std::set<int> degrees;
  for (const auto& [name, hist] : columns) {
    for (const auto& [degree, count] : hist) degrees.insert(degree);
  }
  out << "degree";
  for (const auto& [name, hist] : columns) out << ',' << name;
  out << '\n';
  for (int d : degrees) {
    out << d;
    for (const auto& [name, hist] : columns) {
      auto it = hist.find(d);
      out << ',' << (it == hist.end() ? 0 : it->second);
    }
    out << '\n';
  }
}

static void write_bands(std::ostream& out, const RiskBands& b) {
  out << format_double(b.direct) << ',' << format_double(b.high) << ','
      << format_double(b.moderate) << ',' << format_double(b.low);
}

void write_risk_bands_csv(std::ostream& out, std::span<const RiskReport> reports) {
  out << "level,min_class_size,classes,direct,high,moderate,low\n";
  for (const auto& r : reports) {
    out << r.level << ',' << r.min_class_size << ',' << r.classes.size() << ',';
    write_bands(out, r.bands);
    out << '\n';
  }
}

void write_risk_classes_csv(std::ostream& out, std::span<const RiskReport> reports) {
  out << "level,class,size,degree\n";
  for (const auto& r : reports) {
    for (const auto& c : r.classes) {
      out << r.level << ',' << c.token << ',' << c.members.size() << ',' << c.degree << '\n';
    }
  }
}

void write_rows_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << "dataset,k,repetition,seed,status,achieved_k,delta,generations,rotations,restarts,"
         "edge_intersection,rms_betweenness,rms_closeness,rms_degree,direct,high,moderate,low\n";
  for (const auto& r : rows) {
    out << r.dataset << ',' << r.k << ',' << r.repetition << ',' << r.seed << ',' << r.status
        << ',' << r.achieved_k << ',' << r.delta << ',' << r.generations << ',' << r.rotations
        << ',' << r.restarts << ',' << format_double(r.edge_intersection) << ','
        << format_double(r.rms_betweenness) << ',' << format_double(r.rms_closeness) << ','
        << format_double(r.rms_degree) << ',';
    write_bands(out, r.bands);
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const KSummary> summaries) {
  out << "k,runs,successes,median_delta,median_edge_intersection,median_rms_betweenness,"
         "median_rms_closeness,median_rms_degree,median_direct,median_high,median_moderate,"
         "median_low\n";
  for (const auto& s : summaries) {
    out << s.k << ',' << s.runs << ',' << s.successes << ',' << format_double(s.median_delta)
        << ',' << format_double(s.median_edge_intersection) << ','
        << format_double(s.median_rms_betweenness) << ',' << format_double(s.median_rms_closeness)
        << ',' << format_double(s.median_rms_degree) << ',';
    write_bands(out, s.median_bands);
    out << '\n';
  }
}

void write_timings_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << "dataset,k,repetition,seed,wall_time_seconds\n";
  for (const auto& r : rows) {
    out << r.dataset << ',' << r.k << ',' << r.repetition << ',' << r.seed << ','
        << format_double(r.wall_time) << '\n';
  }
}

}  // namespace eaga
