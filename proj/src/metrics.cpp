#include "eaga/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "eaga/error.hpp"

namespace eaga {

std::string_view centrality_name(CentralityKind kind) noexcept {
  switch (kind) {
    case CentralityKind::kBetweenness: return "betweenness";
    case CentralityKind::kCloseness: return "closeness";
    case CentralityKind::kDegree: return "degree";
  }
  return "unknown";
}

double edge_intersection(const Graph& g, const Graph& anonymized) {
  if (g.node_count() != anonymized.node_count()) {
    throw ValidationError("edge_intersection: node counts differ");
  }
  const std::size_t denom = std::max(g.edge_count(), anonymized.edge_count());
  if (denom == 0) return 1.0;
  std::size_t common = 0;
  for (const Edge& e : g.edges()) {
    if (anonymized.has_edge(e.u, e.v)) ++common;
  }
  return static_cast<double>(common) / static_cast<double>(denom);
}

CentralityVector betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  CentralityVector out{CentralityKind::kBetweenness, std::vector<double>(n, 0.0)};
  std::vector<double> sigma(n);
  std::vector<double> dependency(n);
  std::vector<Distance> dist(n);
  std::vector<std::vector<Node>> preds(n);
  std::vector<Node> order;
  order.reserve(n);

  for (Node s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dependency.begin(), dependency.end(), 0.0);
    std::fill(dist.begin(), dist.end(), kUnreachable);
    for (auto& p : preds) p.clear();
    order.clear();

    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<Node> queue{s};
    while (!queue.empty()) {
      const Node v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (Node w : g.neighbors(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Node w = *it;
      for (Node v : preds[w]) dependency[v] += sigma[v] / sigma[w] * (1.0 + dependency[w]);
      if (w != s) out.values[w] += dependency[w];
    }
  }
  if (n > 0) {
    const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    for (double& x : out.values) x *= scale;
  }
  return out;
}

CentralityVector closeness(const Graph& g) {
  const std::size_t n = g.node_count();
  CentralityVector out{CentralityKind::kCloseness, std::vector<double>(n, 0.0)};
  for (Node v = 0; v < n; ++v) {
    std::size_t reachable = 0;
    std::uint64_t total = 0;
    for (Distance d : shortest_path_lengths(g, v)) {
      if (d == kUnreachable) continue;
      ++reachable;
      total += d;
    }
    if (total > 0) out.values[v] = static_cast<double>(reachable) / static_cast<double>(total);
  }
  return out;
}

CentralityVector degree_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  CentralityVector out{CentralityKind::kDegree, std::vector<double>(n, 0.0)};
  const auto m = static_cast<double>(g.edge_count());
  if (m == 0.0) return out;
  for (Node v = 0; v < n; ++v) out.values[v] = static_cast<double>(g.degree(v)) / m;
  return out;
}

double rms_difference(const CentralityVector& original, const CentralityVector& anonymized) {
  if (original.kind != anonymized.kind) {
    throw ContractViolation("rms_difference: centrality kinds differ");
  }
  if (original.values.size() != anonymized.values.size()) {
    throw ContractViolation("rms_difference: vector lengths differ");
  }
  const std::size_t n = original.values.size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = original.values[i] - anonymized.values[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(n));
}

namespace {

// Interns definitions in lexicographic order so tokens are reproducible.
std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> intern(
    const std::vector<std::vector<std::size_t>>& per_node) {
  std::vector<std::vector<std::size_t>> table(per_node);
  std::sort(table.begin(), table.end());
  table.erase(std::unique(table.begin(), table.end()), table.end());
  std::vector<std::size_t> tokens(per_node.size());
  for (std::size_t v = 0; v < per_node.size(); ++v) {
    tokens[v] = static_cast<std::size_t>(
        std::lower_bound(table.begin(), table.end(), per_node[v]) - table.begin());
  }
  return {std::move(tokens), std::move(table)};
}

std::string describe_token(const Refinement& r, std::size_t level, std::size_t token) {
  if (level == 0) return "*";
  const auto& def = r.definitions[level][token];
  if (level == 1) return std::to_string(def.front());
  std::string out = "{";
  for (std::size_t i = 0; i < def.size(); ++i) {
    if (i > 0) out += ',';
    out += describe_token(r, level - 1, def[i]);
  }
  return out + "}";
}

}  // namespace

std::string Refinement::describe(std::size_t node) const {
  return describe_token(*this, level, token.at(node));
}

Refinement vertex_refinement(const Graph& g, std::size_t level) {
  const std::size_t n = g.node_count();
  Refinement r;
  r.level = level;
  r.token.assign(n, 0);
  r.definitions.push_back({{}});
  for (std::size_t l = 1; l <= level; ++l) {
    std::vector<std::vector<std::size_t>> per_node(n);
    for (Node v = 0; v < n; ++v) {
      if (l == 1) {
        per_node[v] = {g.degree(v)};
      } else {
        for (Node w : g.neighbors(v)) per_node[v].push_back(r.token[w]);
        std::sort(per_node[v].begin(), per_node[v].end());
      }
    }
    auto [tokens, table] = intern(per_node);
    r.token = std::move(tokens);
    r.definitions.push_back(std::move(table));
  }
  return r;
}

std::vector<CandidateClass> candidate_sets(const Graph& g, std::size_t level) {
  if (level == 0) throw ContractViolation("candidate_sets requires level >= 1");
  const Refinement r = vertex_refinement(g, level);
  std::size_t classes = 0;
  for (std::size_t t : r.token) classes = std::max(classes, t + 1);
  std::vector<CandidateClass> out(classes);
  for (std::size_t t = 0; t < classes; ++t) out[t].token = t;
  for (Node v = 0; v < g.node_count(); ++v) {
    auto& c = out[r.token[v]];
    if (c.members.empty()) c.degree = static_cast<int>(g.degree(v));
    c.members.push_back(v);
  }
  return out;
}

RiskBands risk_bands(const std::vector<CandidateClass>& partition) {
  RiskBands bands;
  std::size_t total = 0;
  for (const auto& c : partition) {
    const std::size_t size = c.members.size();
    total += size;
    const auto share = static_cast<double>(size);
    if (size == 1) {
      bands.direct += share;
    } else if (size <= 4) {
      bands.high += share;
    } else if (size <= 10) {
      bands.moderate += share;
    } else {
      bands.low += share;
    }
  }
  if (total > 0) {
    const auto t = static_cast<double>(total);
    bands.direct /= t;
    bands.high /= t;
    bands.moderate /= t;
    bands.low /= t;
  }
  return bands;
}

RiskReport risk_report(const Graph& g, std::size_t level) {
  RiskReport report;
  report.level = level;
  report.classes = candidate_sets(g, level);
  report.bands = risk_bands(report.classes);
  int smallest = 0;
  for (const auto& c : report.classes) {
    const auto size = static_cast<int>(c.members.size());
    if (smallest == 0 || size < smallest) smallest = size;
  }
  report.min_class_size = smallest;
  return report;
}

std::map<int, std::size_t> degree_histogram(const Graph& g) {
  std::map<int, std::size_t> hist;
  for (Node v = 0; v < g.node_count(); ++v) ++hist[static_cast<int>(g.degree(v))];
  return hist;
}

MetricsReport evaluate(const Graph& original, const Graph& anonymized) {
  if (original.node_count() != anonymized.node_count()) {
    throw ValidationError("node counts differ: " + std::to_string(original.node_count()) +
                          " vs " + std::to_string(anonymized.node_count()));
  }
  MetricsReport report;
  report.edge_intersection = edge_intersection(original, anonymized);
  report.rms_betweenness = rms_difference(betweenness(original), betweenness(anonymized));
  report.rms_closeness = rms_difference(closeness(original), closeness(anonymized));
  report.rms_degree = rms_difference(degree_centrality(original), degree_centrality(anonymized));
  if (original.node_count() > 0) {
    report.risk_original = risk_report(original, 1);
    report.risk_anonymized = risk_report(anonymized, 1);
  }
  report.histogram_original = degree_histogram(original);
  report.histogram_anonymized = degree_histogram(anonymized);
  return report;
}

}  // namespace eaga
