#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eaga/graph.hpp"

namespace eaga {

enum class CentralityKind { kBetweenness, kCloseness, kDegree };

std::string_view centrality_name(CentralityKind kind) noexcept;

struct CentralityVector {
  CentralityKind kind = CentralityKind::kDegree;
  std::vector<double> values;
};

/// |E ∩ Ẽ| / max(|E|, |Ẽ|); 1.0 when both graphs are edgeless.
double edge_intersection(const Graph& g, const Graph& anonymized);

/// Brandes accumulation over ordered pairs (s, t), s != t, with the interior
/// node excluded as an endpoint, divided by n^2.
CentralityVector betweenness(const Graph& g);

/// r_i / sum of distances to the r_i nodes reachable from i (itself included).
/// Isolated nodes score 0.
CentralityVector closeness(const Graph& g);

/// degree / m; all zeros for an edgeless graph.
CentralityVector degree_centrality(const Graph& g);

/// sqrt(mean squared difference), nodes paired by index.
double rms_difference(const CentralityVector& original, const CentralityVector& anonymized);

/// Vertex refinement signatures at one level.
///
/// Level 0 gives every node the same token, level 1 the degree, and level i
/// the sorted multiset of the neighbours' level i-1 tokens. Tokens are dense
/// ids interned per level so two nodes share a token exactly when their
/// nested multisets are equal.
struct Refinement {
  std::size_t level = 0;
  std::vector<std::size_t> token;
  /// definitions[l][t] = sorted child tokens of level-l token t (l >= 2).
  /// For level 1 the single entry is the degree.
  std::vector<std::vector<std::vector<std::size_t>>> definitions;

  /// Nested rendering, e.g. "{2,{1,1}}" style sets of child signatures.
  std::string describe(std::size_t node) const;
};

Refinement vertex_refinement(const Graph& g, std::size_t level);

/// One candidate set: nodes sharing a refinement token.
struct CandidateClass {
  std::size_t token = 0;
  int degree = 0;  // shared by every member for level >= 1
  std::vector<Node> members;
};

/// Classes ordered by token. Throws ContractViolation for level 0.
std::vector<CandidateClass> candidate_sets(const Graph& g, std::size_t level);

/// Fractions of nodes whose class size is 1 / 2-4 / 5-10 / 11 or more.
struct RiskBands {
  double direct = 0.0;
  double high = 0.0;
  double moderate = 0.0;
  double low = 0.0;
};

RiskBands risk_bands(const std::vector<CandidateClass>& partition);

struct RiskReport {
  std::size_t level = 1;
  std::vector<CandidateClass> classes;
  RiskBands bands;
  int min_class_size = 0;
};

RiskReport risk_report(const Graph& g, std::size_t level);

std::map<int, std::size_t> degree_histogram(const Graph& g);

struct MetricsReport {
  double edge_intersection = 0.0;
  double rms_betweenness = 0.0;
  double rms_closeness = 0.0;
  double rms_degree = 0.0;
  RiskReport risk_original;
  RiskReport risk_anonymized;
  std::map<int, std::size_t> histogram_original;
  std::map<int, std::size_t> histogram_anonymized;
};

/// Full utility and H1 risk comparison. Throws ValidationError on node-count mismatch.
MetricsReport evaluate(const Graph& original, const Graph& anonymized);

}  // namespace eaga
