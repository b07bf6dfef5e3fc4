#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "eaga/error.hpp"
#include "eaga/graph_io.hpp"
#include "eaga/metrics.hpp"
#include "eaga/pipeline.hpp"
#include "oracles.hpp"

using namespace eaga;

namespace {

Graph triangle() { return parse_edge_list("0 1\n1 2\n2 0\n"); }
Graph path3() { return parse_edge_list("0 1\n1 2\n"); }
Graph star() { return parse_edge_list("0 1\n0 2\n0 3\n"); }

Graph complete(std::size_t n) {
  Graph g(n);
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Canonical nested-multiset strings built by plain recursion.
std::vector<std::string> signatures(const Graph& g, std::size_t level) {
  const std::size_t n = g.node_count();
  std::vector<std::string> sig(n, "*");
  for (std::size_t l = 1; l <= level; ++l) {
    std::vector<std::string> next(n);
    for (Node v = 0; v < n; ++v) {
      if (l == 1) {
        next[v] = std::to_string(g.degree(v));
        continue;
      }
      std::vector<std::string> parts;
      for (Node w : g.neighbors(v)) parts.push_back(sig[w]);
      std::sort(parts.begin(), parts.end());
      next[v] = "{";
      for (const auto& p : parts) next[v] += p + ";";
      next[v] += "}";
    }
    sig = std::move(next);
  }
  return sig;
}

}  // namespace

TEST_CASE("edge intersection") {
  const Graph g = triangle();
  CHECK(edge_intersection(g, g) == 1.0);
  const Edge ea[] = {{0, 1}, {2, 3}};
  const Edge eb[] = {{0, 2}, {1, 3}};
  const Graph a(4, ea);
  const Graph b(4, eb);
  CHECK(edge_intersection(a, b) == 0.0);
  CHECK(edge_intersection(Graph(3), Graph(3)) == 1.0);
  CHECK(edge_intersection(path3(), triangle()) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("betweenness") {
  const auto bc = betweenness(path3()).values;
  CHECK(bc[0] == 0.0);
  CHECK(bc[1] == doctest::Approx(2.0 / 9.0));
  CHECK(bc[2] == 0.0);
  for (double x : betweenness(complete(5)).values) CHECK(x == 0.0);
}

TEST_CASE("closeness") {
  const auto cc = closeness(path3()).values;
  CHECK(cc[1] == doctest::Approx(1.5));
  CHECK(cc[0] == doctest::Approx(1.0));
  for (double x : closeness(complete(6)).values) CHECK(x == doctest::Approx(6.0 / 5.0));
  Graph g = parse_edge_list("#@node lone\n0 1\n");
  CHECK(closeness(g).values[0] == 0.0);
}

TEST_CASE("degree centrality") {
  for (double x : degree_centrality(triangle()).values) CHECK(x == doctest::Approx(2.0 / 3.0));
  CHECK(degree_centrality(star()).values[0] == 1.0);
  for (double x : degree_centrality(Graph(3)).values) CHECK(x == 0.0);
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(3 + rng.uniform_index(20), 0.3, rng);
    if (g.edge_count() == 0) continue;
    double total = 0.0;
    for (double x : degree_centrality(g).values) total += x;
    CHECK(total == doctest::Approx(2.0));
  }
}

TEST_CASE("rms difference") {
  const CentralityVector a{CentralityKind::kDegree, {0.0, 0.0}};
  const CentralityVector b{CentralityKind::kDegree, {3.0, 4.0}};
  CHECK(rms_difference(a, a) == 0.0);
  CHECK(rms_difference(a, b) == doctest::Approx(std::sqrt(12.5)));
  CHECK_THROWS_AS(rms_difference(a, CentralityVector{CentralityKind::kCloseness, {0.0, 0.0}}),
                  ContractViolation);
  CHECK_THROWS_AS(rms_difference(a, CentralityVector{CentralityKind::kDegree, {0.0}}),
                  ContractViolation);
}

TEST_CASE("centralities match geodesic enumeration on small random graphs") {
  Rng rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(2 + rng.uniform_index(6), 0.45, rng);
    const auto bc = betweenness(g).values;
    const auto cc = closeness(g).values;
    const auto obc = oracle::betweenness(g);
    const auto occ = oracle::closeness(g);
    for (Node v = 0; v < g.node_count(); ++v) {
      CHECK(std::abs(bc[v] - obc[v]) <= 1e-9);
      CHECK(std::abs(cc[v] - occ[v]) <= 1e-9);
    }
  }
}

TEST_CASE("vertex refinement") {
  const Refinement h1 = vertex_refinement(triangle(), 1);
  CHECK(h1.describe(0) == "2");
  const Refinement h2 = vertex_refinement(triangle(), 2);
  for (Node v = 0; v < 3; ++v) CHECK(h2.describe(v) == "{2,2}");
  const Refinement h0 = vertex_refinement(star(), 0);
  CHECK(h0.describe(0) == "*");
  CHECK(vertex_refinement(star(), 2).describe(1) == "{3}");

  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + rng.uniform_index(14), 0.25, rng);
    const std::size_t level = rng.uniform_index(5);
    const Refinement r = vertex_refinement(g, level);
    const auto sig = signatures(g, level);
    for (Node u = 0; u < g.node_count(); ++u)
      for (Node v = 0; v < g.node_count(); ++v) CHECK((r.token[u] == r.token[v]) == (sig[u] == sig[v]));
  }
}

TEST_CASE("candidate sets and risk bands") {
  const auto classes = candidate_sets(triangle(), 1);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members.size() == 3);
  CHECK(classes[0].degree == 2);
  CHECK_THROWS_AS(candidate_sets(triangle(), 0), ContractViolation);

  const RiskReport tri = risk_report(triangle(), 1);
  CHECK(tri.bands.high == 1.0);
  CHECK(tri.bands.low == 0.0);
  CHECK(tri.min_class_size == 3);

  std::vector<CandidateClass> singles;
  for (Node v = 0; v < 5; ++v) singles.push_back({v, 0, {v}});
  const RiskBands direct = risk_bands(singles);
  CHECK(direct.direct == 1.0);
  CHECK(direct.high + direct.moderate + direct.low == 0.0);

  CandidateClass big{0, 0, {}};
  for (Node v = 0; v < 12; ++v) big.members.push_back(v);
  CHECK(risk_bands({big}).low == 1.0);

  // Boundaries: sizes 4 and 5 fall in different bands, as do 10 and 11.
  CandidateClass four{0, 0, {0, 1, 2, 3}};
  CandidateClass five{1, 0, {4, 5, 6, 7, 8}};
  const RiskBands mixed = risk_bands({four, five});
  CHECK(mixed.high == doctest::Approx(4.0 / 9.0));
  CHECK(mixed.moderate == doctest::Approx(5.0 / 9.0));

  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + rng.uniform_index(30), 0.2, rng);
    const RiskBands b = risk_report(g, 1 + rng.uniform_index(3)).bands;
    CHECK(b.direct + b.high + b.moderate + b.low == doctest::Approx(1.0));
  }
}

TEST_CASE("karate original has H1 singletons") {
  const RiskReport r = risk_report(load_dataset("karate"), 1);
  CHECK(r.min_class_size == 1);
  CHECK(r.bands.direct > 0.0);
}

TEST_CASE("degree histogram") {
  CHECK(degree_histogram(triangle()) == std::map<int, std::size_t>{{2, 3}});
  CHECK(degree_histogram(star()) == std::map<int, std::size_t>{{1, 3}, {3, 1}});
}

TEST_CASE("evaluate") {
  const Graph g = load_dataset("karate");
  const MetricsReport self = evaluate(g, g);
  CHECK(self.edge_intersection == 1.0);
  CHECK(self.rms_betweenness == 0.0);
  CHECK(self.rms_closeness == 0.0);
  CHECK(self.rms_degree == 0.0);
  CHECK(self.histogram_original == self.histogram_anonymized);
  CHECK_THROWS_AS(evaluate(g, triangle()), ValidationError);
}
