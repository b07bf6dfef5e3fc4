#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "eaga/degree_sequence.hpp"
#include "eaga/error.hpp"
#include "eaga/graph.hpp"
#include "eaga/graph_io.hpp"
#include "eaga/pipeline.hpp"
#include "oracles.hpp"

using namespace eaga;

namespace {

Graph triangle() { return parse_edge_list("0 1\n1 2\n2 0\n"); }
Graph star() { return parse_edge_list("0 1\n0 2\n0 3\n"); }

}  // namespace

TEST_CASE("edge list basics") {
  const Graph g = parse_edge_list("0 1\n1 2");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("edge list collapses reversed duplicates") {
  const Graph g = parse_edge_list("a b\nb a\n");
  CHECK(g.node_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
}

TEST_CASE("edge list accepts commas, comments and blank lines") {
  const Graph g = parse_edge_list("# header\n\n  x,y\r\n y , z\n   # indented comment\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError);
  try {
    parse_edge_list("0 1\n1 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.category() == ErrorCategory::kParse);
  }
  CHECK_THROWS_AS(parse_edge_list("lonely\n"), ParseError);
}

TEST_CASE("gml subset") {
  SUBCASE("minimal") {
    const Graph g = parse_gml_subset("graph [ node [ id 5 ] node [ id 9 ] edge [ source 5 target 9 ] ]");
    CHECK(g.node_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
    CHECK(g.label(0) == "5");
  }
  SUBCASE("triangle with unknown keys") {
    const Graph g = parse_gml_subset(R"(Creator "someone"
graph
[
  directed 0
  node [ id 1 label "A" value 3 graphics [ x 1.0 y 2.0 ] ]
  node [ id 2 label "B" ]
  node [ id 3 ]
  edge [ source 1 target 2 ]
  edge [ source 2 target 3 weight 4 ]
  edge [ source 3 target 1 ]
  edge [ source 1 target 3 ]
]
)");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("undeclared target") {
    CHECK_THROWS_AS(parse_gml_subset("graph [ node [ id 1 ] edge [ source 1 target 2 ] ]"),
                    ParseError);
  }
  SUBCASE("missing graph block") {
    CHECK_THROWS_AS(parse_gml_subset("node [ id 1 ]"), ParseError);
  }
  SUBCASE("self-loop") {
    CHECK_THROWS_AS(parse_gml_subset("graph [ node [ id 1 ] edge [ source 1 target 1 ] ]"),
                    ValidationError);
  }
}

TEST_CASE("degree sequences") {
  CHECK(degree_sequence(triangle()) == DegreeSequence{2, 2, 2});
  CHECK(degree_sequence(star()) == DegreeSequence{3, 1, 1, 1});
  const Graph karate = load_dataset("karate");
  CHECK(degree_sequence(karate).sum() == 156);
}

TEST_CASE("shortest path lengths") {
  const Graph path = parse_edge_list("0 1\n1 2\n");
  CHECK(shortest_path_lengths(path, 0) == std::vector<Distance>{0, 1, 2});
  Graph two(2);
  CHECK(shortest_path_lengths(two, 0) == std::vector<Distance>{0, kUnreachable});
  CHECK_THROWS_AS(shortest_path_lengths(two, 2), ContractViolation);
}

TEST_CASE("summary stats") {
  const GraphSummary t = summary_stats(triangle());
  CHECK(t.nodes == 3);
  CHECK(t.edges == 3);
  CHECK(t.avg_degree == 2.0);
  CHECK(t.avg_distance == 1.0);
  CHECK(t.diameter == 1);

  const GraphSummary k = summary_stats(load_dataset("karate"));
  CHECK(k.nodes == 34);
  CHECK(k.edges == 78);
  CHECK(std::round(k.avg_degree * 1000) / 1000 == doctest::Approx(4.588));
  CHECK(std::round(k.avg_distance * 1000) / 1000 == doctest::Approx(2.408));
  CHECK(k.diameter == 5);

  const GraphSummary empty = summary_stats(Graph(4));
  CHECK(empty.distance_undefined);
  CHECK(empty.diameter == 0);
}

TEST_CASE("graphicality") {
  CHECK(is_graphical(DegreeSequence{2, 2, 2}));
  CHECK(is_graphical(DegreeSequence{3, 3, 3, 3}));
  CHECK(is_graphical(DegreeSequence{0, 0}));
  CHECK_FALSE(is_graphical(DegreeSequence{1, 1, 1}));  // odd sum
  CHECK_FALSE(is_graphical(DegreeSequence{3, 3, 1, 1}));
  CHECK(is_graphical(DegreeSequence{4, 1, 1, 1, 1, 0}));
  CHECK_FALSE(is_graphical(DegreeSequence{2, 0}));

  // Every degree sequence of an actual graph is graphical.
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + rng.uniform_index(12), 0.4, rng);
    CHECK(is_graphical(degree_sequence(g)));
  }
}

TEST_CASE("graphicality agrees with brute-force realization on small sequences") {
  // Enumerate all graphs on 5 nodes; collect realizable sorted sequences.
  std::set<std::vector<int>> realizable;
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
    auto d = degree_sequence(oracle::graph_from_mask(5, mask));
    std::vector<int> v(d.begin(), d.end());
    std::sort(v.begin(), v.end());
    realizable.insert(v);
  }
  std::vector<int> v(5);
  for (int code = 0; code < 5 * 5 * 5 * 5 * 5; ++code) {
    int c = code;
    for (int& x : v) {
      x = c % 5;
      c /= 5;
    }
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(is_graphical(DegreeSequence(v)) == realizable.contains(sorted));
  }
}

TEST_CASE("handshake and triangle inequality on random graphs") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(2 + rng.uniform_index(20), 0.2, rng);
    CHECK(degree_sequence(g).sum() == static_cast<std::int64_t>(2 * g.edge_count()));
    std::vector<std::vector<Distance>> all;
    for (Node s = 0; s < g.node_count(); ++s) all.push_back(shortest_path_lengths(g, s));
    for (Node s = 0; s < g.node_count(); ++s) {
      for (Node t = 0; t < g.node_count(); ++t) {
        for (Node u = 0; u < g.node_count(); ++u) {
          if (all[s][u] == kUnreachable || all[u][t] == kUnreachable) continue;
          CHECK(all[s][t] <= all[s][u] + all[u][t]);
        }
      }
    }
  }
}

TEST_CASE("edge list round trip preserves labels, order and isolated nodes") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(1 + rng.uniform_index(15), 0.25, rng);
    std::vector<std::string> labels;
    for (Node v = 0; v < g.node_count(); ++v) labels.push_back("n" + std::to_string(v * 7 % 31));
    g.set_labels(labels);
    const Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
    CHECK(to_edge_list(back) == to_edge_list(g));
  }
}

TEST_CASE("gml round trip via the edge-list writer") {
  const Graph g = parse_gml_subset(
      "graph [ node [ id 10 ] node [ id 20 ] node [ id 30 ] node [ id 40 ] "
      "edge [ source 10 target 20 ] edge [ source 40 target 20 ] ]");
  const Graph back = parse_edge_list(to_edge_list(g));
  CHECK(back == g);
  CHECK(back.labels() == g.labels());
  CHECK(back.degree(2) == 0);
}

TEST_CASE("align_labels reindexes by label") {
  const Graph a = parse_edge_list("x y\ny z\n");
  const Graph b = parse_edge_list("z y\ny x\n");
  CHECK_FALSE(b.labels() == a.labels());
  const Graph aligned = align_labels(b, a);
  CHECK(aligned == a);
  CHECK_THROWS_AS(align_labels(parse_edge_list("x y\ny w\n"), a), ValidationError);
}

TEST_CASE("graph mutation") {
  Graph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), ValidationError);
  CHECK_THROWS_AS(g.add_edge(0, 3), ValidationError);
  CHECK(g.remove_edge(1, 0));
  CHECK_FALSE(g.remove_edge(0, 1));
  CHECK(g.edge_count() == 0);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), ValidationError);
}
