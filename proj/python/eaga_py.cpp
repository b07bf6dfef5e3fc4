#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "eaga/degree_sequence.hpp"
#include "eaga/error.hpp"
#include "eaga/graph.hpp"
#include "eaga/graph_io.hpp"
#include "eaga/graph_reconstructor.hpp"
#include "eaga/metrics.hpp"
#include "eaga/pipeline.hpp"
#include "eaga/report.hpp"
#include "eaga/sequence_anonymizer.hpp"

namespace py = pybind11;
using namespace eaga;

namespace {

using EdgeTuple = std::pair<Node, Node>;

Graph make_graph(std::size_t n, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back(make_edge(u, v));
  return Graph(n, list);
}

std::vector<EdgeTuple> edge_tuples(const Graph& g) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<int> to_list(const DegreeSequence& d) { return {d.begin(), d.end()}; }
DegreeSequence from_list(std::vector<int> v) { return DegreeSequence(std::move(v)); }

EvolutionParams evolution_params(int k, std::uint64_t seed, std::size_t population,
                                 std::size_t offspring, std::size_t max_generations) {
  EvolutionParams p;
  p.target_k = k;
  p.rng_seed = seed;
  p.population_size = population;
  p.offspring_per_generation = offspring;
  p.max_generations = max_generations;
  return p;
}

// JSON text; the Python side decodes it.
std::string dump(const nlohmann::ordered_json& j) { return j.dump(); }

py::dict rotation_dict(const AnonymizationResult& r) {
  py::list log;
  for (const Rotation& rot : r.log) log.append(py::make_tuple(rot.pivot, rot.shrink, rot.grow));
  py::dict d;
  d["graph"] = r.graph;
  d["achieved_k"] = r.achieved_k;
  d["delta"] = r.delta;
  d["rotations_applied"] = r.rotations_applied;
  d["restarts"] = r.restarts;
  d["seed"] = r.rng_seed;
  d["log"] = log;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "k-degree graph anonymization";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ContractViolation>(m, "ContractViolation", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
  py::register_exception<ReconstructionError>(m, "ReconstructionError", base);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def("node_count", &Graph::node_count)
      .def("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Node v) {
             auto nb = g.neighbors(v);
             return std::vector<Node>(nb.begin(), nb.end());
           })
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("edges", &edge_tuples)
      .def("label", &Graph::label)
      .def("labels", [](const Graph& g) { return g.labels(); })
      .def("set_labels", &Graph::set_labels)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.node_count()) + " m=" +
               std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("parse_gml", [](const std::string& text) { return parse_gml_subset(text); });
  m.def("read_graph", [](const std::string& path, const std::string& format) {
    return read_graph(path, parse_format(format));
  }, py::arg("path"), py::arg("format") = "edgelist");
  m.def("to_edge_list", &to_edge_list);
  m.def("align_labels", &align_labels);
  m.def("load_dataset", [](const std::string& name) { return load_dataset(name); });
  m.def("dataset_available", [](const std::string& name) { return dataset_available(name); });

  m.def("degree_sequence", [](const Graph& g) { return to_list(degree_sequence(g)); });
  m.def("is_graphical", [](std::vector<int> d) { return is_graphical(from_list(std::move(d))); });
  m.def("summary_stats", [](const Graph& g) { return dump(to_json(summary_stats(g))); });
  m.def("shortest_path_lengths", [](const Graph& g, Node s) {
    std::vector<std::optional<Distance>> out;
    for (Distance d : shortest_path_lengths(g, s)) {
      out.push_back(d == kUnreachable ? std::nullopt : std::optional<Distance>(d));
    }
    return out;
  });

  m.def("get_k", [](std::vector<int> d) { return get_k(from_list(std::move(d))); });
  m.def("distance", [](std::vector<int> a, std::vector<int> b) {
    return distance(from_list(std::move(a)), from_list(std::move(b)));
  });
  m.def("grouped_dispersion", [](std::vector<int> d, int k) {
    return grouped_dispersion(from_list(std::move(d)), k);
  });
  m.def("fitness", [](std::vector<int> c, std::vector<int> original, int k) {
    return fitness(from_list(std::move(c)), from_list(std::move(original)), k);
  });
  m.def("mutate", [](std::vector<int> d, std::uint64_t seed) {
    Rng rng(seed);
    return to_list(mutate(from_list(std::move(d)), rng));
  }, py::arg("sequence"), py::arg("seed"));
  m.def("evolve",
        [](std::vector<int> d, int k, std::uint64_t seed, std::size_t population,
           std::size_t offspring, std::size_t max_generations) {
          const EvolutionResult r = evolve(from_list(std::move(d)),
                                           evolution_params(k, seed, population, offspring,
                                                            max_generations));
          py::dict out;
          out["sequence"] = to_list(r.sequence);
          out["achieved_k"] = r.achieved_k;
          out["delta"] = r.delta;
          out["generations"] = r.generations;
          return out;
        },
        py::arg("sequence"), py::arg("k"), py::arg("seed") = 0, py::arg("population") = 100,
        py::arg("offspring") = 100, py::arg("max_generations") = 5000);

  m.def("apply_edge_rotations",
        [](const Graph& g, std::vector<int> target, std::uint64_t seed, std::size_t max_retries) {
          Rng rng(seed);
          AnonymizationResult r = apply_edge_rotations(g, from_list(std::move(target)), rng, max_retries);
          r.rng_seed = seed;
          return rotation_dict(r);
        },
        py::arg("graph"), py::arg("target"), py::arg("seed") = 0,
        py::arg("max_retries") = kDefaultMaxRetries);

  m.def("anonymize",
        [](const Graph& g, int k, std::uint64_t seed, std::size_t population, std::size_t offspring,
           std::size_t max_generations, std::size_t max_retries) {
          PipelineConfig config;
          config.evolution = evolution_params(k, seed, population, offspring, max_generations);
          config.max_retries = max_retries;
          const PipelineResult r = anonymize(g, config);
          py::dict out = rotation_dict(r.anonymization);
          out["generations"] = r.evolution.generations;
          out["sequence"] = to_list(r.evolution.sequence);
          return out;
        },
        py::arg("graph"), py::arg("k"), py::arg("seed") = 0, py::arg("population") = 100,
        py::arg("offspring") = 100, py::arg("max_generations") = 5000,
        py::arg("max_retries") = kDefaultMaxRetries);

  m.def("edge_intersection", &edge_intersection);
  m.def("betweenness", [](const Graph& g) { return betweenness(g).values; });
  m.def("closeness", [](const Graph& g) { return closeness(g).values; });
  m.def("degree_centrality", [](const Graph& g) { return degree_centrality(g).values; });
  m.def("rms_difference", [](std::vector<double> a, std::vector<double> b) {
    return rms_difference({CentralityKind::kDegree, std::move(a)},
                          {CentralityKind::kDegree, std::move(b)});
  });
  m.def("vertex_refinement", [](const Graph& g, std::size_t level) {
    const Refinement r = vertex_refinement(g, level);
    std::vector<std::string> out;
    for (Node v = 0; v < g.node_count(); ++v) out.push_back(r.describe(v));
    return out;
  });
  m.def("candidate_sets", [](const Graph& g, std::size_t level) {
    std::vector<std::vector<Node>> out;
    for (const CandidateClass& c : candidate_sets(g, level)) out.push_back(c.members);
    return out;
  });
  m.def("risk_report", [](const Graph& g, std::size_t level) { return dump(to_json(risk_report(g, level))); });
  m.def("degree_histogram", &degree_histogram);
  m.def("evaluate", [](const Graph& a, const Graph& b) { return dump(to_json(evaluate(a, b))); });

  m.def("run_experiment",
        [](const Graph& g, const std::string& dataset, int k_first, int k_last,
           std::size_t repetitions, std::uint64_t seed) {
          ExperimentConfig config;
          config.dataset = dataset;
          config.k_range = {k_first, k_last};
          config.repetitions = repetitions;
          config.master_seed = seed;
          const ExperimentOutput out = run_experiment(g, config);
          std::ostringstream rows;
          std::ostringstream summary;
          write_rows_csv(rows, out.rows);
          write_summary_csv(summary, out.summaries);
          return py::make_tuple(rows.str(), summary.str());
        },
        py::arg("graph"), py::arg("dataset"), py::arg("k_first"), py::arg("k_last"),
        py::arg("repetitions") = 1, py::arg("seed") = 1);
}
