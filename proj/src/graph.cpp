#include "eaga/graph.hpp"

#include <algorithm>
#include <deque>

#include "eaga/error.hpp"

namespace eaga {

Edge make_edge(Node a, Node b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges)
    : adjacency_(node_count) {
  for (const Edge& e : edges) {
    if (!add_edge(e.u, e.v)) {
      throw ValidationError("duplicate edge (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ")");
    }
  }
}

std::uint64_t Graph::key(Node a, Node b) noexcept {
  const Edge e = make_edge(a, b);
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

void Graph::check_node(Node v) const {
  if (v >= adjacency_.size()) {
    throw ValidationError("node " + std::to_string(v) + " out of range [0, " +
                          std::to_string(adjacency_.size()) + ")");
  }
}

bool Graph::has_edge(Node a, Node b) const {
  return edge_keys_.contains(key(a, b));
}

bool Graph::add_edge(Node a, Node b) {
  check_node(a);
  check_node(b);
  if (a == b) {
    throw ValidationError("self-loop at node " + std::to_string(a));
  }
  if (!edge_keys_.insert(key(a, b)).second) return false;
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  return true;
}

bool Graph::remove_edge(Node a, Node b) {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  if (edge_keys_.erase(key(a, b)) == 0) return false;
  auto drop = [](std::vector<Node>& list, Node x) {
    auto it = std::find(list.begin(), list.end(), x);
    *it = list.back();
    list.pop_back();
  };
  drop(adjacency_[a], b);
  drop(adjacency_[b], a);
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_keys_.size());
  for (std::uint64_t k : edge_keys_) {
    out.push_back(Edge{static_cast<Node>(k >> 32), static_cast<Node>(k & 0xffffffffu)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Graph::label(Node v) const {
  check_node(v);
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != adjacency_.size()) {
    throw ContractViolation("label count does not match node count");
  }
  labels_ = std::move(labels);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.node_count() == b.node_count() && a.edge_keys_ == b.edge_keys_;
}

std::vector<Distance> shortest_path_lengths(const Graph& g, Node source) {
  if (source >= g.node_count()) {
    throw ContractViolation("source node out of range");
  }
  std::vector<Distance> dist(g.node_count(), kUnreachable);
  std::deque<Node> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Node v = queue.front();
    queue.pop_front();
    for (Node w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

GraphSummary summary_stats(const Graph& g) {
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.avg_degree = s.nodes == 0 ? 0.0 : 2.0 * static_cast<double>(s.edges) / s.nodes;
  if (s.edges == 0) {
    s.distance_undefined = true;
    return s;
  }
  std::uint64_t total = 0;
  std::uint64_t pairs = 0;
  for (Node v = 0; v < s.nodes; ++v) {
    for (Distance d : shortest_path_lengths(g, v)) {
      if (d == kUnreachable || d == 0) continue;
      total += d;
      ++pairs;
      s.diameter = std::max<std::size_t>(s.diameter, d);
    }
  }
  s.avg_distance = static_cast<double>(total) / static_cast<double>(pairs);
  return s;
}

}  // namespace eaga
