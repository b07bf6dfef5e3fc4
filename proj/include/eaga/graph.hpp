#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace eaga {

using Node = std::uint32_t;

/// Unordered node pair stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Node a, Node b) noexcept;

/// Simple undirected graph over nodes 0..n-1.
///
/// Edges are kept twice: as adjacency lists for traversal and as a hashed key
/// set for constant-time membership tests. Optional labels map each dense
/// index back to the identifier it had in the source file.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  /// Throws ValidationError on self-loops, duplicates, or out-of-range nodes.
  Graph(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_keys_.size(); }

  bool has_edge(Node a, Node b) const;
  std::size_t degree(Node v) const { return adjacency_.at(v).size(); }
  std::span<const Node> neighbors(Node v) const { return adjacency_.at(v); }

  /// Returns false if the edge already exists. Self-loops throw.
  bool add_edge(Node a, Node b);
  /// Returns false if the edge was absent.
  bool remove_edge(Node a, Node b);

  /// All edges, sorted ascending.
  std::vector<Edge> edges() const;

  /// Label of a node; falls back to the decimal index when no label was set.
  std::string label(Node v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Same node count and edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_node(Node v) const;
  static std::uint64_t key(Node a, Node b) noexcept;

  std::vector<std::vector<Node>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::vector<std::string> labels_;
};

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Breadth-first hop distances from `source`; kUnreachable where no path exists.
std::vector<Distance> shortest_path_lengths(const Graph& g, Node source);

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double avg_degree = 0.0;
  /// Mean over ordered reachable pairs s != t.
  double avg_distance = 0.0;
  /// Largest finite distance.
  std::size_t diameter = 0;
  /// Set when the graph has no edges and distances are undefined.
  bool distance_undefined = false;
};

GraphSummary summary_stats(const Graph& g);

}  // namespace eaga
