#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "eaga/degree_sequence.hpp"
#include "eaga/graph.hpp"
#include "eaga/random.hpp"

namespace eaga {

/// deltas[i] = original[i] - anonymized[i]. Positive entries mark nodes that
/// must shed edges, negative entries nodes that must gain them.
struct DifferenceVector {
  std::vector<int> deltas;

  std::int64_t total_surplus() const noexcept;
};

DifferenceVector difference_vector(const DegreeSequence& original, const DegreeSequence& anonymized);

/// One edge rotation: (pivot, shrink) was replaced by (pivot, grow).
struct Rotation {
  std::size_t step = 0;
  Node pivot = 0;
  Node shrink = 0;
  Node grow = 0;
};

struct AnonymizationResult {
  Graph graph;
  int achieved_k = 0;
  std::int64_t delta = 0;
  std::size_t rotations_applied = 0;
  /// Attempts abandoned at a dead end before the successful one.
  std::size_t restarts = 0;
  std::uint64_t rng_seed = 0;
  std::vector<Rotation> log;
};

inline constexpr std::size_t kDefaultMaxRetries = 50;

/// Rewires a copy of `g` until its degree sequence equals `anonymized`.
///
/// Each step draws, uniformly among options that admit a valid rotation, a
/// node with surplus (shrink), a node with deficit (grow), and a neighbour of
/// the shrinking node (pivot) not yet adjacent to the growing one, then moves
/// the pivot's edge from shrink to grow. A dead end restarts from `g`; after
/// max_retries restarts a ReconstructionError is thrown.
AnonymizationResult apply_edge_rotations(const Graph& g, const DegreeSequence& anonymized, Rng& rng,
                                         std::size_t max_retries = kDefaultMaxRetries);

/// step,pivot,shrink,grow using the graph's labels.
void write_rotation_log_csv(std::ostream& out, const Graph& g, std::span<const Rotation> log);

}  // namespace eaga
