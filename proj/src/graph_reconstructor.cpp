#include "eaga/graph_reconstructor.hpp"

#include <optional>
#include <ostream>

#include "eaga/error.hpp"
#include "eaga/sequence_anonymizer.hpp"

namespace eaga {
namespace {

struct Attempt {
  Graph graph;
  std::vector<Rotation> log;
};

std::vector<Node> valid_pivots(const Graph& g, Node shrink, Node grow) {
  std::vector<Node> out;
  for (Node p : g.neighbors(shrink)) {
    if (p != grow && !g.has_edge(p, grow)) out.push_back(p);
  }
  return out;
}

bool has_pivot(const Graph& g, Node shrink, Node grow) {
  for (Node p : g.neighbors(shrink)) {
    if (p != grow && !g.has_edge(p, grow)) return true;
  }
  return false;
}

std::optional<Attempt> try_rotations(const Graph& g, std::vector<int> deltas, Rng& rng) {
  Attempt attempt{g, {}};
  Graph& work = attempt.graph;
  for (std::size_t step = 1;; ++step) {
    std::vector<Node> surplus;
    std::vector<Node> deficit;
    for (Node v = 0; v < deltas.size(); ++v) {
      if (deltas[v] > 0) surplus.push_back(v);
      if (deltas[v] < 0) deficit.push_back(v);
    }
    if (surplus.empty()) return attempt;

    std::vector<Node> shrink_options;
    for (Node q : surplus) {
      for (Node r : deficit) {
        if (has_pivot(work, q, r)) {
          shrink_options.push_back(q);
          break;
        }
      }
    }
    if (shrink_options.empty()) return std::nullopt;
    const Node shrink = shrink_options[rng.uniform_index(shrink_options.size())];

    std::vector<Node> grow_options;
    for (Node r : deficit) {
      if (has_pivot(work, shrink, r)) grow_options.push_back(r);
    }
    const Node grow = grow_options[rng.uniform_index(grow_options.size())];

    const auto pivots = valid_pivots(work, shrink, grow);
    const Node pivot = pivots[rng.uniform_index(pivots.size())];

    work.remove_edge(pivot, shrink);
    work.add_edge(pivot, grow);
    --deltas[shrink];
    ++deltas[grow];
    attempt.log.push_back({step, pivot, shrink, grow});
  }
}

}  // namespace

std::int64_t DifferenceVector::total_surplus() const noexcept {
  std::int64_t total = 0;
  for (int d : deltas) {
    if (d > 0) total += d;
  }
  return total;
}

DifferenceVector difference_vector(const DegreeSequence& original, const DegreeSequence& anonymized) {
  if (original.size() != anonymized.size()) {
    throw ContractViolation("difference_vector: sequence lengths differ");
  }
  if (original.sum() != anonymized.sum()) {
    throw ContractViolation("difference_vector: sequence sums differ (" +
                            std::to_string(original.sum()) + " vs " +
                            std::to_string(anonymized.sum()) + ")");
  }
  DifferenceVector out;
  out.deltas.resize(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) out.deltas[i] = original[i] - anonymized[i];
  return out;
}

AnonymizationResult apply_edge_rotations(const Graph& g, const DegreeSequence& anonymized, Rng& rng,
                                         std::size_t max_retries) {
  const DegreeSequence original = degree_sequence(g);
  const DifferenceVector diff = difference_vector(original, anonymized);
  if (!is_graphical(anonymized)) {
    throw ContractViolation("target degree sequence is not graphical");
  }

  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    auto done = try_rotations(g, diff.deltas, rng);
    if (!done) continue;
    AnonymizationResult result;
    result.graph = std::move(done->graph);
    result.log = std::move(done->log);
    result.rotations_applied = result.log.size();
    result.restarts = attempt;
    result.delta = distance(anonymized, original);
    result.achieved_k = get_k(anonymized);
    return result;
  }
  throw ReconstructionError("edge rotations reached a dead end on all " +
                                std::to_string(max_retries + 1) + " attempts",
                            max_retries + 1);
}

void write_rotation_log_csv(std::ostream& out, const Graph& g, std::span<const Rotation> log) {
  out << "step,pivot,shrink,grow\n";
  for (const Rotation& r : log) {
    out << r.step << ',' << g.label(r.pivot) << ',' << g.label(r.shrink) << ',' << g.label(r.grow)
        << '\n';
  }
}

}  // namespace eaga
