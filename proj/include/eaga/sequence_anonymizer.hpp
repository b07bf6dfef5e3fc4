#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "eaga/degree_sequence.hpp"
#include "eaga/random.hpp"

namespace eaga {

/// One individual in the evolving population.
struct Candidate {
  DegreeSequence sequence;
  double fitness = 0.0;
  int k_value = 0;
  std::int64_t delta = 0;  // L1 distance to the original sequence
};

struct EvolutionParams {
  std::size_t population_size = 100;
  std::size_t offspring_per_generation = 100;
  std::size_t max_generations = 5000;
  int target_k = 2;
  std::uint64_t rng_seed = 0;

  /// Throws ContractViolation on out-of-range fields.
  void validate() const;
};

struct TraceRow {
  std::size_t generation = 0;
  double best_fitness = 0.0;
  int best_k = 0;
  std::int64_t best_delta = 0;
};

struct EvolutionResult {
  DegreeSequence sequence;
  int achieved_k = 0;
  std::int64_t delta = 0;
  std::size_t generations = 0;
  std::vector<TraceRow> trace;
};

/// Called after selection with the surviving population, best first.
using PopulationObserver = std::function<void(std::size_t generation, std::span<const Candidate>)>;

/// Smallest multiplicity over the distinct values of `d`.
int get_k(const DegreeSequence& d);

/// Sum of absolute componentwise differences.
std::int64_t distance(const DegreeSequence& anonymized, const DegreeSequence& original);

/// Adds one at `increment` and subtracts one at `decrement`. Throws
/// ContractViolation if the positions coincide or a value would leave [0, n-1].
DegreeSequence apply_mutation(const DegreeSequence& d, std::size_t increment, std::size_t decrement);

/// Single (+1, -1) move on a pair drawn uniformly from all valid pairs.
/// Throws InfeasibleError when no valid pair exists.
DegreeSequence mutate(const DegreeSequence& d, Rng& rng);

/// Mean absolute distance from each degree to the mean degree of its group,
/// minimized over partitions of the sorted sequence into consecutive groups
/// of target_k to 2*target_k - 1 values. Zero exactly when the sorted
/// sequence splits into constant groups of at least target_k.
double grouped_dispersion(const DegreeSequence& c, int target_k);

/// Score in [0, 1) for sequences below `target_k` and in (1, 2] otherwise.
///
/// Below target: 0.5 * (1 - v/n) + 0.5 * (1 - min(1, D / Dmax)), where v counts
/// nodes in degree classes smaller than target_k, D = grouped_dispersion and
/// Dmax = (n - 1) / 2.
/// At or above target: 1 + 1 / (1 + distance(c, original)).
double fitness(const DegreeSequence& c, const DegreeSequence& original, int target_k);

/// Steady-state evolution from `original` toward a target_k-anonymous,
/// graphical sequence. Stops at the first generation whose best candidate
/// qualifies and returns the qualifying candidate with the smallest distance.
///
/// Throws InfeasibleError when target_k > n and ConvergenceError when
/// max_generations pass without a qualifying candidate.
EvolutionResult evolve(const DegreeSequence& original, const EvolutionParams& params, Rng& rng,
                       bool record_trace = false, const PopulationObserver& observer = {});
EvolutionResult evolve(const DegreeSequence& original, const EvolutionParams& params,
                       bool record_trace = false);

/// generation,best_fitness,best_k,best_delta
void write_trace_csv(std::ostream& out, std::span<const TraceRow> trace);

}  // namespace eaga
