#include "eaga/sequence_anonymizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>

#include "eaga/error.hpp"

namespace eaga {
namespace {

// counts[x] = multiplicity of value x in d.
std::vector<int> value_counts(const DegreeSequence& d) {
  int top = 0;
  for (int x : d) {
    if (x < 0) throw ContractViolation("negative degree in sequence");
    top = std::max(top, x);
  }
  std::vector<int> counts(static_cast<std::size_t>(top) + 1, 0);
  for (int x : d) ++counts[static_cast<std::size_t>(x)];
  return counts;
}

void require_same_length(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) {
    throw ContractViolation("sequence lengths differ: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

}  // namespace

double grouped_dispersion(const DegreeSequence& c, int target_k) {
  const std::size_t n = c.size();
  const auto k = static_cast<std::size_t>(std::max(target_k, 1));
  if (n == 0 || n < k) return 0.0;
  std::vector<std::int64_t> sorted(c.begin(), c.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + sorted[i];

  // Sum of |x - mean| over sorted[a, b).
  auto group_cost = [&](std::size_t a, std::size_t b) {
    const double sum = static_cast<double>(prefix[b] - prefix[a]);
    const double mean = sum / static_cast<double>(b - a);
    const auto split = static_cast<std::size_t>(
        std::lower_bound(sorted.begin() + static_cast<std::ptrdiff_t>(a),
                         sorted.begin() + static_cast<std::ptrdiff_t>(b), mean) -
        sorted.begin());
    const double below = mean * static_cast<double>(split - a) -
                         static_cast<double>(prefix[split] - prefix[a]);
    const double above = static_cast<double>(prefix[b] - prefix[split]) -
                         mean * static_cast<double>(b - split);
    return below + above;
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best(n + 1, kInf);
  best[0] = 0.0;
  for (std::size_t end = k; end <= n; ++end) {
    for (std::size_t size = k; size <= 2 * k - 1 && size <= end; ++size) {
      const double prev = best[end - size];
      if (prev == kInf) continue;
      best[end] = std::min(best[end], prev + group_cost(end - size, end));
    }
  }
  return best[n] / static_cast<double>(n);
}

namespace {

double unfulfilled_score(const DegreeSequence& c, const std::vector<int>& counts, int target_k) {
  const auto n = static_cast<double>(c.size());
  std::size_t violating = 0;
  for (int x : c) {
    if (counts[static_cast<std::size_t>(x)] < target_k) ++violating;
  }
  const double max_dispersion = (n - 1.0) / 2.0;
  const double dispersion = grouped_dispersion(c, target_k);
  const double spread = max_dispersion > 0.0 ? std::min(1.0, dispersion / max_dispersion) : 0.0;
  const double score = 0.5 * (1.0 - violating / n) + 0.5 * (1.0 - spread);
  // Keeps the [0, 1) band strict for the degenerate v = 0, D = 0 case.
  return std::min(score, std::nextafter(1.0, 0.0));
}

double fulfilled_score(std::int64_t delta) {
  return 1.0 + 1.0 / (1.0 + static_cast<double>(delta));
}

int min_class_size(const std::vector<int>& counts) {
  int k = std::numeric_limits<int>::max();
  for (int c : counts) {
    if (c > 0) k = std::min(k, c);
  }
  return k;
}

// Candidates only count as qualifying if they are also graphical, so the
// loop never returns a sequence that edge rotations cannot realize.
Candidate score(DegreeSequence seq, const DegreeSequence& original, int target_k) {
  Candidate c;
  const auto counts = value_counts(seq);
  c.k_value = min_class_size(counts);
  c.delta = distance(seq, original);
  const bool qualifies = c.k_value >= target_k && is_graphical(seq);
  c.fitness = qualifies ? fulfilled_score(c.delta) : unfulfilled_score(seq, counts, target_k);
  c.sequence = std::move(seq);
  return c;
}

}  // namespace

void EvolutionParams::validate() const {
  if (population_size < 2) throw ContractViolation("population_size must be >= 2");
  if (offspring_per_generation < 1) throw ContractViolation("offspring_per_generation must be >= 1");
  if (max_generations < 1) throw ContractViolation("max_generations must be >= 1");
  if (target_k < 2) throw InfeasibleError("target k must be >= 2 (every graph is 1-anonymous)");
}

int get_k(const DegreeSequence& d) {
  if (d.size() == 0) throw ContractViolation("get_k of an empty sequence");
  return min_class_size(value_counts(d));
}

std::int64_t distance(const DegreeSequence& anonymized, const DegreeSequence& original) {
  require_same_length(anonymized, original);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < anonymized.size(); ++i) {
    total += std::abs(static_cast<std::int64_t>(anonymized[i]) - original[i]);
  }
  return total;
}

DegreeSequence apply_mutation(const DegreeSequence& d, std::size_t increment, std::size_t decrement) {
  const auto n = static_cast<int>(d.size());
  if (increment >= d.size() || decrement >= d.size() || increment == decrement) {
    throw ContractViolation("mutation needs two distinct in-range positions");
  }
  if (d[increment] >= n - 1 || d[decrement] <= 0) {
    throw ContractViolation("mutation would leave the degree range [0, n-1]");
  }
  DegreeSequence out = d;
  ++out[increment];
  --out[decrement];
  return out;
}

DegreeSequence mutate(const DegreeSequence& d, Rng& rng) {
  const auto n = static_cast<int>(d.size());
  std::vector<std::size_t> can_grow;
  std::vector<std::size_t> can_shrink;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < n - 1) can_grow.push_back(i);
    if (d[i] > 0) can_shrink.push_back(i);
  }
  const bool single_shared = can_grow.size() == 1 && can_shrink.size() == 1 &&
                             can_grow.front() == can_shrink.front();
  if (can_grow.empty() || can_shrink.empty() || single_shared) {
    throw InfeasibleError("no valid (+1, -1) mutation pair exists");
  }
  // Independent draws with rejection of i == j give a uniform valid pair.
  for (;;) {
    const std::size_t i = can_grow[rng.uniform_index(can_grow.size())];
    const std::size_t j = can_shrink[rng.uniform_index(can_shrink.size())];
    if (i != j) return apply_mutation(d, i, j);
  }
}

double fitness(const DegreeSequence& c, const DegreeSequence& original, int target_k) {
  require_same_length(c, original);
  if (c.size() == 0) throw ContractViolation("fitness of an empty sequence");
  const auto counts = value_counts(c);
  if (min_class_size(counts) >= target_k) return fulfilled_score(distance(c, original));
  return unfulfilled_score(c, counts, target_k);
}

EvolutionResult evolve(const DegreeSequence& original, const EvolutionParams& params, Rng& rng,
                       bool record_trace, const PopulationObserver& observer) {
  params.validate();
  const std::size_t n = original.size();
  if (static_cast<std::size_t>(params.target_k) > n) {
    throw InfeasibleError("target k = " + std::to_string(params.target_k) +
                          " exceeds node count " + std::to_string(n));
  }

  EvolutionResult result;
  const Candidate seed = score(original, original, params.target_k);
  if (seed.fitness >= 1.0) {
    result.sequence = original;
    result.achieved_k = seed.k_value;
    return result;
  }

  std::vector<Candidate> population(params.population_size, seed);
  std::vector<Candidate> merged;
  merged.reserve(params.population_size + params.offspring_per_generation);
  auto ranks_before = [](const Candidate& a, const Candidate& b) {
    if (a.fitness != b.fitness) return a.fitness > b.fitness;
    return a.delta < b.delta;
  };

  for (std::size_t generation = 1; generation <= params.max_generations; ++generation) {
    merged.assign(population.begin(), population.end());
    for (std::size_t o = 0; o < params.offspring_per_generation; ++o) {
      const Candidate& parent = population[rng.uniform_index(population.size())];
      merged.push_back(score(mutate(parent.sequence, rng), original, params.target_k));
    }
    // Stable sort keeps insertion order as the last tie-breaker.
    std::stable_sort(merged.begin(), merged.end(), ranks_before);
    merged.resize(params.population_size);
    population.swap(merged);

    const Candidate& best = population.front();
    if (record_trace) {
      result.trace.push_back({generation, best.fitness, best.k_value, best.delta});
    }
    if (observer) observer(generation, population);
    if (best.fitness >= 1.0) {
      result.sequence = best.sequence;
      result.achieved_k = best.k_value;
      result.delta = best.delta;
      result.generations = generation;
      return result;
    }
  }

  int best_k = 0;
  for (const Candidate& c : population) best_k = std::max(best_k, c.k_value);
  throw ConvergenceError("no " + std::to_string(params.target_k) +
                             "-anonymous sequence after " +
                             std::to_string(params.max_generations) +
                             " generations (best k reached: " + std::to_string(best_k) + ")",
                         best_k);
}

EvolutionResult evolve(const DegreeSequence& original, const EvolutionParams& params,
                       bool record_trace) {
  Rng rng(params.rng_seed);
  return evolve(original, params, rng, record_trace);
}

void write_trace_csv(std::ostream& out, std::span<const TraceRow> trace) {
  out << "generation,best_fitness,best_k,best_delta\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const TraceRow& row : trace) {
    out << row.generation << ',' << row.best_fitness << ',' << row.best_k << ','
        << row.best_delta << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace eaga
