#include "eaga/degree_sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace eaga {

std::int64_t DegreeSequence::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> values(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) values[v] = static_cast<int>(g.degree(v));
  return DegreeSequence(std::move(values));
}

bool is_graphical(const DegreeSequence& d) {
  const std::size_t n = d.size();
  std::vector<std::int64_t> sorted(d.begin(), d.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (n == 0) return true;
  if (sorted.back() < 0 || sorted.front() > static_cast<std::int64_t>(n) - 1) return false;
  if (d.sum() % 2 != 0) return false;

  std::vector<std::int64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];

  // w = number of entries >= k; shrinks as k grows.
  std::size_t w = n;
  std::int64_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += sorted[k - 1];
    const auto kk = static_cast<std::int64_t>(k);
    while (w > 0 && sorted[w - 1] < kk) --w;
    const std::size_t capped_end = std::max(k, w);
    const std::int64_t rhs = kk * (kk - 1) +
                             kk * static_cast<std::int64_t>(capped_end - k) +
                             suffix[capped_end];
    if (prefix > rhs) return false;
  }
  return true;
}

}  // namespace eaga
