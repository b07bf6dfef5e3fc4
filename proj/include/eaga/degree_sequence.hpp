#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "eaga/graph.hpp"

namespace eaga {

/// Length-n vector of node degrees, indexed by node.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> values) : values_(std::move(values)) {}
  DegreeSequence(std::initializer_list<int> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  int& operator[](std::size_t i) { return values_[i]; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  std::span<const int> values() const noexcept { return values_; }
  std::int64_t sum() const noexcept;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

DegreeSequence degree_sequence(const Graph& g);

/// Erdős–Gallai test: can `d` be realized by a simple graph?
bool is_graphical(const DegreeSequence& d);

}  // namespace eaga
