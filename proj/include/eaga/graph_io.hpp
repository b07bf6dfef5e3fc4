#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "eaga/graph.hpp"

namespace eaga {

enum class GraphFormat { kEdgeList, kGml };

GraphFormat parse_format(std::string_view name);

/// Whitespace- or comma-separated node pairs, one per line.
///
/// Lines whose first non-blank character is '#' are comments, except the
/// `#@node <label>` directive written by write_edge_list, which declares a
/// node (so isolated nodes and index order survive a round trip). Labels are
/// mapped to dense indices in first-appearance order; duplicate and reversed
/// lines collapse to one edge.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Reads the `graph [ node [ id ] edge [ source target ] ]` subset of GML.
/// Unknown keys and their values, including nested lists, are skipped.
Graph parse_gml_subset(std::istream& in);
Graph parse_gml_subset(std::string_view text);

Graph read_graph(const std::filesystem::path& path, GraphFormat format);

/// Canonical edge list: node directives in index order, then edges sorted
/// ascending by index, written with their labels.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
void write_graph(const std::filesystem::path& path, const Graph& g);

/// Reindexes `g` so node i carries the same label as node i of `reference`.
/// Throws ValidationError if the label sets differ.
Graph align_labels(const Graph& g, const Graph& reference);

}  // namespace eaga
