#include "eaga/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>
#include <unordered_map>

#include "eaga/error.hpp"

namespace eaga {
namespace {

constexpr std::string_view kNodeDirective = "#@node";

// Accumulates labelled edges and assigns dense indices on first appearance.
class GraphBuilder {
 public:
  Node intern(const std::string& label) {
    auto [it, inserted] = index_.try_emplace(label, static_cast<Node>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  void add(const std::string& a, const std::string& b, std::size_t line) {
    if (a == b) {
      throw ValidationError("line " + std::to_string(line) + ": self-loop at node '" + a + "'");
    }
    const Node u = intern(a);
    const Node v = intern(b);
    edges_.push_back(make_edge(u, v));
  }

  Graph build() {
    Graph g(labels_.size());
    for (const Edge& e : edges_) g.add_edge(e.u, e.v);
    g.set_labels(std::move(labels_));
    return g;
  }

 private:
  std::unordered_map<std::string, Node> index_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

struct Token {
  std::string text;
  std::size_t line = 0;
  bool quoted = false;

  bool is(std::string_view s) const { return !quoted && text == s; }
};

std::vector<Token> tokenize_gml(std::istream& in) {
  std::vector<Token> tokens;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '[' || c == ']') {
      tokens.push_back({std::string(1, c), line, false});
      ++i;
    } else if (c == '"') {
      const std::size_t start_line = line;
      std::string value;
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\n') ++line;
        value.push_back(text[i++]);
      }
      if (i == text.size()) throw ParseError(start_line, "unterminated string");
      ++i;
      tokens.push_back({std::move(value), start_line, true});
    } else {
      std::string value;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '[' && text[i] != ']' && text[i] != '"') {
        value.push_back(text[i++]);
      }
      tokens.push_back({std::move(value), line, false});
    }
  }
  return tokens;
}

class GmlReader {
 public:
  explicit GmlReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Graph read() {
    while (pos_ < tokens_.size()) {
      const Token key = next("key");
      if (key.is("graph") && peek_is("[")) {
        ++pos_;
        return read_graph(key.line);
      }
      skip_value();
    }
    throw ParseError(0, "no 'graph [ ... ]' block found");
  }

 private:
  struct PendingEdge {
    std::string source;
    std::string target;
    std::size_t line;
  };

  Graph read_graph(std::size_t open_line) {
    std::vector<std::string> ids;
    std::map<std::string, std::size_t> declared;
    std::vector<PendingEdge> edges;
    for (;;) {
      if (pos_ >= tokens_.size()) throw ParseError(open_line, "unterminated graph block");
      if (tokens_[pos_].is("]")) {
        ++pos_;
        break;
      }
      const Token key = next("key");
      if (key.is("node") && peek_is("[")) {
        ++pos_;
        auto fields = read_record(key.line);
        auto it = fields.find("id");
        if (it == fields.end()) throw ParseError(key.line, "node without id");
        if (!declared.emplace(it->second, ids.size()).second) {
          throw ParseError(key.line, "duplicate node id '" + it->second + "'");
        }
        ids.push_back(it->second);
      } else if (key.is("edge") && peek_is("[")) {
        ++pos_;
        auto fields = read_record(key.line);
        auto s = fields.find("source");
        auto t = fields.find("target");
        if (s == fields.end() || t == fields.end()) {
          throw ParseError(key.line, "edge without source/target");
        }
        edges.push_back({s->second, t->second, key.line});
      } else {
        skip_value();
      }
    }

    GraphBuilder builder;
    for (const auto& id : ids) builder.intern(id);
    for (const auto& e : edges) {
      for (const auto* end : {&e.source, &e.target}) {
        if (!declared.contains(*end)) {
          throw ParseError(e.line, "edge references undeclared node id '" + *end + "'");
        }
      }
      builder.add(e.source, e.target, e.line);
    }
    return builder.build();
  }

  // Flat key/value record; nested lists inside it are skipped.
  std::map<std::string, std::string> read_record(std::size_t open_line) {
    std::map<std::string, std::string> fields;
    for (;;) {
      if (pos_ >= tokens_.size()) throw ParseError(open_line, "unterminated record");
      if (tokens_[pos_].is("]")) {
        ++pos_;
        return fields;
      }
      const Token key = next("key");
      if (peek_is("[")) {
        skip_value();
        continue;
      }
      fields[key.text] = next("value").text;
    }
  }

  void skip_value() {
    const Token first = next("value");
    if (!first.is("[")) return;
    int depth = 1;
    while (depth > 0) {
      const Token t = next("']'");
      if (t.is("[")) ++depth;
      if (t.is("]")) --depth;
    }
  }

  bool peek_is(std::string_view s) const {
    return pos_ < tokens_.size() && tokens_[pos_].is(s);
  }

  Token next(std::string_view what) {
    if (pos_ >= tokens_.size()) {
      const std::size_t line = tokens_.empty() ? 0 : tokens_.back().line;
      throw ParseError(line, "unexpected end of input, expected " + std::string(what));
    }
    return tokens_[pos_++];
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "gml") return GraphFormat::kGml;
  throw ContractViolation("unknown graph format '" + std::string(name) + "'");
}

Graph parse_edge_list(std::istream& in) {
  GraphBuilder builder;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_left(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with(kNodeDirective)) {
        auto fields = split_fields(line.substr(kNodeDirective.size()));
        if (fields.size() != 1) {
          throw ParseError(line_no, "node directive expects exactly one label");
        }
        builder.intern(fields.front());
      }
      continue;
    }
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 2 node tokens, found " + std::to_string(fields.size()));
    }
    builder.add(fields[0], fields[1], line_no);
  }
  return builder.build();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph parse_gml_subset(std::istream& in) {
  return GmlReader(tokenize_gml(in)).read();
}

Graph parse_gml_subset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_gml_subset(in);
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return format == GraphFormat::kGml ? parse_gml_subset(in) : parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (Node v = 0; v < g.node_count(); ++v) {
    out << kNodeDirective << ' ' << g.label(v) << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractViolation("cannot write '" + path.string() + "'");
  write_edge_list(out, g);
}

Graph align_labels(const Graph& g, const Graph& reference) {
  if (g.node_count() != reference.node_count()) {
    throw ValidationError("node counts differ: " + std::to_string(g.node_count()) + " vs " +
                          std::to_string(reference.node_count()));
  }
  std::unordered_map<std::string, Node> position;
  for (Node v = 0; v < reference.node_count(); ++v) position.emplace(reference.label(v), v);
  std::vector<Node> remap(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) {
    auto it = position.find(g.label(v));
    if (it == position.end()) {
      throw ValidationError("node '" + g.label(v) + "' missing from reference graph");
    }
    remap[v] = it->second;
  }
  Graph out(g.node_count());
  for (const Edge& e : g.edges()) out.add_edge(remap[e.u], remap[e.v]);
  out.set_labels(reference.labels());
  return out;
}

}  // namespace eaga
