#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncg/group.hpp"

namespace ncg {

using Vertex = std::size_t;
using VertexRow = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph with labeled vertices and bitset adjacency rows.
class Graph {
 public:
  Graph() = default;

  // Throws validation errors on duplicate labels, loops or bad endpoints.
  // Duplicate edges are merged.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& label(Vertex v) const;
  std::span<const std::string> labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const;
  const VertexRow& row(Vertex v) const;

  // Sorted pairs (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  // Throws out_of_range for v >= vertex_count().
  void check(Vertex v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexRow> rows_;
  std::size_t edge_count_ = 0;
};

// Labels "0", "1", ... unless given.
Graph complete_graph(std::size_t k);
Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph edgeless_graph(std::size_t k);

// Non-central elements of g in index order; these are the vertices of the
// non-commuting graph, vertex i <-> element non_central_elements(g)[i].
std::vector<Element> non_central_elements(const FiniteGroup& g);

// Throws empty_graph for abelian g.
Graph non_commuting_graph(const FiniteGroup& g);

std::size_t degree(const Graph& graph, Vertex v);

Graph induced_subgraph(const Graph& graph, std::span<const Vertex> vertices);

// Certificate that a graph is complete multipartite: independent classes with
// every cross-class pair adjacent. Classes are ordered by their least vertex.
struct PartitionWitness {
  std::vector<std::vector<Vertex>> classes;

  std::vector<std::size_t> sorted_class_sizes() const;
};

std::optional<PartitionWitness> is_complete_multipartite(const Graph& graph);

enum class PatternKind { cycle, path };

struct Pattern {
  PatternKind kind;
  std::size_t order;  // number of vertices

  static Pattern cycle(std::size_t k) { return {PatternKind::cycle, k}; }
  static Pattern path(std::size_t k) { return {PatternKind::path, k}; }
};

inline constexpr std::size_t kMaxPatternOrder = 8;

std::string to_string(Pattern p);

// Exhaustive search for a vertex subset inducing the pattern. Returns the
// lexicographically first witness.
std::optional<std::vector<Vertex>> find_induced(const Graph& graph, Pattern pattern);

// Common degree if the graph is regular.
std::optional<std::size_t> is_k_regular(const Graph& graph);

enum class ExportFormat { dot, json };

ExportFormat parse_export_format(std::string_view name);

// Vertices in index order, edges lexicographic.
std::string export_graph(const Graph& graph, ExportFormat format);

}  // namespace ncg
