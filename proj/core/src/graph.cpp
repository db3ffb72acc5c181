#include "ncg/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ncg {

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorKind::validation, "duplicate vertex label \"" + *dup + "\"");
    }
  }
  const std::size_t n = labels_.size();
  rows_.assign(n, VertexRow(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::validation, "edge (" + std::to_string(u) + ", " +
                                             std::to_string(v) +
                                             ") has an endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorKind::validation, "loop at vertex " + std::to_string(u));
    }
    if (!rows_[u].test(v)) {
      rows_[u].set(v);
      rows_[v].set(u);
      ++edge_count_;
    }
  }
}

void Graph::check(Vertex v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorKind::out_of_range,
                "vertex " + std::to_string(v) + " out of range for graph with " +
                    std::to_string(vertex_count()) + " vertices");
  }
}

const std::string& Graph::label(Vertex v) const {
  check(v);
  return labels_[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return rows_[u].test(v);
}

const VertexRow& Graph::row(Vertex v) const {
  check(v);
  return rows_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (auto v = rows_[u].find_next(u); v != VertexRow::npos;
         v = rows_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<std::string> index_labels(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Graph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Graph(index_labels(k), edges);
}

Graph path_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < k; ++u) edges.emplace_back(u, u + 1);
  return Graph(index_labels(k), edges);
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) {
    throw Error(ErrorKind::invalid_parameter, "a cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) edges.emplace_back(u, (u + 1) % k);
  return Graph(index_labels(k), edges);
}

Graph edgeless_graph(std::size_t k) { return Graph(index_labels(k), {}); }

std::vector<Element> non_central_elements(const FiniteGroup& g) {
  const auto z = center(g);
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (!std::binary_search(z.begin(), z.end(), x)) out.push_back(x);
  }
  return out;
}

Graph non_commuting_graph(const FiniteGroup& g) {
  const auto vertices = non_central_elements(g);
  if (vertices.empty()) {
    throw Error(ErrorKind::empty_graph,
                "the group is abelian, so its non-commuting graph has no vertices");
  }
  std::vector<std::string> labels;
  for (Element x : vertices) labels.push_back(g.label(x));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < vertices.size(); ++u) {
    for (Vertex v = u + 1; v < vertices.size(); ++v) {
      if (!g.commute(vertices[u], vertices[v])) edges.emplace_back(u, v);
    }
  }
  return Graph(std::move(labels), edges);
}

std::size_t degree(const Graph& graph, Vertex v) { return graph.row(v).count(); }

Graph induced_subgraph(const Graph& graph, std::span<const Vertex> vertices) {
  std::vector<std::string> labels;
  for (Vertex v : vertices) labels.push_back(graph.label(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (graph.adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(labels), edges);
}

std::vector<std::size_t> PartitionWitness::sorted_class_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::optional<PartitionWitness> is_complete_multipartite(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  // Closed non-neighbourhood: the vertex itself plus everything it misses.
  std::map<VertexRow, std::size_t> class_of_row;
  PartitionWitness w;
  std::vector<std::size_t> class_of(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexRow key = ~graph.row(v);
    auto [it, inserted] = class_of_row.try_emplace(key, w.classes.size());
    if (inserted) w.classes.emplace_back();
    w.classes[it->second].push_back(v);
    class_of[v] = it->second;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (graph.adjacent(u, v) == (class_of[u] == class_of[v])) return std::nullopt;
    }
  }
  return w;
}

std::string to_string(Pattern p) {
  return (p.kind == PatternKind::cycle ? "cycle_" : "path_") + std::to_string(p.order);
}

namespace {

class InducedSearch {
 public:
  InducedSearch(const Graph& graph, Pattern pattern)
      : graph_(graph),
        pattern_(pattern),
        target_edges_(pattern.kind == PatternKind::cycle ? pattern.order
                                                         : pattern.order - 1) {}

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex start) {
    if (chosen_.size() == pattern_.order) return accept();
    const std::size_t missing = pattern_.order - chosen_.size();
    for (Vertex v = start; v + missing <= graph_.vertex_count(); ++v) {
      std::size_t added = 0;
      bool ok = true;
      for (std::size_t i = 0; i < chosen_.size(); ++i) {
        if (graph_.adjacent(chosen_[i], v)) {
          ++added;
          // Both patterns have maximum degree 2.
          if (degrees_[i] + 1 > 2) ok = false;
        }
      }
      if (!ok || added > 2 || edges_ + added > target_edges_) continue;
      for (std::size_t i = 0; i < chosen_.size(); ++i) {
        if (graph_.adjacent(chosen_[i], v)) ++degrees_[i];
      }
      chosen_.push_back(v);
      degrees_.push_back(added);
      edges_ += added;
      if (extend(v + 1)) return true;
      edges_ -= added;
      degrees_.pop_back();
      chosen_.pop_back();
      for (std::size_t i = 0; i < chosen_.size(); ++i) {
        if (graph_.adjacent(chosen_[i], v)) --degrees_[i];
      }
    }
    return false;
  }

  bool accept() const {
    if (edges_ != target_edges_) return false;
    if (pattern_.kind == PatternKind::cycle &&
        std::any_of(degrees_.begin(), degrees_.end(),
                    [](std::size_t d) { return d != 2; })) {
      return false;
    }
    // Connected + (edges == order - 1) is a tree; with max degree 2 a path.
    // Connected + 2-regular is a single cycle.
    std::vector<bool> seen(chosen_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < chosen_.size(); ++j) {
        if (!seen[j] && graph_.adjacent(chosen_[i], chosen_[j])) {
          seen[j] = true;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    return reached == chosen_.size();
  }

  const Graph& graph_;
  Pattern pattern_;
  std::size_t target_edges_;
  std::vector<Vertex> chosen_;
  std::vector<std::size_t> degrees_;
  std::size_t edges_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced(const Graph& graph, Pattern pattern) {
  if (pattern.order > kMaxPatternOrder) {
    throw Error(ErrorKind::capacity, "pattern " + to_string(pattern) +
                                         " exceeds the order cap of " +
                                         std::to_string(kMaxPatternOrder));
  }
  if (pattern.order == 0 || (pattern.kind == PatternKind::cycle && pattern.order < 3)) {
    throw Error(ErrorKind::invalid_parameter,
                "pattern " + to_string(pattern) + " is not a valid graph");
  }
  if (pattern.order > graph.vertex_count()) return std::nullopt;
  return InducedSearch(graph, pattern).run();
}

std::optional<std::size_t> is_k_regular(const Graph& graph) {
  if (graph.vertex_count() == 0) return 0;
  const std::size_t d = degree(graph, 0);
  for (Vertex v = 1; v < graph.vertex_count(); ++v) {
    if (degree(graph, v) != d) return std::nullopt;
  }
  return d;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw Error(ErrorKind::format, "unknown export format \"" + std::string(name) +
                                     "\" (expected dot or json)");
}

std::string export_graph(const Graph& graph, ExportFormat format) {
  auto quoted = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::ostringstream out;
  const auto edges = graph.edges();
  if (format == ExportFormat::dot) {
    out << "graph G {\n";
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      out << "  " << quoted(graph.label(v)) << ";\n";
    }
    for (const auto& [u, v] : edges) {
      out << "  " << quoted(graph.label(u)) << " -- " << quoted(graph.label(v))
          << ";\n";
    }
    out << "}\n";
    return out.str();
  }
  out << "{\"vertices\": [";
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (v) out << ", ";
    out << "{\"id\": " << v << ", \"label\": " << quoted(graph.label(v)) << "}";
  }
  out << "], \"edges\": [";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out << ", ";
    out << "[" << edges[i].first << ", " << edges[i].second << "]";
  }
  out << "]}";
  return out.str();
}

}  // namespace ncg
