#include "ncg/invariants.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>

namespace ncg {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaskBits = 64;

Mask bit(std::size_t i) { return Mask{1} << i; }

void require_cap(const Graph& graph, std::size_t cap, std::string_view what) {
  if (graph.vertex_count() > cap) {
    throw Error(ErrorKind::capacity,
                std::string(what) + " is capped at " + std::to_string(cap) +
                    " vertices; graph has " + std::to_string(graph.vertex_count()));
  }
  if (graph.vertex_count() >= kMaskBits) {
    throw Error(ErrorKind::capacity, std::string(what) +
                                         " uses 64-bit vertex masks; graph has " +
                                         std::to_string(graph.vertex_count()) +
                                         " vertices");
  }
}

std::vector<Mask> adjacency_masks(const Graph& graph) {
  std::vector<Mask> adj(graph.vertex_count(), 0);
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    const auto& row = graph.row(u);
    for (auto v = row.find_first(); v != VertexRow::npos; v = row.find_next(v)) {
      adj[u] |= bit(v);
    }
  }
  return adj;
}

void require_connected(const DistanceMatrix& d, std::string_view what) {
  if (!d.connected()) {
    throw Error(ErrorKind::disconnected, std::string(what) + " needs a connected graph");
  }
}

}  // namespace

Caps Caps::parse(std::string_view text) { return parse(text, Caps{}); }

Caps Caps::parse(std::string_view text, Caps base) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::format, "cap override \"" + std::string(item) +
                                         "\" is not key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw Error(ErrorKind::format, "cap value \"" + std::string(value) +
                                         "\" is not a non-negative integer");
    }
    if (key == "detour") {
      base.detour = v;
    } else if (key == "resolving") {
      base.resolving = v;
    } else if (key == "metric") {
      base.metric_dimension = v;
    } else if (key == "chromatic") {
      base.chromatic = v;
    } else if (key == "indep") {
      base.independence = v;
    } else {
      throw Error(ErrorKind::format, "unknown cap \"" + std::string(key) + "\"");
    }
    pos = end + 1;
  }
  return base;
}

std::string Caps::to_string() const {
  std::ostringstream out;
  out << "detour=" << detour << ",resolving=" << resolving
      << ",metric=" << metric_dimension << ",chromatic=" << chromatic
      << ",indep=" << independence;
  return out.str();
}

bool DistanceMatrix::connected() const {
  return std::find(d_.begin(), d_.end(), unreachable) == d_.end();
}

DistanceMatrix distance_matrix(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  DistanceMatrix d(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    d.at(s, s) = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const auto& row = graph.row(u);
      for (auto v = row.find_first(); v != VertexRow::npos; v = row.find_next(v)) {
        if (d.at(s, v) == DistanceMatrix::unreachable) {
          d.at(s, v) = d.at(s, u) + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return d;
}

std::vector<std::uint32_t> eccentricities(const Graph& graph) {
  const auto d = distance_matrix(graph);
  require_connected(d, "eccentricity");
  std::vector<std::uint32_t> ecc(graph.vertex_count(), 0);
  for (Vertex u = 0; u < d.size(); ++u) {
    for (Vertex v = 0; v < d.size(); ++v) ecc[u] = std::max(ecc[u], d.at(u, v));
  }
  return ecc;
}

std::uint32_t eccentricity(const Graph& graph, Vertex v) {
  graph.check(v);
  return eccentricities(graph)[v];
}

namespace {

// Longest simple path from `source` to every vertex. reach[S] holds the
// endpoints of simple paths that start at source and visit exactly S.
std::vector<std::uint32_t> longest_paths_from(const std::vector<Mask>& adj,
                                              Vertex source) {
  const std::size_t n = adj.size();
  std::vector<Mask> reach(std::size_t{1} << n, 0);
  reach[bit(source)] = bit(source);
  std::vector<std::uint32_t> best(n, 0);
  for (Mask s = bit(source); s < reach.size(); ++s) {
    Mask ends = reach[s];
    if (ends == 0) continue;
    const auto length = static_cast<std::uint32_t>(std::popcount(s) - 1);
    for (Mask e = ends; e; e &= e - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(e));
      best[w] = std::max(best[w], length);
      for (Mask next = adj[w] & ~s; next; next &= next - 1) {
        const Mask x = next & -next;
        reach[s | x] |= x;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> detour_matrix(const Graph& graph,
                                                      const Caps& caps) {
  require_cap(graph, caps.detour, "detour distance");
  require_connected(distance_matrix(graph), "detour distance");
  const auto adj = adjacency_masks(graph);
  std::vector<std::vector<std::uint32_t>> out;
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    out.push_back(longest_paths_from(adj, u));
  }
  return out;
}

std::uint32_t detour_distance(const Graph& graph, Vertex u, Vertex v,
                              const Caps& caps) {
  graph.check(u);
  graph.check(v);
  require_cap(graph, caps.detour, "detour distance");
  require_connected(distance_matrix(graph), "detour distance");
  return longest_paths_from(adjacency_masks(graph), u)[v];
}

IntPolynomial detour_polynomial(const Graph& graph, const Caps& caps) {
  const auto d = detour_matrix(graph, caps);
  IntPolynomial p;
  for (Vertex u = 0; u < d.size(); ++u) {
    for (Vertex v = u + 1; v < d.size(); ++v) p.add_term(d[u][v], 1);
  }
  return p;
}

BigInt detour_index(const Graph& graph, const Caps& caps) {
  return derivative_at_one(detour_polynomial(graph, caps));
}

IntPolynomial total_eccentricity_polynomial(const Graph& graph) {
  IntPolynomial p;
  for (auto e : eccentricities(graph)) p.add_term(e, 1);
  return p;
}

IntPolynomial eccentric_connectivity_polynomial(const Graph& graph) {
  const auto ecc = eccentricities(graph);
  IntPolynomial p;
  for (Vertex v = 0; v < ecc.size(); ++v) p.add_term(ecc[v], degree(graph, v));
  return p;
}

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& graph)
      : graph_(graph), n_(graph.vertex_count()) {}

  std::vector<Vertex> run() {
    VertexRow all(n_);
    all.set();
    expand(all);
    return best_;
  }

 private:
  // Greedy partition of the candidates into cliques; an independent set picks
  // at most one vertex from each.
  std::size_t clique_cover_bound(VertexRow rest) const {
    std::size_t count = 0;
    while (rest.any()) {
      const auto u = rest.find_first();
      VertexRow candidates = rest & graph_.row(u);
      rest.reset(u);
      while (candidates.any()) {
        const auto w = candidates.find_first();
        rest.reset(w);
        candidates &= graph_.row(w);
      }
      ++count;
    }
    return count;
  }

  void expand(VertexRow candidates) {
    if (candidates.none()) {
      if (current_.size() > best_.size() || best_.empty()) best_ = current_;
      return;
    }
    if (current_.size() + clique_cover_bound(candidates) <= best_.size()) return;
    const auto v = candidates.find_first();
    current_.push_back(v);
    VertexRow with = candidates & ~graph_.row(v);
    with.reset(v);
    expand(with);
    current_.pop_back();
    candidates.reset(v);
    expand(candidates);
  }

  const Graph& graph_;
  std::size_t n_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> maximum_independent_set(const Graph& graph) {
  auto set = IndependentSetSearch(graph).run();
  std::sort(set.begin(), set.end());
  return set;
}

std::size_t independence_number(const Graph& graph) {
  return maximum_independent_set(graph).size();
}

namespace {

void count_independent(const std::vector<Mask>& adj, Mask candidates, std::size_t size,
                       std::vector<std::uint64_t>& counts) {
  if (candidates == 0) {
    ++counts[size];
    return;
  }
  const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
  const Mask rest = candidates & ~bit(v);
  count_independent(adj, rest, size, counts);
  count_independent(adj, rest & ~adj[v], size + 1, counts);
}

IntPolynomial from_counts(const std::vector<std::uint64_t>& counts) {
  IntPolynomial p;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    p.add_term(static_cast<IntPolynomial::Exponent>(k), BigInt(counts[k]));
  }
  return p;
}

}  // namespace

IntPolynomial independence_polynomial(const Graph& graph, const Caps& caps) {
  require_cap(graph, caps.independence, "independence polynomial");
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint64_t> counts(n + 1, 0);
  const Mask all = n == 0 ? 0 : (bit(n) - 1);
  count_independent(adjacency_masks(graph), all, 0, counts);
  return from_counts(counts);
}

std::size_t vertex_cover_number(const Graph& graph) {
  const auto independent = maximum_independent_set(graph);
  VertexRow in_set(graph.vertex_count());
  for (Vertex v : independent) in_set.set(v);
  for (const auto& [u, v] : graph.edges()) {
    if (in_set.test(u) && in_set.test(v)) {
      throw Error(ErrorKind::validation,
                  "complement of the maximum independent set misses edge (" +
                      std::to_string(u) + ", " + std::to_string(v) + ")");
    }
  }
  return graph.vertex_count() - independent.size();
}

IntPolynomial vertex_cover_polynomial(const Graph& graph, const Caps& caps) {
  require_cap(graph, caps.independence, "vertex-cover polynomial");
  const std::size_t n = graph.vertex_count();
  const auto adj = adjacency_masks(graph);
  std::vector<std::uint64_t> counts(n + 1, 0);
  const Mask limit = bit(n);
  for (Mask s = 0; s < limit; ++s) {
    bool covers = true;
    // Every vertex left out must have all of its neighbours inside s.
    for (Mask out = ~s & (limit - 1); out && covers; out &= out - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(out));
      covers = (adj[v] & ~s) == 0;
    }
    if (covers) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  return from_counts(counts);
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& graph) : graph_(graph) {}

  std::vector<Vertex> run() {
    VertexRow p(graph_.vertex_count());
    p.set();
    VertexRow x(graph_.vertex_count());
    expand(p, x);
    return best_;
  }

 private:
  void expand(VertexRow p, VertexRow x) {
    if (p.none()) {
      if (x.none() && current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + p.count() <= best_.size()) return;
    // Pivot: the vertex of P u X with most neighbours in P.
    Vertex pivot = VertexRow::npos;
    std::size_t pivot_hits = 0;
    const VertexRow px = p | x;
    for (auto u = px.find_first(); u != VertexRow::npos; u = px.find_next(u)) {
      const std::size_t hits = (p & graph_.row(u)).count();
      if (pivot == VertexRow::npos || hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
      }
    }
    const VertexRow branch = p & ~graph_.row(pivot);
    for (auto v = branch.find_first(); v != VertexRow::npos; v = branch.find_next(v)) {
      current_.push_back(v);
      expand(p & graph_.row(v), x & graph_.row(v));
      current_.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const Graph& graph_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& graph) {
  auto clique = CliqueSearch(graph).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::size_t clique_number(const Graph& graph) { return maximum_clique(graph).size(); }

namespace {

constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

// DSATUR: repeatedly colour the vertex seeing the most distinct colours.
std::vector<std::size_t> dsatur_coloring(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> color(n, kUncolored);
  std::vector<Mask> seen(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = kUncolored;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != kUncolored) continue;
      if (pick == kUncolored || std::popcount(seen[v]) > std::popcount(seen[pick]) ||
          (std::popcount(seen[v]) == std::popcount(seen[pick]) &&
           std::popcount(adj[v]) > std::popcount(adj[pick]))) {
        pick = v;
      }
    }
    const auto c = static_cast<std::size_t>(std::countr_zero(~seen[pick]));
    color[pick] = c;
    for (Mask m = adj[pick]; m; m &= m - 1) {
      seen[static_cast<std::size_t>(std::countr_zero(m))] |= bit(c);
    }
  }
  return color;
}

class ColoringSearch {
 public:
  ColoringSearch(const std::vector<Mask>& adj, std::size_t colors)
      : adj_(adj), colors_(colors), color_(adj.size(), kUncolored),
        seen_count_(adj.size(), std::vector<std::uint32_t>(colors, 0)),
        saturation_(adj.size(), 0) {}

  std::optional<std::vector<std::size_t>> run() {
    if (solve(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  bool solve(std::size_t colored, std::size_t used) {
    const std::size_t n = adj_.size();
    if (colored == n) return true;
    std::size_t pick = kUncolored;
    for (std::size_t v = 0; v < n; ++v) {
      if (color_[v] != kUncolored) continue;
      if (pick == kUncolored || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] &&
           std::popcount(adj_[v]) > std::popcount(adj_[pick]))) {
        pick = v;
      }
    }
    if (saturation_[pick] >= colors_) return false;
    // Colours beyond `used` are interchangeable; only try the first new one.
    const std::size_t limit = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (seen_count_[pick][c] != 0) continue;
      assign(pick, c);
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      unassign(pick, c);
    }
    return false;
  }

  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    for (Mask m = adj_[v]; m; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      if (seen_count_[u][c]++ == 0) ++saturation_[u];
    }
  }

  void unassign(std::size_t v, std::size_t c) {
    color_[v] = kUncolored;
    for (Mask m = adj_[v]; m; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      if (--seen_count_[u][c] == 0) --saturation_[u];
    }
  }

  const std::vector<Mask>& adj_;
  std::size_t colors_;
  std::vector<std::size_t> color_;
  std::vector<std::vector<std::uint32_t>> seen_count_;
  std::vector<std::size_t> saturation_;
};

}  // namespace

std::vector<std::size_t> optimal_coloring(const Graph& graph, const Caps& caps) {
  require_cap(graph, caps.chromatic, "chromatic number");
  if (graph.vertex_count() == 0) return {};
  const auto adj = adjacency_masks(graph);
  auto best = dsatur_coloring(adj);
  const std::size_t upper = *std::max_element(best.begin(), best.end()) + 1;
  const std::size_t lower = clique_number(graph);
  for (std::size_t k = lower; k < upper; ++k) {
    if (auto coloring = ColoringSearch(adj, k).run()) return *coloring;
  }
  return best;
}

std::size_t chromatic_number(const Graph& graph, const Caps& caps) {
  const auto coloring = optimal_coloring(graph, caps);
  if (coloring.empty()) return 0;
  return *std::max_element(coloring.begin(), coloring.end()) + 1;
}

bool is_resolving(const Graph& graph, std::span<const Vertex> resolving_set) {
  for (Vertex w : resolving_set) graph.check(w);
  const auto d = distance_matrix(graph);
  require_connected(d, "resolving set");
  std::vector<std::vector<std::uint32_t>> reps;
  reps.reserve(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::vector<std::uint32_t> r;
    r.reserve(resolving_set.size());
    for (Vertex w : resolving_set) r.push_back(d.at(v, w));
    reps.push_back(std::move(r));
  }
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

namespace {

// For each unordered pair {u, v}, the vertices w with d(u,w) != d(v,w). A set
// W resolves the graph iff it meets every such mask.
std::vector<Mask> distinguishers(const Graph& graph) {
  const auto d = distance_matrix(graph);
  require_connected(d, "resolving set");
  const std::size_t n = graph.vertex_count();
  std::vector<Mask> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      Mask m = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (d.at(u, w) != d.at(v, w)) m |= bit(w);
      }
      out.push_back(m);
    }
  }
  // Hardest pairs first makes rejection faster.
  std::sort(out.begin(), out.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

bool resolves(const std::vector<Mask>& pairs, Mask w) {
  return std::all_of(pairs.begin(), pairs.end(), [w](Mask m) { return (m & w) != 0; });
}

}  // namespace

std::size_t metric_dimension(const Graph& graph, const Caps& caps) {
  require_cap(graph, caps.metric_dimension, "metric dimension");
  const std::size_t n = graph.vertex_count();
  const auto pairs = distinguishers(graph);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (pairs.empty()) return 0;
      continue;
    }
    // Gosper's hack walks the k-subsets in colexicographic order.
    for (Mask s = bit(k) - 1; s < bit(n);) {
      if (resolves(pairs, s)) return k;
      const Mask c = s & -s;
      const Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;
}

std::vector<bool> resolving_set_table(const Graph& graph, const Caps& caps) {
  require_cap(graph, caps.resolving, "resolving polynomial");
  const auto pairs = distinguishers(graph);
  const Mask limit = bit(graph.vertex_count());
  std::vector<bool> table(limit);
  for (Mask s = 0; s < limit; ++s) table[s] = resolves(pairs, s);
  return table;
}

ResolvingPolynomial resolving_polynomial(const Graph& graph, const Caps& caps) {
  const auto table = resolving_set_table(graph, caps);
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (Mask s = 0; s < table.size(); ++s) {
    if (table[s]) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  ResolvingPolynomial out;
  out.polynomial = from_counts(counts);
  out.sequence.first_cardinality = out.polynomial.lowest_exponent();
  for (std::size_t k = out.sequence.first_cardinality; k <= n; ++k) {
    out.sequence.counts.emplace_back(counts[k]);
  }
  return out;
}

std::vector<BigInt> integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) {
    throw Error(ErrorKind::invalid_parameter, "the zero polynomial has every root");
  }
  std::vector<BigInt> roots;
  if (p.lowest_exponent() > 0) roots.emplace_back(0);
  BigInt low = abs(p.terms().begin()->second);
  std::vector<BigInt> divisors;
  for (BigInt d = 1; d * d <= low; ++d) {
    if (low % d == 0) {
      divisors.push_back(d);
      if (d * d != low) divisors.push_back(low / d);
    }
  }
  for (const auto& d : divisors) {
    for (const BigInt& candidate : {BigInt(d), BigInt(-d)}) {
      if (evaluate(p, candidate) == 0) roots.push_back(candidate);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ncg
