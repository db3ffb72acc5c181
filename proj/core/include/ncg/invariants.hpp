#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ncg/graph.hpp"
#include "ncg/polynomial.hpp"

namespace ncg {

// Vertex-count limits for the exponential brute-force routines. Exceeding a
// cap raises ErrorKind::capacity; nothing is ever approximated.
struct Caps {
  std::size_t detour = 15;
  std::size_t resolving = 16;
  std::size_t metric_dimension = 20;
  std::size_t chromatic = 40;
  std::size_t independence = 24;

  // Comma-separated key=value overrides, keys detour, resolving, metric,
  // chromatic, indep. Unknown keys throw ErrorKind::format.
  static Caps parse(std::string_view text);
  static Caps parse(std::string_view text, Caps base);
  std::string to_string() const;
};

class DistanceMatrix {
 public:
  static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, unreachable) {}

  std::size_t size() const { return n_; }
  std::uint32_t at(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }
  bool connected() const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

// All-pairs hop distances by breadth-first search from every vertex.
DistanceMatrix distance_matrix(const Graph& graph);

// Throws ErrorKind::disconnected for disconnected graphs.
std::uint32_t eccentricity(const Graph& graph, Vertex v);
std::vector<std::uint32_t> eccentricities(const Graph& graph);

// Longest simple u-v path length, by dynamic programming over
// (visited set, endpoint) states. Requires a connected graph within caps.detour.
std::uint32_t detour_distance(const Graph& graph, Vertex u, Vertex v,
                              const Caps& caps = {});
// Full matrix of detour distances (one DP per source vertex).
std::vector<std::vector<std::uint32_t>> detour_matrix(const Graph& graph,
                                                      const Caps& caps = {});
// Sum over unordered distinct pairs of x^{D(u,v)}.
IntPolynomial detour_polynomial(const Graph& graph, const Caps& caps = {});
BigInt detour_index(const Graph& graph, const Caps& caps = {});

IntPolynomial total_eccentricity_polynomial(const Graph& graph);
IntPolynomial eccentric_connectivity_polynomial(const Graph& graph);

// Branch and bound with a greedy clique-cover bound; no cap.
std::vector<Vertex> maximum_independent_set(const Graph& graph);
std::size_t independence_number(const Graph& graph);
// s_k = number of independent sets of size k (s_0 = 1). Counted by
// include/exclude branching.
IntPolynomial independence_polynomial(const Graph& graph, const Caps& caps = {});

// n - alpha, after checking that the complement of a maximum independent set
// covers every edge.
std::size_t vertex_cover_number(const Graph& graph);
// c_k = number of vertex covers of size k, by direct test of all 2^V subsets.
IntPolynomial vertex_cover_polynomial(const Graph& graph, const Caps& caps = {});

// Bron-Kerbosch with Tomita pivoting.
std::vector<Vertex> maximum_clique(const Graph& graph);
std::size_t clique_number(const Graph& graph);

// DSATUR upper bound, clique lower bound, exact backtracking in between.
std::size_t chromatic_number(const Graph& graph, const Caps& caps = {});
// Proper coloring with chromatic_number colors; colors are 0-based.
std::vector<std::size_t> optimal_coloring(const Graph& graph, const Caps& caps = {});

// True iff the distance vectors r(v|W) are pairwise distinct.
bool is_resolving(const Graph& graph, std::span<const Vertex> resolving_set);

// Smallest resolving-set size, enumerating subsets by increasing size.
std::size_t metric_dimension(const Graph& graph, const Caps& caps = {});

// table[mask] is true iff the vertex subset encoded by mask resolves the
// graph. Requires V <= caps.resolving.
std::vector<bool> resolving_set_table(const Graph& graph, const Caps& caps = {});

struct ResolvingSequence {
  std::size_t first_cardinality = 0;  // beta(graph)
  std::vector<BigInt> counts;         // r_beta, ..., r_V
};

struct ResolvingPolynomial {
  IntPolynomial polynomial;
  ResolvingSequence sequence;
};

ResolvingPolynomial resolving_polynomial(const Graph& graph, const Caps& caps = {});

// Distinct integer roots, by trial of divisors of the lowest nonzero
// coefficient (0 is a root iff the constant term vanishes).
std::vector<BigInt> integer_roots(const IntPolynomial& p);

}  // namespace ncg
