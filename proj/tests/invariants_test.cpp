#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "ncg/invariants.hpp"
#include "oracles.hpp"

namespace ncg {
namespace {

Graph gamma(int n) { return non_commuting_graph(u6n_group(n)); }

Vertex vx(const Graph& g, std::string_view label) {
  auto v = g.find(label);
  EXPECT_TRUE(v.has_value()) << label;
  return v.value_or(0);
}

IntPolynomial counts_poly(const std::vector<std::uint64_t>& counts) {
  IntPolynomial p;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    p.add_term(static_cast<IntPolynomial::Exponent>(k), counts[k]);
  }
  return p;
}

// Two disjoint edges.
Graph two_edges() {
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  return Graph({"0", "1", "2", "3"}, e);
}

// Random graphs for implementation-vs-oracle comparisons.
std::vector<Graph> random_graphs(std::size_t count, std::size_t max_n, unsigned seed,
                                 bool connected_only) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_n;
    const double p = 0.2 + 0.6 * (rng() % 100) / 100.0;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if ((rng() % 1000) / 1000.0 < p) edges.emplace_back(u, v);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    Graph g(labels, edges);
    if (connected_only && !distance_matrix(g).connected()) continue;
    out.push_back(std::move(g));
  }
  return out;
}

TEST(DistanceMatrix, Values) {
  const auto g2 = gamma(2);
  const auto d2 = distance_matrix(g2);
  EXPECT_EQ(d2.at(vx(g2, "a"), vx(g2, "a^3")), 2u);
  const auto g1 = gamma(1);
  EXPECT_EQ(distance_matrix(g1).at(vx(g1, "a"), vx(g1, "b")), 1u);
  for (Vertex v = 0; v < g2.vertex_count(); ++v) EXPECT_EQ(d2.at(v, v), 0u);
  EXPECT_EQ(distance_matrix(two_edges()).at(0, 2), DistanceMatrix::unreachable);
}

TEST(DistanceMatrix, MatchesFloydWarshall) {
  for (const auto& g : random_graphs(60, 12, 3, false)) {
    const auto d = distance_matrix(g);
    const auto ref = oracle::floyd_distances(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto expected = ref[u][v] < 0 ? DistanceMatrix::unreachable
                                            : static_cast<std::uint32_t>(ref[u][v]);
        ASSERT_EQ(d.at(u, v), expected);
        ASSERT_EQ(d.at(u, v), d.at(v, u));
      }
  }
}

TEST(Eccentricity, Values) {
  const auto g2 = gamma(2);
  for (Vertex v = 0; v < g2.vertex_count(); ++v) EXPECT_EQ(eccentricity(g2, v), 2u);
  const auto g1 = gamma(1);
  EXPECT_EQ(eccentricity(g1, vx(g1, "a")), 1u);
  EXPECT_EQ(eccentricity(g1, vx(g1, "b")), 2u);
  EXPECT_EQ(eccentricity(complete_graph(4), 2), 1u);
  try {
    eccentricity(two_edges(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::disconnected);
  }
}

TEST(EccentricityPolynomials, FrozenValues) {
  EXPECT_EQ(total_eccentricity_polynomial(gamma(2)), parse_canonical("10*x^2"));
  EXPECT_EQ(eccentric_connectivity_polynomial(gamma(2)), parse_canonical("72*x^2"));
  // n = 1: a, ab, ab^2 see everything (ecc 1, degree 4); b, b^2 have ecc 2
  // and degree 3. Cross-checked against Floyd-Warshall below.
  EXPECT_EQ(total_eccentricity_polynomial(gamma(1)), parse_canonical("3*x + 2*x^2"));
  EXPECT_EQ(eccentric_connectivity_polynomial(gamma(1)), parse_canonical("12*x + 6*x^2"));
  EXPECT_EQ(total_eccentricity_polynomial(complete_graph(3)), parse_canonical("3*x"));
  EXPECT_EQ(eccentric_connectivity_polynomial(complete_graph(3)), parse_canonical("6*x"));
  EXPECT_THROW(total_eccentricity_polynomial(two_edges()), Error);
  EXPECT_THROW(eccentric_connectivity_polynomial(two_edges()), Error);
}

TEST(EccentricityPolynomials, MatchOracleForU6n) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = gamma(n);
    const auto d = oracle::floyd_distances(g);
    IntPolynomial theta;
    IntPolynomial xi;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const int ecc = *std::max_element(d[u].begin(), d[u].end());
      theta.add_term(static_cast<IntPolynomial::Exponent>(ecc), 1);
      xi.add_term(static_cast<IntPolynomial::Exponent>(ecc), degree(g, u));
    }
    EXPECT_EQ(total_eccentricity_polynomial(g), theta);
    EXPECT_EQ(eccentric_connectivity_polynomial(g), xi);
  }
}

TEST(Detour, Distances) {
  const auto g1 = gamma(1);
  EXPECT_EQ(detour_distance(g1, vx(g1, "b"), vx(g1, "b^2")), 4u);
  const auto g2 = gamma(2);
  for (Vertex u = 0; u < g2.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g2.vertex_count(); ++v)
      EXPECT_EQ(detour_distance(g2, u, v), 9u);
  const auto p3 = path_graph(3);
  EXPECT_EQ(detour_distance(p3, 0, 2), 2u);
  EXPECT_EQ(detour_distance(p3, 1, 1), 0u);
}

TEST(Detour, MatchesExhaustiveDfs) {
  for (const auto& g : random_graphs(40, 9, 7, true)) {
    const auto ref = oracle::dfs_longest_paths(g);
    const auto d = detour_matrix(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        ASSERT_EQ(static_cast<int>(d[u][v]), ref[u][v]);
  }
}

TEST(Detour, PolynomialAndIndex) {
  EXPECT_EQ(detour_polynomial(gamma(1)), IntPolynomial::monomial(4, 10));
  EXPECT_EQ(detour_polynomial(gamma(2)), IntPolynomial::monomial(9, 45));
  EXPECT_EQ(detour_polynomial(complete_graph(2)), IntPolynomial::monomial(1));
  EXPECT_EQ(detour_index(gamma(1)), 40);
  EXPECT_EQ(detour_index(gamma(2)), 405);
  EXPECT_EQ(detour_index(complete_graph(2)), 1);
  for (const auto& g : random_graphs(20, 8, 13, true)) {
    const auto pairs = g.vertex_count() * (g.vertex_count() - 1) / 2;
    EXPECT_EQ(evaluate(detour_polynomial(g), 1), pairs);
  }
}

TEST(Detour, CapsAndConnectivity) {
  const auto g4 = gamma(4);  // 20 vertices
  try {
    detour_polynomial(g4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
  EXPECT_THROW(detour_distance(two_edges(), 0, 1), Error);
  Caps tight;
  tight.detour = 4;
  EXPECT_THROW(detour_index(gamma(1), tight), Error);
}

TEST(Independence, NumbersAndPolynomials) {
  EXPECT_EQ(independence_number(gamma(2)), 4u);
  EXPECT_EQ(independence_polynomial(gamma(2)), parse_canonical("1 + 10*x + 9*x^2 + 4*x^3 + x^4"));
  EXPECT_EQ(independence_polynomial(gamma(1)), parse_canonical("1 + 5*x + x^2"));
  EXPECT_EQ(independence_number(edgeless_graph(3)), 3u);
  EXPECT_EQ(independence_polynomial(edgeless_graph(3)), parse_canonical("1 + 3*x + 3*x^2 + x^3"));
  EXPECT_EQ(independence_polynomial(Graph{}), IntPolynomial::constant(1));
}

TEST(Independence, MatchesSubsetOracle) {
  for (const auto& g : random_graphs(60, 14, 21, false)) {
    const auto counts = oracle::independent_set_counts(g);
    EXPECT_EQ(independence_polynomial(g), counts_poly(counts));
    std::size_t alpha = 0;
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (counts[k]) alpha = k;
    EXPECT_EQ(independence_number(g), alpha);
    // The leading coefficient counts maximum independent sets.
    EXPECT_GE(independence_polynomial(g).coefficient(static_cast<unsigned>(alpha)), 1);
  }
}

TEST(VertexCover, NumbersAndPolynomials) {
  EXPECT_EQ(vertex_cover_number(gamma(2)), 6u);
  EXPECT_EQ(vertex_cover_polynomial(gamma(1)), parse_canonical("x^3 + 5*x^4 + x^5"));
  EXPECT_EQ(vertex_cover_polynomial(complete_graph(2)), parse_canonical("2*x + x^2"));
}

TEST(VertexCover, ReversalOfIndependenceAndSumIdentity) {
  auto graphs = random_graphs(40, 14, 31, false);
  for (int n = 1; n <= 4; ++n) graphs.push_back(gamma(n));
  for (const auto& g : graphs) {
    const auto v = static_cast<IntPolynomial::Exponent>(g.vertex_count());
    EXPECT_EQ(vertex_cover_polynomial(g), reversed(independence_polynomial(g), v));
    EXPECT_EQ(independence_number(g) + vertex_cover_number(g), g.vertex_count());
  }
}

TEST(VertexCover, Caps) {
  Caps tight;
  tight.independence = 9;
  EXPECT_THROW(independence_polynomial(gamma(2), tight), Error);
  EXPECT_THROW(vertex_cover_polynomial(gamma(2), tight), Error);
  EXPECT_NO_THROW(independence_number(gamma(10)));  // no cap on alpha
}

TEST(Clique, Values) {
  EXPECT_EQ(clique_number(gamma(1)), 4u);
  EXPECT_EQ(clique_number(gamma(3)), 4u);
  EXPECT_EQ(clique_number(complete_graph(5)), 5u);
  EXPECT_EQ(clique_number(Graph{}), 0u);
  EXPECT_EQ(clique_number(edgeless_graph(3)), 1u);
  for (const auto& g : random_graphs(60, 14, 41, false)) {
    EXPECT_EQ(clique_number(g), oracle::brute_clique(g));
  }
}

TEST(Chromatic, Values) {
  EXPECT_EQ(chromatic_number(gamma(2)), 4u);
  EXPECT_EQ(chromatic_number(cycle_graph(4)), 2u);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3u);
  EXPECT_EQ(chromatic_number(Graph{}), 0u);
  for (const auto& g : random_graphs(40, 8, 43, false)) {
    EXPECT_EQ(chromatic_number(g), oracle::brute_chromatic(g));
    EXPECT_LE(clique_number(g), chromatic_number(g));
  }
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(chromatic_number(gamma(n)), clique_number(gamma(n)));
  }
}

TEST(Chromatic, ColoringIsProper) {
  // Mycielski graph of C5 (Groetzsch): triangle-free, chromatic number 4.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 4) % 5);
    e.emplace_back(10, 5 + i);
  }
  std::vector<std::string> labels;
  for (int i = 0; i < 11; ++i) labels.push_back(std::to_string(i));
  const Graph grotzsch(labels, e);
  EXPECT_EQ(clique_number(grotzsch), 2u);
  EXPECT_EQ(chromatic_number(grotzsch), 4u);
  const auto coloring = optimal_coloring(grotzsch);
  for (const auto& [u, v] : grotzsch.edges()) EXPECT_NE(coloring[u], coloring[v]);
  Caps tight;
  tight.chromatic = 10;
  EXPECT_THROW(chromatic_number(grotzsch, tight), Error);
}

TEST(Resolving, IsResolving) {
  const auto g1 = gamma(1);
  const std::vector<Vertex> w{vx(g1, "a"), vx(g1, "ab"), vx(g1, "b")};
  EXPECT_TRUE(is_resolving(g1, w));
  const std::vector<Vertex> w2{vx(g1, "a"), vx(g1, "ab")};
  EXPECT_FALSE(is_resolving(g1, w2));
  // b and b^2 both sit at distance (1, 1) from {a, ab}.
  const auto d = distance_matrix(g1);
  EXPECT_EQ(d.at(vx(g1, "b"), vx(g1, "a")), d.at(vx(g1, "b^2"), vx(g1, "a")));
  EXPECT_EQ(d.at(vx(g1, "b"), vx(g1, "ab")), d.at(vx(g1, "b^2"), vx(g1, "ab")));
  for (const auto& g : {gamma(1), gamma(2), path_graph(4), cycle_graph(6)}) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    EXPECT_TRUE(is_resolving(g, all));
  }
  EXPECT_THROW(is_resolving(two_edges(), std::vector<Vertex>{0}), Error);
}

TEST(Resolving, MetricDimension) {
  EXPECT_EQ(metric_dimension(gamma(1)), 3u);
  EXPECT_EQ(metric_dimension(gamma(2)), 6u);
  EXPECT_EQ(metric_dimension(path_graph(4)), 1u);
  EXPECT_EQ(metric_dimension(complete_graph(4)), 3u);
  EXPECT_EQ(metric_dimension(edgeless_graph(1)), 0u);
  Caps tight;
  tight.metric_dimension = 9;
  EXPECT_THROW(metric_dimension(gamma(2), tight), Error);
}

TEST(Resolving, Polynomials) {
  const auto r1 = resolving_polynomial(gamma(1));
  EXPECT_EQ(r1.polynomial, parse_canonical("6*x^3 + 5*x^4 + x^5"));
  EXPECT_EQ(r1.sequence.first_cardinality, 3u);
  EXPECT_EQ(r1.sequence.counts, (std::vector<BigInt>{6, 5, 1}));
  const auto r2 = resolving_polynomial(gamma(2));
  EXPECT_EQ(to_canonical_string(r2.polynomial), "32*x^6 + 56*x^7 + 36*x^8 + 10*x^9 + x^10");
  EXPECT_EQ(resolving_polynomial(complete_graph(2)).polynomial, parse_canonical("2*x + x^2"));
  EXPECT_THROW(resolving_polynomial(gamma(4)), Error);
}

TEST(Resolving, EnumerationMatchesDefinitionOracle) {
  auto graphs = random_graphs(30, 10, 51, true);
  graphs.push_back(gamma(1));
  graphs.push_back(gamma(2));
  for (const auto& g : graphs) {
    const auto counts = oracle::resolving_set_counts(g);
    const auto r = resolving_polynomial(g);
    EXPECT_EQ(r.polynomial, counts_poly(counts));
    const std::size_t n = g.vertex_count();
    EXPECT_EQ(r.polynomial.coefficient(static_cast<unsigned>(n)), 1);
    if (n >= 2) EXPECT_EQ(r.polynomial.coefficient(static_cast<unsigned>(n - 1)), n);
    EXPECT_EQ(metric_dimension(g), r.sequence.first_cardinality);
  }
}

TEST(Resolving, TableAgreesWithIsResolvingAndIsMonotone) {
  for (const auto& g : {gamma(1), gamma(2), cycle_graph(7), path_graph(5)}) {
    const auto table = resolving_set_table(g);
    const std::size_t n = g.vertex_count();
    for (std::uint64_t s = 0; s < table.size(); ++s) {
      std::vector<Vertex> w;
      for (Vertex v = 0; v < n; ++v)
        if (s >> v & 1) w.push_back(v);
      ASSERT_EQ(table[s], is_resolving(g, w)) << "mask " << s;
      if (!table[s]) continue;
      for (Vertex v = 0; v < n; ++v) ASSERT_TRUE(table[s | (std::uint64_t{1} << v)]);
    }
  }
}

TEST(Resolving, IntegerRoots) {
  EXPECT_EQ(integer_roots(parse_canonical("6*x^3 + 5*x^4 + x^5")),
            (std::vector<BigInt>{-3, -2, 0}));
  EXPECT_EQ(integer_roots(parse_canonical("32*x^6 + 56*x^7 + 36*x^8 + 10*x^9 + x^10")),
            (std::vector<BigInt>{-4, -2, 0}));
  EXPECT_EQ(integer_roots(parse_canonical("1 + x^2")), std::vector<BigInt>{});
  EXPECT_THROW(integer_roots(IntPolynomial{}), Error);
}

TEST(Caps, ParseOverrides) {
  const auto c = Caps::parse("detour=15,resolving=16,chromatic=40,indep=24");
  EXPECT_EQ(c.detour, 15u);
  EXPECT_EQ(c.independence, 24u);
  const auto d = Caps::parse("metric=5");
  EXPECT_EQ(d.metric_dimension, 5u);
  EXPECT_EQ(d.detour, Caps{}.detour);
  EXPECT_EQ(Caps::parse(Caps{}.to_string()).to_string(), Caps{}.to_string());
  EXPECT_THROW(Caps::parse("speed=3"), Error);
  EXPECT_THROW(Caps::parse("detour"), Error);
  EXPECT_THROW(Caps::parse("detour=-1"), Error);
}

}  // namespace
}  // namespace ncg
