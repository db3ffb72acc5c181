#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncg/group.hpp"
#include "ncg/polynomial.hpp"

namespace ncg {

// Closed-form predictions for the non-commuting graph of U_{6n}, as pure
// functions of n. Every function throws invalid_parameter for n < 1.

enum class Validity { full, n_ge_2 };

std::string_view to_string(Validity v);

inline bool valid_at(Validity v, int n) { return v == Validity::full || n >= 2; }

// A polynomial-valued formula that does not hold for every n.
struct PolynomialPrediction {
  std::string name;
  int n = 0;
  IntPolynomial value;
  Validity validity = Validity::full;
};

// 4n on omega1..omega3, 3n on omega4.
std::int64_t cf_degree(OmegaClass c, int n);
// 9n^2
std::int64_t cf_edge_count(int n);
// Vertices of the graph: 5n.
std::int64_t cf_vertex_count(int n);
std::int64_t cf_alpha(int n);
std::int64_t cf_tau(int n);
std::int64_t cf_chi_omega(int n);
// {n, n, n, 2n}, ascending.
std::vector<std::int64_t> cf_partition_sizes(int n);
// Induced subgraph on omega1 u omega2 u omega3 is regular of degree 2n.
std::int64_t cf_omega123_degree(int n);
// Subgroup <a^2> as element indices.
std::vector<Element> cf_center(int n);

// 3 at n = 1, otherwise 5n - 4.
std::int64_t cf_metric_dimension(int n);
// Expansion of x^3 (x+2)(x+3) at n = 1, x^{5n-4} (x+n)^3 (x+2n) otherwise.
IntPolynomial cf_resolving_polynomial(int n);
// Counting of resolving sets by cardinality: (6, 5, 1) at n = 1 and
// (2n^4, 7n^3, 9n^2, 5n, 1) otherwise.
std::vector<BigInt> cf_resolving_sequence(int n);
// {0, -3, -2} at n = 1, {0, -n, -2n} otherwise; ascending.
std::vector<std::int64_t> cf_resolving_roots(int n);

// D(u, v) = 5n - 1 for every pair.
std::int64_t cf_detour_distance(int n);
// C(5n, 2) x^{5n-1}
IntPolynomial cf_detour_polynomial(int n);
// 5n (5n-1)^2 / 2
BigInt cf_detour_index(int n);

// ecc(u) = 2 for every vertex; fails at n = 1 where omega1..omega3 are
// singletons adjacent to everything.
std::int64_t cf_eccentricity(int n);
Validity cf_eccentricity_validity();
PolynomialPrediction cf_total_eccentricity_polynomial(int n);
PolynomialPrediction cf_eccentric_connectivity_polynomial(int n);

// 1 + sum_{k=1}^{n} (C(2n,k) + 3 C(n,k)) x^k + sum_{k=n+1}^{2n} C(2n,k) x^k
IntPolynomial cf_independence_polynomial(int n);
// x^{5n} + sum_{k=1}^{n} (C(2n,k) + 3 C(n,k)) x^{5n-k} + sum_{k=n+1}^{2n} C(2n,k) x^{5n-k}
IntPolynomial cf_vertex_cover_polynomial(int n);

// Centralizer of x listed explicitly per class:
//   omega1: <a>;  omega2: <a^2> {a^{2s+1} b};  omega3: <a^2> {a^{2s+1} b^2};
//   omega4: <a^2> {a^{2s} b, a^{2s} b^2}.
// Throws invalid_parameter if x is not in class c. Result sorted by index.
std::vector<Element> cf_centralizer(OmegaClass c, U6nElement x, int n);

}  // namespace ncg
