#include "ncg/closed_forms.hpp"

#include <algorithm>

namespace ncg {

namespace {

void require_n(int n) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_parameter,
                "closed forms need n >= 1, got " + std::to_string(n));
  }
}

using Exp = IntPolynomial::Exponent;

}  // namespace

std::string_view to_string(Validity v) {
  return v == Validity::full ? "full" : "n_ge_2";
}

std::int64_t cf_degree(OmegaClass c, int n) {
  require_n(n);
  return c == OmegaClass::omega4 ? 3 * std::int64_t{n} : 4 * std::int64_t{n};
}

std::int64_t cf_edge_count(int n) {
  require_n(n);
  return 9 * std::int64_t{n} * n;
}

std::int64_t cf_vertex_count(int n) {
  require_n(n);
  return 5 * std::int64_t{n};
}

std::int64_t cf_alpha(int n) {
  require_n(n);
  return 2 * std::int64_t{n};
}

std::int64_t cf_tau(int n) {
  require_n(n);
  return 3 * std::int64_t{n};
}

std::int64_t cf_chi_omega(int n) {
  require_n(n);
  return 4;
}

std::vector<std::int64_t> cf_partition_sizes(int n) {
  require_n(n);
  return {n, n, n, 2 * std::int64_t{n}};
}

std::int64_t cf_omega123_degree(int n) {
  require_n(n);
  return 2 * std::int64_t{n};
}

std::vector<Element> cf_center(int n) {
  require_n(n);
  std::vector<Element> out;
  for (int r = 0; r < n; ++r) out.push_back(u6n_index({2 * r, 0}, n));
  return out;
}

std::int64_t cf_metric_dimension(int n) {
  require_n(n);
  return n == 1 ? 3 : 5 * std::int64_t{n} - 4;
}

IntPolynomial cf_resolving_polynomial(int n) {
  require_n(n);
  if (n == 1) {
    return IntPolynomial::monomial(3) * IntPolynomial::linear(2) *
           IntPolynomial::linear(3);
  }
  return IntPolynomial::monomial(static_cast<Exp>(5 * n - 4)) *
         pow(IntPolynomial::linear(n), 3) * IntPolynomial::linear(2 * n);
}

std::vector<BigInt> cf_resolving_sequence(int n) {
  require_n(n);
  if (n == 1) {
    // C(2,1) C(3,2) resolving sets of size 3, then n and 1.
    return {binomial(2, 1) * binomial(3, 2), 5, 1};
  }
  const BigInt m = n;
  return {2 * m * m * m * m, 7 * m * m * m, 9 * m * m, 5 * m, 1};
}

std::vector<std::int64_t> cf_resolving_roots(int n) {
  require_n(n);
  if (n == 1) return {-3, -2, 0};
  return {-2 * std::int64_t{n}, -std::int64_t{n}, 0};
}

std::int64_t cf_detour_distance(int n) {
  require_n(n);
  return 5 * std::int64_t{n} - 1;
}

IntPolynomial cf_detour_polynomial(int n) {
  require_n(n);
  const BigInt v = 5 * BigInt(n);
  return IntPolynomial::monomial(static_cast<Exp>(5 * n - 1), v * (v - 1) / 2);
}

BigInt cf_detour_index(int n) {
  require_n(n);
  const BigInt v = 5 * BigInt(n);
  return v * (v - 1) * (v - 1) / 2;
}

std::int64_t cf_eccentricity(int n) {
  require_n(n);
  return 2;
}

Validity cf_eccentricity_validity() { return Validity::n_ge_2; }

PolynomialPrediction cf_total_eccentricity_polynomial(int n) {
  require_n(n);
  return {"total_eccentricity_polynomial", n,
          IntPolynomial::monomial(2, 5 * BigInt(n)), Validity::n_ge_2};
}

PolynomialPrediction cf_eccentric_connectivity_polynomial(int n) {
  require_n(n);
  return {"eccentric_connectivity_polynomial", n,
          IntPolynomial::monomial(2, 18 * BigInt(n) * n), Validity::n_ge_2};
}

IntPolynomial cf_independence_polynomial(int n) {
  require_n(n);
  const auto un = static_cast<unsigned>(n);
  IntPolynomial p = IntPolynomial::constant(1);
  for (unsigned k = 1; k <= un; ++k) {
    p.add_term(k, binomial(2 * un, k) + 3 * binomial(un, k));
  }
  for (unsigned k = un + 1; k <= 2 * un; ++k) p.add_term(k, binomial(2 * un, k));
  return p;
}

IntPolynomial cf_vertex_cover_polynomial(int n) {
  require_n(n);
  const auto un = static_cast<unsigned>(n);
  const unsigned top = 5 * un;
  IntPolynomial p = IntPolynomial::monomial(top);
  for (unsigned k = 1; k <= un; ++k) {
    p.add_term(top - k, binomial(2 * un, k) + 3 * binomial(un, k));
  }
  for (unsigned k = un + 1; k <= 2 * un; ++k) {
    p.add_term(top - k, binomial(2 * un, k));
  }
  return p;
}

std::vector<Element> cf_centralizer(OmegaClass c, U6nElement x, int n) {
  require_n(n);
  u6n_index(x, n);  // rejects a non-normal form
  const bool central = x.a_exp % 2 == 0 && x.b_exp == 0;
  if (central || omega_class_of(x) != c) {
    throw Error(ErrorKind::invalid_parameter,
                u6n_label(x) + " is not in " + std::string(to_string(c)));
  }
  std::vector<Element> out;
  for (int r = 0; r < n; ++r) out.push_back(u6n_index({2 * r, 0}, n));
  for (int s = 0; s < n; ++s) {
    switch (c) {
      case OmegaClass::omega1:
        out.push_back(u6n_index({2 * s + 1, 0}, n));
        break;
      case OmegaClass::omega2:
        out.push_back(u6n_index({2 * s + 1, 1}, n));
        break;
      case OmegaClass::omega3:
        out.push_back(u6n_index({2 * s + 1, 2}, n));
        break;
      case OmegaClass::omega4:
        out.push_back(u6n_index({2 * s, 1}, n));
        out.push_back(u6n_index({2 * s, 2}, n));
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncg
