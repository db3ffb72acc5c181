#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncg {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with exact integer coefficients, stored sparsely.
// Zero coefficients are never stored; the zero polynomial has no terms.
class IntPolynomial {
 public:
  using Exponent = std::uint32_t;
  using Terms = std::map<Exponent, BigInt>;

  IntPolynomial() = default;

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(Exponent e, const BigInt& c = 1);
  // x + c
  static IntPolynomial linear(const BigInt& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(Exponent e) const;
  // Highest / lowest exponent with a nonzero coefficient; 0 for the zero
  // polynomial.
  Exponent degree() const;
  Exponent lowest_exponent() const;

  IntPolynomial& operator+=(const IntPolynomial& q);
  // Adds c x^e.
  void add_term(Exponent e, const BigInt& c);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  Terms terms_;
};

// Merges duplicate exponents and drops zero sums. Throws invalid_parameter on
// a negative exponent.
IntPolynomial from_terms(const std::vector<std::pair<long long, BigInt>>& terms);

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial pow(const IntPolynomial& p, unsigned k);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  return add(p, q);
}
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  return mul(p, q);
}

BigInt evaluate(const IntPolynomial& p, const BigInt& v);

// p'(1) = sum of exponent * coefficient.
BigInt derivative_at_one(const IntPolynomial& p);

// x^length * p(1/x). Throws invalid_parameter if length < degree(p).
IntPolynomial reversed(const IntPolynomial& p, IntPolynomial::Exponent length);

// Ascending exponents joined by " + ". Terms are "c" (e = 0), "c*x" (e = 1)
// and "c*x^e"; a coefficient of 1 or -1 is written as "x^e" / "-x^e".
std::string to_canonical_string(const IntPolynomial& p);

// Inverse of to_canonical_string.
IntPolynomial parse_canonical(std::string_view text);

// {"terms": [[exp, "coeff"], ...]} with exponents ascending.
std::string to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(std::string_view text);

// Exact C(n, k) by the multiplicative recurrence; 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace ncg
