#include "ncg/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"
#include "ncg/error.hpp"

namespace ncg {

IntPolynomial IntPolynomial::constant(const BigInt& c) { return monomial(0, c); }

IntPolynomial IntPolynomial::monomial(Exponent e, const BigInt& c) {
  IntPolynomial p;
  p.add_term(e, c);
  return p;
}

IntPolynomial IntPolynomial::linear(const BigInt& c) {
  IntPolynomial p = monomial(1);
  p.add_term(0, c);
  return p;
}

BigInt IntPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

IntPolynomial::Exponent IntPolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

IntPolynomial::Exponent IntPolynomial::lowest_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

void IntPolynomial::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

IntPolynomial from_terms(const std::vector<std::pair<long long, BigInt>>& terms) {
  IntPolynomial p;
  for (const auto& [e, c] : terms) {
    if (e < 0) {
      throw Error(ErrorKind::invalid_parameter,
                  "negative exponent " + std::to_string(e));
    }
    p.add_term(static_cast<IntPolynomial::Exponent>(e), c);
  }
  return p;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial out = p;
  out += q;
  return out;
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial out;
  for (const auto& [e1, c1] : p.terms()) {
    for (const auto& [e2, c2] : q.terms()) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out = mul(out, p);
  return out;
}

BigInt evaluate(const IntPolynomial& p, const BigInt& v) {
  // Horner over the dense range, descending.
  BigInt acc = 0;
  if (p.is_zero()) return acc;
  auto it = p.terms().rbegin();
  for (auto e = static_cast<long long>(p.degree()); e >= 0; --e) {
    acc *= v;
    if (it != p.terms().rend() && it->first == static_cast<IntPolynomial::Exponent>(e)) {
      acc += it->second;
      ++it;
    }
  }
  return acc;
}

BigInt derivative_at_one(const IntPolynomial& p) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * e;
  return sum;
}

IntPolynomial reversed(const IntPolynomial& p, IntPolynomial::Exponent length) {
  if (!p.is_zero() && p.degree() > length) {
    throw Error(ErrorKind::invalid_parameter,
                "cannot reverse a degree-" + std::to_string(p.degree()) +
                    " polynomial at length " + std::to_string(length));
  }
  IntPolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_term(length - e, c);
  return out;
}

std::string to_canonical_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    if (e == 0) {
      out << c;
      continue;
    }
    if (c == -1) {
      out << "-";
    } else if (c != 1) {
      out << c << "*";
    }
    out << "x";
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

namespace {

[[noreturn]] void bad_polynomial(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::format,
              "cannot parse polynomial \"" + std::string(text) + "\": " + why);
}

}  // namespace

IntPolynomial parse_canonical(std::string_view text) {
  if (text == "0") return {};
  IntPolynomial p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) bad_polynomial(text, "empty term");

    BigInt coeff = 1;
    IntPolynomial::Exponent exp = 0;
    const std::size_t x = term.find('x');
    std::string_view head = x == std::string_view::npos ? term : term.substr(0, x);
    if (x != std::string_view::npos) {
      if (head == "-") {
        coeff = -1;
      } else if (!head.empty()) {
        if (head.back() != '*') bad_polynomial(text, "expected '*' before x");
        head.remove_suffix(1);
        if (head.empty()) bad_polynomial(text, "missing coefficient");
        coeff = BigInt(std::string(head));
      }
      std::string_view tail = term.substr(x + 1);
      if (tail.empty()) {
        exp = 1;
      } else {
        if (tail.front() != '^' || tail.size() < 2) bad_polynomial(text, "bad exponent");
        for (char ch : tail.substr(1)) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) {
            bad_polynomial(text, "bad exponent");
          }
        }
        exp = static_cast<IntPolynomial::Exponent>(std::stoul(std::string(tail.substr(1))));
      }
    } else {
      for (std::size_t i = 0; i < head.size(); ++i) {
        const char ch = head[i];
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && ch == '-'))) {
          bad_polynomial(text, "bad constant");
        }
      }
      coeff = BigInt(std::string(head));
    }
    p.add_term(exp, coeff);
    if (end == text.size()) break;
    pos = end + 3;
  }
  return p;
}

std::string to_json(const IntPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({e, c.str()});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

IntPolynomial polynomial_from_json(std::string_view text) {
  IntPolynomial p;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& term : doc.at("terms")) {
      const auto e = term.at(0).get<long long>();
      if (e < 0) {
        throw Error(ErrorKind::invalid_parameter, "negative exponent in JSON polynomial");
      }
      p.add_term(static_cast<IntPolynomial::Exponent>(e),
                 BigInt(term.at(1).get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::format, std::string("JSON polynomial: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::format, std::string("JSON polynomial: ") + e.what());
  }
  return p;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace ncg
