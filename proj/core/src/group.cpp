#include "ncg/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ncg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid parameter";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::unsupported_group: return "unsupported group";
    case ErrorKind::out_of_range: return "index out of range";
    case ErrorKind::empty_graph: return "empty graph";
    case ErrorKind::disconnected: return "disconnected graph";
    case ErrorKind::capacity: return "capacity exceeded";
    case ErrorKind::format: return "format error";
  }
  return "unknown error";
}

namespace {

void require_parameter(int n) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_parameter,
                "U_{6n} needs n >= 1, got " + std::to_string(n));
  }
}

int mod(int v, int m) { return ((v % m) + m) % m; }

}  // namespace

Element u6n_index(U6nElement e, int n) {
  require_parameter(n);
  if (e.a_exp < 0 || e.a_exp >= 2 * n || e.b_exp < 0 || e.b_exp >= 3) {
    throw Error(ErrorKind::out_of_range, "a^" + std::to_string(e.a_exp) +
                                             " b^" + std::to_string(e.b_exp) +
                                             " is not a normal form");
  }
  return static_cast<Element>(3 * e.a_exp + e.b_exp);
}

U6nElement u6n_normal_form(Element index, int n) {
  require_parameter(n);
  if (index >= static_cast<Element>(6 * n)) {
    throw Error(ErrorKind::out_of_range,
                "element index " + std::to_string(index) + " >= 6n");
  }
  return {static_cast<int>(index / 3), static_cast<int>(index % 3)};
}

std::string u6n_label(U6nElement e) {
  if (e.a_exp == 0 && e.b_exp == 0) return "1";
  std::string out;
  if (e.a_exp == 1) out += "a";
  if (e.a_exp > 1) out += "a^" + std::to_string(e.a_exp);
  if (e.b_exp == 1) out += "b";
  if (e.b_exp == 2) out += "b^2";
  return out;
}

const std::string& FiniteGroup::label(Element x) const {
  check(x);
  return labels_[x];
}

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

void FiniteGroup::check(Element x) const {
  if (x >= order()) {
    throw Error(ErrorKind::out_of_range,
                "element " + std::to_string(x) + " out of range for group of order " +
                    std::to_string(order()));
  }
}

Element FiniteGroup::multiply(Element x, Element y) const {
  check(x);
  check(y);
  return table_[x * order() + y];
}

Element FiniteGroup::inverse(Element x) const {
  check(x);
  return inverse_[x];
}

FiniteGroup u6n_group(int n) {
  require_parameter(n);
  const int two_n = 2 * n;
  const std::size_t order = static_cast<std::size_t>(6 * n);

  FiniteGroup g;
  g.parameter_n_ = n;
  g.labels_.reserve(order);
  for (Element x = 0; x < order; ++x) {
    g.labels_.push_back(u6n_label(u6n_normal_form(x, n)));
  }
  g.table_.resize(order * order);
  for (Element x = 0; x < order; ++x) {
    const auto [i, k] = u6n_normal_form(x, n);
    for (Element y = 0; y < order; ++y) {
      const auto [j, l] = u6n_normal_form(y, n);
      // b^k a^j = a^j b^{(-1)^j k}
      const int b = mod((j % 2 == 0 ? k : -k) + l, 3);
      g.table_[x * order + y] = u6n_index({mod(i + j, two_n), b}, n);
    }
  }
  g.identity_ = 0;
  g.inverse_.resize(order);
  for (Element x = 0; x < order; ++x) {
    for (Element y = 0; y < order; ++y) {
      if (g.table_[x * order + y] == 0) {
        g.inverse_[x] = y;
        break;
      }
    }
  }
  return g;
}

FiniteGroup group_from_table(std::vector<std::string> labels,
                             std::vector<std::vector<Element>> table) {
  const std::size_t order = labels.size();
  if (order == 0) {
    throw Error(ErrorKind::validation, "a group needs at least one element");
  }
  if (table.size() != order) {
    throw Error(ErrorKind::validation,
                "table has " + std::to_string(table.size()) + " rows but " +
                    std::to_string(order) + " labels");
  }
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorKind::validation, "duplicate label \"" + *dup + "\"");
    }
  }

  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    if (table[r].size() != order) {
      throw Error(ErrorKind::validation,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(table[r].size()) + " entries, expected " +
                      std::to_string(order));
    }
    for (std::size_t c = 0; c < order; ++c) {
      if (table[r][c] >= order) {
        throw Error(ErrorKind::validation,
                    "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                        ") = " + std::to_string(table[r][c]) +
                        " is not an element index");
      }
      g.table_.push_back(table[r][c]);
    }
  }
  auto at = [&](Element x, Element y) { return g.table_[x * order + y]; };

  std::optional<Element> identity;
  for (Element e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < order && ok; ++x) {
      ok = at(e, x) == x && at(x, e) == x;
    }
    if (ok) identity = e;
  }
  if (!identity) {
    throw Error(ErrorKind::validation,
                "no element acts as a two-sided identity");
  }
  g.identity_ = *identity;

  g.inverse_.assign(order, order);
  for (Element x = 0; x < order; ++x) {
    for (Element y = 0; y < order; ++y) {
      if (at(x, y) == g.identity_ && at(y, x) == g.identity_) {
        g.inverse_[x] = y;
        break;
      }
    }
    if (g.inverse_[x] == order) {
      throw Error(ErrorKind::validation, "element " + std::to_string(x) + " (\"" +
                                             g.labels_[x] +
                                             "\") has no two-sided inverse");
    }
  }

  auto check_triple = [&](Element x, Element y, Element z) {
    if (at(at(x, y), z) != at(x, at(y, z))) {
      std::ostringstream msg;
      msg << "associativity fails for triple (" << x << ", " << y << ", " << z
          << ") = (" << g.labels_[x] << ", " << g.labels_[y] << ", "
          << g.labels_[z] << ")";
      throw Error(ErrorKind::validation, msg.str());
    }
  };
  if (order <= kExhaustiveAssociativityLimit) {
    for (Element x = 0; x < order; ++x)
      for (Element y = 0; y < order; ++y)
        for (Element z = 0; z < order; ++z) check_triple(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, order - 1);
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      check_triple(pick(rng), pick(rng), pick(rng));
    }
  }
  return g;
}

std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) {
      central = g.commute(x, y);
    }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<Element> centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.commute(x, y)) out.push_back(y);
  }
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = x + 1; y < g.order(); ++y) {
      if (!g.commute(x, y)) return false;
    }
  }
  return true;
}

std::string_view to_string(OmegaClass c) {
  switch (c) {
    case OmegaClass::omega1: return "omega1";
    case OmegaClass::omega2: return "omega2";
    case OmegaClass::omega3: return "omega3";
    case OmegaClass::omega4: return "omega4";
  }
  return "omega?";
}

const std::vector<Element>& OmegaPartition::operator[](OmegaClass c) const {
  switch (c) {
    case OmegaClass::omega1: return omega1;
    case OmegaClass::omega2: return omega2;
    case OmegaClass::omega3: return omega3;
    case OmegaClass::omega4: return omega4;
  }
  return omega1;
}

OmegaClass omega_class_of(U6nElement e) {
  if (e.a_exp % 2 == 1) {
    return e.b_exp == 0   ? OmegaClass::omega1
           : e.b_exp == 1 ? OmegaClass::omega2
                          : OmegaClass::omega3;
  }
  if (e.b_exp == 0) {
    throw Error(ErrorKind::invalid_parameter,
                u6n_label(e) + " is central and belongs to no omega class");
  }
  return OmegaClass::omega4;
}

OmegaPartition omega_partition(const FiniteGroup& g) {
  const auto n = g.parameter_n();
  if (!n) {
    throw Error(ErrorKind::unsupported_group,
                "omega partition is defined only for a constructed U_{6n}");
  }
  OmegaPartition p;
  for (Element x = 0; x < g.order(); ++x) {
    const U6nElement e = u6n_normal_form(x, *n);
    if (e.a_exp % 2 == 0 && e.b_exp == 0) continue;
    switch (omega_class_of(e)) {
      case OmegaClass::omega1: p.omega1.push_back(x); break;
      case OmegaClass::omega2: p.omega2.push_back(x); break;
      case OmegaClass::omega3: p.omega3.push_back(x); break;
      case OmegaClass::omega4: p.omega4.push_back(x); break;
    }
  }
  return p;
}

}  // namespace ncg
