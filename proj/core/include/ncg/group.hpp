#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/error.hpp"

namespace ncg {

// Index of an element inside a FiniteGroup's element list.
using Element = std::size_t;

// Normal form a^i b^k of an element of U_{6n}.
struct U6nElement {
  int a_exp = 0;  // in [0, 2n)
  int b_exp = 0;  // in [0, 3)

  friend bool operator==(const U6nElement&, const U6nElement&) = default;
};

// Elements are ordered by index = 3 * a_exp + b_exp.
Element u6n_index(U6nElement e, int n);
U6nElement u6n_normal_form(Element index, int n);

// "1", "a", "b^2", "a^3b", ...
std::string u6n_label(U6nElement e);

// A finite group stored as a validated Cayley table. Immutable once built.
class FiniteGroup {
 public:
  std::size_t order() const { return labels_.size(); }
  Element identity() const { return identity_; }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(Element x) const;
  std::optional<Element> find(std::string_view label) const;

  // Set only for groups built by u6n_group().
  std::optional<int> parameter_n() const { return parameter_n_; }

  Element multiply(Element x, Element y) const;
  Element inverse(Element x) const;
  bool commute(Element x, Element y) const {
    return multiply(x, y) == multiply(y, x);
  }

 private:
  friend FiniteGroup u6n_group(int n);
  friend FiniteGroup group_from_table(std::vector<std::string> labels,
                                      std::vector<std::vector<Element>> table);

  void check(Element x) const;

  std::vector<std::string> labels_;
  std::vector<Element> table_;  // row-major order x order
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::optional<int> parameter_n_;
};

// U_{6n} = <a, b | a^{2n} = b^3 = 1, a^{-1} b a = b^{-1}>, built directly from
// the normal-form law (a^i b^k)(a^j b^l) = a^{i+j} b^{(-1)^j k + l}.
FiniteGroup u6n_group(int n);

// Tables of order up to this bound are checked for associativity on every
// triple; larger ones on a fixed-seed sample of triples.
inline constexpr std::size_t kExhaustiveAssociativityLimit = 200;
inline constexpr std::size_t kAssociativitySamples = 100'000;

// Validates closure, identity, inverses and associativity. The identity need
// not be element 0; it is detected.
FiniteGroup group_from_table(std::vector<std::string> labels,
                             std::vector<std::vector<Element>> table);

// Cayley-table JSON: {"labels": [...], "table": [[...], ...]}.
FiniteGroup group_from_json(std::string_view text);
FiniteGroup load_group_file(const std::string& path);

inline Element multiply(const FiniteGroup& g, Element x, Element y) {
  return g.multiply(x, y);
}
inline Element inverse(const FiniteGroup& g, Element x) { return g.inverse(x); }

// Center and centralizers are computed by commutation scans over the table.
std::vector<Element> center(const FiniteGroup& g);
std::vector<Element> centralizer(const FiniteGroup& g, Element x);
bool is_abelian(const FiniteGroup& g);

enum class OmegaClass { omega1 = 1, omega2 = 2, omega3 = 3, omega4 = 4 };

inline constexpr OmegaClass kOmegaClasses[] = {
    OmegaClass::omega1, OmegaClass::omega2, OmegaClass::omega3,
    OmegaClass::omega4};

std::string_view to_string(OmegaClass c);

// The four classes of non-central elements of U_{6n}:
//   omega1 = {a^{2r+1}}, omega2 = {a^{2r+1} b}, omega3 = {a^{2r+1} b^2},
//   omega4 = {a^{2r} b^k : k = 1, 2}.
struct OmegaPartition {
  std::vector<Element> omega1;
  std::vector<Element> omega2;
  std::vector<Element> omega3;
  std::vector<Element> omega4;

  const std::vector<Element>& operator[](OmegaClass c) const;
};

// Classifies by normal form. Requires a group from u6n_group().
OmegaPartition omega_partition(const FiniteGroup& g);
OmegaClass omega_class_of(U6nElement e);

}  // namespace ncg
