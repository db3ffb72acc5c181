#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/closed_forms.hpp"
#include "ncg/invariants.hpp"

namespace ncg {

enum class Status { match, mismatch, known_paper_exception, skipped_cap };

std::string_view to_string(Status s);
Status parse_status(std::string_view s);

// predicted / computed hold compact JSON text: integers, label sets (arrays),
// polynomials ({"terms": ...}), or null for "no such object".
struct ReportEntry {
  std::string name;
  int n = 0;
  std::string predicted;
  std::string computed;
  Status status = Status::match;
  std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
  int n = 0;
  std::vector<ReportEntry> entries;

  std::size_t count(Status s) const;
  bool has_mismatch() const { return count(Status::mismatch) > 0; }
  const ReportEntry* find(std::string_view name) const;
};

// The closed forms verify_all compares against. Defaults are the cf_*
// functions; tests swap entries to check that a wrong formula is caught.
struct ClosedFormTable {
  std::function<std::vector<Element>(int)> center = cf_center;
  std::function<std::vector<Element>(OmegaClass, U6nElement, int)> centralizer =
      cf_centralizer;
  std::function<std::int64_t(OmegaClass, int)> degree = cf_degree;
  std::function<std::int64_t(int)> edge_count = cf_edge_count;
  std::function<std::vector<std::int64_t>(int)> partition_sizes = cf_partition_sizes;
  std::function<std::int64_t(int)> alpha = cf_alpha;
  std::function<std::int64_t(int)> tau = cf_tau;
  std::function<std::int64_t(int)> vertex_count = cf_vertex_count;
  std::function<std::int64_t(int)> chi_omega = cf_chi_omega;
  std::function<std::int64_t(int)> omega123_degree = cf_omega123_degree;
  std::function<std::int64_t(int)> metric_dimension = cf_metric_dimension;
  std::function<IntPolynomial(int)> resolving_polynomial = cf_resolving_polynomial;
  std::function<std::vector<BigInt>(int)> resolving_sequence = cf_resolving_sequence;
  std::function<std::vector<std::int64_t>(int)> resolving_roots = cf_resolving_roots;
  std::function<std::int64_t(int)> detour_distance = cf_detour_distance;
  std::function<IntPolynomial(int)> detour_polynomial = cf_detour_polynomial;
  std::function<BigInt(int)> detour_index = cf_detour_index;
  std::function<std::int64_t(int)> eccentricity = cf_eccentricity;
  std::function<PolynomialPrediction(int)> total_eccentricity_polynomial =
      cf_total_eccentricity_polynomial;
  std::function<PolynomialPrediction(int)> eccentric_connectivity_polynomial =
      cf_eccentric_connectivity_polynomial;
  std::function<IntPolynomial(int)> independence_polynomial = cf_independence_polynomial;
  std::function<IntPolynomial(int)> vertex_cover_polynomial = cf_vertex_cover_polynomial;
};

const ClosedFormTable& default_closed_forms();

// Brute force on U_{6n} against every closed form, one entry per result, in
// a fixed order. Throws invalid_parameter for n < 1; otherwise failures
// become entries.
VerificationReport verify_all(int n, const Caps& caps = {},
                              const ClosedFormTable& forms = default_closed_forms());

// {"n": int, "entries": [{"name", "predicted", "computed", "status",
// "elapsed_ms"}, ...]}
std::string report_to_json(const VerificationReport& report, int indent = -1);
VerificationReport report_from_json(std::string_view text);

// Fixed-width table, one row per entry, long values elided.
std::string report_to_text(const VerificationReport& report);

}  // namespace ncg
