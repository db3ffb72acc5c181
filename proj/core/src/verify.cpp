#include "ncg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ncg {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::known_paper_exception: return "known_paper_exception";
    case Status::skipped_cap: return "skipped_cap";
  }
  return "unknown";
}

Status parse_status(std::string_view s) {
  for (Status st : {Status::match, Status::mismatch, Status::known_paper_exception,
                    Status::skipped_cap}) {
    if (to_string(st) == s) return st;
  }
  throw Error(ErrorKind::format, "unknown status \"" + std::string(s) + "\"");
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

const ReportEntry* VerificationReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const ClosedFormTable& default_closed_forms() {
  static const ClosedFormTable table;
  return table;
}

namespace {

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json poly(const IntPolynomial& p) { return json::parse(to_json(p)); }

template <typename Range>
json ints(const Range& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(big(BigInt(v)));
  return out;
}

// Distinct values, ascending.
template <typename T>
json distinct(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return ints(values);
}

class Verifier {
 public:
  Verifier(int n, const Caps& caps, const ClosedFormTable& forms)
      : n_(n), caps_(caps), forms_(forms) {
    report_.n = n;
  }

  VerificationReport run();

 private:
  struct Outcome {
    json predicted;
    json computed;
    Validity validity = Validity::full;
  };

  // fn fills the prediction first, then the brute-force value; a capacity
  // error thrown by the latter leaves the prediction in place.
  template <typename Fn>
  void entry(std::string name, Fn&& fn) {
    ReportEntry e;
    e.name = std::move(name);
    e.n = n_;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
      if (o.predicted == o.computed) {
        e.status = Status::match;
      } else if (!valid_at(o.validity, n_)) {
        e.status = Status::known_paper_exception;
      } else {
        e.status = Status::mismatch;
      }
    } catch (const Error& err) {
      o.computed = json{{"error", err.what()}};
      e.status = err.kind() == ErrorKind::capacity ? Status::skipped_cap
                                                   : Status::mismatch;
    }
    e.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    e.predicted = o.predicted.dump();
    e.computed = o.computed.dump();
    report_.entries.push_back(std::move(e));
  }

  json labels(std::vector<Element> elements) const {
    std::sort(elements.begin(), elements.end());
    json out = json::array();
    for (Element x : elements) out.push_back(group_.label(x));
    return out;
  }

  json vertex_labels(std::vector<Vertex> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    json out = json::array();
    for (Vertex v : vertices) out.push_back(graph_.label(v));
    return out;
  }

  const ResolvingPolynomial& resolving() {
    if (!resolving_) resolving_ = resolving_polynomial(graph_, caps_);
    return *resolving_;
  }

  const std::vector<std::vector<std::uint32_t>>& detours() {
    if (!detours_) detours_ = detour_matrix(graph_, caps_);
    return *detours_;
  }

  int n_;
  Caps caps_;
  const ClosedFormTable& forms_;
  FiniteGroup group_;
  Graph graph_;
  std::vector<Element> vertex_elements_;
  std::optional<ResolvingPolynomial> resolving_;
  std::optional<std::vector<std::vector<std::uint32_t>>> detours_;
  VerificationReport report_;
};

VerificationReport Verifier::run() {
  try {
    group_ = u6n_group(n_);
    graph_ = non_commuting_graph(group_);
    vertex_elements_ = non_central_elements(group_);
  } catch (const Error& err) {
    ReportEntry e{"construction", n_, "null", json{{"error", err.what()}}.dump(),
                  Status::mismatch, 0};
    report_.entries.push_back(std::move(e));
    return report_;
  }
  const OmegaPartition omega = omega_partition(group_);
  auto vertex_of = [&](Element x) {
    return static_cast<Vertex>(
        std::lower_bound(vertex_elements_.begin(), vertex_elements_.end(), x) -
        vertex_elements_.begin());
  };

  entry("center", [&](Outcome& o) {
    o.predicted = labels(forms_.center(n_));
    o.computed = labels(center(group_));
  });

  for (OmegaClass c : kOmegaClasses) {
    entry("centralizer[" + std::string(to_string(c)) + "]", [&](Outcome& o) {
      o.predicted = json::object();
      o.computed = json::object();
      for (Element x : omega[c]) {
        o.predicted[group_.label(x)] =
            labels(forms_.centralizer(c, u6n_normal_form(x, n_), n_));
        o.computed[group_.label(x)] = labels(centralizer(group_, x));
      }
    });
  }

  entry("degree_equals_order_minus_centralizer", [&](Outcome& o) {
    o.predicted = json::object();
    o.computed = json::object();
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
      const Element x = vertex_elements_[v];
      o.predicted[graph_.label(v)] = group_.order() - centralizer(group_, x).size();
      o.computed[graph_.label(v)] = degree(graph_, v);
    }
  });

  for (OmegaClass c : kOmegaClasses) {
    entry("degree[" + std::string(to_string(c)) + "]", [&](Outcome& o) {
      o.predicted = ints(std::vector<std::int64_t>{forms_.degree(c, n_)});
      std::vector<std::size_t> degrees;
      for (Element x : omega[c]) degrees.push_back(degree(graph_, vertex_of(x)));
      o.computed = distinct(degrees);
    });
  }

  entry("edge_count", [&](Outcome& o) {
    o.predicted = forms_.edge_count(n_);
    o.computed = graph_.edge_count();
  });

  entry("complete_multipartite_classes", [&](Outcome& o) {
    o.predicted = json::array();
    for (OmegaClass c : kOmegaClasses) o.predicted.push_back(labels(omega[c]));
    std::sort(o.predicted.begin(), o.predicted.end());
    if (auto w = is_complete_multipartite(graph_)) {
      o.computed = json::array();
      for (const auto& cls : w->classes) o.computed.push_back(vertex_labels(cls));
      std::sort(o.computed.begin(), o.computed.end());
    }
  });

  entry("complete_multipartite_sizes", [&](Outcome& o) {
    o.predicted = ints(forms_.partition_sizes(n_));
    if (auto w = is_complete_multipartite(graph_)) o.computed = ints(w->sorted_class_sizes());
  });

  entry("alpha", [&](Outcome& o) {
    o.predicted = forms_.alpha(n_);
    o.computed = independence_number(graph_);
  });
  entry("tau", [&](Outcome& o) {
    o.predicted = forms_.tau(n_);
    o.computed = vertex_cover_number(graph_);
  });
  entry("alpha_plus_tau", [&](Outcome& o) {
    o.predicted = forms_.vertex_count(n_);
    o.computed = independence_number(graph_) + vertex_cover_number(graph_);
  });
  entry("clique_number", [&](Outcome& o) {
    o.predicted = forms_.chi_omega(n_);
    o.computed = clique_number(graph_);
  });
  entry("chromatic_number", [&](Outcome& o) {
    o.predicted = forms_.chi_omega(n_);
    o.computed = chromatic_number(graph_, caps_);
  });

  for (Pattern p : {Pattern::cycle(5), Pattern::path(4)}) {
    entry("induced_" + to_string(p), [&](Outcome& o) {
      if (auto found = find_induced(graph_, p)) o.computed = vertex_labels(*found);
    });
  }

  entry("regular_omega123", [&](Outcome& o) {
    o.predicted = forms_.omega123_degree(n_);
    std::vector<Vertex> vs;
    for (OmegaClass c : {OmegaClass::omega1, OmegaClass::omega2, OmegaClass::omega3}) {
      for (Element x : omega[c]) vs.push_back(vertex_of(x));
    }
    std::sort(vs.begin(), vs.end());
    if (auto k = is_k_regular(induced_subgraph(graph_, vs))) o.computed = *k;
  });

  entry("regular_full_graph", [&](Outcome& o) {
    if (auto k = is_k_regular(graph_)) o.computed = *k;
  });

  entry("metric_dimension", [&](Outcome& o) {
    o.predicted = forms_.metric_dimension(n_);
    o.computed = metric_dimension(graph_, caps_);
  });

  entry("resolving_polynomial", [&](Outcome& o) {
    o.predicted = poly(forms_.resolving_polynomial(n_));
    o.computed = poly(resolving().polynomial);
  });

  entry("resolving_sequence", [&](Outcome& o) {
    o.predicted = json{{"first", forms_.metric_dimension(n_)},
                       {"counts", ints(forms_.resolving_sequence(n_))}};
    const auto& seq = resolving().sequence;
    o.computed = json{{"first", seq.first_cardinality}, {"counts", ints(seq.counts)}};
  });

  entry("resolving_roots", [&](Outcome& o) {
    o.predicted = ints(forms_.resolving_roots(n_));
    o.computed = ints(integer_roots(resolving().polynomial));
  });

  entry("detour_distances", [&](Outcome& o) {
    o.predicted = ints(std::vector<std::int64_t>{forms_.detour_distance(n_)});
    std::vector<std::uint32_t> values;
    const auto& d = detours();
    for (Vertex u = 0; u < d.size(); ++u)
      for (Vertex v = u + 1; v < d.size(); ++v) values.push_back(d[u][v]);
    o.computed = distinct(values);
  });

  entry("detour_polynomial", [&](Outcome& o) {
    o.predicted = poly(forms_.detour_polynomial(n_));
    o.computed = poly(detour_polynomial(graph_, caps_));
  });

  entry("detour_index", [&](Outcome& o) {
    o.predicted = big(forms_.detour_index(n_));
    o.computed = big(detour_index(graph_, caps_));
  });

  entry("eccentricities", [&](Outcome& o) {
    o.validity = cf_eccentricity_validity();
    o.predicted = ints(std::vector<std::int64_t>{forms_.eccentricity(n_)});
    o.computed = distinct(eccentricities(graph_));
  });

  entry("total_eccentricity_polynomial", [&](Outcome& o) {
    const auto p = forms_.total_eccentricity_polynomial(n_);
    o.validity = p.validity;
    o.predicted = poly(p.value);
    o.computed = poly(total_eccentricity_polynomial(graph_));
  });

  entry("eccentric_connectivity_polynomial", [&](Outcome& o) {
    const auto p = forms_.eccentric_connectivity_polynomial(n_);
    o.validity = p.validity;
    o.predicted = poly(p.value);
    o.computed = poly(eccentric_connectivity_polynomial(graph_));
  });

  entry("independence_polynomial", [&](Outcome& o) {
    o.predicted = poly(forms_.independence_polynomial(n_));
    o.computed = poly(independence_polynomial(graph_, caps_));
  });

  entry("vertex_cover_polynomial", [&](Outcome& o) {
    o.predicted = poly(forms_.vertex_cover_polynomial(n_));
    o.computed = poly(vertex_cover_polynomial(graph_, caps_));
  });

  return report_;
}

}  // namespace

VerificationReport verify_all(int n, const Caps& caps, const ClosedFormTable& forms) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "verify_all needs n >= 1, got " + std::to_string(n));
  return Verifier(n, caps, forms).run();
}

std::string report_to_json(const VerificationReport& report, int indent) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json item;
    item["name"] = e.name;
    item["predicted"] = json::parse(e.predicted);
    item["computed"] = json::parse(e.computed);
    item["status"] = std::string(to_string(e.status));
    item["elapsed_ms"] = e.elapsed_ms;
    entries.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["entries"] = entries;
  return doc.dump(indent);
}

VerificationReport report_from_json(std::string_view text) {
  VerificationReport report;
  try {
    const auto doc = json::parse(text);
    report.n = doc.at("n").get<int>();
    for (const auto& item : doc.at("entries")) {
      ReportEntry e;
      e.name = item.at("name").get<std::string>();
      e.n = report.n;
      e.predicted = item.at("predicted").dump();
      e.computed = item.at("computed").dump();
      e.status = parse_status(item.at("status").get<std::string>());
      e.elapsed_ms = item.at("elapsed_ms").get<std::int64_t>();
      report.entries.push_back(std::move(e));
    }
  } catch (const json::exception& err) {
    throw Error(ErrorKind::format, std::string("report JSON: ") + err.what());
  }
  return report;
}

namespace {

std::string elide(const std::string& s, std::size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, width - 3) + "...";
}

}  // namespace

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "n = " << report.n << "\n";
  out << std::left << std::setw(38) << "invariant" << std::setw(23) << "status"
      << std::right << std::setw(8) << "ms" << "  " << std::left << std::setw(34)
      << "predicted" << "  computed\n";
  for (const auto& e : report.entries) {
    out << std::left << std::setw(38) << e.name << std::setw(23) << to_string(e.status)
        << std::right << std::setw(8) << e.elapsed_ms << "  " << std::left
        << std::setw(34) << elide(e.predicted, 34) << "  " << elide(e.computed, 34)
        << "\n";
  }
  out << "match " << report.count(Status::match) << ", mismatch "
      << report.count(Status::mismatch) << ", known_paper_exception "
      << report.count(Status::known_paper_exception) << ", skipped_cap "
      << report.count(Status::skipped_cap) << "\n";
  return out.str();
}

}  // namespace ncg
