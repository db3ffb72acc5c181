#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <ostream>

#include "ncg/graph.hpp"
#include "ncg/group.hpp"

namespace ncg::cli {

namespace {

struct GroupSource {
  int n = 0;
  std::string table;

  void add_to(CLI::App* cmd) {
    auto* n_opt = cmd->add_option("--n", n, "build U_{6n} for this n")->check(CLI::PositiveNumber);
    auto* t_opt = cmd->add_option("--table", table, "Cayley-table JSON file");
    n_opt->excludes(t_opt);
  }

  FiniteGroup load() const {
    if (!table.empty()) return load_group_file(table);
    if (n < 1) throw Error(ErrorKind::invalid_parameter, "one of --n or --table is required");
    return u6n_group(n);
  }
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  int lo = 0;
  int hi = 0;
  auto parse = [&](std::string_view s, int& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && p == s.data() + s.size();
  };
  if (colon == std::string::npos || !parse(std::string_view(text).substr(0, colon), lo) ||
      !parse(std::string_view(text).substr(colon + 1), hi) || lo < 1 || hi < lo) {
    throw Error(ErrorKind::format, "--n-range expects A:B with 1 <= A <= B, got \"" + text + "\"");
  }
  return {lo, hi};
}

int run_build(const GroupSource& src, std::ostream& out) {
  const auto g = src.load();
  out << "order: " << g.order() << "\n";
  out << "identity: " << g.label(g.identity()) << "\n";
  out << "abelian: " << (is_abelian(g) ? "true" : "false") << "\n";
  if (g.parameter_n()) out << "n: " << *g.parameter_n() << "\n";
  out << "center:";
  for (Element x : center(g)) out << " " << g.label(x);
  out << "\nelements:";
  for (const auto& l : g.labels()) out << " " << l;
  out << "\n";
  return kExitOk;
}

int run_graph(const GroupSource& src, const std::string& invariant, const Caps& caps,
              std::ostream& out) {
  const auto graph = non_commuting_graph(src.load());
  if (invariant == "edges") {
    out << graph.edge_count() << "\n";
  } else if (invariant == "alpha") {
    out << independence_number(graph) << "\n";
  } else if (invariant == "tau") {
    out << vertex_cover_number(graph) << "\n";
  } else if (invariant == "omega") {
    out << clique_number(graph) << "\n";
  } else if (invariant == "chi") {
    out << chromatic_number(graph, caps) << "\n";
  } else if (invariant == "beta") {
    out << metric_dimension(graph, caps) << "\n";
  } else if (invariant == "ecc") {
    const auto ecc = eccentricities(graph);
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      out << graph.label(v) << " " << ecc[v] << "\n";
    }
  } else if (invariant == "detour-index") {
    out << detour_index(graph, caps) << "\n";
  }
  return kExitOk;
}

int run_poly(const std::string& kind, int n, const std::string& source, const Caps& caps,
             const ClosedFormTable& forms, std::ostream& out) {
  std::optional<IntPolynomial> brute;
  std::optional<IntPolynomial> closed;
  Validity validity = Validity::full;
  if (source != "closed") {
    const auto graph = non_commuting_graph(u6n_group(n));
    if (kind == "resolving") brute = resolving_polynomial(graph, caps).polynomial;
    if (kind == "detour") brute = detour_polynomial(graph, caps);
    if (kind == "total-ecc") brute = total_eccentricity_polynomial(graph);
    if (kind == "ecc-conn") brute = eccentric_connectivity_polynomial(graph);
    if (kind == "independence") brute = independence_polynomial(graph, caps);
    if (kind == "vertex-cover") brute = vertex_cover_polynomial(graph, caps);
  }
  if (source != "brute") {
    if (kind == "resolving") closed = forms.resolving_polynomial(n);
    if (kind == "detour") closed = forms.detour_polynomial(n);
    if (kind == "total-ecc" || kind == "ecc-conn") {
      const auto p = kind == "total-ecc" ? forms.total_eccentricity_polynomial(n)
                                         : forms.eccentric_connectivity_polynomial(n);
      closed = p.value;
      validity = p.validity;
    }
    if (kind == "independence") closed = forms.independence_polynomial(n);
    if (kind == "vertex-cover") closed = forms.vertex_cover_polynomial(n);
  }
  if (source != "both") {
    out << to_canonical_string(brute ? *brute : *closed) << "\n";
    return kExitOk;
  }
  out << "brute:  " << to_canonical_string(*brute) << "\n";
  out << "closed: " << to_canonical_string(*closed) << "\n";
  if (*brute == *closed) return kExitOk;
  if (!valid_at(validity, n)) {
    out << "status: known_paper_exception (closed form not claimed at n = " << n << ")\n";
    return kExitOk;
  }
  out << "status: mismatch\n";
  return kExitMismatch;
}

int run_verify(int n, const std::string& range, const std::string& format, const Caps& caps,
               const ClosedFormTable& forms, std::ostream& out) {
  int lo = n;
  int hi = n;
  if (!range.empty()) std::tie(lo, hi) = parse_range(range);
  if (lo < 1) throw Error(ErrorKind::invalid_parameter, "one of --n or --n-range is required");
  bool mismatch = false;
  std::vector<std::string> json_reports;
  for (int k = lo; k <= hi; ++k) {
    const auto report = verify_all(k, caps, forms);
    mismatch = mismatch || report.has_mismatch();
    if (format == "json") {
      json_reports.push_back(report_to_json(report, 2));
    } else {
      if (k > lo) out << "\n";
      out << report_to_text(report);
    }
  }
  if (format == "json") {
    if (range.empty()) {
      out << json_reports.front() << "\n";
    } else {
      out << "[\n";
      for (std::size_t i = 0; i < json_reports.size(); ++i) {
        out << json_reports[i] << (i + 1 < json_reports.size() ? ",\n" : "\n");
      }
      out << "]\n";
    }
  }
  return mismatch ? kExitMismatch : kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const ClosedFormTable& forms) {
  CLI::App app{"Non-commuting graphs of U_{6n}: brute-force invariants vs closed forms", "ncg"};
  app.require_subcommand(1);

  std::string caps_text;
  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--caps", caps_text,
                    "cap overrides, e.g. detour=15,resolving=16,metric=20,chromatic=40,indep=24");
  };

  GroupSource build_src;
  auto* build = app.add_subcommand("build", "summarise a group");
  build_src.add_to(build);

  GroupSource graph_src;
  std::string invariant;
  auto* graph = app.add_subcommand("graph", "compute one invariant of the non-commuting graph");
  graph_src.add_to(graph);
  graph->add_option("--invariant", invariant)
      ->required()
      ->check(CLI::IsMember({"edges", "alpha", "tau", "omega", "chi", "beta", "ecc",
                             "detour-index"}));
  add_caps(graph);

  std::string poly_kind;
  int poly_n = 0;
  std::string poly_source = "brute";
  auto* poly = app.add_subcommand("poly", "print a graph polynomial of Gamma(U_{6n})");
  poly->add_option("kind", poly_kind)
      ->required()
      ->check(CLI::IsMember(
          {"resolving", "detour", "total-ecc", "ecc-conn", "independence", "vertex-cover"}));
  poly->add_option("--n", poly_n)->required()->check(CLI::PositiveNumber);
  poly->add_option("--source", poly_source)->check(CLI::IsMember({"brute", "closed", "both"}));
  add_caps(poly);

  GroupSource export_src;
  std::string export_format = "dot";
  auto* exp = app.add_subcommand("export", "write the non-commuting graph as DOT or JSON");
  export_src.add_to(exp);
  exp->add_option("--format", export_format)->check(CLI::IsMember({"dot", "json"}));

  int verify_n = 0;
  std::string verify_range;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "compare brute force against the closed forms");
  auto* vn = verify->add_option("--n", verify_n)->check(CLI::PositiveNumber);
  auto* vr = verify->add_option("--n-range", verify_range, "inclusive range A:B");
  vn->excludes(vr);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  add_caps(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    const Caps caps = Caps::parse(caps_text);
    if (build->parsed()) return run_build(build_src, out);
    if (graph->parsed()) return run_graph(graph_src, invariant, caps, out);
    if (poly->parsed()) return run_poly(poly_kind, poly_n, poly_source, caps, forms, out);
    if (exp->parsed()) {
      out << export_graph(non_commuting_graph(export_src.load()),
                          parse_export_format(export_format));
      if (export_format == "json") out << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      return run_verify(verify_n, verify_range, verify_format, caps, forms, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ncg::cli
