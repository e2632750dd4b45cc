// ggt — build groups from spec strings, construct and export their graphs,
// inspect structure, and run the verification suite.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 construction or runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gg/catalog.hpp"
#include "gg/families.hpp"
#include "gg/graphs.hpp"
#include "gg/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;

struct CommonFlags {
  std::optional<int> max_order;
  int threads = 1;
  bool paranoid = false;

  gg::ValidateOptions validate_options() const {
    gg::ValidateOptions v;
    if (max_order && *max_order > v.order_cap) v.order_cap = *max_order;
    v.paranoid = paranoid;
    return v;
  }

  gg::BuildOptions build_options() const {
    gg::BuildOptions b;
    b.max_order = max_order;
    b.threads = threads;
    return b;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--max-order", flags.max_order,
                  "Order cap for graph builders and checks (replaces the per-kind defaults)")
      ->envname("GG_MAX_ORDER");
  cmd->add_option("--threads", flags.threads, "Worker count; output is identical for any value")
      ->check(CLI::Range(1, 256));
  cmd->add_flag("--paranoid", flags.paranoid,
                "Run the full associativity check regardless of group order");
}

void write_output(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gg::Error("cannot open output file: " + out_path);
  out << bytes;
}

std::vector<gg::GroupSpec> load_catalog(const std::string& source) {
  if (source == "builtin") return gg::builtin_catalog();
  if (source.rfind("file:", 0) != 0)
    throw CLI::ValidationError("--catalog", "expected 'builtin' or 'file:<path>'");
  const std::string path = source.substr(5);
  std::ifstream in(path);
  if (!in) throw gg::Error("cannot open catalog file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw gg::Error("invalid JSON in catalog file " + path + ": " + e.what());
  }
  if (!j.is_array()) throw gg::Error("catalog file must be a JSON array of spec strings");
  std::vector<gg::GroupSpec> specs;
  for (const auto& item : j) specs.push_back(gg::parse_spec(item.get<std::string>()));
  return specs;
}

int cmd_info(const std::string& spec_text, const CommonFlags& flags) {
  const gg::CayleyGroup g = gg::make_family(spec_text, flags.validate_options());
  std::cout << "name: " << g.name() << "\n";
  std::cout << "order: " << g.order() << "\n";
  std::cout << "abelian: " << (gg::is_abelian(g) ? "yes" : "no") << "\n";
  std::cout << "nilpotent: " << (gg::is_nilpotent(g) ? "yes" : "no") << "\n";
  std::cout << "dedekind: " << (gg::is_dedekind(g) ? "yes" : "no") << "\n";
  std::cout << "eppo: " << (gg::is_eppo(g) ? "yes" : "no") << "\n";
  std::cout << "simple: " << (gg::is_simple(g) ? "yes" : "no") << "\n";
  std::cout << "2-generated: " << (gg::is_2_generated(g) ? "yes" : "no") << "\n";
  std::cout << "exponent: " << gg::exponent(g) << "\n";
  for (int p : gg::prime_factors(g.order())) {
    const gg::Subgroup s = gg::sylow_subgroup(g, p);
    std::cout << "sylow " << p << ": order " << s.size() << ", abelian="
              << (gg::is_abelian(s) ? "yes" : "no") << ", cyclic="
              << (gg::is_cyclic(s) ? "yes" : "no") << ", dedekind="
              << (gg::is_dedekind(s) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_graph(const std::string& spec_text, const std::string& kind_name,
              const std::string& emit, const std::string& out_path, const CommonFlags& flags) {
  const auto format = gg::export_format_from_string(emit);
  if (!format) throw CLI::ValidationError("--emit", "expected 'dot' or 'json'");

  const gg::CayleyGroup g = gg::make_family(spec_text, flags.validate_options());
  long long edges = 0;
  int components = 0;
  std::string bytes;
  if (kind_name == "dnorm") {
    const gg::DirectedGroupGraph dg = gg::build_directed_normalising(g, flags.build_options());
    edges = dg.arc_count();
    components = dg.connected_components();
    bytes = gg::export_graph(dg, *format);
  } else {
    const auto kind = gg::graph_kind_from_string(kind_name);
    if (!kind)
      throw CLI::ValidationError("--graph",
                                 "expected one of pow|epow|com|snorm|nilp|engel|ngen|dnorm");
    const gg::GroupGraph graph = gg::build_graph(*kind, g, flags.build_options());
    edges = graph.edge_count();
    components = graph.connected_components();
    bytes = gg::export_graph(graph, *format);
  }
  write_output(bytes, out_path);
  std::ostringstream info;
  info << "edges=" << edges << " components=" << components << "\n";
  // keep stdout parseable when the export itself goes to stdout
  (out_path.empty() ? std::cerr : std::cout) << info.str();
  return kExitOk;
}

int cmd_witness(const std::string& spec_text, const CommonFlags& flags) {
  const gg::CayleyGroup g = gg::make_family(spec_text, flags.validate_options());
  const auto pairs = gg::snorm_witness_pairs(g);
  if (pairs.empty()) {
    std::cout << "none\n";
    return kExitOk;
  }
  for (const auto& w : pairs)
    std::cout << "(" << g.label(w.x) << ", " << g.label(w.y) << ")\n";
  return kExitOk;
}

int cmd_catalog(const CommonFlags& flags) {
  for (const auto& spec : gg::builtin_catalog_specs()) {
    const gg::CayleyGroup g = gg::make_family(spec, flags.validate_options());
    std::cout << spec << "  order=" << g.order() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& catalog_source, const std::string& checks_csv,
               const std::string& out_path, bool timings, const CommonFlags& flags) {
  gg::SuiteOptions opts;
  opts.checks.clear();
  std::stringstream ss(checks_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) opts.checks.push_back(item);
  if (opts.checks.empty()) opts.checks.push_back("all");
  opts.threads = flags.threads;
  opts.max_order = flags.max_order;
  opts.paranoid = flags.paranoid;

  const auto catalog = load_catalog(catalog_source);
  const gg::VerificationReport report = gg::run_suite(catalog, opts);

  for (const auto& r : report.results) {
    const char* status = r.error ? "ERROR" : (r.pass ? "PASS" : "FAIL");
    std::cout << status << "  " << r.group << "  " << r.check_id;
    if (r.error) std::cout << "  (" << *r.error << ")";
    std::cout << "\n";
  }
  std::cout << "checks: " << report.results.size() << "  pass: "
            << (report.all_pass() ? "yes" : "no") << "\n";

  if (!out_path.empty()) write_output(report.to_json(timings).dump(2) + "\n", out_path);

  if (report.any_error()) return kExitConstruction;
  return report.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group graph construction and theorem verification toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::string spec_text;
  auto* info = app.add_subcommand("info", "Print structural facts about a group");
  info->add_option("spec", spec_text, "Group spec, e.g. Q8, D4, SNNC(3,2,1), x(Q8,C3)")
      ->required();
  add_common(info, flags);

  std::string kind_name = "snorm", emit = "json", out_path;
  auto* graph = app.add_subcommand("graph", "Build a graph on a group and export it");
  graph->add_option("spec", spec_text, "Group spec")->required();
  graph->add_option("--graph", kind_name, "Graph kind: pow|epow|com|snorm|nilp|engel|ngen|dnorm");
  graph->add_option("--emit", emit, "Output format: dot|json");
  graph->add_option("--out", out_path, "Output file (stdout when omitted)");
  add_common(graph, flags);

  auto* witness = app.add_subcommand("witness",
                                     "List non-commuting pairs adjacent in SNorm(G)");
  witness->add_option("spec", spec_text, "Group spec")->required();
  add_common(witness, flags);

  std::string catalog_source = "builtin", checks_csv = "all";
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--catalog", catalog_source, "builtin or file:<path> (JSON array of specs)");
  verify->add_option("--checks", checks_csv,
                     "Comma-separated subset of "
                     "hierarchy,thm2,thm3,epow,pow,dedekind,ngen,dnorm,identities,all");
  verify->add_option("--out", out_path, "Write the JSON report here");
  verify->add_flag("--timings", timings,
                   "Record wall-clock timings in the report (breaks byte-reproducibility)");
  add_common(verify, flags);

  auto* catalog = app.add_subcommand("catalog", "List the built-in group catalog");
  add_common(catalog, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(spec_text, flags);
    if (graph->parsed()) return cmd_graph(spec_text, kind_name, emit, out_path, flags);
    if (witness->parsed()) return cmd_witness(spec_text, flags);
    if (verify->parsed()) return cmd_verify(catalog_source, checks_csv, out_path, timings, flags);
    if (catalog->parsed()) return cmd_catalog(flags);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruction;
  }
  return kExitUsage;
}
