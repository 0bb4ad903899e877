#include "hosoya/reports.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace hosoya;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct Settings {
  std::string format = "text";
  std::string cache;
  unsigned jobs = 1;
};

std::string join(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
  return out + "]";
}

template <class T>
std::string join3(const std::array<T, 3>& v) {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
  return os.str();
}

PointedGraph load_graph(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    try {
      return PointedGraph(read_edge_list_file(arg.substr(1)), 0);
    } catch (const std::runtime_error& e) {
      throw std::invalid_argument(e.what());
    }
  }
  return parse_graph_expr(arg);
}

BigInt parse_positive(const std::string& text, const char* what) {
  try {
    BigInt v = parse_bigint(text);
    if (v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "'" + text + "' is not a positive integer");
  }
}

std::optional<std::size_t> parse_budget(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::exception&) {
    throw CLI::ValidationError("budget", "expected a number or 'auto', got '" + text + "'");
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_probes(const std::string& text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--probes", "expected m,n;m,n;...");
    out.emplace_back(std::stoull(item.substr(0, comma)), std::stoull(item.substr(comma + 1)));
  }
  return out;
}

int print_z(const ZReport& r, const Settings& s, bool table_form) {
  if (s.format == "json") {
    std::cout << json(r).dump(2) << "\n";
  } else if (table_form) {
    std::cout << "graph: " << r.name << " (" << r.graph.graph.vertex_count() << " vertices, " << r.graph.graph.edge_count()
              << " edges)\n";
    std::cout << "k  p(G,k) brute-force  p(G,k) recursive\n";
    for (std::size_t k = 0; k < std::max(r.p_bruteforce.size(), r.p_recursive.size()); ++k) {
      std::cout << k << "  " << (k < r.p_bruteforce.size() ? r.p_bruteforce[k].str() : "-") << "  "
                << (k < r.p_recursive.size() ? r.p_recursive[k].str() : "-") << "\n";
    }
    std::cout << "Z=" << r.z_recursive << (r.agree ? "" : " (ENGINES DISAGREE)") << "\n";
  } else {
    std::cout << "graph: " << r.name << " (" << r.graph.graph.vertex_count() << " vertices, " << r.graph.graph.edge_count()
              << " edges)\n";
    std::cout << "Z=" << r.z_bruteforce << " p=" << join(r.p_bruteforce) << "  [brute force]\n";
    std::cout << "Z=" << r.z_recursive << " p=" << join(r.p_recursive) << "  [recursive]\n";
    std::cout << (r.agree ? "engines agree" : "ENGINES DISAGREE") << "\n";
  }
  return r.agree ? kOk : kVerificationFailed;
}

int print_triple(const TripleReport& r, const Settings& s) {
  if (s.format == "json") {
    std::cout << json(r).dump(2) << "\n";
  } else {
    std::cout << "(m,n)=(" << r.m << "," << r.n << ") class " << to_string(r.cls) << "\n";
    std::cout << "m/n=" << join(r.continued_fraction) << "\n";
    std::cout << "glue: " << r.glue << "\n";
    const char* role[3] = {"A", "B", "C"};
    for (std::size_t i = 0; i < 3; ++i) {
      std::cout << role[i] << ": kernel " << r.kernels[i] << ", composite " << r.composites[i] << " = " << r.closed_forms[i]
                << ", Z=" << r.z[i] << "\n";
    }
    std::cout << "Z-triple " << join3(r.z) << ", expected " << join3(r.expected) << "\n";
    for (const auto& p : r.problems) std::cout << "problem: " << p << "\n";
    std::cout << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  return r.passed ? kOk : kVerificationFailed;
}

void print_table(const ZTable& t, const Settings& s) {
  if (s.format == "json") {
    std::cout << json(t).dump(2) << "\n";
    return;
  }
  for (const auto& [z, graphs] : t.classes) {
    std::cout << "Z=" << z << " (" << graphs.size() << "):";
    for (std::size_t i = 0; i < graphs.size(); ++i) std::cout << (i ? ", " : " ") << describe(graphs[i]);
    std::cout << "\n";
  }
  std::cout << t.total() << " graphs\n";
}

int print_table_report(const TableReport& r, const Settings& s) {
  if (s.format == "json") {
    std::cout << json(r).dump(2) << "\n";
    return r.passed ? kOk : kVerificationFailed;
  }
  std::cout << "named values:\n";
  for (const auto& c : r.named) {
    std::cout << "  " << (c.bruteforce ? (c.ok ? "ok  " : "FAIL") : "n/a ") << " Z(" << c.expression << ")=" << c.expected;
    if (c.bruteforce) std::cout << " brute-force " << *c.bruteforce << ", recursive " << *c.recursive;
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
  }
  std::cout << "classes:\n";
  for (const auto& c : r.classes) {
    std::cout << "  " << (c.ok ? "ok  " : "FAIL") << " Z=" << c.z << " expected " << c.expected_count << ", generated "
              << c.actual_count << ":";
    for (std::size_t i = 0; i < c.members.size(); ++i) std::cout << (i ? ", " : " ") << c.members[i];
    std::cout << "\n";
    for (const auto& m : c.missing_named) std::cout << "       missing: " << m << "\n";
  }
  std::cout << "values quoted in derivations:\n";
  for (const auto& c : r.derivations) {
    std::cout << "  " << (c.ok ? "ok  " : "DIFF") << " Z(" << c.expression << ")=" << c.expected << " [" << c.group << "]";
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
  }
  std::cout << "discrepancies:\n";
  for (const auto& d : r.discrepancies) std::cout << "  " << d << "\n";
  std::cout << (r.passed ? "PASS" : "FAIL") << "\n";
  return r.passed ? kOk : kVerificationFailed;
}

int print_kernel_report(const KernelSearchReport& r, const Settings& s, bool full_log) {
  const bool ok = r.status == SearchStatus::unique;
  if (s.format == "json") {
    std::cout << kernel_report_json(r, full_log).dump(2) << "\n";
    return ok ? kOk : kVerificationFailed;
  }
  std::cout << "class " << to_string(r.cls) << ", probes:";
  for (const auto& p : r.probes) std::cout << " (" << p.m << "," << p.n << ")";
  std::cout << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    std::cout << "role " << kRoleNames[i] << ": " << r.pools[i].size() << " kernels with Z <= " << r.kernel_bounds[i]
              << ", edge budget " << r.kernel_edge_budgets[i] << (r.kernel_truncated[i] ? " (truncated)" : "") << "\n";
  }
  for (const auto& p : r.probes) {
    std::cout << "probe (" << p.m << "," << p.n << ") targets " << join3(p.targets) << ", glue signatures:";
    for (const auto& g : p.glues) std::cout << " " << g.signature.to_string() << "=" << g.representative;
    std::cout << (p.glue_truncated ? " (truncated)" : "") << "\n";
  }
  for (const auto& b : r.branches) {
    std::cout << "branch " << b.id << " stage " << b.stage;
    if (b.parent) std::cout << " from " << *b.parent;
    std::cout << ", glues";
    for (const auto& sig : b.path) std::cout << " " << sig.to_string();
    std::cout << ", alive " << b.alive[0].size() << "/" << b.alive[1].size() << "/" << b.alive[2].size() << "\n";
  }
  if (full_log) {
    for (const auto& e : r.log) {
      std::cout << "  stage " << e.stage << " (" << e.m << "," << e.n << ") branch "
                << (e.branch ? std::to_string(*e.branch) : std::string("-")) << " glue " << e.signature.to_string() << "="
                << e.glue << " " << kRoleNames[static_cast<int>(e.role)] << " " << e.kernel << ": Z=" << e.z << " target "
                << e.target << (e.hit ? " hit" : " eliminated") << "\n";
    }
  } else {
    std::cout << r.log.size() << " log entries (use --full-log to print them)\n";
  }
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  std::cout << "survivors (" << r.survivor_count << "):\n";
  for (const auto& t : r.survivors) std::cout << "  (" << t.names[0] << ", " << t.names[1] << ", " << t.names[2] << ")\n";
  std::cout << "status: " << to_string(r.status) << "\n";
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hosoya index toolkit: matchings, continuants, Pythagorean families and kernel searches"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", settings.cache, "Z cache file (canonical graph6 <TAB> Z per line), re-verified on load");
  app.add_option("--jobs", settings.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);

  std::string expr;
  auto* z_cmd = app.add_subcommand("z", "Hosoya index and matching counts of a graph expression or @edge-list file");
  z_cmd->add_option("graph", expr, "Graph expression, e.g. \"C(2,2)\", \"K4\", \"Q3(1,1,1)@3 v C(2)\"")->required();
  auto* p_cmd = app.add_subcommand("pmatch", "Table of p(G,k) for a graph expression");
  p_cmd->add_option("graph", expr, "Graph expression or @file")->required();

  std::string m_text, n_text;
  auto* triple_cmd = app.add_subcommand("triple", "Build and verify the triple for (m,n)");
  triple_cmd->add_option("m", m_text)->required();
  triple_cmd->add_option("n", n_text)->required();
  auto* cf_cmd = app.add_subcommand("cf", "Continued fraction of m/n");
  cf_cmd->add_option("m", m_text)->required();
  cf_cmd->add_option("n", n_text)->required();

  std::vector<std::string> terms_text;
  auto* cont_cmd = app.add_subcommand("continuant", "Continuant K(a1..ad) and Z of the caterpillar C(a1..ad)");
  cont_cmd->add_option("terms", terms_text)->required();

  std::uint64_t max_z = 0;
  auto* table_cmd = app.add_subcommand("table", "All connected graphs with Z <= max_z");
  table_cmd->add_option("max_z", max_z)->required()->check(CLI::PositiveNumber);
  auto* verify_cmd = app.add_subcommand("verify-tables", "Check the reference Z values and class lists");

  std::string cls_text, probes_text, kernel_edges = "auto", glue_edges = "auto";
  bool full_log = false;
  auto* ks_cmd = app.add_subcommand("kernel-search", "Search for the symmetric kernel of a class");
  ks_cmd->add_option("class", cls_text, "P1 or P2")->required();
  ks_cmd->add_option("--probes", probes_text, "Probe pairs as m,n;m,n;... (default: the class's standard probes)");
  ks_cmd->add_option("--kernel-edges", kernel_edges, "Kernel edge budget, or auto");
  ks_cmd->add_option("--glue-edges", glue_edges, "Glue edge budget, or auto");
  ks_cmd->add_flag("--full-log", full_log, "Print every elimination log entry");

  auto* demo_cmd = app.add_subcommand("demo-nonunique", "Two different glues giving the same triple for (10,7)");

  std::optional<std::uint64_t> enum_max_z;
  std::optional<std::size_t> enum_max_edges;
  auto* enum_cmd = app.add_subcommand("enumerate", "List connected graphs up to isomorphism");
  enum_cmd->add_option("--max-z", enum_max_z, "Largest Hosoya index");
  enum_cmd->add_option("--max-edges", enum_max_edges, "Largest edge count");

  unsigned max_part = 4, max_length = 5;
  auto* cat_cmd = app.add_subcommand("caterpillar-check", "Equal (Z, tail Z) pairs force isomorphic caterpillars");
  cat_cmd->add_option("--max-part", max_part)->check(CLI::PositiveNumber);
  cat_cmd->add_option("--max-length", max_length)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0 && app.get_subcommands().empty()) std::cerr << app.help();
    return code == 0 ? kOk : kUsage;
  }

  if (!settings.cache.empty()) {
    auto loaded = load_cache(settings.cache, default_engine());
    if (loaded.rejected) std::cerr << "cache: rejected " << loaded.rejected << " entries\n";
  }
  const bool json_out = settings.format == "json";
  int code = kOk;
  try {
    if (z_cmd->parsed() || p_cmd->parsed()) {
      code = print_z(make_z_report(expr, load_graph(expr)), settings, p_cmd->parsed());
    } else if (triple_cmd->parsed()) {
      PythParams params = classify(parse_positive(m_text, "m"), parse_positive(n_text, "n"));
      code = print_triple(make_triple_report(params), settings);
    } else if (cf_cmd->parsed()) {
      CfReport r = make_cf_report(parse_positive(m_text, "m"), parse_positive(n_text, "n"));
      if (json_out) std::cout << json(r).dump(2) << "\n";
      else std::cout << join(r.terms) << "\n";
      code = r.consistent ? kOk : kVerificationFailed;
    } else if (cont_cmd->parsed()) {
      std::vector<BigInt> terms;
      for (const auto& t : terms_text) terms.push_back(parse_positive(t, "term"));
      ContinuantReport r = make_continuant_report(terms);
      if (json_out) {
        std::cout << json(r).dump(2) << "\n";
      } else {
        std::cout << "K=" << r.continuant;
        if (r.caterpillar_z) {
          std::string spec = join(terms);
          std::cout << "  Z(C(" << spec.substr(1, spec.size() - 2) << "))=" << *r.caterpillar_z;
        }
        std::cout << "\n";
      }
      code = r.agree ? kOk : kVerificationFailed;
    } else if (table_cmd->parsed()) {
      print_table(enumerate_connected_by_z(max_z, settings.jobs), settings);
    } else if (verify_cmd->parsed()) {
      code = print_table_report(verify_reference_tables(settings.jobs), settings);
    } else if (ks_cmd->parsed()) {
      PythClass cls = parse_pyth_class(cls_text);
      KernelSearchOptions opts;
      opts.kernel_edge_budget = parse_budget(kernel_edges);
      opts.glue_edge_budget = parse_budget(glue_edges);
      opts.jobs = settings.jobs;
      auto probes = probes_text.empty() ? default_probes(cls) : parse_probes(probes_text);
      code = print_kernel_report(kernel_search(cls, probes, opts), settings, full_log);
    } else if (demo_cmd->parsed()) {
      NonUniquenessReport r = glue_nonuniqueness_demo();
      if (json_out) {
        std::cout << json(r).dump(2) << "\n";
      } else {
        for (const auto& v : r.variants) {
          std::cout << "glue " << v.glue << ": Z=" << v.z << ", Z without base=" << v.z_without_base << ", triple "
                    << join3(v.triple) << "\n";
        }
        std::cout << "expected phi(" << r.m << "," << r.n << ")=(" << r.expected.a << "," << r.expected.b << ","
                  << r.expected.c << ")\n"
                  << (r.passed ? "PASS" : "FAIL") << "\n";
      }
      code = r.passed ? kOk : kVerificationFailed;
    } else if (enum_cmd->parsed()) {
      EnumerateReport r = make_enumerate_report(enum_max_z, enum_max_edges, settings.jobs);
      if (json_out) {
        std::cout << json(r).dump(2) << "\n";
      } else {
        for (const auto& g : r.graphs)
          std::cout << g.name << "\t" << g.graph.edge_count() << " edges\tZ=" << g.z << "\t" << to_graph6(g.graph) << "\n";
        std::cout << r.graphs.size() << " graphs\n";
      }
    } else if (cat_cmd->parsed()) {
      CaterpillarCheckReport r = caterpillar_uniqueness_check(max_part, max_length);
      if (json_out) {
        std::cout << json(r).dump(2) << "\n";
      } else {
        std::cout << r.specs << " specs, " << r.pairs << " distinct (Z, tail Z) pairs, " << r.shared_pairs
                  << " shared by several specs\n";
        for (const auto& c : r.counterexamples) std::cout << "counterexample: " << c << "\n";
        std::cout << (r.passed ? "PASS" : "FAIL") << "\n";
      }
      code = r.passed ? kOk : kVerificationFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  if (!settings.cache.empty()) save_cache(settings.cache, default_engine());
  return code;
}
