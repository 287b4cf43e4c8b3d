// Command-line surface: parse graph files (DSL or JSON), compute the
// coproducts / antipodes / enumerations, and run the law checker.
//
// Exit codes: 0 success or all checks passed, 1 check failure,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "hopfgraph/hopfgraph.hpp"

#if defined(_WIN32)
#define HOPFGRAPH_ISATTY() false
#else
#include <unistd.h>
#define HOPFGRAPH_ISATTY() (isatty(fileno(stdout)) != 0)
#endif

namespace {

using namespace hopfgraph;

struct LoadedInput {
  OrientedGraph graph;  // disjoint union of every graph block in the file
  std::map<VertexId, std::string> vertex_names;
  std::string name;
};

LoadedInput load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw GraphError(errc::bad_config, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  auto docs = parse_documents_any(buf.str());
  if (docs.empty()) {
    throw SyntaxError(1, 1, "no graph blocks in '" + path + "'");
  }
  LoadedInput loaded;
  loaded.name = docs.front().name;
  OrientedGraph acc;
  for (const auto& doc : docs) {
    VertexId voff = acc.vertices().empty() ? 0 : acc.max_vertex_id() + 1;
    for (const auto& [v, n] : doc.vertex_names) {
      loaded.vertex_names[v + voff] =
          docs.size() > 1 ? doc.name + "." + n : n;
    }
    acc = disjoint_union(acc, doc.graph);
  }
  loaded.graph = std::move(acc);
  return loaded;
}

CoverVariant parse_variant(const std::string& s) {
  if (s == "full") return CoverVariant::Full;
  if (s == "1pi") return CoverVariant::Locally1PI;
  if (s == "cf") return CoverVariant::PosetCompatible;
  if (s == "cf1pi") return CoverVariant::PosetCompatibleLocally1PI;
  throw CLI::ValidationError("--variant", "expected full|1pi|cf|cf1pi");
}

AlgebraMode parse_mode(const std::string& s) {
  if (s == "bi") return AlgebraMode::Bialgebra;
  if (s == "hopf") return AlgebraMode::Hopf;
  throw CLI::ValidationError("--mode", "expected bi|hopf");
}

ExternalPolicy parse_externals(const std::string& s) {
  if (s == "keep") return ExternalPolicy::Keep;
  if (s == "discard") return ExternalPolicy::Discard;
  throw CLI::ValidationError("--externals", "expected keep|discard");
}

EmitFormat parse_format(const std::string& s) {
  if (s == "text") return EmitFormat::Text;
  if (s == "dot") return EmitFormat::Dot;
  if (s == "json") return EmitFormat::Json;
  if (s == "latexish") return EmitFormat::Latexish;
  throw CLI::ValidationError("--format", "expected text|dot|json|latexish");
}

bool color_enabled() {
  return std::getenv("NO_COLOR") == nullptr && HOPFGRAPH_ISATTY();
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string vertex_list(const std::vector<VertexId>& vs,
                        const std::map<VertexId, std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += " ";
    auto it = names.find(vs[i]);
    out += it != names.end() ? it->second : "v" + std::to_string(vs[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// check subcommand

struct CheckOptions {
  std::string suite = "all";
  std::size_t max_vertices = 4;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::string variant;    // empty = all
  std::string mode;       // empty = both
  std::string externals;  // empty = both
};

bool is_experimental(const std::string& law) {
  const auto& ex = experimental_laws();
  return std::find(ex.begin(), ex.end(), law) != ex.end();
}

int report_line(const CheckReport& report, const std::string& cfg_label) {
  bool experimental = is_experimental(report.law);
  std::string status = report.passed() ? paint("PASS", "32")
                       : experimental  ? paint("INFO", "33")
                                       : paint("FAIL", "31");
  std::cout << status << " " << report.law;
  if (!cfg_label.empty()) std::cout << " [" << cfg_label << "]";
  std::cout << " instances=" << report.instances_run << "\n";
  if (!report.passed()) {
    const auto& f = report.failures.front();
    std::cerr << "  first witness:\n" << f.input_dsl << "  expected: "
              << f.expected << "\n  actual:   " << f.actual << "\n";
  }
  return report.passed() || experimental ? 0 : 1;
}

std::string cfg_label(const CoalgebraConfig& cfg) {
  std::string out;
  switch (cfg.variant) {
    case CoverVariant::Full: out = "full"; break;
    case CoverVariant::Locally1PI: out = "1pi"; break;
    case CoverVariant::PosetCompatible: out = "cf"; break;
    case CoverVariant::PosetCompatibleLocally1PI: out = "cf1pi"; break;
  }
  out += cfg.mode == AlgebraMode::Hopf ? "/hopf" : "/bi";
  out += cfg.externals == ExternalPolicy::Discard ? "/discard" : "/keep";
  return out;
}

int run_check(const CheckOptions& opt) {
  int failures = 0;
  if (opt.suite == "golden" || opt.suite == "all") {
    failures += report_line(golden_suite(), "");
    if (opt.suite == "golden") return failures ? 1 : 0;
  }

  // corpus: exhaustive at small size plus seeded random graphs with legs
  // and a second edge type
  ExhaustiveOptions ex;
  ex.max_vertices = std::min<std::size_t>(opt.max_vertices, 4);
  ex.max_internal_edges = ex.max_vertices >= 4 ? 5 : 4;
  std::vector<OrientedGraph> corpus = exhaustive_graphs(ex);
  GeneratorConfig gen;
  gen.max_vertices = opt.max_vertices;
  gen.max_internal_edges = 5;
  gen.edge_type_count = 2;
  gen.external_leg_probability = Rational(1, 4);
  gen.seed = opt.seed;
  for (auto& g : generate_graphs(gen, opt.trials)) {
    corpus.push_back(std::move(g));
  }
  gen.cycle_free_only = true;
  gen.seed = opt.seed + 1;
  for (auto& g : generate_graphs(gen, opt.trials)) {
    corpus.push_back(std::move(g));
  }

  static const std::vector<std::string> structural = {
      "canonical-relabel", "canonical-separates", "onepi-oracle",
      "loop-additive", "loc1pi-loop0-edgeless", "poset-rejects-cycles",
      "vertex-type-reversal", "shrink-transitive", "cover-bijection",
      "prop1-convex", "prop1-converse", "cuts-are-ideals",
      "cover-count-oracle", "keep-discard-coherence", "subgraph-transitivity",
      "algebra-laws", "no-zero-coeffs", "from-graph-multiplicative",
      "hopf-projection-algebra-map"};
  static const std::vector<std::string> per_variant_mode_policy = {
      "coassoc", "counit-axioms", "coproduct-algebra-morphism",
      "grading-compat"};
  static const std::vector<std::string> per_variant_policy = {
      "grouplike-residues", "quotient-consistency", "antipode-convolution",
      "antipode-involutive"};
  static const std::vector<std::string> per_policy = {
      "cut-coassoc", "cut-counit-axioms", "cut-algebra-morphism",
      "cut-grading", "cut-antipode-convolution", "cut-antipode-involutive",
      "comodule", "comodule-psi-experimental"};

  std::vector<CoverVariant> variants =
      opt.variant.empty()
          ? std::vector<CoverVariant>{CoverVariant::Full,
                                      CoverVariant::Locally1PI,
                                      CoverVariant::PosetCompatible,
                                      CoverVariant::PosetCompatibleLocally1PI}
          : std::vector<CoverVariant>{parse_variant(opt.variant)};
  std::vector<AlgebraMode> modes =
      opt.mode.empty()
          ? std::vector<AlgebraMode>{AlgebraMode::Bialgebra, AlgebraMode::Hopf}
          : std::vector<AlgebraMode>{parse_mode(opt.mode)};
  std::vector<ExternalPolicy> policies =
      opt.externals.empty()
          ? std::vector<ExternalPolicy>{ExternalPolicy::Keep,
                                        ExternalPolicy::Discard}
          : std::vector<ExternalPolicy>{parse_externals(opt.externals)};

  CoalgebraConfig def{};
  for (const auto& law : structural) {
    failures += report_line(run_law(law, corpus, def), "");
  }
  for (const auto& law : per_variant_mode_policy) {
    for (auto v : variants) {
      for (auto m : modes) {
        for (auto p : policies) {
          CoalgebraConfig cfg{v, m, p};
          failures += report_line(run_law(law, corpus, cfg), cfg_label(cfg));
        }
      }
    }
  }
  for (const auto& law : per_variant_policy) {
    for (auto v : variants) {
      for (auto p : policies) {
        CoalgebraConfig cfg{v, AlgebraMode::Hopf, p};
        failures += report_line(run_law(law, corpus, cfg), cfg_label(cfg));
      }
    }
  }
  for (const auto& law : per_policy) {
    for (auto p : policies) {
      CoalgebraConfig cfg{CoverVariant::PosetCompatible, AlgebraMode::Bialgebra,
                          p};
      failures += report_line(
          run_law(law, corpus, cfg),
          p == ExternalPolicy::Discard ? "discard" : "keep");
    }
  }
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bialgebras and Hopf algebras of oriented graphs"};
  app.require_subcommand(1);

  std::string file, variant = "full", mode = "bi", externals = "keep",
              format = "text";

  auto add_io = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("file", file, "graph file (DSL or JSON)")->required();
    if (with_format) {
      cmd->add_option("--format", format, "text|json|latexish");
    }
  };

  auto* cmd_coproduct = app.add_subcommand(
      "coproduct", "covering-subgraph coproduct of the input");
  add_io(cmd_coproduct);
  cmd_coproduct->add_option("--variant", variant, "full|1pi|cf|cf1pi");
  cmd_coproduct->add_option("--mode", mode, "bi|hopf");
  cmd_coproduct->add_option("--externals", externals, "keep|discard");

  auto* cmd_cut = app.add_subcommand(
      "cutcoproduct", "admissible-cut coproduct (cycle-free inputs)");
  add_io(cmd_cut);
  cmd_cut->add_option("--externals", externals, "keep|discard");

  auto* cmd_antipode =
      app.add_subcommand("antipode", "antipode in the Hopf quotient");
  add_io(cmd_antipode);
  cmd_antipode->add_option("--variant", variant, "full|1pi|cf|cf1pi");
  cmd_antipode->add_option("--externals", externals, "keep|discard");

  auto* cmd_covers = app.add_subcommand(
      "covers", "list covering partitions with their predicate flags");
  add_io(cmd_covers, false);
  cmd_covers->add_option("--variant", variant, "full|1pi|cf|cf1pi");

  auto* cmd_cuts = app.add_subcommand("cuts", "list admissible cuts");
  add_io(cmd_cuts, false);

  auto* cmd_canon =
      app.add_subcommand("canon", "canonical form as a DSL document");
  add_io(cmd_canon, false);

  std::string render_format = "dot";
  auto* cmd_render = app.add_subcommand("render", "emit the graph");
  cmd_render->add_option("file", file, "graph file (DSL or JSON)")->required();
  cmd_render->add_option("--format", render_format, "dot|text|json|latexish");

  CheckOptions check;
  auto* cmd_check = app.add_subcommand("check", "run the law suites");
  cmd_check->add_option("--suite", check.suite, "golden|laws|all");
  cmd_check->add_option("--max-vertices", check.max_vertices,
                        "random-corpus vertex bound");
  cmd_check->add_option("--trials", check.trials, "random graphs per family");
  cmd_check->add_option("--seed", check.seed, "generator seed");
  cmd_check->add_option("--variant", check.variant,
                        "restrict to one variant");
  cmd_check->add_option("--mode", check.mode, "restrict to one mode");
  cmd_check->add_option("--externals", check.externals,
                        "restrict to one policy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_check) {
      if (check.suite != "golden" && check.suite != "laws" &&
          check.suite != "all") {
        std::cerr << "--suite must be golden|laws|all\n";
        return 2;
      }
      return run_check(check);
    }

    if (*cmd_coproduct) {
      LoadedInput in = load_input(file);
      CoalgebraConfig cfg{parse_variant(variant), parse_mode(mode),
                          parse_externals(externals)};
      std::cout << emit(coproduct(in.graph, cfg), parse_format(format));
      return 0;
    }
    if (*cmd_cut) {
      LoadedInput in = load_input(file);
      std::cout << emit(cut_coproduct(in.graph, parse_externals(externals)),
                        parse_format(format));
      return 0;
    }
    if (*cmd_antipode) {
      LoadedInput in = load_input(file);
      CoalgebraConfig cfg{parse_variant(variant), AlgebraMode::Hopf,
                          parse_externals(externals)};
      AlgebraElement x = from_graph(in.graph, AlgebraMode::Hopf);
      std::cout << emit(antipode(x, cfg), parse_format(format));
      return 0;
    }
    if (*cmd_covers) {
      LoadedInput in = load_input(file);
      bool cycle_free = is_cycle_free(in.graph);
      for (const auto& p :
           enumerate_covering_partitions(in.graph, parse_variant(variant))) {
        std::string line;
        for (const auto& blk : p.blocks) {
          line += vertex_list(blk, in.vertex_names);
        }
        bool loc1pi = true;
        for (const auto& blk : p.blocks) {
          if (!is_1pi(induced_subgraph(in.graph, blk, ExternalPolicy::Discard))) {
            loc1pi = false;
            break;
          }
        }
        line += loc1pi ? " locally_1pi=yes" : " locally_1pi=no";
        if (cycle_free) {
          line += is_poset_compatible(in.graph, p) ? " poset_compatible=yes"
                                                   : " poset_compatible=no";
        } else {
          line += " poset_compatible=n/a";
        }
        std::cout << line << "\n";
      }
      return 0;
    }
    if (*cmd_cuts) {
      LoadedInput in = load_input(file);
      for (const auto& cut : enumerate_admissible_cuts(in.graph)) {
        std::cout << "V1=" << vertex_list(cut.upper, in.vertex_names)
                  << " V2=" << vertex_list(cut.lower, in.vertex_names) << "\n";
      }
      return 0;
    }
    if (*cmd_canon) {
      LoadedInput in = load_input(file);
      GraphDocument doc = make_document(in.graph, in.name);
      std::cout << emit(doc, EmitFormat::Text);
      return 0;
    }
    if (*cmd_render) {
      LoadedInput in = load_input(file);
      GraphDocument doc = make_document(in.graph, in.name);
      for (const auto& [v, n] : in.vertex_names) doc.vertex_names[v] = n;
      std::cout << emit(doc, parse_format(render_format));
      return 0;
    }
  } catch (const SyntaxError& e) {
    std::cerr << paint("error:", "31") << " " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << paint("error:", "31") << " " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
