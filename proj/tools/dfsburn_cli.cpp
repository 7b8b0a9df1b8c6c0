// dfsburn: command-line front end for the DFS-burning bijection.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 input is not a parking
// function, 3 an exhaustive routine exceeded its budget.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfsburn/dfsburn.hpp"

namespace {

using namespace dfsburn;

enum ExitCode : int { kOk = 0, kUsage = 1, kCertificate = 2, kBudget = 3 };

struct GraphOptions {
  std::string path;
  std::optional<std::size_t> root;
  Budget budget;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
  cmd->add_option("graph", opts.path, "Edge-list file ('-' for stdin)")->required();
  cmd->add_option("--root", opts.root, "Root vertex (overrides the file's root line)");
  cmd->add_option("--max-edges", opts.budget.max_edges, "Edge budget for tree and subset enumeration")
      ->capture_default_str();
  cmd->add_option("--max-subsets", opts.budget.max_candidates,
                  "Budget for candidate vectors examined by exhaustive parking searches")
      ->capture_default_str();
}

Graph load(const GraphOptions& opts) {
  if (opts.path == "-") return read_edge_list(std::cin, opts.root);
  std::ifstream in(opts.path);
  if (!in) throw ParseError("cannot open '" + opts.path + "'");
  return read_edge_list(in, opts.root);
}

int run_bij(const GraphOptions& opts, const std::string& pf_text, bool dot) {
  const Graph g = load(opts);
  const ParkingFunction p = parse_csv(g, pf_text);
  const BurnResult burn = dfs_burn(g, p);
  if (dot) {
    write_dot(std::cout, g, burn);
    return burn.is_tree() ? kOk : kCertificate;
  }
  if (!burn.is_tree()) {
    std::cout << "NOT A PARKING FUNCTION\n";
    std::cout << "certificate: " << burn.certificate().unburnt << '\n';
    std::cout << "trace: " << format_trace(burn.trace()) << '\n';
    return kCertificate;
  }
  const BurnedTree& result = burn.tree();
  std::cout << "tree: " << result.tree << '\n';
  std::cout << "dampened:";
  for (std::size_t k = 0; k < result.dampened.size(); ++k) std::cout << (k ? "," : " ") << result.dampened[k];
  std::cout << '\n';
  std::cout << "trace: " << format_trace(result.trace) << '\n';
  const auto kappa = kappa_number(g, result.tree);
  std::cout << "kappa: " << kappa << '\n';
  const auto rank = static_cast<long long>(circuit_rank(g));
  std::cout << "g - deg = " << rank - static_cast<long long>(degree(p)) << '\n';
  return kOk;
}

int run_inv(const GraphOptions& opts, const std::string& tree_text) {
  const Graph g = load(opts);
  const RootedTree t = parse_tree(g, tree_text);
  std::cout << tree_to_parking(g, t).parking << '\n';
  return kOk;
}

int run_enum(const GraphOptions& opts, bool dot) {
  const Graph g = load(opts);
  struct Row {
    RootedTree tree;
    std::size_t kappa;
    ParkingFunction parking;
    BurnTrace trace;
  };
  std::vector<Row> rows;
  for (RootedTree& t : enumerate_spanning_trees(g, opts.budget)) {
    auto [p, trace] = tree_to_parking(g, t);
    const auto kappa = kappa_number(g, t);
    rows.push_back({std::move(t), kappa, std::move(p), std::move(trace)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.kappa != b.kappa) return a.kappa > b.kappa;
    return a.parking < b.parking;
  });

  if (dot) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto dampened = rows[k].trace.dampened_edges();
      write_dot(std::cout, g, rows[k].tree, dampened, "tree" + std::to_string(k + 1));
    }
    return kOk;
  }
  std::cout << "tree\tkappa\tpf\n";
  for (const Row& row : rows) std::cout << row.tree << '\t' << row.kappa << '\t' << row.parking << '\n';
  const auto pfs = enumerate_parking_functions(g, opts.budget);
  std::cout << "spanning trees: " << rows.size() << '\n';
  std::cout << "parking functions: " << pfs.size() << '\n';
  std::cout << "kappa polynomial: " << format_polynomial(kappa_generating_function(g, opts.budget)) << '\n';
  std::cout << "pf degree polynomial: " << format_polynomial(pf_degree_generating_function(g, opts.budget)) << '\n';
  std::cout << "T(1,y): " << format_polynomial(tutte_one_y(g, opts.budget)) << '\n';
  return kOk;
}

int run_tutte(const GraphOptions& opts) {
  const Graph g = load(opts);
  std::cout << "T(1,y): " << format_polynomial(tutte_one_y(g, opts.budget)) << '\n';
  std::cout << "pf degree: " << format_polynomial(pf_degree_generating_function(g, opts.budget)) << '\n';
  std::cout << "kappa: " << format_polynomial(kappa_generating_function(g, opts.budget)) << '\n';
  return kOk;
}

int run_verify(const GraphOptions& opts) {
  const Graph g = load(opts);
  std::size_t failed = 0;
  for (const auto& check : checks::run_all(g, opts.budget)) {
    if (check.passed) {
      std::cout << "PASS " << check.name << '\n';
    } else {
      ++failed;
      std::cout << "FAIL " << check.name << ": " << check.detail << '\n';
    }
  }
  if (failed == 0) {
    std::cout << "all checks passed\n";
    return kOk;
  }
  std::cout << failed << " check(s) failed\n";
  return kUsage;
}

void print_labeled(const Graph& g, bool dot, const std::string& name) {
  if (dot)
    write_dot(std::cout, g, name);
  else
    write_edge_list(std::cout, g);
}

int run_threshold(const std::string& symbols, bool all_labelings, bool dot) {
  const BuildSequence seq(symbols);
  const Graph built = build_threshold(seq);
  if (!all_labelings) {
    if (!dot) std::cout << "# build sequence " << seq.symbols() << '\n';
    print_labeled(label_by_reverse_degree(built), dot, "threshold");
    return kOk;
  }
  const auto labelings = all_reverse_degree_labelings(built);
  for (std::size_t k = 0; k < labelings.size(); ++k) {
    if (!dot) {
      if (k) std::cout << '\n';
      std::cout << "# labeling " << k + 1 << " of " << labelings.size() << ":";
      for (Vertex v = 0; v < labelings[k].new_label.size(); ++v)
        std::cout << ' ' << v << "->" << labelings[k].new_label[v];
      std::cout << '\n';
    }
    print_labeled(labelings[k].graph, dot, "labeling" + std::to_string(k + 1));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DFS-burning bijection between parking functions and spanning trees"};
  app.require_subcommand(1);

  GraphOptions bij_opts, inv_opts, enum_opts, tutte_opts, verify_opts;
  std::string pf_text, tree_text, sequence;
  bool bij_dot = false, enum_dot = false, threshold_dot = false, all_labelings = false;

  auto* bij = app.add_subcommand("bij", "Burn a parking function into its spanning tree");
  add_graph_options(bij, bij_opts);
  bij->add_option("--pf", pf_text, "Values on non-root vertices in increasing order, e.g. 0,0,1,0")->required();
  bij->add_flag("--dot", bij_dot, "Emit the burn as a DOT digraph");

  auto* inv = app.add_subcommand("inv", "Map a spanning tree to its parking function");
  add_graph_options(inv, inv_opts);
  inv->add_option("--tree", tree_text, "Directed edges parent>child, e.g. 0>2,2>3,2>4,3>1")->required();

  auto* en = app.add_subcommand("enum", "Tabulate every spanning tree with its kappa-number and parking function");
  add_graph_options(en, enum_opts);
  en->add_flag("--dot", enum_dot, "Emit one DOT digraph per tree");

  auto* tutte = app.add_subcommand("tutte", "Print T(1,y), the PF-degree and kappa generating polynomials");
  add_graph_options(tutte, tutte_opts);

  auto* verify = app.add_subcommand("verify", "Run every consistency check on one graph");
  add_graph_options(verify, verify_opts);

  auto* threshold = app.add_subcommand("threshold", "Build a threshold graph and label it by reverse degree");
  threshold->add_option("sequence", sequence, "Build sequence such as '*iddid'")->required();
  threshold->add_flag("--all-labelings", all_labelings, "List every reverse-degree labeling");
  threshold->add_flag("--dot", threshold_dot, "Emit DOT instead of an edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bij) return run_bij(bij_opts, pf_text, bij_dot);
    if (*inv) return run_inv(inv_opts, tree_text);
    if (*en) return run_enum(enum_opts, enum_dot);
    if (*tutte) return run_tutte(tutte_opts);
    if (*verify) return run_verify(verify_opts);
    if (*threshold) return run_threshold(sequence, all_labelings, threshold_dot);
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
