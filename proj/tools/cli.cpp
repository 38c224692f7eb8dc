#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conetutte/cone.hpp"
#include "conetutte/poset.hpp"
#include "conetutte/trees.hpp"
#include "conetutte/tutte.hpp"
#include "conetutte/verify.hpp"

namespace conetutte::cli {

namespace {

void print_poly(std::ostream& out, const IntPolynomial& p) {
  out << p.to_json() << "\n" << p.to_string() << "\n";
}

void check_tree_size(std::size_t n) {
  if (n < 1 || n > max_tree_vertices())
    throw InvalidArgument("N=" + std::to_string(n) + " outside 1.." + std::to_string(max_tree_vertices()) +
                          " (set CONETUTTE_MAX_N to raise the bound)");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

// Path first, star last, everything else in code order.
std::vector<CanonicalTree> table_order(std::vector<CanonicalTree> trees, std::size_t n) {
  const auto path = canonical_code(path_graph(n));
  const auto star = canonical_code(star_graph(n));
  auto rank = [&](const CanonicalTree& t) { return t.code == path ? 0 : (t.code == star ? 2 : 1); };
  std::stable_sort(trees.begin(), trees.end(),
                   [&](const CanonicalTree& a, const CanonicalTree& b) { return rank(a) < rank(b); });
  return trees;
}

void print_summary(std::ostream& out, const std::vector<verify::Report>& reports) {
  std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::size_t>> rows;
  for (const auto& r : reports) {
    auto& c = rows[{r.suite, r.identity}];
    ++c.first;
    if (!r.pass) ++c.second;
  }
  out << "# summary\n";
  for (const auto& [key, c] : rows) {
    out << "# " << (c.second == 0 ? "PASS" : "FAIL") << "  " << key.first << "  " << key.second
        << "  reports=" << c.first << " failed=" << c.second << "\n";
  }
  out << "# " << (verify::all_passed(reports) ? "verified" : "VERIFICATION FAILED") << " (" << reports.size()
      << " reports)\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tutte polynomials T(1,y) of cones over graphs, tree shifts and their poset"};
  app.require_subcommand(1);

  std::string file;
  bool full = false;
  auto* tutte_cmd = app.add_subcommand("tutte", "T(1,y) of a graph (or the full T(x,y) with --full)");
  tutte_cmd->add_option("FILE", file, "edge-list file")->required();
  tutte_cmd->add_flag("--full", full, "bivariate polynomial by subset expansion");

  auto* cone_cmd = app.add_subcommand("cone-f", "f(G) = T(1,y) of Cone(G)");
  cone_cmd->add_option("FILE", file, "edge-list file")->required();

  VertexId vertex = 0;
  auto* gv_cmd = app.add_subcommand("gv", "g_v(G): Cone(G) with the spoke at v deleted");
  gv_cmd->add_option("FILE", file, "edge-list file")->required();
  gv_cmd->add_option("--vertex", vertex, "vertex id")->required();

  std::size_t n = 0;
  bool count_only = false;
  auto* trees_cmd = app.add_subcommand("trees", "all trees on N vertices up to isomorphism");
  trees_cmd->add_option("N", n, "vertex count")->required();
  trees_cmd->add_flag("--count", count_only, "print only the number of trees");

  VertexId v1 = 0, vk = 0;
  auto* shift_cmd = app.add_subcommand("shift", "apply a generalized tree shift");
  shift_cmd->add_option("FILE", file, "edge-list file holding a tree")->required();
  shift_cmd->add_option("--v1", v1, "one end of the shift path")->required();
  shift_cmd->add_option("--vk", vk, "other end of the shift path")->required();

  std::string dot_path, json_path;
  unsigned jobs = 1;
  auto* poset_cmd = app.add_subcommand("poset", "build the tree-shift poset on N vertices");
  poset_cmd->add_option("N", n, "vertex count")->required();
  poset_cmd->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
  poset_cmd->add_option("--json", json_path, "write the Hasse diagram as JSON");
  poset_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* table_cmd = app.add_subcommand("table", "f(T) for every tree on N vertices");
  table_cmd->add_option("N", n, "vertex count")->required();

  std::string suite;
  verify::SuiteOptions options;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("SUITE", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(verify::kSuiteNames), std::end(verify::kSuiteNames))));
  verify_cmd->add_option("--n", options.max_n, "largest tree size")->capture_default_str();
  verify_cmd->add_option("--trials", options.trials, "random trials")->capture_default_str();
  verify_cmd->add_option("--seed", options.seed, "64-bit seed")->capture_default_str();
  verify_cmd->add_option("--jobs", options.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_flag("--verbose", options.verbose, "also emit every passing check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*tutte_cmd) {
      auto g = read_edge_list_file(file);
      if (full) {
        auto t = tutte_subset_oracle(g);
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : t.terms()) terms.push_back({e.first, e.second, to_int64(c)});
        out << terms.dump() << "\n" << t.to_string() << "\n";
      } else {
        print_poly(out, tutte_at_x1(g));
      }
    } else if (*cone_cmd) {
      print_poly(out, cone_f(read_edge_list_file(file)));
    } else if (*gv_cmd) {
      print_poly(out, cone_g(read_edge_list_file(file), vertex));
    } else if (*trees_cmd) {
      check_tree_size(n);
      auto trees = enumerate_trees(n);
      if (count_only) {
        out << trees.size() << "\n";
      } else {
        for (std::size_t i = 0; i < trees.size(); ++i) {
          if (i) out << "\n";
          out << "# tree " << i << " code=" << trees[i].code << " leaves=" << trees[i].leaf_count() << "\n"
              << to_edge_list(trees[i].graph);
        }
      }
    } else if (*shift_cmd) {
      auto tree = read_edge_list_file(file);
      if (!tree.is_tree()) throw InvalidArgument("input is not a tree");
      auto shifted = shifted_tree(tree, {v1, vk});
      out << "# leaves before=" << tree.leaves().size() << " after=" << shifted.leaves().size() << "\n"
          << "# code before=" << canonical_code(tree) << " after=" << canonical_code(shifted) << "\n"
          << to_edge_list(shifted);
    } else if (*poset_cmd) {
      check_tree_size(n);
      auto d = build_poset(n, jobs);
      if (!dot_path.empty()) write_file(dot_path, export_dot(d));
      if (!json_path.empty()) write_file(json_path, export_json(d));
      out << "nodes=" << d.nodes.size() << " covers=" << d.covers.size() << "\n";
    } else if (*table_cmd) {
      check_tree_size(n);
      for (const auto& t : table_order(enumerate_trees(n), n)) {
        auto f = cone_f(t.graph);
        nlohmann::ordered_json j;
        j["tree"] = t.code;
        j["leaves"] = t.leaf_count();
        j["f"] = f.to_int64_vector();
        j["f_text"] = f.to_string();
        out << j.dump() << "\n";
      }
    } else if (*verify_cmd) {
      check_tree_size(options.max_n);
      auto reports = verify::run_suite(suite, options);
      for (const auto& r : reports) out << r.to_json_line() << "\n";
      print_summary(out, reports);
      return verify::all_passed(reports) ? kExitOk : kExitVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace conetutte::cli
