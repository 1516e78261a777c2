#include "pairdom/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairdom/block_solver.hpp"
#include "pairdom/errors.hpp"
#include "pairdom/generators.hpp"
#include "pairdom/interval_solver.hpp"
#include "pairdom/io.hpp"
#include "pairdom/legacy_mpd.hpp"
#include "pairdom/oracle.hpp"
#include "pairdom/reductions.hpp"
#include "pairdom/text_lines.hpp"

namespace pairdom::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

/// Raised inside a subcommand to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

/// Either file format, told apart by the header's field count.
struct Instance {
  Graph graph;
  std::optional<interval::IntervalRep> intervals;
};

Instance load_instance(const std::string &path) {
  const std::string text = read_text_file(path);
  detail::LineReader reader(text);
  auto header = reader.next();
  if (!header) throw ParseError(0, "empty input");
  Instance inst;
  if (header->text.find(' ') == std::string_view::npos) {
    inst.intervals = interval::parse_intervals(text);
    inst.graph = interval::interval_graph_unchecked(*inst.intervals).graph;
  } else {
    inst.graph = parse_graph(text);
  }
  return inst;
}

struct RunReport {
  int n = 0;
  std::size_t m = 0;
  std::string instance_class;
  std::string solver;
  PairedSolution solution;
  double time_ms = 0;
  VerifyResult verdict;
};

json report_json(const RunReport &r) {
  return {{"instance", {{"n", r.n}, {"m", r.m}, {"class", r.instance_class}}},
          {"solver", r.solver},
          {"solution", solution_to_json(r.solution)},
          {"time_ms", r.time_ms},
          {"verified", r.verdict.valid},
          {"reason", to_string(r.verdict.reason)}};
}

void print_report(const RunReport &r, std::ostream &out) {
  out << "instance: n=" << r.n << " m=" << r.m << " class=" << r.instance_class << '\n'
      << "solver:   " << r.solver << '\n'
      << "size:     " << r.solution.size() << '\n'
      << "vertices:";
  for (Vertex v : r.solution.vertices) out << ' ' << v;
  out << "\npairs:   ";
  for (auto [u, v] : r.solution.pairs) out << " (" << u << ',' << v << ')';
  out << "\ntime_ms:  " << std::fixed << std::setprecision(3) << r.time_ms
      << std::defaultfloat << '\n'
      << "verified: " << (r.verdict.valid ? "yes" : "NO") << " ("
      << to_string(r.verdict.reason) << ")\n";
}

int finish_report(RunReport &r, const Graph &g, bool as_json, const std::string &out_path,
                  std::ostream &out, std::ostream &err) {
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.verdict = verify_paired_dominating(g, r.solution);
  if (as_json)
    out << report_json(r).dump(2) << '\n';
  else
    print_report(r, out);
  if (!out_path.empty()) write_text_file(out_path, solution_to_json(r.solution).dump() + "\n");
  if (!r.verdict.valid) {
    err << "error: solution failed verification (" << to_string(r.verdict.reason) << ")\n";
    return kVerifyFailed;
  }
  return kOk;
}

template <typename F> double time_ms(F &&f) {
  auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int cmd_solve(const std::string &path, const std::string &cls, bool as_json,
              const std::string &out_path, std::ostream &out, std::ostream &err) {
  Instance inst = load_instance(path);
  const Graph &g = inst.graph;
  if (cls == "interval" && !inst.intervals)
    throw Exit{kBadInput, "--class interval needs an interval-format input"};
  if (g.num_vertices() < 2 || g.has_isolated_vertex())
    throw Exit{kWrongClass, "instance needs n >= 2 and no isolated vertices"};

  RunReport r;
  auto try_tree = [&] {
    if (!block::is_tree(g)) return false;
    r.time_ms = time_ms([&] { r.solution = block::mpdt(g); });
    r.instance_class = "tree";
    r.solver = "mpdt";
    return true;
  };
  auto try_block = [&] {
    if (!block::is_block_graph(g)) return false;
    r.time_ms = time_ms([&] { r.solution = block::mpdb(g); });
    r.instance_class = "block";
    r.solver = "mpdb";
    return true;
  };
  auto try_interval = [&] {
    if (!inst.intervals || !g.is_connected()) return false;
    r.time_ms = time_ms([&] { r.solution = interval::mpdi(*inst.intervals); });
    r.instance_class = "interval";
    r.solver = "mpdi";
    return true;
  };

  bool ok = false;
  if (cls == "tree") ok = try_tree();
  else if (cls == "block") ok = try_block();
  else if (cls == "interval") ok = try_interval();
  else ok = try_tree() || try_block() || try_interval();
  if (!ok) throw Exit{kWrongClass, "instance is not in class '" + cls + "'"};
  return finish_report(r, g, as_json, out_path, out, err);
}

oracle::OracleBudget budget_from_env() {
  oracle::OracleBudget budget;
  if (const char *env = std::getenv("PAIRDOM_ORACLE_MAX")) {
    try {
      budget.max_vertices = std::stoi(env);
    } catch (const std::exception &) {
      throw Exit{kBadInput, "PAIRDOM_ORACLE_MAX must be an integer"};
    }
  }
  return budget;
}

int cmd_oracle(const std::string &path, bool as_json, const std::string &out_path,
               std::ostream &out, std::ostream &err) {
  Instance inst = load_instance(path);
  RunReport r;
  r.instance_class = inst.intervals ? "interval" : "graph";
  r.solver = "oracle";
  const auto budget = budget_from_env();
  r.time_ms = time_ms([&] { r.solution = oracle::gamma_p_bruteforce(inst.graph, budget); });
  return finish_report(r, inst.graph, as_json, out_path, out, err);
}

int cmd_verify(const std::string &path, const std::string &solution_path, bool as_json,
               std::ostream &out) {
  Instance inst = load_instance(path);
  json doc;
  try {
    doc = json::parse(read_text_file(solution_path));
  } catch (const json::parse_error &e) {
    throw ParseError(0, std::string("solution JSON: ") + e.what());
  }
  const PairedSolution sol = solution_from_json(doc);
  const VerifyResult v = verify_paired_dominating(inst.graph, sol);
  if (as_json)
    out << json{{"valid", v.valid}, {"reason", to_string(v.reason)}, {"size", sol.size()}}.dump(2)
        << '\n';
  else
    out << (v.valid ? "valid" : "invalid") << " (" << to_string(v.reason) << "), size "
        << sol.size() << '\n';
  return v.valid ? kOk : kVerifyFailed;
}

std::string join(const std::vector<int> &xs) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  s << '}';
  return s.str();
}

std::string join(const std::vector<interval::Coord> &xs) {
  std::vector<int> tmp(xs.begin(), xs.end());
  return join(tmp);
}

int cmd_counterexample(bool as_json, std::ostream &out, std::ostream &err) {
  const auto rep = interval::counterexample_cex6();
  const auto legacy = interval::legacy_mpd(rep);
  const auto ig = interval::interval_graph(rep);
  const auto fast = interval::mpdi(ig.graph, ig.ordering);
  const auto exact = oracle::gamma_p_bruteforce(ig.graph);

  PairedSolution legacy_as_set;
  legacy_as_set.vertices = legacy.result;
  std::sort(legacy_as_set.vertices.begin(), legacy_as_set.vertices.end());
  const bool legacy_dominates = is_dominating(ig.graph, legacy_as_set.vertices);
  const bool fast_ok = verify_paired_dominating(ig.graph, fast).valid;
  const bool exact_ok = verify_paired_dominating(ig.graph, exact).valid;
  const bool defect = legacy.result.size() > exact.size();

  if (as_json) {
    json table = json::array();
    for (const auto &row : legacy.table)
      table.push_back({{"i", row.index},
                       {"a", row.left},
                       {"b", row.right},
                       {"max_a_ifb", row.max_left_before},
                       {"l", row.overlap_min_left},
                       {"A", row.left_set}});
    json steps = json::array();
    for (const auto &s : legacy.steps)
      steps.push_back({{"j", s.j}, {"probe", s.probe}, {"k", s.k}, {"mpd", s.set}});
    out << json{{"table", table},
                {"trace", steps},
                {"legacy", {{"vertices", legacy.result}, {"size", legacy.result.size()},
                            {"dominating", legacy_dominates}}},
                {"mpdi", solution_to_json(fast)},
                {"mpdi_verified", fast_ok},
                {"oracle", solution_to_json(exact)},
                {"oracle_verified", exact_ok},
                {"legacy_suboptimal", defect}}
               .dump(2)
        << '\n';
  } else {
    out << "CEX6 intervals (numbered by right endpoint):\n";
    out << std::left << std::setw(4) << "i" << std::setw(6) << "a_i" << std::setw(6) << "b_i"
        << std::setw(16) << "max a(IFB(a_i))" << std::setw(6) << "l_i"
        << "A_i\n";
    for (const auto &row : legacy.table)
      out << std::setw(4) << row.index << std::setw(6) << row.left << std::setw(6) << row.right
          << std::setw(16) << row.max_left_before << std::setw(6) << row.overlap_min_left
          << (row.left_set.empty() ? std::string("{}") : join(row.left_set)) << '\n';
    out << std::right << "\nlegacy MPD trace:\n";
    for (const auto &s : legacy.steps)
      out << "  j=" << s.j << "  max a(IFB(min(a_j,a_l_j)))=" << s.probe << "  k=" << s.k
          << "  MPD(" << s.j << ")=" << join(s.set) << '\n';
    out << "\nlegacy result:  " << join(legacy.result) << " size " << legacy.result.size()
        << (legacy_dominates ? " (dominating)" : " (NOT dominating)") << '\n';
    out << "mpdi result:    " << join(fast.vertices) << " size " << fast.size()
        << (fast_ok ? " (verified)" : " (FAILED verification)") << '\n';
    out << "oracle optimum: " << join(exact.vertices) << " size " << exact.size()
        << (exact_ok ? " (verified)" : " (FAILED verification)") << '\n';
    out << (defect ? "legacy MPD is suboptimal on CEX6\n" : "legacy MPD matched the optimum\n");
  }
  if (!fast_ok || !exact_ok || fast.size() != exact.size()) {
    err << "error: reproduction regression\n";
    return kInternal;
  }
  return defect ? kOk : kInternal;
}

int cmd_gen(const gen::GeneratorSpec &spec, const std::string &out_path, std::ostream &out) {
  const std::string text = gen::generate_text(spec);
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
  return kOk;
}

json provenance_json(const reductions::ReductionOutput &red) {
  json vertices = json::array();
  for (Vertex v = 1; v <= red.gprime.num_vertices(); ++v) {
    const auto &p = red.provenance[v];
    json item{{"id", v}, {"tag", reductions::to_string(p.part)}, {"index", p.index}};
    if (p.part == reductions::Part::E1 || p.part == reductions::Part::E2) {
      auto [a, b] = red.source_edges[p.index - 1];
      item["edge"] = {a, b};
    }
    vertices.push_back(item);
  }
  return {{"variant", reductions::to_string(red.variant)},
          {"source", {{"n", red.n()}, {"m", red.m()}}},
          {"n", red.gprime.num_vertices()},
          {"m", red.gprime.num_edges()},
          {"vertices", vertices}};
}

int cmd_reduce(const std::string &path, const std::string &variant, const std::string &out_path,
               std::string prov_path, std::ostream &out) {
  const Graph g = parse_graph(read_text_file(path));
  if (g.num_edges() == 0) throw Exit{kBadInput, "reduction needs a source graph with an edge"};
  const auto red = reductions::reduce(
      g, variant == "split" ? reductions::Variant::split : reductions::Variant::bipartite);
  const std::string text = serialize_graph(red.gprime);
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
    if (prov_path.empty()) prov_path = out_path + ".provenance.json";
  }
  if (!prov_path.empty()) write_text_file(prov_path, provenance_json(red).dump(2) + "\n");
  return kOk;
}

std::vector<int> parse_sizes(const std::string &list) {
  std::vector<int> sizes;
  std::stringstream in(list);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception &) {
      throw Exit{kBadInput, "bad size '" + tok + "'"};
    }
    if (value < 2 || value > 5e7 || value != std::floor(value))
      throw Exit{kBadInput, "size '" + tok + "' must be an integer in 2..5e7"};
    sizes.push_back(static_cast<int>(value));
  }
  if (sizes.empty()) throw Exit{kBadInput, "empty size list"};
  return sizes;
}

int cmd_bench(const std::vector<std::string> &kinds, const std::string &size_list,
              std::uint64_t seed, bool as_json, std::ostream &out, std::ostream &err) {
  const auto sizes = parse_sizes(size_list);
  if (kinds.empty()) throw Exit{kBadInput, "no benchmark kind given"};
  json rows = json::array();
  bool all_valid = true;
  if (!as_json)
    out << std::left << std::setw(10) << "kind" << std::setw(8) << "solver" << std::setw(12)
        << "n" << std::setw(12) << "m" << std::setw(12) << "time_ms" << "ratio\n";
  for (const auto &name : kinds) {
    gen::GeneratorSpec spec;
    spec.kind = gen::kind_from_string(name);
    if (spec.kind == gen::Kind::vc_source) throw Exit{kBadInput, "cannot bench vc-source"};
    spec.seed = seed;
    double previous = 0;
    for (int n : sizes) {
      spec.n = n;
      Graph g;
      PairedSolution sol;
      double ms = 0;
      std::string solver;
      if (spec.kind == gen::Kind::interval) {
        const auto rep = gen::generate_intervals(spec);
        solver = "mpdi";
        ms = time_ms([&] { sol = interval::mpdi(rep); });
        g = interval::interval_graph(rep).graph;
      } else {
        g = gen::generate_graph(spec);
        solver = spec.kind == gen::Kind::tree ? "mpdt" : "mpdb";
        ms = time_ms([&] {
          sol = spec.kind == gen::Kind::tree ? block::mpdt(g) : block::mpdb(g);
        });
      }
      const bool valid = verify_paired_dominating(g, sol).valid;
      all_valid &= valid;
      const double ratio = previous > 0 ? ms / previous : 0;
      rows.push_back({{"kind", name},
                      {"solver", solver},
                      {"n", n},
                      {"m", g.num_edges()},
                      {"time_ms", ms},
                      {"ratio", previous > 0 ? json(ratio) : json(nullptr)},
                      {"size", sol.size()},
                      {"verified", valid}});
      if (!as_json) {
        out << std::left << std::setw(10) << name << std::setw(8) << solver << std::setw(12) << n
            << std::setw(12) << g.num_edges() << std::setw(12) << std::fixed
            << std::setprecision(2) << ms;
        if (previous > 0) out << ratio;
        else out << '-';
        out << std::defaultfloat << (valid ? "" : "  (VERIFY FAILED)") << '\n';
      }
      previous = ms;
    }
  }
  if (as_json) out << rows.dump(2) << '\n';
  if (!all_valid) {
    err << "error: a benchmark solution failed verification\n";
    return kVerifyFailed;
  }
  return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact paired-domination solvers for trees, block graphs and interval graphs"};
  app.name("pairdom");
  app.require_subcommand(1);

  std::string input, solution_path, out_path, prov_path;
  bool as_json = false;

  auto *solve = app.add_subcommand("solve", "Solve a tree, block or interval instance");
  std::string cls = "auto";
  solve->add_option("input", input, "Graph or interval file")->required();
  solve->add_option("--class", cls, "Instance class")
      ->check(CLI::IsMember({"tree", "block", "interval", "auto"}));
  solve->add_option("--out", out_path, "Write the solution JSON here");
  solve->add_flag("--json", as_json, "Machine-readable report");

  auto *orc = app.add_subcommand("oracle", "Exhaustive minimum paired-dominating set");
  orc->add_option("input", input, "Graph or interval file")->required();
  orc->add_option("--out", out_path, "Write the solution JSON here");
  orc->add_flag("--json", as_json, "Machine-readable report");

  auto *ver = app.add_subcommand("verify", "Check a solution JSON against an instance");
  ver->add_option("input", input, "Graph or interval file")->required();
  ver->add_option("solution", solution_path, "Solution JSON")->required();
  ver->add_flag("--json", as_json, "Machine-readable verdict");

  auto *gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen::GeneratorSpec spec;
  std::string kind = "tree";
  gen_cmd->add_option("--kind", kind, "tree | block | interval | vc-source")
      ->check(CLI::IsMember({"tree", "block", "interval", "vc-source"}));
  gen_cmd->add_option("--n", spec.n, "Vertex count")->required();
  gen_cmd->add_option("--seed", spec.seed, "64-bit seed");
  gen_cmd->add_option("--max-clique", spec.max_clique, "Largest clique (block)");
  gen_cmd->add_option("--max-len", spec.max_length, "Longest interval (interval)");
  gen_cmd->add_option("--extra-percent", spec.extra_edge_percent,
                      "Chance of each non-tree edge (vc-source)");
  gen_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");

  auto *red = app.add_subcommand("reduce", "Build the vertex-cover reduction graph");
  std::string variant = "bipartite";
  red->add_option("input", input, "Source graph")->required();
  red->add_option("--variant", variant, "bipartite | split")
      ->check(CLI::IsMember({"bipartite", "split"}));
  red->add_option("--out", out_path, "Reduced graph file (stdout if omitted)");
  red->add_option("--provenance", prov_path, "Provenance JSON file");

  auto *cex = app.add_subcommand("counterexample", "Replay the legacy interval program on CEX6");
  cex->add_flag("--json", as_json, "Machine-readable comparison");

  auto *bench = app.add_subcommand("bench", "Time the linear solvers on seeded instances");
  std::vector<std::string> kinds;
  std::string sizes;
  std::uint64_t seed = 1;
  bench->add_option("--kind", kinds, "block | interval | tree (repeatable)")
      ->delimiter(',')
      ->check(CLI::IsMember({"block", "interval", "tree"}));
  bench->add_option("--sizes", sizes, "Comma-separated sizes, e.g. 1e5,1e6")->required();
  bench->add_option("--seed", seed, "Seed");
  bench->add_flag("--json", as_json, "Machine-readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (*solve) return cmd_solve(input, cls, as_json, out_path, out, err);
    if (*orc) return cmd_oracle(input, as_json, out_path, out, err);
    if (*ver) return cmd_verify(input, solution_path, as_json, out);
    if (*gen_cmd) {
      spec.kind = gen::kind_from_string(kind);
      return cmd_gen(spec, out_path, out);
    }
    if (*red) return cmd_reduce(input, variant, out_path, prov_path, out);
    if (*cex) return cmd_counterexample(as_json, out, err);
    if (*bench) return cmd_bench(kinds, sizes, seed, as_json, out, err);
  } catch (const Exit &e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ArgumentError &e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InstanceError &e) {
    err << "error: " << e.what() << '\n';
    return kWrongClass;
  } catch (const CapacityError &e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

} // namespace pairdom::cli
