// Command-line front end: exact | greedy | props | gen | cobip | verify.
// Exit codes for verify: 0 all pass, 1 counterexample, 2 inconclusive,
// 3 usage/parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "grundy/cobipartite.hpp"
#include "grundy/detect.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph6.hpp"
#include "grundy/grundy.hpp"
#include "grundy/invariants.hpp"
#include "grundy/rng.hpp"
#include "grundy/verify.hpp"

namespace {

using namespace grundy;

struct InputOpts {
  std::string g6, g6_file, edges_file;
  GenSpec spec;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--g6", in.g6, "graph6 string");
  cmd->add_option("--g6-file", in.g6_file, "file with one graph6 per line");
  cmd->add_option("--edges-file", in.edges_file,
                  "edge-list file ('u v' per line, 0-indexed)");
  cmd->add_option("--family", in.spec.family,
                  "generator family: tk|complete|bipartite|path|cycle|"
                  "petersen|ktree|chain|plane|gnp");
  cmd->add_option("--n", in.spec.n, "vertex count (family parameter)");
  cmd->add_option("--k", in.spec.k, "k (tk/ktree parameter)");
  cmd->add_option("--a", in.spec.a, "first part size");
  cmd->add_option("--b", in.spec.b, "second part size");
  cmd->add_option("--q", in.spec.q, "projective plane order (2,3,5,7)");
  cmd->add_option("--p", in.spec.p, "edge probability (gnp)");
  cmd->add_option("--seed", in.spec.seed, "generator seed");
}

Graph resolve_single(const InputOpts& in) {
  if (!in.g6.empty()) return from_graph6(in.g6);
  if (!in.g6_file.empty()) {
    auto lines = read_g6_lines(in.g6_file);
    if (lines.empty()) throw std::invalid_argument("empty graph6 file");
    return from_graph6(lines[0]);
  }
  if (!in.edges_file.empty()) {
    std::ifstream f(in.edges_file);
    if (!f) throw std::invalid_argument("cannot open " + in.edges_file);
    std::stringstream buf;
    buf << f.rdbuf();
    return from_edge_list(buf.str());
  }
  if (!in.spec.family.empty()) return make_graph(in.spec);
  throw std::invalid_argument(
      "no graph input: use --g6, --g6-file, --edges-file or --family");
}

int default_workers() {
  if (const char* env = std::getenv("GRUNDY_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_exact(const InputOpts& in, int timeout_ms) {
  Graph g = resolve_single(in);
  GrundyResult res =
      exact_grundy(g, std::chrono::milliseconds(timeout_ms));
  std::cout << "chi_ff = " << res.value << "\n";
  std::cout << "status = "
            << (res.status == SolveStatus::kOk ? "ok" : "timeout") << "\n";
  if (res.status == SolveStatus::kOk) {
    std::cout << "witness:\n" << res.witness.serialize();
  }
  return res.status == SolveStatus::kOk ? 0 : 2;
}

int cmd_greedy(const InputOpts& in, const std::vector<int>& order_opt) {
  Graph g = resolve_single(in);
  std::vector<int> order = order_opt;
  if (order.empty()) {
    order.resize(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
  }
  Coloring c = greedy_color(g, order);
  std::cout << "colors = " << c.max_color() << "\n" << c.serialize();
  return 0;
}

int cmd_props(const InputOpts& in) {
  Graph g = resolve_single(in);
  DegreeSummary deg = degrees(g);
  std::ostringstream out;
  out << "n=" << g.n() << " m=" << g.m();
  if (deg.min_degree)
    out << " delta=" << *deg.min_degree << " Delta=" << *deg.max_degree;
  auto gi = girth(g);
  out << " girth=" << (gi ? std::to_string(*gi) : "acyclic");
  out << " c4free=" << yesno(!has_induced_c4(g));
  out << " trianglefree=" << yesno(!has_triangle(g));
  out << " chordal="
      << yesno(std::holds_alternative<EliminationOrdering>(is_chordal(g)));
  out << " bipartite=" << yesno(bipartition(g).ok);
  out << " 2k2free=" << yesno(is_2k2_free(g));
  out << " col=" << coloring_number(g);
  if (g.n() >= 1) out << " rho=" << rho(g).str();
  if (g.n() <= kCliqueMaxN) out << " omega=" << clique_number(g);
  if (g.n() <= kChromaticMaxN) out << " chi=" << chromatic_number_exact(g);
  out << " simplicial=" << simplicial_vertices(g).count();
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_gen(const InputOpts& in, long long count) {
  if (in.spec.family.empty())
    throw std::invalid_argument("gen requires --family");
  for (long long i = 0; i < count; ++i) {
    GenSpec s = in.spec;
    if (count > 1) s.seed = mix_seed(in.spec.seed, uint64_t(i));
    std::cout << to_graph6(make_graph(s)) << "\n";
  }
  return 0;
}

int cmd_cobip(const InputOpts& in) {
  Graph h = resolve_single(in);
  BipartitionResult bp = bipartition(h);
  if (!bp.ok) {
    std::cout << "bipartite=no\n";
    return 0;
  }
  MatchingSolution mm = maximum_matching(h);
  MatchingSolution eds = min_edge_dominating(h);
  std::cout << "bipartite=yes 2k2free=" << yesno(is_2k2_free(h))
            << " alpha_prime=" << mm.size << " gamma_prime=" << eds.size
            << " chi_ff_complement=" << (h.n() - eds.size) << "\n";
  std::cout << "edge_dominating_matching:\n" << eds.serialize();
  return 0;
}

struct VerifyCli {
  InputOpts in;
  long long all_labeled = 0, all_labeled_upto = 0, all_bipartite_upto = 0;
  long long samples = 0;
  int log_m = 2;
  int workers = default_workers();
  int max_n = kExactGrundyMaxN;
  int timeout_ms = 0;
  int chordal_exact_stride = 0;
  int plant_offset = 0;
  std::string csv_path, json_path, dump_path;
  // probe only
  int ell = 2, delta_min = 1, delta_max = 6;
};

std::unique_ptr<GraphSource> resolve_source(const VerifyCli& v) {
  if (v.all_labeled > 0)
    return std::make_unique<AllLabeledSource>(int(v.all_labeled),
                                              int(v.all_labeled));
  if (v.all_labeled_upto > 0)
    return std::make_unique<AllLabeledSource>(1, int(v.all_labeled_upto));
  if (v.all_bipartite_upto > 0)
    return std::make_unique<AllBipartiteSource>(int(v.all_bipartite_upto));
  if (!v.in.g6.empty()) {
    std::vector<Graph> gs{from_graph6(v.in.g6)};
    return std::make_unique<VectorSource>(std::move(gs));
  }
  if (!v.in.g6_file.empty())
    return std::make_unique<G6LinesSource>(read_g6_lines(v.in.g6_file));
  if (!v.in.spec.family.empty())
    return std::make_unique<GenSpecSource>(v.in.spec,
                                           v.samples > 0 ? v.samples : 1);
  throw std::invalid_argument("verify: no input stream given");
}

int cmd_verify(const std::string& bound, const VerifyCli& v,
               const std::string& config_echo) {
  if (bound == "probe") {
    ProbeOptions p;
    p.ell = v.ell;
    p.delta_min = v.delta_min;
    p.delta_max = v.delta_max;
    p.samples = v.samples > 0 ? v.samples : 1000;
    p.seed = v.in.spec.seed;
    auto table = family_probe_kll(p);
    std::cout << "delta,samples,min_chi_ff\n";
    for (auto& [delta, b] : table)
      std::cout << delta << "," << b.count << "," << b.min_chi_ff << "\n";
    if (!v.json_path.empty()) {
      VerifySummary s;
      for (auto& [delta, b] : table) s.checked += b.count;
      s.passed = s.checked;
      std::ofstream jf(v.json_path);
      jf << summary_json(s, config_echo) << "\n";
    }
    return 0;
  }

  BoundCheck check;
  if (bound == "conjecture")
    check = conjecture_check();
  else if (bound == "chordal")
    check = chordal_bound_check();
  else if (bound == "cobip")
    check = cobip_bound_check();
  else if (bound == "log")
    check = log_bound_check(v.log_m);
  else if (bound == "remark1")
    check = remark1_check();
  else
    throw std::invalid_argument("unknown bound: " + bound);

  auto source = resolve_source(v);
  VerifyOptions opt;
  opt.workers = v.workers;
  opt.max_n = v.max_n;
  opt.timeout = std::chrono::milliseconds(v.timeout_ms);
  opt.chordal_exact_stride = v.chordal_exact_stride;
  opt.plant_offset = v.plant_offset;

  std::ofstream csv, dump;
  std::ostream* csv_p = nullptr;
  std::ostream* dump_p = nullptr;
  if (!v.csv_path.empty()) {
    csv.open(v.csv_path);
    csv_p = &csv;
  }
  if (!v.dump_path.empty()) {
    dump.open(v.dump_path);
    dump_p = &dump;
  }
  VerifyReport report = run_check(check, *source, opt, csv_p, dump_p);
  if (!v.json_path.empty()) {
    std::ofstream jf(v.json_path);
    jf << summary_json(report.summary, config_echo) << "\n";
  }
  std::cout << check.name << ": " << report.summary.status
            << " checked=" << report.summary.checked
            << " passed=" << report.summary.passed
            << " failed=" << report.summary.failed
            << " inconclusive=" << report.summary.inconclusive
            << " skipped=" << report.summary.skipped << "\n";
  for (const auto& row : report.failures)
    std::cout << "counterexample: " << row.g6 << "\n";
  return report.summary.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grundy (First-Fit) chromatic number toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value defaults; flags win");

  // Echo the exact invocation (plus worker env) into JSON summaries.
  std::ostringstream echo;
  for (int i = 0; i < argc; ++i) echo << (i ? " " : "") << argv[i];
  if (const char* env = std::getenv("GRUNDY_WORKERS"))
    echo << " [GRUNDY_WORKERS=" << env << "]";

  InputOpts exact_in, greedy_in, props_in, gen_in, cobip_in;
  int exact_timeout = 0;
  std::vector<int> greedy_order;
  long long gen_count = 1;
  VerifyCli vcli;
  std::string bound;

  CLI::App* exact = app.add_subcommand("exact", "exact chi_FF with witness");
  add_input_flags(exact, exact_in);
  exact->add_option("--timeout-ms", exact_timeout, "solver timeout");

  CLI::App* greedy = app.add_subcommand("greedy", "First-Fit along an order");
  add_input_flags(greedy, greedy_in);
  greedy->add_option("--order", greedy_order, "vertex order (default 0..n-1)")
      ->delimiter(',');

  CLI::App* props = app.add_subcommand("props", "structural properties");
  add_input_flags(props, props_in);

  CLI::App* gen = app.add_subcommand("gen", "emit generated graphs as graph6");
  add_input_flags(gen, gen_in);
  gen->add_option("--count", gen_count, "number of seeded samples");

  CLI::App* cobip =
      app.add_subcommand("cobip", "matchings and edge domination of bipartite H");
  add_input_flags(cobip, cobip_in);

  CLI::App* verify = app.add_subcommand("verify", "check a bound over a stream");
  verify->add_option("bound", bound,
                     "conjecture|chordal|cobip|log|remark1|probe")
      ->required();
  add_input_flags(verify, vcli.in);
  verify->add_option("--all-labeled", vcli.all_labeled,
                     "all labeled graphs on exactly N vertices (N <= 7)");
  verify->add_option("--all-labeled-upto", vcli.all_labeled_upto,
                     "all labeled graphs on 1..N vertices (N <= 7)");
  verify->add_option("--all-bipartite-upto", vcli.all_bipartite_upto,
                     "all labeled bipartite graphs on 1..N vertices (N <= 8)");
  verify->add_option("--samples", vcli.samples, "seeded samples of --family");
  verify->add_option("--log-m", vcli.log_m, "m for the log bound (default 2)");
  verify->add_option("--workers", vcli.workers, "worker threads");
  verify->add_option("--max-n", vcli.max_n, "exact solver vertex cap");
  verify->add_option("--timeout-ms", vcli.timeout_ms, "per-graph solver timeout");
  verify->add_option("--chordal-exact-stride", vcli.chordal_exact_stride,
                     "re-run every k-th chordal row through the exact solver");
  verify->add_option("--csv", vcli.csv_path, "per-graph CSV output");
  verify->add_option("--json", vcli.json_path, "JSON summary output");
  verify->add_option("--dump-g6", vcli.dump_path, "counterexample graph6 dump");
  verify->add_option("--ell", vcli.ell, "probe: forbid induced K_{l,l}");
  verify->add_option("--delta-min", vcli.delta_min, "probe bucket range");
  verify->add_option("--delta-max", vcli.delta_max, "probe bucket range");
  verify->add_option("--plant-offset", vcli.plant_offset)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*exact) return cmd_exact(exact_in, exact_timeout);
    if (*greedy) return cmd_greedy(greedy_in, greedy_order);
    if (*props) return cmd_props(props_in);
    if (*gen) return cmd_gen(gen_in, gen_count);
    if (*cobip) return cmd_cobip(cobip_in);
    if (*verify) return cmd_verify(bound, vcli, echo.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
