#include "grundy/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "grundy/cobipartite.hpp"
#include "grundy/detect.hpp"
#include "grundy/graph6.hpp"
#include "grundy/grundy.hpp"
#include "grundy/invariants.hpp"
#include "grundy/parallel.hpp"
#include "grundy/rng.hpp"

namespace grundy {

namespace {

void fill_props(const Graph& g, VerifyRow& row) {
  row.n = g.n();
  row.m = g.m();
  DegreeSummary deg = degrees(g);
  row.delta = deg.min_degree.value_or(-1);
  row.max_deg = deg.max_degree.value_or(-1);
  row.girth = girth(g).value_or(0);
  row.c4free = !has_induced_c4(g);
  row.triangle_free = !has_triangle(g);
  row.chordal = std::holds_alternative<EliminationOrdering>(is_chordal(g));
  row.bipartite = bipartition(g).ok;
  row.twok2_free = is_2k2_free(g);
}

/// Exact chi_FF under the solver caps; nullopt marks the row
/// inconclusive with the reason in row.status.
std::optional<int> solve_chi(const Graph& g, const VerifyOptions& opt,
                             VerifyRow& row) {
  if (g.n() > opt.max_n || g.n() > kExactGrundyMaxN) {
    row.status = "cap";
    return std::nullopt;
  }
  GrundyResult res = exact_grundy(g, opt.timeout);
  if (res.status == SolveStatus::kTimeout) {
    row.status = "timeout";
    return std::nullopt;
  }
  row.chi_ff = res.value;
  return res.value;
}

RowOutcome linear_bound_outcome(const Graph& g, const VerifyOptions& opt,
                                VerifyRow& row, int bound) {
  bound += opt.plant_offset;
  row.bound_value = std::to_string(bound);
  std::optional<int> chi = solve_chi(g, opt, row);
  if (!chi) return RowOutcome::kInconclusive;
  row.holds = *chi >= bound;
  return row.holds ? RowOutcome::kPass : RowOutcome::kFail;
}

/// omega of a chordal graph from a perfect elimination ordering:
/// 1 + the largest later-neighborhood.
int chordal_omega(const Graph& g, const std::vector<int>& order) {
  VertexSet remaining = VertexSet::full(g.n());
  int best = 0;
  for (int v : order) {
    remaining.reset(v);
    VertexSet later = g.neighbors(v);
    later &= remaining;
    best = std::max(best, later.count() + 1);
  }
  return best;
}

}  // namespace

BoundCheck conjecture_check() {
  return {"conjecture",
          [](const Graph& g, const VerifyOptions& opt, VerifyRow& row) {
            fill_props(g, row);
            row.bound = "delta+1";
            if (g.n() == 0 || !row.c4free) return RowOutcome::kSkipped;
            return linear_bound_outcome(g, opt, row, row.delta + 1);
          }};
}

BoundCheck chordal_bound_check() {
  return {"chordal",
          [](const Graph& g, const VerifyOptions& opt, VerifyRow& row) {
            fill_props(g, row);
            row.bound = "delta+1";
            if (g.n() == 0 || !row.chordal) return RowOutcome::kSkipped;
            int bound = row.delta + 1 + opt.plant_offset;
            row.bound_value = std::to_string(bound);
            auto elim =
                std::get<EliminationOrdering>(is_chordal(g));
            int omega = chordal_omega(g, elim.order);
            bool exact_requested =
                opt.chordal_exact_stride > 0 &&
                row.id % opt.chordal_exact_stride == 0;
            if (omega >= bound && !exact_requested) {
              // chi_FF >= chi >= omega >= delta+1; solver not needed.
              row.status = "omega-cert";
              row.holds = true;
              return RowOutcome::kPass;
            }
            std::optional<int> chi = solve_chi(g, opt, row);
            if (!chi) return RowOutcome::kInconclusive;
            if (*chi < omega)
              throw std::logic_error("chordal: chi_FF below clique bound");
            row.holds = *chi >= bound;
            return row.holds ? RowOutcome::kPass : RowOutcome::kFail;
          }};
}

BoundCheck cobip_bound_check() {
  return {"cobip",
          [](const Graph& h, const VerifyOptions& opt, VerifyRow& row) {
            row.bound = "delta+1";
            if (h.n() == 0) return RowOutcome::kSkipped;
            BipartitionResult bp = bipartition(h);
            if (!bp.ok) return RowOutcome::kSkipped;
            Graph g = complement(h);
            fill_props(g, row);  // flags describe the complement
            row.bipartite = true;                 // input side
            row.twok2_free = is_2k2_free(h);      // input side
            if (!row.c4free) return RowOutcome::kSkipped;
            int bound = row.delta + 1 + opt.plant_offset;
            row.bound_value = std::to_string(bound);
            // delta(G) = n - Delta(H) - 1, recomputed from both sides.
            DegreeSummary hd = degrees(h);
            if (row.delta != h.n() - hd.max_degree.value_or(-1) - 1)
              throw std::logic_error("cobip: degree identity violated");
            if (h.m() > kEdgeDominatingMaxM) {
              row.status = "cap";
              return RowOutcome::kInconclusive;
            }
            int chi = grundy_cobipartite(h);
            row.chi_ff = chi;
            if (g.n() <= 10) {
              GrundyResult res = exact_grundy(g, opt.timeout);
              if (res.status == SolveStatus::kOk && res.value != chi) {
                row.status = "cross-check-mismatch";
                row.holds = false;
                return RowOutcome::kFail;
              }
            }
            row.holds = chi >= bound;
            return row.holds ? RowOutcome::kPass : RowOutcome::kFail;
          }};
}

BoundCheck log_bound_check(int m) {
  if (m < 2 || m > 8)
    throw std::invalid_argument("log_bound_check: m must be 2..8");
  std::string name = "log(m=" + std::to_string(m) + ")";
  return {name, [m](const Graph& g, const VerifyOptions& opt, VerifyRow& row) {
            fill_props(g, row);
            if (g.n() == 0 || !row.triangle_free) return RowOutcome::kSkipped;
            if (m == 2) {
              if (!row.c4free) return RowOutcome::kSkipped;
            } else {
              Graph::Builder pb(2 + m);
              for (int i = 0; i < 2; ++i)
                for (int j = 0; j < m; ++j) pb.add_edge(i, 2 + j);
              if (contains_induced(std::move(pb).build(), g))
                return RowOutcome::kSkipped;
            }
            std::optional<int> chi = solve_chi(g, opt, row);
            if (!chi) return RowOutcome::kInconclusive;
            std::ostringstream bv;
            // Comparison is exact (powers of two); the printed value is
            // display-only.
            if (m == 2) {
              row.bound = "log2(delta+1)";
              bv << std::log2(double(row.delta + 1));
              long long rhs = row.delta + 1 + opt.plant_offset;
              row.holds = (1LL << *chi) >= rhs;
            } else {
              row.bound = "log2((delta+6m-8)/(2m-2))+1";
              bv << std::log2(double(row.delta + 6 * m - 8) / (2 * m - 2)) + 1;
              long long rhs = row.delta + 6 * m - 8 + opt.plant_offset;
              row.holds = (1LL << (*chi - 1)) * (2 * m - 2) >= rhs;
            }
            row.bound_value = bv.str();
            return row.holds ? RowOutcome::kPass : RowOutcome::kFail;
          }};
}

BoundCheck remark1_check() {
  return {"remark1",
          [](const Graph& g, const VerifyOptions& opt, VerifyRow& row) {
            fill_props(g, row);
            row.bound = "col";
            if (g.n() == 0 || !row.chordal) return RowOutcome::kSkipped;
            int col = coloring_number(g);
            // Locate the induced subgraph attaining the degeneracy and
            // confirm its minimum degree is col-1.
            {
              std::vector<int> deg(g.n());
              VertexSet alive = VertexSet::full(g.n());
              for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
              VertexSet attaining(g.n());
              for (int step = 0; step < g.n(); ++step) {
                int pick = -1;
                for (int v = alive.first(); v >= 0; v = alive.next(v))
                  if (pick == -1 || deg[v] < deg[pick]) pick = v;
                if (deg[pick] == col - 1 && attaining.empty())
                  attaining = alive;
                alive.reset(pick);
                for (int v = g.neighbors(pick).first(); v >= 0;
                     v = g.neighbors(pick).next(v))
                  if (alive.test(v)) --deg[v];
              }
              if (attaining.empty())
                throw std::logic_error("remark1: degeneracy witness missing");
              Graph h = induced_subgraph(g, attaining);
              if (degrees(h).min_degree.value_or(-1) != col - 1)
                throw std::logic_error("remark1: witness subgraph degree");
            }
            return linear_bound_outcome(g, opt, row, col);
          }};
}

AllLabeledSource::AllLabeledSource(int min_n, int max_n) {
  if (min_n < 0 || max_n > 7 || min_n > max_n)
    throw std::invalid_argument("AllLabeledSource: need 0 <= min <= max <= 7");
  for (int n = min_n; n <= max_n; ++n) {
    long long c = 1LL << (n * (n - 1) / 2);
    blocks_.push_back({n, total_, c});
    total_ += c;
  }
}

Graph AllLabeledSource::get(long long i) const {
  for (const Block& b : blocks_)
    if (i < b.base + b.count)
      return graph_from_pair_mask(b.n, (unsigned long long)(i - b.base));
  throw std::out_of_range("AllLabeledSource");
}

AllBipartiteSource::AllBipartiteSource(int max_n) {
  if (max_n < 1 || max_n > 8)
    throw std::invalid_argument("AllBipartiteSource: max_n must be 1..8");
  for (int n = 1; n <= max_n; ++n) {
    for (unsigned a_mask = 0; a_mask < (1u << n); ++a_mask) {
      int a = std::popcount(a_mask);
      long long c = 1LL << (a * (n - a));
      blocks_.push_back({n, a_mask, total_, c});
      total_ += c;
    }
  }
}

Graph AllBipartiteSource::get(long long i) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), i,
                             [](long long x, const Block& b) {
                               return x < b.base + b.count;
                             });
  if (it == blocks_.end()) throw std::out_of_range("AllBipartiteSource");
  const Block& b = *it;
  long long mask = i - b.base;
  std::vector<int> av, bv;
  for (int v = 0; v < b.n; ++v)
    ((b.a_mask >> v) & 1 ? av : bv).push_back(v);
  Graph::Builder bld(b.n);
  int bit = 0;
  for (int x : av)
    for (int y : bv) {
      if ((mask >> bit) & 1) bld.add_edge(x, y);
      ++bit;
    }
  return std::move(bld).build();
}

Graph G6LinesSource::get(long long i) const {
  return from_graph6(lines_[size_t(i)]);
}

Graph GenSpecSource::get(long long i) const {
  GenSpec s = spec_;
  s.seed = mix_seed(spec_.seed, uint64_t(i));
  return make_graph(s);
}

void write_csv_header(std::ostream& out) {
  out << "id,graph6,n,m,delta,Delta,girth,c4free,trianglefree,chordal,"
         "bipartite,twok2free,chi_ff,bound,bound_value,holds,status\n";
}

void write_csv_row(std::ostream& out, const VerifyRow& r) {
  out << r.id << "," << r.g6 << "," << r.n << "," << r.m << ",";
  if (r.delta >= 0)
    out << r.delta;
  else
    out << "-";
  out << ",";
  if (r.max_deg >= 0)
    out << r.max_deg;
  else
    out << "-";
  out << ",";
  if (r.girth > 0)
    out << r.girth;
  else
    out << "acyclic";
  out << "," << int(r.c4free) << "," << int(r.triangle_free) << ","
      << int(r.chordal) << "," << int(r.bipartite) << "," << int(r.twok2_free)
      << ",";
  if (r.chi_ff >= 0)
    out << r.chi_ff;
  else
    out << "-";
  out << "," << r.bound << "," << r.bound_value << "," << int(r.holds) << ","
      << r.status << "\n";
}

VerifyReport run_check(const BoundCheck& check, const GraphSource& source,
                       const VerifyOptions& options, std::ostream* csv,
                       std::ostream* dump_g6, bool keep_rows) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  if (csv) write_csv_header(*csv);

  struct Cell {
    VerifyRow row;
    RowOutcome outcome = RowOutcome::kSkipped;
  };
  const long long total = source.size();
  const long long chunk = 8192;
  for (long long lo = 0; lo < total; lo += chunk) {
    const long long hi = std::min(total, lo + chunk);
    std::vector<Cell> cells(size_t(hi - lo));
    parallel_for(lo, hi, options.workers, [&](long long i) {
      Cell& c = cells[size_t(i - lo)];
      Graph g = source.get(i);
      c.row.id = i;
      c.row.g6 = to_graph6(g);
      c.row.bound = check.name;
      auto s = std::chrono::steady_clock::now();
      c.outcome = check.eval(g, options, c.row);
      c.row.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - s)
                             .count();
    });
    for (Cell& c : cells) {
      if (c.outcome == RowOutcome::kSkipped) {
        ++report.summary.skipped;
        continue;
      }
      ++report.summary.checked;
      if (c.outcome == RowOutcome::kFail) {
        // Re-verify in isolation from the serialized graph.
        Graph again = from_graph6(c.row.g6);
        VerifyRow r2;
        r2.id = c.row.id;
        r2.g6 = c.row.g6;
        RowOutcome o2 = check.eval(again, options, r2);
        if (o2 == RowOutcome::kFail) {
          ++report.summary.failed;
          report.failures.push_back(r2);
          if (dump_g6) *dump_g6 << c.row.g6 << "\n";
        } else {
          // A non-reproducible failure cannot count as a pass.
          ++report.summary.inconclusive;
          c.row.status = "non-reproducible";
        }
      } else if (c.outcome == RowOutcome::kPass) {
        ++report.summary.passed;
      } else {
        ++report.summary.inconclusive;
      }
      if (csv) write_csv_row(*csv, c.row);
      if (keep_rows) report.rows.push_back(c.row);
    }
  }
  report.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (report.summary.failed > 0) {
    report.summary.exit_code = 1;
    report.summary.status = "FAIL";
  } else if (report.summary.inconclusive > 0) {
    report.summary.exit_code = 2;
    report.summary.status = "INCONCLUSIVE";
  }
  return report;
}

std::string summary_json(const VerifySummary& s, const std::string& config) {
  nlohmann::json j;
  j["checked"] = s.checked;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["inconclusive"] = s.inconclusive;
  j["skipped"] = s.skipped;
  j["wall_seconds"] = s.wall_seconds;
  j["status"] = s.status;
  j["exit_code"] = s.exit_code;
  j["config"] = config;
  return j.dump(2);
}

std::map<int, ProbeBucket> family_probe_kll(const ProbeOptions& opt) {
  if (opt.ell < 1 || opt.ell > 3)
    throw std::invalid_argument("family_probe_kll: ell must be 1..3");
  std::map<int, ProbeBucket> table;
  for (long long i = 0; i < opt.samples; ++i) {
    SplitMix64 rng(mix_seed(opt.seed, uint64_t(i)));
    int n = opt.n_min + int(rng.next_below(uint64_t(opt.n_max - opt.n_min + 1)));
    double p = 0.1 + 0.8 * rng.next_double();
    Graph g = random_gnp(n, p, rng.next());
    if (!is_kll_free(g, opt.ell)) continue;
    int delta = degrees(g).min_degree.value_or(-1);
    if (delta < opt.delta_min || delta > opt.delta_max) continue;
    int chi = exact_grundy(g).value;
    ProbeBucket& b = table[delta];
    if (b.count == 0 || chi < b.min_chi_ff) b.min_chi_ff = chi;
    ++b.count;
  }
  return table;
}

}  // namespace grundy
