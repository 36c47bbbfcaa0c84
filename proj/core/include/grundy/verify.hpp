#ifndef GRUNDY_VERIFY_HPP
#define GRUNDY_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "grundy/generators.hpp"
#include "grundy/graph.hpp"

namespace grundy {

struct VerifyOptions {
  int workers = 1;
  int max_n = 40;                       // solver cap per graph
  std::chrono::milliseconds timeout{0};  // exact solver, 0 = none
  int chordal_exact_stride = 0;  // re-run every k-th chordal row exactly
  int plant_offset = 0;          // testing hook: inflates bound values
};

struct VerifyRow {
  long long id = 0;
  std::string g6;
  int n = 0;
  long long m = 0;
  int delta = -1, max_deg = -1;  // -1 when undefined (n = 0)
  int girth = 0;                 // 0 = acyclic
  bool c4free = false, triangle_free = false, chordal = false,
       bipartite = false, twok2_free = false;
  int chi_ff = -1;  // -1 when the solver was not (or could not be) run
  std::string bound;
  std::string bound_value;
  bool holds = false;
  long long runtime_us = 0;  // in-memory only, never serialized
  std::string status = "ok";
};

enum class RowOutcome { kPass, kFail, kInconclusive, kSkipped };

/// One lower bound: name + per-graph evaluation. eval fills the row
/// (id/g6 are pre-set by the runner) and reports the outcome.
struct BoundCheck {
  std::string name;
  std::function<RowOutcome(const Graph&, const VerifyOptions&, VerifyRow&)>
      eval;
};

BoundCheck conjecture_check();      // C4-free: chi_FF >= delta+1
BoundCheck chordal_bound_check();   // chordal: chi_FF >= delta+1
BoundCheck cobip_bound_check();     // bipartite H, complement C4-free
BoundCheck log_bound_check(int m);  // triangle-free K_{2,m}-free, base-2 log
BoundCheck remark1_check();         // chordal: chi_FF >= col(G)

/// Deterministic, indexable graph stream.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  virtual long long size() const = 0;
  virtual Graph get(long long i) const = 0;
};

/// All labeled graphs on n = min_n..max_n vertices (max_n <= 7).
class AllLabeledSource : public GraphSource {
 public:
  AllLabeledSource(int min_n, int max_n);
  long long size() const override { return total_; }
  Graph get(long long i) const override;

 private:
  struct Block {
    int n;
    long long base, count;
  };
  std::vector<Block> blocks_;
  long long total_ = 0;
};

/// All labeled bipartite graphs on 1..max_n vertices (max_n <= 8),
/// enumerated per ordered part-assignment; graphs with several
/// bipartitions repeat, which only re-verifies them.
class AllBipartiteSource : public GraphSource {
 public:
  explicit AllBipartiteSource(int max_n);
  long long size() const override { return total_; }
  Graph get(long long i) const override;

 private:
  struct Block {
    int n;
    unsigned a_mask;
    long long base, count;
  };
  std::vector<Block> blocks_;
  long long total_ = 0;
};

class G6LinesSource : public GraphSource {
 public:
  explicit G6LinesSource(std::vector<std::string> lines)
      : lines_(std::move(lines)) {}
  long long size() const override { return (long long)lines_.size(); }
  Graph get(long long i) const override;

 private:
  std::vector<std::string> lines_;
};

/// `samples` seeded instances of one family; sample i uses
/// mix_seed(spec.seed, i).
class GenSpecSource : public GraphSource {
 public:
  GenSpecSource(GenSpec spec, long long samples)
      : spec_(std::move(spec)), samples_(samples) {}
  long long size() const override { return samples_; }
  Graph get(long long i) const override;

 private:
  GenSpec spec_;
  long long samples_;
};

class VectorSource : public GraphSource {
 public:
  explicit VectorSource(std::vector<Graph> graphs)
      : graphs_(std::move(graphs)) {}
  long long size() const override { return (long long)graphs_.size(); }
  Graph get(long long i) const override { return graphs_[size_t(i)]; }

 private:
  std::vector<Graph> graphs_;
};

struct VerifySummary {
  long long checked = 0, passed = 0, failed = 0, inconclusive = 0,
            skipped = 0;
  double wall_seconds = 0;
  int exit_code = 0;  // 0 pass, 1 counterexample, 2 inconclusive
  std::string status = "PASS";
};

struct VerifyReport {
  VerifySummary summary;
  std::vector<VerifyRow> failures;  // each re-verified in isolation
  std::vector<VerifyRow> rows;      // populated only when keep_rows
};

/// Evaluate `check` over the stream. Rows appear in input order in the
/// CSV regardless of worker count; every holds=false row is re-verified
/// from its dumped graph6 before the run is marked FAILED.
VerifyReport run_check(const BoundCheck& check, const GraphSource& source,
                       const VerifyOptions& options, std::ostream* csv,
                       std::ostream* dump_g6, bool keep_rows = false);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const VerifyRow& row);

/// JSON summary (counts, wall time, echoed config string).
std::string summary_json(const VerifySummary& s, const std::string& config);

struct ProbeOptions {
  int ell = 2;
  int delta_min = 1, delta_max = 6;
  long long samples = 1000;
  uint64_t seed = 0;
  int n_min = 6, n_max = 12;
};

struct ProbeBucket {
  long long count = 0;
  int min_chi_ff = 0;
};

/// Empirical minimum chi_FF per delta bucket over seeded random
/// K_{l,l}-free graphs. Reports observations only.
std::map<int, ProbeBucket> family_probe_kll(const ProbeOptions& opt);

}  // namespace grundy

#endif  // GRUNDY_VERIFY_HPP
