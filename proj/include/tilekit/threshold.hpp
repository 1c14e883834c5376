#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilekit/graph.hpp"
#include "tilekit/rational.hpp"
#include "tilekit/rng.hpp"
#include "tilekit/solver.hpp"

namespace tilekit {

// 2s / ((s-1)(s+2)), exact. Requires s >= 2.
Rat phi_exponent(int s);

// log n / n for s = 2, n^{-phi(s)} for s >= 3; floating point, sampling only.
double p_threshold(int n, int s);

enum class HostKind { Empty, Complete, Extremal, Gnp, Multipartite, File };

struct HostSpec {
  HostKind kind = HostKind::Empty;
  int n = 0;
  Rat alpha;                    // Extremal
  Rat p0;                       // Gnp
  std::vector<int> class_sizes;  // Multipartite
  std::optional<Graph> graph;    // File
};

Graph build_host(const HostSpec& host, const Seed& master);

// Exact solving has to dominate the experiment; instances above these sizes
// are rejected (exact-cover growth).
int host_cap_for_r(int r);

struct TrialSpec {
  HostSpec host;
  int r = 2;
  int s = 2;
  std::vector<Rat> p_grid;
  int trials = 100;
  Seed master;
  long long solver_budget = kDefaultNodeBudget;
  int threads = 1;
};

enum class TrialOutcome { Success, Failure, Indeterminate };

// Builds the cached host, unions a fresh G(n,p) sample and solves for a
// K_r-factor. Per-trial streams derive from (master, p, trial_index).
TrialOutcome run_trial(const TrialSpec& spec, const Rat& p, long long trial_index);

struct PointStats {
  Rat p;
  long long successes = 0, failures = 0, indeterminate = 0;
  long long determinate() const { return successes + failures; }
  double prob() const {
    return determinate() == 0 ? 0.0 : static_cast<double>(successes) / determinate();
  }
};

struct SweepResult {
  std::vector<PointStats> points;
  std::vector<double> smoothed;        // isotonic fit of the raw curve
  std::vector<std::string> anomalies;  // e.g. significant non-monotonicity
};

// Deterministic for a fixed master seed regardless of spec.threads.
SweepResult sweep(const TrialSpec& spec);

// CSV rows: n,p,successes,trials,indeterminates (stable format).
std::string sweep_csv(const TrialSpec& spec, const SweepResult& result);
std::string sweep_summary_json(const TrialSpec& spec, const SweepResult& result);

struct ProbeStats {
  double p;
  long long successes = 0, trials = 0;
};

struct BisectResult {
  enum class Status { Ok, BelowGrid, AboveGrid };
  Status status = Status::Ok;
  double p_hat = 0;
  double ci_lo = 0, ci_hi = 0;  // final bracket
  double prob_lo = 0, prob_hi = 0;
  std::vector<ProbeStats> probes;
};

// Bisection on p for the target success probability. The bracket must
// straddle the target; a host that already succeeds at lo reports BelowGrid.
BisectResult bisect_threshold(const TrialSpec& spec, double lo, double hi, double target,
                              double tol, int probe_trials);

struct FitResult {
  double slope = 0;
  double stderr_slope = 0;
  double intercept = 0;
};

// Least-squares slope of log p over log n. Needs >= 3 points and spread n.
FitResult exponent_fit(const std::vector<double>& n_values, const std::vector<double>& p_values);

struct TableRowReport {
  Rat alpha;
  int r = 0;
  int s_regime = 0;          // 0 when the host alone finishes the job
  bool transition = false;   // alpha exactly 1 - s/r
  std::optional<Rat> expected_exponent;  // none for the zero row
  std::vector<int> n_values;
  std::vector<double> p_hats;
  FitResult fit;
  bool zero_row = false;
  std::string verdict;  // "consistent" / "inconsistent" / "zero-row"
};

// Estimates thresholds over n for the host family matching alpha (extremal
// interior hosts, empty host at alpha = 0) and compares the fitted exponent
// with the regime's value.
TableRowReport reproduce_table_row(const Rat& alpha, int r, const std::vector<int>& n_values,
                                   int probe_trials, const Seed& master, double tolerance);

}  // namespace tilekit
