#include "tilekit/threshold.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "tilekit/generators.hpp"

namespace tilekit {

using nlohmann::json;

Rat phi_exponent(int s) {
  if (s < 2) throw std::invalid_argument("phi: s must be >= 2");
  return Rat(2LL * s, static_cast<long long>(s - 1) * (s + 2));
}

double p_threshold(int n, int s) {
  if (n < 3) throw std::invalid_argument("p_threshold: n must be >= 3");
  if (s < 2) throw std::invalid_argument("p_threshold: s must be >= 2");
  if (s == 2) return std::log(static_cast<double>(n)) / n;
  return std::pow(static_cast<double>(n), -rat_to_double(phi_exponent(s)));
}

Graph build_host(const HostSpec& host, const Seed& master) {
  switch (host.kind) {
    case HostKind::Empty: return gen_empty(host.n);
    case HostKind::Complete: return gen_complete(host.n);
    case HostKind::Extremal: return gen_extremal_host(host.n, host.alpha);
    case HostKind::Gnp: return gen_gnp(host.n, host.p0, master.child(0x05));
    case HostKind::Multipartite: return gen_complete_multipartite(host.class_sizes);
    case HostKind::File:
      if (!host.graph) throw std::invalid_argument("host spec: no graph attached");
      return *host.graph;
  }
  throw std::invalid_argument("host spec: unknown kind");
}

int host_cap_for_r(int r) {
  if (r <= 2) return 200;
  if (r == 3) return 60;
  if (r == 4) return 48;
  return 36;
}

namespace {

uint64_t rat_hash(const Rat& p) {
  std::string s = rat_str(p);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

void parallel_for(int threads, long long count, const std::function<void(long long)>& f) {
  if (threads <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  int nw = std::min<long long>(threads, count);
  for (int w = 0; w < nw; ++w)
    pool.emplace_back([&] {
      while (true) {
        long long i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  for (auto& th : pool) th.join();
}

struct TrialRunner {
  const TrialSpec& spec;
  Graph host;

  explicit TrialRunner(const TrialSpec& s) : spec(s), host(build_host(s.host, s.master)) {
    if (host.n() % spec.r != 0)
      throw std::invalid_argument("trial host size not divisible by r");
    if (host.n() > host_cap_for_r(spec.r))
      throw std::invalid_argument("host size " + std::to_string(host.n()) +
                                  " above the exact-solving cap for r=" + std::to_string(spec.r));
  }

  TrialOutcome run(const Rat& p, long long trial_index) const {
    Seed stream = spec.master.child(0x11).child(rat_hash(p)).child(
        static_cast<uint64_t>(trial_index));
    Graph sample = gen_gnp(host.n(), p, stream);
    Graph merged = graph_union(host, sample);
    FactorInstance inst;
    inst.host = &merged;
    inst.r = spec.r;
    inst.mode = SolveMode::Find;
    auto res = solve_factor(inst, spec.solver_budget);
    if (res.status == SolveStatus::Timeout) return TrialOutcome::Indeterminate;
    if (res.status == SolveStatus::Found) {
      if (!validate_factor_result(inst, res))
        throw std::logic_error("positive trial certificate failed validation");
      return TrialOutcome::Success;
    }
    return TrialOutcome::Failure;
  }

  PointStats point(const Rat& p, long long trials, int threads) const {
    std::vector<uint8_t> outcome(trials);
    parallel_for(threads, trials, [&](long long i) {
      outcome[i] = static_cast<uint8_t>(run(p, i));
    });
    PointStats st;
    st.p = p;
    for (uint8_t o : outcome) {
      if (o == static_cast<uint8_t>(TrialOutcome::Success))
        ++st.successes;
      else if (o == static_cast<uint8_t>(TrialOutcome::Failure))
        ++st.failures;
      else
        ++st.indeterminate;
    }
    return st;
  }
};

// weighted pool-adjacent-violators, non-decreasing
std::vector<double> isotonic(const std::vector<double>& y, const std::vector<double>& w) {
  struct Block {
    double value, weight;
    int count;
  };
  std::vector<Block> blocks;
  for (size_t i = 0; i < y.size(); ++i) {
    blocks.push_back({y[i], std::max(w[i], 1e-9), 1});
    while (blocks.size() > 1 && blocks[blocks.size() - 2].value > blocks.back().value) {
      Block b = blocks.back();
      blocks.pop_back();
      Block& a = blocks.back();
      double tw = a.weight + b.weight;
      a.value = (a.value * a.weight + b.value * b.weight) / tw;
      a.weight = tw;
      a.count += b.count;
    }
  }
  std::vector<double> out;
  for (const auto& b : blocks)
    for (int i = 0; i < b.count; ++i) out.push_back(b.value);
  return out;
}

}  // namespace

TrialOutcome run_trial(const TrialSpec& spec, const Rat& p, long long trial_index) {
  TrialRunner runner(spec);
  return runner.run(p, trial_index);
}

SweepResult sweep(const TrialSpec& spec) {
  if (spec.p_grid.empty()) throw std::invalid_argument("sweep: empty p grid");
  TrialRunner runner(spec);
  SweepResult result;

  long long per_point = spec.trials;
  long long total = static_cast<long long>(spec.p_grid.size()) * per_point;
  std::vector<uint8_t> outcome(total);
  parallel_for(spec.threads, total, [&](long long task) {
    long long pi = task / per_point;
    long long ti = task % per_point;
    outcome[task] = static_cast<uint8_t>(runner.run(spec.p_grid[pi], ti));
  });

  for (size_t pi = 0; pi < spec.p_grid.size(); ++pi) {
    PointStats st;
    st.p = spec.p_grid[pi];
    for (long long ti = 0; ti < per_point; ++ti) {
      uint8_t o = outcome[pi * per_point + ti];
      if (o == static_cast<uint8_t>(TrialOutcome::Success))
        ++st.successes;
      else if (o == static_cast<uint8_t>(TrialOutcome::Failure))
        ++st.failures;
      else
        ++st.indeterminate;
    }
    if (st.determinate() == 0)
      result.anomalies.push_back("all trials indeterminate at p = " + rat_str(st.p));
    result.points.push_back(st);
  }

  std::vector<double> probs, weights;
  for (const auto& st : result.points) {
    probs.push_back(st.prob());
    weights.push_back(static_cast<double>(st.determinate()));
  }
  result.smoothed = isotonic(probs, weights);

  // one-sided two-proportion test on adjacent decreases, 99% level
  for (size_t i = 0; i + 1 < result.points.size(); ++i) {
    const auto& a = result.points[i];
    const auto& b = result.points[i + 1];
    if (a.determinate() == 0 || b.determinate() == 0) continue;
    double p1 = a.prob(), p2 = b.prob();
    if (p2 >= p1) continue;
    double pool = static_cast<double>(a.successes + b.successes) /
                  static_cast<double>(a.determinate() + b.determinate());
    double se = std::sqrt(pool * (1 - pool) *
                          (1.0 / a.determinate() + 1.0 / b.determinate()));
    if (se == 0) continue;
    double z = (p1 - p2) / se;
    if (z > 2.326)
      result.anomalies.push_back("success probability drops between p = " + rat_str(a.p) +
                                 " and p = " + rat_str(b.p) + " (z = " + std::to_string(z) + ")");
  }
  return result;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string sweep_csv(const TrialSpec& spec, const SweepResult& result) {
  std::string out = "n,p,successes,trials,indeterminates\n";
  for (const auto& st : result.points) {
    out += std::to_string(spec.host.n) + "," + format_double(rat_to_double(st.p)) + "," +
           std::to_string(st.successes) + "," + std::to_string(st.successes + st.failures) + "," +
           std::to_string(st.indeterminate) + "\n";
  }
  return out;
}

std::string sweep_summary_json(const TrialSpec& spec, const SweepResult& result) {
  json j;
  j["n"] = spec.host.n;
  j["r"] = spec.r;
  j["trials_per_point"] = spec.trials;
  json points = json::array();
  for (size_t i = 0; i < result.points.size(); ++i) {
    const auto& st = result.points[i];
    points.push_back({{"p", rat_str(st.p)},
                      {"p_float", rat_to_double(st.p)},
                      {"successes", st.successes},
                      {"failures", st.failures},
                      {"indeterminate", st.indeterminate},
                      {"prob", st.prob()},
                      {"smoothed", result.smoothed[i]}});
  }
  j["points"] = std::move(points);
  j["anomalies"] = result.anomalies;
  return j.dump();
}

BisectResult bisect_threshold(const TrialSpec& spec, double lo, double hi, double target,
                              double tol, int probe_trials) {
  if (!(lo < hi)) throw std::invalid_argument("bisect: need lo < hi");
  TrialRunner runner(spec);
  BisectResult res;

  auto probe = [&](double p) {
    auto st = runner.point(rat_from_double(p), probe_trials, spec.threads);
    res.probes.push_back({p, st.successes, st.determinate()});
    return st.prob();
  };

  res.prob_lo = probe(lo);
  res.prob_hi = probe(hi);
  if (res.prob_lo >= target) {
    res.status = BisectResult::Status::BelowGrid;
    res.p_hat = lo;
    res.ci_lo = res.ci_hi = lo;
    return res;
  }
  if (res.prob_hi < target) {
    res.status = BisectResult::Status::AboveGrid;
    res.p_hat = hi;
    res.ci_lo = res.ci_hi = hi;
    return res;
  }
  double a = lo, b = hi;
  while (b - a > tol) {
    double mid = (a + b) / 2;
    double prob = probe(mid);
    if (prob >= target)
      b = mid;
    else
      a = mid;
  }
  res.p_hat = (a + b) / 2;
  res.ci_lo = a;
  res.ci_hi = b;
  return res;
}

FitResult exponent_fit(const std::vector<double>& n_values, const std::vector<double>& p_values) {
  if (n_values.size() != p_values.size() || n_values.size() < 3)
    throw std::invalid_argument("exponent_fit: need at least 3 (n, p) points");
  size_t k = n_values.size();
  std::vector<double> x(k), y(k);
  for (size_t i = 0; i < k; ++i) {
    if (n_values[i] <= 0 || p_values[i] <= 0)
      throw std::invalid_argument("exponent_fit: values must be positive");
    x[i] = std::log(n_values[i]);
    y[i] = std::log(p_values[i]);
  }
  double xm = 0, ym = 0;
  for (size_t i = 0; i < k; ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= k;
  ym /= k;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < k; ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  if (sxx < 1e-12) throw std::invalid_argument("exponent_fit: degenerate n spread");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double ss_res = 0;
  for (size_t i = 0; i < k; ++i) {
    double resid = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += resid * resid;
  }
  fit.stderr_slope = k > 2 ? std::sqrt(ss_res / (k - 2) / sxx) : 0.0;
  return fit;
}

TableRowReport reproduce_table_row(const Rat& alpha, int r, const std::vector<int>& n_values,
                                   int probe_trials, const Seed& master, double tolerance) {
  if (r < 2) throw std::invalid_argument("reproduce_table_row: r must be >= 2");
  if (alpha < 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in [0, 1)");
  TableRowReport rep;
  rep.alpha = alpha;
  rep.r = r;
  rep.n_values = n_values;

  if (alpha >= Rat(r - 1, r)) {
    // minimum degree already forces the factor; the threshold row is zero
    rep.zero_row = true;
    rep.verdict = "zero-row";
    for (int n : n_values) {
      TrialSpec spec;
      spec.host = {HostKind::Extremal, n, alpha, Rat(0), {}, std::nullopt};
      spec.r = r;
      spec.master = master;
      auto outcome = run_trial(spec, Rat(0), 0);
      rep.p_hats.push_back(outcome == TrialOutcome::Success ? 0.0 : -1.0);
    }
    return rep;
  }

  Rat gap = (Rat(1) - alpha) * r;  // s at a transition point, else fractional
  if (alpha == 0) {
    rep.s_regime = r;
    rep.expected_exponent = -Rat(2, r);
  } else if (rat_den(gap) == 1) {
    rep.transition = true;
    rep.s_regime = rat_num(gap).convert_to<int>();
    rep.expected_exponent = rep.s_regime == 2 ? Rat(-1) : -phi_exponent(rep.s_regime);
  } else {
    rep.s_regime = static_cast<int>(rat_to_double(gap)) + 1;
    rep.expected_exponent = -Rat(2, rep.s_regime);
  }

  std::vector<double> ns, ps;
  for (int n : n_values) {
    TrialSpec spec;
    if (alpha == 0) {
      spec.host = {HostKind::Empty, n, Rat(0), Rat(0), {}, std::nullopt};
    } else {
      spec.host = {HostKind::Extremal, n, alpha, Rat(0), {}, std::nullopt};
    }
    spec.r = r;
    spec.s = rep.s_regime;
    spec.master = master;
    double guess = p_threshold(n, std::max(2, std::min(rep.s_regime, r)));
    auto bres = bisect_threshold(spec, 0.0, 1.0, 0.5, std::max(1e-4, guess / 20), probe_trials);
    double phat = bres.p_hat;
    rep.p_hats.push_back(phat);
    if (phat > 0) {
      ns.push_back(n);
      ps.push_back(phat);
    }
  }
  if (ns.size() >= 3) {
    rep.fit = exponent_fit(ns, ps);
    double expected = rat_to_double(*rep.expected_exponent);
    rep.verdict = std::fabs(rep.fit.slope - expected) <= tolerance ? "consistent" : "inconsistent";
  } else {
    rep.verdict = "insufficient-points";
  }
  return rep;
}

}  // namespace tilekit
