// Command-line front end: graph generation, factor solving, gadget tiling,
// balancing planners, partition search, regularity checks and the Monte Carlo
// threshold harness.

#include <fstream>
#include <iostream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tilekit/absorber.hpp"
#include "tilekit/balance.hpp"
#include "tilekit/cliques.hpp"
#include "tilekit/coloring.hpp"
#include "tilekit/engine.hpp"
#include "tilekit/gadget.hpp"
#include "tilekit/generators.hpp"
#include "tilekit/graph_io.hpp"
#include "tilekit/partition.hpp"
#include "tilekit/regularity.hpp"
#include "tilekit/solver.hpp"
#include "tilekit/threshold.hpp"
#include "tilekit/weighted.hpp"

using namespace tilekit;
using nlohmann::json;

namespace {

struct GlobalOpts {
  uint64_t seed = 0;
  int threads = 1;
  std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot open " + g.out);
  f << text << "\n";
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<long long> parse_ll_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rat(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  return out;
}

std::vector<int> load_vertex_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);
  if (j.is_array()) return j.get<std::vector<int>>();
  return j.at("vertices").get<std::vector<int>>();
}

struct HostOpts {
  std::string type = "empty";
  std::string file;
  int n = 0;
  std::string alpha = "1/2";
  std::string p0 = "1/2";
  std::string sizes;

  HostSpec spec() const {
    HostSpec h;
    h.n = n;
    if (type == "empty") {
      h.kind = HostKind::Empty;
    } else if (type == "complete") {
      h.kind = HostKind::Complete;
    } else if (type == "extremal") {
      h.kind = HostKind::Extremal;
      h.alpha = parse_rat(alpha);
    } else if (type == "gnp") {
      h.kind = HostKind::Gnp;
      h.p0 = parse_rat(p0);
    } else if (type == "multipartite") {
      h.kind = HostKind::Multipartite;
      h.class_sizes = parse_int_list(sizes);
    } else if (type == "file") {
      h.kind = HostKind::File;
      h.graph = load_graph_file(file);
      h.n = h.graph->n();
    } else {
      throw std::runtime_error("unknown host type: " + type);
    }
    return h;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--host-type", type, "empty|complete|extremal|gnp|multipartite|file");
    cmd->add_option("--host", file, "graph json (host-type file)");
    cmd->add_option("--n", n, "vertex count");
    cmd->add_option("--alpha", alpha, "extremal host alpha (rational)");
    cmd->add_option("--p0", p0, "gnp host density (rational)");
    cmd->add_option("--sizes", sizes, "multipartite class sizes, comma separated");
  }
};

json plan_json(const MovePlan& plan) {
  json j;
  j["lemma"] = plan.lemma;
  j["feasible"] = plan.feasible;
  if (!plan.error.empty()) j["error"] = plan.error;
  json moves = json::array();
  for (const auto& mv : plan.moves) {
    json e;
    e["type"] = mv.type;
    if (mv.j >= 0) e["j"] = mv.j + 1;
    if (mv.k >= 0) e["k"] = mv.k + 1;
    if (mv.q >= 0) e["q"] = mv.q + 1;
    e["removals"] = mv.removals;
    moves.push_back(std::move(e));
  }
  j["moves"] = std::move(moves);
  j["post_sizes"] = plan.post_sizes;
  j["total_removed"] = plan.total_removed;
  j["round_abs_remainders"] = plan.round_abs_remainders;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique-factor tiling toolkit"};
  app.require_subcommand(1);
  GlobalOpts global;
  app.add_option("--seed", global.seed, "master seed")->capture_default_str();
  app.add_option("--threads", global.threads, "worker threads")->capture_default_str();
  app.add_option("--out", global.out, "output file (default stdout)");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a graph as json");
  std::string gen_type = "gnp";
  int gen_n = 10, gen_m = 2, gen_r = 5, gen_t = 1;
  std::string gen_p = "1/2", gen_alpha = "1/2", gen_sizes;
  gen->add_option("--type", gen_type, "gnp|extremal|multipartite|bottle|empty|complete");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--p", gen_p, "edge probability (rational or decimal)");
  gen->add_option("--alpha", gen_alpha, "extremal alpha");
  gen->add_option("--sizes", gen_sizes, "multipartite sizes");
  gen->add_option("--m", gen_m, "bottle m");
  gen->add_option("--r", gen_r, "bottle r");
  gen->add_option("--t", gen_t, "bottle t");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "exact K_r-factor search");
  std::string solve_host, solve_piece, solve_zfile, solve_mode = "find";
  int solve_r = 3;
  long long solve_budget = kDefaultNodeBudget;
  solve->add_option("--host", solve_host, "host graph json")->required();
  solve->add_option("--r", solve_r, "clique size");
  solve->add_option("--piece-file", solve_piece, "explicit piece graph json");
  solve->add_option("--z-file", solve_zfile, "conforming set json");
  solve->add_option("--mode", solve_mode, "decide|find|maximize");
  solve->add_option("--budget", solve_budget, "node budget");

  // ---- tile ----
  auto* tile = app.add_subcommand("tile", "gadget tilings and local search");
  tile->require_subcommand(1);
  auto* tile_run = tile->add_subcommand("run", "lexicographic local search + dichotomy");
  std::string tr_host, tr_trace;
  int tr_m = 2, tr_s = 2, tr_t = 1;
  double tr_beta = 0.05, tr_gamma = 0.05;
  long long tr_ccap = -1, tr_steps = -1;
  tile_run->add_option("--host", tr_host, "host graph json")->required();
  tile_run->add_option("--m", tr_m);
  tile_run->add_option("--s", tr_s);
  tile_run->add_option("--t", tr_t);
  tile_run->add_option("--beta", tr_beta, "density diagnostic constant");
  tile_run->add_option("--gamma", tr_gamma, "independent-set slack");
  tile_run->add_option("--c-cap", tr_ccap, "leftover cap (-1 = default)");
  tile_run->add_option("--step-limit", tr_steps, "move limit (-1 = default)");
  tile_run->add_option("--trace", tr_trace, "write the move trace json here");

  auto* tile_qcert = tile->add_subcommand("qcert", "fractional cover certificate for a gadget");
  int qc_m = 2, qc_s = 2, qc_t = 1, qc_h = 1;
  tile_qcert->add_option("--m", qc_m);
  tile_qcert->add_option("--s", qc_s);
  tile_qcert->add_option("--t", qc_t);
  tile_qcert->add_option("--h-index", qc_h, "gadget index h in [1, m]");

  auto* tile_verify = tile->add_subcommand("verify", "verify a packing certificate");
  std::string tv_cert, tv_mode = "factor";
  tile_verify->add_option("--cert", tv_cert, "certificate json")->required();
  tile_verify->add_option("--mode", tv_mode, "packing|factor");

  // ---- balance ----
  auto* balance = app.add_subcommand("balance", "size-adjustment planners");
  std::string bal_lemma = "equalize", bal_sizes, bal_eps = "1/10";
  int bal_m = 2, bal_s = 2, bal_t = 1;
  balance->add_option("--lemma", bal_lemma, "equalize|div-r|div-s|sing-part|transfers");
  balance->add_option("--sizes", bal_sizes, "part sizes, comma separated")->required();
  balance->add_option("--m", bal_m);
  balance->add_option("--s", bal_s);
  balance->add_option("--t", bal_t);
  balance->add_option("--epsilon", bal_eps, "size window (rational)");

  // ---- partition ----
  auto* partition = app.add_subcommand("partition", "structure partition search");
  std::string part_host, part_gammas = "0.05,0.1,0.15";
  int part_m = 1, part_s = 2, part_t = 1;
  double part_beta = 0.05;
  bool part_absorber = false;
  partition->add_option("--host", part_host, "host graph json")->required();
  partition->add_option("--m", part_m);
  partition->add_option("--s", part_s);
  partition->add_option("--t", part_t);
  partition->add_option("--beta", part_beta);
  partition->add_option("--gammas", part_gammas, "gamma_1..gamma_m, comma separated");
  partition->add_flag("--with-absorber", part_absorber, "also sample an absorber");

  // ---- regcheck ----
  auto* regcheck = app.add_subcommand("regcheck", "regularity definitions at small scale");
  std::string rc_mode = "pair", rc_host, rc_x, rc_y, rc_eps = "1/4", rc_d = "1/2";
  std::string rc_beta = "1/2", rc_xi = "1/100", rc_z;
  int rc_pieces = 2;
  regcheck->add_option("--mode", rc_mode, "pair|slicing|slicing-add|split");
  regcheck->add_option("--host", rc_host, "graph json (pair/split)");
  regcheck->add_option("--x", rc_x, "X vertices, comma separated");
  regcheck->add_option("--y", rc_y, "Y vertices, comma separated");
  regcheck->add_option("--eps", rc_eps);
  regcheck->add_option("--d", rc_d);
  regcheck->add_option("--beta", rc_beta);
  regcheck->add_option("--xi", rc_xi);
  regcheck->add_option("--z", rc_z, "Z vertices (split)");
  regcheck->add_option("--pieces", rc_pieces, "piece count (split)");

  // ---- sweep / bisect / table ----
  auto* sweep_cmd = app.add_subcommand("sweep", "success probability over a p grid");
  HostOpts sweep_host;
  sweep_host.attach(sweep_cmd);
  int sw_r = 2;
  std::string sw_grid = "0.05,0.1,0.2";
  int sw_trials = 100;
  long long sw_budget = kDefaultNodeBudget;
  std::string sw_summary;
  sweep_cmd->add_option("--r", sw_r);
  sweep_cmd->add_option("--p-grid", sw_grid, "comma separated probabilities");
  sweep_cmd->add_option("--trials", sw_trials);
  sweep_cmd->add_option("--budget", sw_budget);
  sweep_cmd->add_option("--summary", sw_summary, "also write a json summary here");

  auto* bisect_cmd = app.add_subcommand("bisect", "threshold estimate at the 50% crossing");
  HostOpts bisect_host;
  bisect_host.attach(bisect_cmd);
  int bi_r = 2, bi_trials = 200;
  double bi_lo = 0.0, bi_hi = 1.0, bi_target = 0.5, bi_tol = 1e-3;
  long long bi_budget = kDefaultNodeBudget;
  bisect_cmd->add_option("--r", bi_r);
  bisect_cmd->add_option("--lo", bi_lo);
  bisect_cmd->add_option("--hi", bi_hi);
  bisect_cmd->add_option("--target", bi_target);
  bisect_cmd->add_option("--tol", bi_tol);
  bisect_cmd->add_option("--trials", bi_trials, "trials per probe");
  bisect_cmd->add_option("--budget", bi_budget);

  auto* table_cmd = app.add_subcommand("table", "threshold-exponent row check");
  std::string tb_alpha = "1/2", tb_ns = "24,36,48";
  int tb_r = 3, tb_trials = 200;
  double tb_tol = 0.35;
  table_cmd->add_option("--alpha", tb_alpha);
  table_cmd->add_option("--r", tb_r);
  table_cmd->add_option("--n-list", tb_ns, "comma separated sizes");
  table_cmd->add_option("--trials", tb_trials, "trials per probe");
  table_cmd->add_option("--tol", tb_tol, "slope tolerance");

  // global flags may appear after the subcommand name
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    for (auto* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Graph g;
      json note;
      if (gen_type == "gnp") {
        g = gen_gnp(gen_n, parse_rat(gen_p), Seed{global.seed});
      } else if (gen_type == "extremal") {
        g = gen_extremal_host(gen_n, parse_rat(gen_alpha));
      } else if (gen_type == "multipartite") {
        g = gen_complete_multipartite(parse_int_list(gen_sizes));
      } else if (gen_type == "bottle") {
        g = gen_bottle(gen_m, gen_r, gen_t);
        if (gen_t == 0) note["note"] = "degenerate class of size 0 dropped";
      } else if (gen_type == "empty") {
        g = gen_empty(gen_n);
      } else if (gen_type == "complete") {
        g = gen_complete(gen_n);
      } else {
        throw std::runtime_error("unknown generator: " + gen_type);
      }
      emit(global, graph_to_json(g));
      return 0;
    }

    if (*solve) {
      Graph host = load_graph_file(solve_host);
      FactorInstance inst;
      inst.host = &host;
      inst.r = solve_r;
      if (!solve_piece.empty()) inst.piece = load_graph_file(solve_piece);
      if (!solve_zfile.empty()) inst.Z = load_vertex_list(solve_zfile);
      if (solve_mode == "decide")
        inst.mode = SolveMode::Decide;
      else if (solve_mode == "find")
        inst.mode = SolveMode::Find;
      else if (solve_mode == "maximize")
        inst.mode = SolveMode::Maximize;
      else
        throw std::runtime_error("unknown mode: " + solve_mode);
      auto res = solve_factor(inst, solve_budget);
      json j;
      j["status"] = res.status == SolveStatus::Found
                        ? "found"
                        : res.status == SolveStatus::None ? "none" : "timeout";
      j["cliques"] = res.cliques;
      j["covered"] = res.covered;
      j["nodes"] = res.nodes;
      j["optimal"] = res.optimal;
      emit(global, j.dump());
      if (res.status == SolveStatus::Found) return 0;
      if (res.status == SolveStatus::None) return 1;
      return 2;
    }

    if (*tile_run) {
      Graph host = load_graph_file(tr_host);
      auto params = RParams::variant_a(tr_m, tr_s, tr_t);
      EngineConfig cfg;
      cfg.beta = tr_beta;
      cfg.c_cap = tr_ccap;
      cfg.step_limit = tr_steps;
      auto d = run_dichotomy(host, params, tr_gamma, tr_ccap, cfg);
      if (!tr_trace.empty()) {
        std::ofstream f(tr_trace);
        f << trace_to_json(params, d.search) << "\n";
      }
      emit(global, dichotomy_to_json(d));
      return 0;
    }

    if (*tile_qcert) {
      auto params = RParams::variant_a(qc_m, qc_s, qc_t);
      auto cert = factor_Q_with_T(params, qc_h);
      emit(global, cert_to_json(cert));
      return 0;
    }

    if (*tile_verify) {
      std::ifstream in(tv_cert);
      if (!in) throw std::runtime_error("cannot open " + tv_cert);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      auto cert = cert_from_json(text);
      auto mode = tv_mode == "packing" ? PackingMode::Packing : PackingMode::Factor;
      auto rep = verify_packing(cert, mode);
      json j;
      j["ok"] = rep.ok;
      j["message"] = rep.message;
      if (rep.vertex >= 0) j["vertex"] = rep.vertex;
      if (rep.edge.first >= 0) j["edge"] = {rep.edge.first, rep.edge.second};
      emit(global, j.dump());
      return rep.ok ? 0 : 2;
    }

    if (*balance) {
      PartSizes sizes;
      sizes.sizes = parse_ll_list(bal_sizes);
      Rat eps = parse_rat(bal_eps);
      json out;
      if (bal_lemma == "equalize") {
        sizes.params = RParams::variant_b(bal_m, bal_s, bal_t);
        out = plan_json(plan_equalize(sizes, eps));
      } else if (bal_lemma == "div-r") {
        sizes.params = RParams::variant_b(bal_m, bal_s, bal_t);
        out = plan_json(plan_divisibility_r(sizes, eps));
      } else if (bal_lemma == "div-s") {
        sizes.params = RParams::variant_b(bal_m, bal_s, bal_s);
        out = plan_json(plan_divisibility_s_singular(sizes, eps));
      } else if (bal_lemma == "sing-part") {
        sizes.params = RParams::variant_b(bal_m, bal_s, bal_s);
        auto table = plan_singular_partition(sizes, eps);
        out["feasible"] = table.feasible;
        if (!table.error.empty()) out["error"] = table.error;
        out["x"] = table.x;
        out["cells"] = table.cell;
      } else if (bal_lemma == "transfers") {
        sizes.params = RParams::variant_b(bal_m, bal_s, bal_t);
        out = plan_json(plan_transfers(sizes));
      } else {
        throw std::runtime_error("unknown lemma: " + bal_lemma);
      }
      emit(global, out.dump());
      bool ok = out.contains("feasible") ? out["feasible"].get<bool>() : true;
      return ok ? 0 : 2;
    }

    if (*partition) {
      Graph host = load_graph_file(part_host);
      auto params = RParams::variant_b(part_m, part_s, part_t);
      PartitionConstants consts;
      consts.beta = part_beta;
      consts.gammas = parse_double_list(part_gammas);
      auto res = find_partition(host, params, consts);
      json j;
      j["h"] = res.partition.h;
      j["parts"] = res.partition.parts;
      j["report"] = {{"size_windows", res.report.size_windows},
                     {"few_nonneighbors", res.report.few_nonneighbors},
                     {"many_neighbors", res.report.many_neighbors},
                     {"last_part_dense", res.report.last_part_dense},
                     {"cross_degree_third", res.report.cross_degree_third},
                     {"few_missing_edges", res.report.few_missing_edges},
                     {"iv_method", res.report.iv_method},
                     {"iv_min_edges", res.report.iv_min_edges}};
      j["trace"] = res.trace;
      j["min_degree_warning"] = res.min_degree_warning;
      if (part_absorber) {
        auto fam = build_pair_families(host, params, 1 + params.g, Seed{global.seed});
        AbsorberConfig cfg;
        cfg.sample_prob = 0.5;
        cfg.target = 1;
        auto ab = sample_absorber(host, fam, cfg, Seed{global.seed});
        j["absorber"] = {{"ok", ab.ok},
                         {"cliques", ab.cliques.size()},
                         {"min_pair_count", ab.min_count},
                         {"note", ab.note}};
      }
      emit(global, j.dump());
      return res.report.all() ? 0 : 2;
    }

    if (*regcheck) {
      json j;
      if (rc_mode == "pair") {
        Graph host = load_graph_file(rc_host);
        auto stats = check_eps_regular(host, parse_int_list(rc_x), parse_int_list(rc_y),
                                       parse_rat(rc_eps), parse_rat(rc_d), Seed{global.seed});
        j["density"] = rat_str(stats.d);
        j["regular"] = stats.regular;
        j["mode"] = stats.mode;
        j["min_deg_x_to_y"] = stats.min_deg_x_to_y;
        j["min_deg_y_to_x"] = stats.min_deg_y_to_x;
        if (stats.witness) {
          auto& [wx, wy, dens] = *stats.witness;
          j["witness"] = {{"x", wx}, {"y", wy}, {"density", rat_str(dens)}};
        }
      } else if (rc_mode == "slicing") {
        auto out = slicing_params(parse_rat(rc_eps), parse_rat(rc_beta), parse_rat(rc_d));
        j = {{"eps_prime", rat_str(out.eps_prime)},
             {"d_lo", rat_str(out.d_lo)},
             {"d_hi", rat_str(out.d_hi)}};
      } else if (rc_mode == "slicing-add") {
        auto out = slicing_adding_params(parse_rat(rc_xi), parse_rat(rc_eps), parse_rat(rc_d));
        j = {{"eps_prime", rat_str(out.eps_prime)},
             {"d_lo", rat_str(out.d_lo)},
             {"d_hi", rat_str(out.d_hi)}};
      } else if (rc_mode == "split") {
        auto pieces = random_conforming_split(parse_int_list(rc_x), parse_int_list(rc_z),
                                              rc_pieces, Seed{global.seed});
        j["pieces"] = pieces;
      } else {
        throw std::runtime_error("unknown regcheck mode: " + rc_mode);
      }
      emit(global, j.dump());
      return 0;
    }

    if (*sweep_cmd) {
      TrialSpec spec;
      spec.host = sweep_host.spec();
      spec.r = sw_r;
      spec.p_grid = parse_rat_list(sw_grid);
      spec.trials = sw_trials;
      spec.master = Seed{global.seed};
      spec.solver_budget = sw_budget;
      spec.threads = global.threads;
      auto result = sweep(spec);
      emit(global, sweep_csv(spec, result));
      if (!sw_summary.empty()) {
        std::ofstream f(sw_summary);
        f << sweep_summary_json(spec, result) << "\n";
      }
      return result.anomalies.empty() ? 0 : 2;
    }

    if (*bisect_cmd) {
      TrialSpec spec;
      spec.host = bisect_host.spec();
      spec.r = bi_r;
      spec.trials = bi_trials;
      spec.master = Seed{global.seed};
      spec.solver_budget = bi_budget;
      spec.threads = global.threads;
      auto res = bisect_threshold(spec, bi_lo, bi_hi, bi_target, bi_tol, bi_trials);
      json j;
      j["status"] = res.status == BisectResult::Status::Ok
                        ? "ok"
                        : res.status == BisectResult::Status::BelowGrid ? "below-grid" : "above-grid";
      j["p_hat"] = res.p_hat;
      j["bracket"] = {res.ci_lo, res.ci_hi};
      j["prob_lo"] = res.prob_lo;
      j["prob_hi"] = res.prob_hi;
      json probes = json::array();
      for (const auto& pr : res.probes)
        probes.push_back({{"p", pr.p}, {"successes", pr.successes}, {"trials", pr.trials}});
      j["probes"] = std::move(probes);
      emit(global, j.dump());
      return 0;
    }

    if (*table_cmd) {
      auto rep = reproduce_table_row(parse_rat(tb_alpha), tb_r, parse_int_list(tb_ns), tb_trials,
                                     Seed{global.seed}, tb_tol);
      json j;
      j["alpha"] = rat_str(rep.alpha);
      j["r"] = rep.r;
      j["s_regime"] = rep.s_regime;
      j["transition"] = rep.transition;
      j["zero_row"] = rep.zero_row;
      if (rep.expected_exponent) j["expected_exponent"] = rat_to_double(*rep.expected_exponent);
      j["n"] = rep.n_values;
      j["p_hats"] = rep.p_hats;
      j["slope"] = rep.fit.slope;
      j["slope_stderr"] = rep.fit.stderr_slope;
      j["verdict"] = rep.verdict;
      emit(global, j.dump());
      return rep.verdict == "inconsistent" ? 2 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
