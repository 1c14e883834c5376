#include <doctest.h>

#include <cmath>

#include "tilekit/generators.hpp"
#include "tilekit/threshold.hpp"

using namespace tilekit;

TEST_CASE("threshold formulas") {
  CHECK(phi_exponent(3) == Rat(3, 5));
  CHECK(phi_exponent(4) == Rat(4, 9));
  CHECK_THROWS_AS(phi_exponent(1), std::invalid_argument);
  CHECK(p_threshold(100, 2) == doctest::Approx(std::log(100.0) / 100));
  CHECK(p_threshold(100, 3) == doctest::Approx(std::pow(100.0, -0.6)));
}

TEST_CASE("single trials") {
  TrialSpec spec;
  spec.host = {HostKind::Complete, 12, Rat(0), Rat(0), {}, std::nullopt};
  spec.r = 3;
  spec.master = Seed{5};
  CHECK(run_trial(spec, Rat(0), 0) == TrialOutcome::Success);

  spec.host.kind = HostKind::Empty;
  spec.host.n = 4;
  spec.r = 2;
  CHECK(run_trial(spec, Rat(0), 0) == TrialOutcome::Failure);

  spec.host = {HostKind::Extremal, 12, Rat(2, 3), Rat(0), {}, std::nullopt};
  spec.r = 3;
  CHECK(run_trial(spec, Rat(1), 0) == TrialOutcome::Success);
}

TEST_CASE("sweep endpoints and determinism across thread counts") {
  TrialSpec spec;
  spec.host = {HostKind::Empty, 12, Rat(0), Rat(0), {}, std::nullopt};
  spec.r = 2;
  spec.p_grid = {Rat(0), Rat(1, 10), Rat(3, 10), Rat(1)};
  spec.trials = 40;
  spec.master = Seed{2024};
  spec.threads = 1;
  auto single = sweep(spec);
  CHECK(single.points.front().prob() == 0.0);
  CHECK(single.points.back().prob() == 1.0);
  // smoothed curve is monotone
  for (size_t i = 0; i + 1 < single.smoothed.size(); ++i)
    CHECK(single.smoothed[i] <= single.smoothed[i + 1]);

  spec.threads = 8;
  auto eight = sweep(spec);
  CHECK(sweep_csv(spec, single) == sweep_csv(spec, eight));
  CHECK(sweep_summary_json(spec, single) == sweep_summary_json(spec, eight));

  // success counts rise along the grid on this instance
  CHECK(single.points[1].successes <= single.points[2].successes);
}

TEST_CASE("bisection brackets") {
  TrialSpec spec;
  spec.host = {HostKind::Empty, 24, Rat(0), Rat(0), {}, std::nullopt};
  spec.r = 2;
  spec.master = Seed{7};
  spec.threads = 2;
  auto res = bisect_threshold(spec, 0.0, 1.0, 0.5, 0.01, 60);
  CHECK(res.status == BisectResult::Status::Ok);
  double benchmark = std::log(24.0) / 24.0;
  CHECK(res.p_hat > benchmark / 3);
  CHECK(res.p_hat < benchmark * 3);

  // a re-probe at twice the estimate clears the target
  TrialSpec probe_spec = spec;
  long long succ = 0, det = 0;
  for (int i = 0; i < 60; ++i) {
    auto o = run_trial(probe_spec, rat_from_double(2 * res.p_hat), 1000 + i);
    if (o != TrialOutcome::Indeterminate) {
      ++det;
      succ += o == TrialOutcome::Success ? 1 : 0;
    }
  }
  CHECK(static_cast<double>(succ) / det > 0.5);

  // a host that already has a factor reports below-grid
  TrialSpec done;
  done.host = {HostKind::Complete, 12, Rat(0), Rat(0), {}, std::nullopt};
  done.r = 3;
  done.master = Seed{7};
  auto below = bisect_threshold(done, 0.0, 1.0, 0.5, 0.01, 20);
  CHECK(below.status == BisectResult::Status::BelowGrid);
  CHECK(below.p_hat == 0.0);
}

TEST_CASE("exponent fits") {
  std::vector<double> ns{10, 20, 40, 80}, ps;
  for (double n : ns) ps.push_back(std::pow(n, -2.0 / 3));
  auto fit = exponent_fit(ns, ps);
  CHECK(fit.slope == doctest::Approx(-2.0 / 3).epsilon(1e-9));
  CHECK(fit.stderr_slope == doctest::Approx(0.0).epsilon(1e-9));

  std::vector<double> ns2, ps2;
  for (double n : {24.0, 48.0, 96.0, 240.0}) {
    ns2.push_back(n);
    ps2.push_back(std::log(n) / n);
  }
  auto logfit = exponent_fit(ns2, ps2);
  CHECK(logfit.slope > -1.0);
  CHECK(logfit.slope < -0.6);

  CHECK_THROWS_AS(exponent_fit({10, 20}, {0.1, 0.05}), std::invalid_argument);
  CHECK_THROWS_AS(exponent_fit({10, 10, 10}, {0.1, 0.1, 0.1}), std::invalid_argument);
}

TEST_CASE("host caps are enforced") {
  TrialSpec spec;
  spec.host = {HostKind::Empty, 204, Rat(0), Rat(0), {}, std::nullopt};
  spec.r = 2;
  spec.p_grid = {Rat(1, 10)};
  spec.master = Seed{7};
  CHECK_THROWS_AS(sweep(spec), std::invalid_argument);
}

TEST_CASE("table row on the fully dense regime") {
  auto rep = reproduce_table_row(Rat(3, 4), 4, {12, 16}, 10, Seed{3}, 0.3);
  CHECK(rep.zero_row);
  CHECK(rep.verdict == "zero-row");
  for (double p : rep.p_hats) CHECK(p == 0.0);
}

TEST_CASE("table row for the bare matching regime") {
  auto rep = reproduce_table_row(Rat(0), 2, {24, 48, 96}, 60, Seed{13}, 0.35);
  CHECK_FALSE(rep.zero_row);
  CHECK(rep.s_regime == 2);
  REQUIRE(rep.expected_exponent.has_value());
  CHECK(*rep.expected_exponent == Rat(-1));
  CHECK(rep.verdict == "consistent");  // log-corrected slope sits within 0.35 of -1
}
