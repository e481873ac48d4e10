#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "hnsf/config.hpp"
#include "hnsf/errors.hpp"
#include "hnsf/solver.hpp"

using namespace hnsf;
using doctest::Approx;

namespace {

SimConfig small_config() {
  SimConfig c = standard_config();
  c.grid = Grid1D{-30.0, 20.0, 250};
  c.t_end = 2.0;
  c.profile_count = 0;
  c.output_interval = 0.0;
  return c;
}

}  // namespace

TEST_CASE("initial fields") {
  SimConfig c = small_config();
  c.perturbation.amplitude = 0.0;
  const Background bg = make_background(c);
  const FieldSet f = initial_fields(c, bg);
  for (int i = 0; i < c.grid.n; ++i) {
    const WavePoint p = bg.eval(0.0, c.grid.x(i));
    CHECK(f(Var::V, i) == p.v);
    CHECK(f(Var::U, i) == p.u);
    CHECK(f(Var::Theta, i) == p.theta);
    CHECK(f(Var::Q, i) == p.q_ref);
    CHECK(f(Var::S, i) == p.S_ref);
  }

  c.perturbation = {0.01, 0.0, 2.0, {true, false, false, false, false}};
  const FieldSet g = initial_fields(c, bg);
  double best = 0.0;
  int arg = -1;
  for (int i = 0; i < c.grid.n; ++i) {
    const WavePoint p = bg.eval(0.0, c.grid.x(i));
    const double d = g(Var::V, i) - p.v;
    CHECK(d <= 0.01);
    CHECK(d >= 0.0);
    CHECK(g(Var::U, i) == p.u);
    if (d > best) {
      best = d;
      arg = i;
    }
  }
  CHECK(std::abs(c.grid.x(arg)) <= 0.5 * c.grid.dx() + 1e-12);

  c.perturbation = {-2.0, 0.0, 2.0, {false, false, true, false, false}};
  CHECK_THROWS_AS(initial_fields(c, bg), ConfigError);
}

TEST_CASE("constant background mode") {
  SimConfig c = small_config();
  c.background = BackgroundMode::Constant;
  c.right = {1.3, 0.2, 0.9};
  c.v_minus = 99.0;  // ignored
  CHECK_NOTHROW(c.validate());
  const Background bg = make_background(c);
  CHECK_FALSE(bg.is_smooth());
  const WavePoint p = bg.eval(5.0, 3.0);
  CHECK(p.v == 1.3);
  CHECK(p.vx == 0.0);
  CHECK(bg.centered(5.0, 3.0) == EndState{1.3, 0.2, 0.9});
}

TEST_CASE("rhs examples") {
  GasParams g;
  const Grid1D grid{-1.0, 1.0, 20};

  const FieldSet eq = constant_fields(grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  const Rates r0 = rhs(g, grid, eq, false);
  for (const auto& d : r0.d)
    for (double a : d) CHECK(a == 0.0);

  const double q0 = 0.3;
  const FieldSet uq = constant_fields(grid, CellState{1.2, 0.0, 0.8, q0, 0.0});
  const Rates r1 = rhs(g, grid, uq, false);
  const double a = g.tau1 / (2 * g.kappa * 0.8);
  const double c = g.Cv() - g.tau1 * q0 * q0 / (2 * g.kappa * 0.8 * 0.8);
  for (int i = 0; i < grid.n; ++i) {
    CHECK(r1.d[3][static_cast<std::size_t>(i)] == Approx(-1.2 * q0 / g.tau1).epsilon(1e-14));
    CHECK(r1.d[2][static_cast<std::size_t>(i)] ==
          Approx(2 * a * 1.2 / g.tau1 * q0 * q0 / c).epsilon(1e-14));
    CHECK(r1.d[2][static_cast<std::size_t>(i)] > 0.0);
  }
  const Rates r1s = rhs(g, grid, uq, true);
  CHECK(r1s.d[3][5] == 0.0);

  const double slope = 0.25;
  FieldSet lin = constant_fields(grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  for (int i = -FieldSet::kGhost; i < grid.n + FieldSet::kGhost; ++i) lin(Var::U, i) = slope * grid.x(i);
  const Rates r2 = rhs(g, grid, lin, true);
  for (int i = 0; i < grid.n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    CHECK(r2.d[0][k] == Approx(slope).epsilon(1e-12));
    CHECK(r2.d[4][k] == Approx(g.mu * slope / g.tau2).epsilon(1e-12));
    CHECK(r2.d[1][k] == Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("dissipation order by reconstruction") {
  // u = 0, so the v rate is the dissipation alone
  GasParams g;
  auto worst = [&](int n, Reconstruction recon) {
    const Grid1D grid{-4.0, 4.0, n};
    FieldSet f = constant_fields(grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
    for (int i = -FieldSet::kGhost; i < n + FieldSet::kGhost; ++i)
      f(Var::V, i) = 1.0 + 0.1 * std::tanh(grid.x(i));
    const Rates r = rhs(g, grid, f, true, recon);
    double m = 0.0;
    for (int i = 0; i < n; ++i)
      if (std::abs(grid.x(i)) <= 2.0) m = std::max(m, std::abs(r.d[0][static_cast<std::size_t>(i)]));
    return m;
  };
  const double c1 = worst(200, Reconstruction::Constant);
  const double c2 = worst(400, Reconstruction::Constant);
  const double m1 = worst(200, Reconstruction::Minmod);
  const double m2 = worst(400, Reconstruction::Minmod);
  CHECK(c1 / c2 == Approx(2.0).epsilon(0.05));
  CHECK(m1 / m2 > 3.5);
  CHECK(m1 < 0.1 * c1);
}

TEST_CASE("minmod reconstruction falls back to cell values at extrema") {
  GasParams g;
  const Grid1D grid{-1.0, 1.0, 20};
  FieldSet f = constant_fields(grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  f(Var::Theta, 9) = 1.2;
  const Rates a = rhs(g, grid, f, true, Reconstruction::Minmod);
  const Rates b = rhs(g, grid, f, true, Reconstruction::Constant);
  for (int c = 0; c < kNumVars; ++c)
    for (int i = 0; i < grid.n; ++i)
      CHECK(a.d[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] ==
            b.d[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]);
}

TEST_CASE("heat-capacity breakdown aborts rhs") {
  GasParams g;
  const Grid1D grid{-1.0, 1.0, 20};
  FieldSet f = constant_fields(grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  f(Var::Theta, 7) = 0.1;
  f(Var::Q, 7) = 3.0;
  CHECK_THROWS_WITH_AS(rhs(g, grid, f, true), doctest::Contains("cell 7"), ModelBreakdown);
}

TEST_CASE("apply_bc") {
  SimConfig c = small_config();
  c.grid = Grid1D{-400.0, 20.0, 400};
  const Background bg = make_background(c);
  const RiemannData& rd = bg.wave().riemann();
  FieldSet f = initial_fields(c, bg);
  apply_bc(f, bg, c.grid, 0.0);
  CHECK(f(Var::V, -2) == Approx(rd.left.v).epsilon(1e-7));
  CHECK(f(Var::U, -2) == Approx(rd.left.u).epsilon(1e-6));
  CHECK(f(Var::Theta, -2) == Approx(rd.left.theta).epsilon(1e-7));
  CHECK(std::abs(f(Var::Q, -2)) < 1e-8);

  SimConfig near = small_config();
  near.grid = Grid1D{-5.0, 5.0, 100};
  const Background bg2 = make_background(near);
  FieldSet a = initial_fields(near, bg2);
  FieldSet b = a;
  apply_bc(a, bg2, near.grid, 1.0);
  apply_bc(b, bg2, near.grid, 2.0);
  CHECK(a(Var::V, -1) != b(Var::V, -1));
  FieldSet a2 = a;
  apply_bc(a2, bg2, near.grid, 1.0);
  CHECK(a2 == a);
}

TEST_CASE("stable_dt") {
  GasParams g;
  const Grid1D grid{0.0, 5.0, 100};
  const FieldSet f = constant_fields(grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  const double speed = std::sqrt(5.0 / 3.0) + std::sqrt(20.0 / 3.0) + std::sqrt(10.0);
  CHECK(stable_dt(g, grid, f, 0.4, true) == Approx(0.4 * 0.05 / speed).epsilon(1e-14));
  CHECK(stable_dt(g, grid, f, 0.4, true) == Approx(2.8428e-3).epsilon(1e-4));

  GasParams stiff;
  stiff.tau1 = 1e-4;
  CHECK(stable_dt(stiff, grid, f, 0.4, false) == Approx(5e-5).epsilon(1e-14));
  CHECK(stable_dt(stiff, grid, f, 0.4, true) > 5e-5);

  const Grid1D fine{0.0, 5.0, 200};
  const FieldSet ff = constant_fields(fine, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  CHECK(stable_dt(g, fine, ff, 0.4, true) == Approx(0.5 * stable_dt(g, grid, f, 0.4, true)).epsilon(1e-14));
}

TEST_CASE("exact damping substep") {
  GasParams g;
  const Grid1D grid{0.0, 1.0, 16};
  FieldSet f = constant_fields(grid, CellState{0.7, 0.0, 1.0, 0.2, 0.05});
  f(Var::V, 3) = 1.9;
  damp_relaxation(g, f, 0.01);
  CHECK(f(Var::Q, 0) == Approx(0.2 * std::exp(-0.7 * 0.01 / g.tau1)).epsilon(1e-15));
  CHECK(f(Var::Q, 3) == Approx(0.2 * std::exp(-1.9 * 0.01 / g.tau1)).epsilon(1e-15));
  CHECK(f(Var::S, 3) == Approx(0.05 * std::exp(-1.9 * 0.01 / g.tau2)).epsilon(1e-15));
}

TEST_CASE("equilibrium state is preserved") {
  SimConfig c = small_config();
  c.background = BackgroundMode::Constant;
  c.right = {1.0, 0.0, 1.0};
  const Background bg = make_background(c);
  const FieldSet start = constant_fields(c.grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  FieldSet f = start;
  for (int k = 0; k < 1000; ++k) f = step(c, bg, f, stable_dt(c.gas, c.grid, f, c.cfl, true));
  for (int i = 0; i < c.grid.n; ++i) {
    const CellState s = f.cell(i);
    CHECK(std::abs(s.v - 1.0) < 1e-12);
    CHECK(std::abs(s.u) < 1e-12);
    CHECK(std::abs(s.theta - 1.0) < 1e-12);
  }
}

TEST_CASE("uniform q relaxes at the exact rate, with and without the split") {
  for (bool split : {true, false}) {
    SimConfig c = small_config();
    c.background = BackgroundMode::Constant;
    c.right = {1.0, 0.0, 1.0};
    c.grid = Grid1D{-10.0, 10.0, 200};
    c.t_end = 0.1;
    c.relaxation_split = split;
    const Background bg = make_background(c);
    const RunSummary s = run_from(c, bg, constant_fields(c.grid, CellState{1.0, 0.0, 1.0, 0.1, 0.0}));
    const double q = s.final_fields(Var::Q, 100);
    CHECK(q == Approx(0.1 * std::exp(-1.0)).epsilon(split ? 1e-3 : 1e-2));
    // relaxational heating raises theta
    CHECK(s.final_fields(Var::Theta, 100) > 1.0);
  }
}

TEST_CASE("run bookkeeping") {
  SimConfig c = small_config();
  c.t_end = 0.0;
  std::vector<DiagnosticsRecord> recs;
  RunCallbacks cb;
  cb.on_record = [&](const DiagnosticsRecord& r) { recs.push_back(r); };
  const RunSummary s0 = run(c, cb);
  CHECK(recs.size() == 1);
  CHECK(recs[0].t == 0.0);
  CHECK(s0.steps == 0);

  recs.clear();
  c.t_end = 1.0;
  c.output_interval = 0.3;
  c.profile_count = 3;
  std::vector<double> profile_times;
  cb.on_profile = [&](int, const FieldSet& f) { profile_times.push_back(f.t); };
  run(c, cb);
  std::vector<double> times;
  for (const auto& r : recs) times.push_back(r.t);
  CHECK(times == std::vector<double>{0.0, 0.3, 0.6, 0.8999999999999999, 1.0});
  CHECK(profile_times == std::vector<double>{0.0, 0.5, 1.0});
}

TEST_CASE("determinism and mass balance") {
  for (Reconstruction recon : {Reconstruction::Minmod, Reconstruction::Constant}) {
    SimConfig c = small_config();
    c.reconstruction = recon;
    c.output_every = 10;
    std::vector<DiagnosticsRecord> a;
    std::vector<DiagnosticsRecord> b;
    const RunSummary sa = run(c, {[&](const DiagnosticsRecord& r) { a.push_back(r); }, {}});
    const RunSummary sb = run(c, {[&](const DiagnosticsRecord& r) { b.push_back(r); }, {}});
    CHECK(sa.final_fields == sb.final_fields);
    REQUIRE(a.size() == b.size());
    const double volume = total_volume(c.grid, sa.final_fields);
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].eta_total == b[k].eta_total);
      CHECK(std::abs(a[k].mass_balance_error) < 1e-12 * volume);
    }
  }
}

TEST_CASE("invariant violation carries step and time") {
  SimConfig c = small_config();
  c.background = BackgroundMode::Constant;
  c.right = {1.0, 0.0, 1.0};
  const Background bg = make_background(c);
  FieldSet f = constant_fields(c.grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  f(Var::U, 99) = 50.0;
  f(Var::U, 101) = -50.0;
  CHECK_THROWS_WITH_AS(run_from(c, bg, f), doctest::Contains("step 1 at t=0"), InvariantViolation);

  FieldSet bad = constant_fields(c.grid, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
  bad(Var::V, 4) = -0.1;
  CHECK_THROWS_WITH_AS(check_invariants(c.gas, bad), doctest::Contains("cell 4"), InvariantViolation);
}

TEST_CASE("unperturbed run follows the smooth wave toward the centered wave") {
  SimConfig c = standard_config();
  c.grid = Grid1D{-130.0, 30.0, 1600};
  c.t_end = 80.0;
  c.perturbation.amplitude = 0.0;
  c.output_interval = 10.0;
  c.profile_count = 0;
  std::vector<double> sup;
  RunCallbacks cb;
  cb.on_record = [&](const DiagnosticsRecord& r) {
    if (r.t == 10.0 || r.t == 20.0 || r.t == 40.0 || r.t == 80.0) sup.push_back(r.sup_centered);
  };
  run(c, cb);
  REQUIRE(sup.size() == 4);
  CHECK(sup[0] > sup[1]);
  CHECK(sup[1] > sup[2]);
  CHECK(sup[2] > sup[3]);
}
