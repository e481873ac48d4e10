#include "hnsf/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>

#include "hnsf/diagnostics.hpp"
#include "hnsf/errors.hpp"
#include "hnsf/quadrature.hpp"

namespace hnsf {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome below(double measured, double limit) {
  return {measured < limit, fmt("%.3e < %.1e", measured, limit)};
}

class Suite {
 public:
  Suite(const SimConfig& config, std::uint64_t seed)
      : config_(config),
        gas_(config.gas),
        wave_(config.wave_params()),
        rd_(wave_.riemann()),
        rng_(seed) {}

  std::vector<CheckResult> run();

 private:
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

  void add(const char* name, const std::function<Outcome()>& fn) {
    CheckResult r;
    r.name = name;
    try {
      const Outcome o = fn();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  SimConfig config_;
  GasParams gas_;
  SmoothWave wave_;
  RiemannData rd_;
  std::mt19937_64 rng_;
  std::vector<CheckResult> results_;
};

std::vector<CheckResult> Suite::run() {
  const double vm = rd_.left.v;
  const double vp = rd_.right.v;
  const double wm = rd_.w_minus;
  const double wp = rd_.w_plus;

  // thermo
  add("thermo.pressure_positive", [&] {
    double worst = 1.0;
    for (int k = 0; k < 1000; ++k) {
      const double p = pressure(gas_, uniform(0.1, 10.0), uniform(0.1, 10.0));
      worst = std::min(worst, p);
    }
    return Outcome{worst > 0.0, fmt("min p = %.3e > %.0f", worst, 0.0)};
  });

  add("thermo.energy_derivative_is_heat_capacity", [&] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double th = uniform(0.5, 2.0);
      const double q = uniform(-0.3, 0.3);
      const double h = 1e-5;
      const double fd =
          (internal_energy(gas_, th + h, q) - internal_energy(gas_, th - h, q)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - effective_heat_capacity_raw(gas_, th, q)));
    }
    return below(worst, 1e-8);
  });

  add("thermo.relax_coeff_derivative", [&] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double th = uniform(0.5, 2.0);
      const RelaxCoeff c = relax_coeff_a(gas_, th);
      worst = std::max(worst, std::abs(c.a_prime + c.a / th));
    }
    return below(worst, 1e-14);
  });

  add("thermo.acoustic_speeds_symmetric", [&] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double v = uniform(0.5, 2.0);
      const double th = uniform(0.5, 2.0);
      const AcousticSpeeds s = lambda1(gas_, v, th);
      const double expect = -std::sqrt(gas_.gamma * gas_.R * th) / v;
      worst = std::max({worst, std::abs(s.lambda1 - expect), std::abs(s.lambda1 + s.lambda3)});
    }
    return below(worst, 1e-14);
  });

  add("thermo.max_wave_speed_dominates_sound", [&] {
    double margin = 1e300;
    for (int k = 0; k < 1000; ++k) {
      CellState s{uniform(0.5, 2.0), uniform(-1, 1), uniform(0.5, 2.0), uniform(-0.2, 0.2),
                  uniform(-0.2, 0.2)};
      margin = std::min(margin, max_wave_speed(gas_, s) - std::abs(lambda1(gas_, s.v, s.theta).lambda1));
    }
    return Outcome{margin > 0.0, fmt("min(bound - |lambda1|) = %.3e > %.0f", margin, 0.0)};
  });

  add("thermo.entropy_constant_on_isentrope", [&] {
    const double s0 = entropy(gas_, vp, rd_.right.theta);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double v = uniform(0.3, 3.0);
      worst = std::max(worst, std::abs(entropy(gas_, v, isentrope_theta(gas_, rd_.right, v)) - s0));
    }
    return below(worst, 1e-12);
  });

  // riemann
  add("riemann.r1_curve_matches_quadrature", [&] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double v = vm + (vp - vm) * k / 99.0;
      const double integral = adaptive_simpson(
          [&](double s) { return lambda1(gas_, s, isentrope_theta(gas_, rd_.right, s)).lambda1; },
          vp, v, 1e-14);
      // z1 is constant: u(v) + int_{v+}^{v} lambda1 = u+
      const double oracle = rd_.right.u - integral;
      const double got = r1_curve_u(gas_, rd_.right, v);
      worst = std::max(worst, std::abs(got - oracle) / std::max(1.0, std::abs(oracle)));
    }
    return below(worst, 1e-9);
  });

  add("riemann.left_state_on_r1", [&] {
    const RiemannInvariants l = riemann_invariants(gas_, rd_.left, rd_.right);
    const RiemannInvariants r = riemann_invariants(gas_, rd_.right, rd_.right);
    return below(std::max(std::abs(l.z1 - r.z1), std::abs(l.s - r.s)), 1e-12);
  });

  add("riemann.invariants_constant_in_fan", [&] {
    const RiemannInvariants r = riemann_invariants(gas_, rd_.right, rd_.right);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double xi = wm + (wp - wm) * k / 999.0;
      const EndState st = centered_wave_eval(gas_, rd_, 1.0, xi);
      const RiemannInvariants z = riemann_invariants(gas_, st, rd_.right);
      worst = std::max({worst, std::abs(z.z1 - r.z1), std::abs(z.s - r.s)});
    }
    return below(worst, 1e-10);
  });

  add("riemann.fan_speed_matches_lambda1", [&] {
    double worst = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const double xi = wm + (wp - wm) * k / 100.0;
      const EndState st = centered_wave_at(gas_, rd_, xi);
      worst = std::max(worst, std::abs(lambda1(gas_, st.v, st.theta).lambda1 - xi));
    }
    return below(worst, 1e-12);
  });

  add("riemann.centered_wave_monotone_continuous", [&] {
    double prev = -1e300;
    bool mono = true;
    for (int k = 0; k <= 2000; ++k) {
      const double xi = wm - 0.2 + (wp - wm + 0.4) * k / 2000.0;
      const double v = centered_wave_at(gas_, rd_, xi).v;
      mono = mono && v >= prev;
      prev = v;
    }
    const double jump = std::max(std::abs(centered_wave_at(gas_, rd_, wm).v - vm),
                                 std::abs(centered_wave_at(gas_, rd_, wp).v - vp));
    return Outcome{mono && jump < 1e-12, fmt("monotone=%g, edge jump %.3e", mono ? 1.0 : 0.0, jump)};
  });

  // smoothwave
  add("smoothwave.kq_normalises_ramp", [&] {
    const double q = wave_.params().q_exp;
    // y = tan(s) maps [0, pi/2) onto [0, inf)
    const double integral = adaptive_simpson(
        [&](double s) { return std::pow(std::cos(s), 2.0 * q - 2.0); }, 0.0, M_PI / 2.0, 1e-14);
    return below(std::abs(wave_.kq() * integral - 1.0), 1e-10);
  });

  add("smoothwave.ramp_integral_matches_quadrature", [&] {
    const double q = wave_.params().q_exp;
    double worst = 0.0;
    for (double z : {-7.0, -1.5, -0.3, 0.2, 0.9, 1.0, 2.5, 40.0}) {
      const double oracle = adaptive_simpson(
          [&](double y) { return std::pow(1.0 + y * y, -q); }, 0.0, z, 1e-14);
      worst = std::max(worst, std::abs(incomplete_ramp_integral(z, q) - oracle));
    }
    return below(worst, 1e-10);
  });

  add("smoothwave.w0_limits", [&] {
    const double d = std::max(std::abs(wave_.w0(1e8) - wp), std::abs(wave_.w0(-1e8) - wm));
    return below(d, 1e-9);
  });

  add("smoothwave.burgers_residual", [&] {
    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
      const double tau = uniform(0.0, 100.0);
      const double x = uniform(-200.0, 200.0);
      const BurgersValue b = wave_.burgers_w(tau, x);
      const double res = std::abs(x - b.x0 - wave_.w0(b.x0) * tau) / std::max(1.0, std::abs(x));
      worst = std::max(worst, res);
    }
    return below(worst, 1e-11);
  });

  add("smoothwave.burgers_monotone_in_x", [&] {
    bool mono = true;
    for (double tau : {1.0, 5.0, 30.0, 101.0}) {
      double prev = -1e300;
      for (int k = 0; k <= 1000; ++k) {
        const double w = wave_.burgers_w(tau, -200.0 + 0.4 * k).w;
        mono = mono && w >= prev;
        prev = w;
      }
    }
    return Outcome{mono, mono ? "w nondecreasing on 4 slices" : "w decreased somewhere"};
  });

  add("smoothwave.lift_identities", [&] {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double t = uniform(0.0, 50.0);
      const double x = uniform(wm * (1.0 + t) - 10.0, wp * (1.0 + t) + 10.0);
      const WavePoint p = wave_.eval(t, x);
      const double c = std::sqrt(gas_.R * gas_.gamma * p.theta);
      worst = std::max({worst, std::abs(p.ux - 2.0 * p.v * p.wx / (gas_.gamma + 1.0)),
                        std::abs(p.vx - p.v * p.ux / c),
                        std::abs(p.thetax + (gas_.gamma - 1.0) * p.theta * p.vx / p.v)});
    }
    return below(worst, 1e-15);
  });

  add("smoothwave.vx_matches_finite_difference", [&] {
    double worst = 0.0;
    for (int k = 0; k < 300; ++k) {
      const double t = uniform(0.0, 50.0);
      const double x = uniform(wm * (1.0 + t) - 2.0, wp * (1.0 + t) + 2.0);
      const WavePoint p = wave_.eval(t, x);
      if (std::abs(p.vx) < 1e-8) continue;
      const double h = 1e-4;
      const double fd = (wave_.eval(t, x + h).v - wave_.eval(t, x - h).v) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - p.vx) / std::abs(p.vx));
    }
    return below(worst, 1e-6);
  });

  add("smoothwave.profile_between_end_states", [&] {
    bool ok = true;
    for (int k = 0; k < 500; ++k) {
      const WavePoint p = wave_.eval(uniform(0.0, 100.0), uniform(-300.0, 300.0));
      ok = ok && p.v >= vm - 1e-14 && p.v <= vp + 1e-14 && p.vx >= 0.0;
    }
    return Outcome{ok, ok ? "v in [v-, v+], v_x >= 0" : "profile left [v-, v+] or v_x < 0"};
  });

  add("smoothwave.euler_defect_second_order", [&] {
    double worst = 0.0;
    double min_ratio = 1e300;
    for (int k = 0; k < 100; ++k) {
      const double t = uniform(0.0, 2.0);
      const double x = uniform(wm * (1.0 + t), wp * (1.0 + t));
      const EulerDefect a = wave_.euler_defect(t, x, 1e-5, 1e-5);
      const EulerDefect b = wave_.euler_defect(t, x, 5e-6, 5e-6);
      const double ra = std::max({std::abs(a.mass), std::abs(a.momentum), std::abs(a.energy)});
      const double rb = std::max({std::abs(b.mass), std::abs(b.momentum), std::abs(b.energy)});
      worst = std::max(worst, ra);
      if (rb > 0.0) min_ratio = std::min(min_ratio, ra / rb);
    }
    return Outcome{worst < 1e-7 && min_ratio >= 3.5,
                   fmt("max residual %.3e, min halving ratio %.2f", worst, min_ratio)};
  });

  add("smoothwave.approaches_centered_wave", [&] {
    double prev = 1e300;
    bool dec = true;
    double first = 0.0;
    double last = 0.0;
    for (double t : {10.0, 20.0, 40.0, 80.0}) {
      const double d = sup_distance_to_centered(wave_, t, wm * t - 50.0, wp * t + 50.0, 2000);
      dec = dec && d < prev;
      if (t == 10.0) first = d;
      last = d;
      prev = d;
    }
    return Outcome{dec && last < 0.5 * first, fmt("d(10) = %.3e, d(80) = %.3e", first, last)};
  });

  // diagnostics
  add("diagnostics.phi_nonnegative_zero_at_one", [&] {
    double worst = 1e300;
    for (int k = 0; k < 1000; ++k) worst = std::min(worst, phi_func(uniform(1e-3, 10.0)));
    return Outcome{worst >= 0.0 && phi_func(1.0) == 0.0, fmt("min phi = %.3e, phi(1) = %g", worst, phi_func(1.0))};
  });

  add("diagnostics.relative_entropy_zero_at_reference", [&] {
    double worst = 0.0;
    double min_pos = 1e300;
    for (int k = 0; k < 200; ++k) {
      const WavePoint p = wave_.eval(uniform(0.0, 20.0), uniform(-40.0, 10.0));
      const CellState same{p.v, p.u, p.theta, p.q_ref, p.S_ref};
      worst = std::max(worst, std::abs(relative_entropy_density(gas_, same, p)));
      CellState off = same;
      off.u += 1e-3;
      min_pos = std::min(min_pos, relative_entropy_density(gas_, off, p));
    }
    return Outcome{worst == 0.0 && min_pos > 0.0, fmt("eta(ref) = %.3e, min eta(off) = %.3e", worst, min_pos)};
  });

  add("diagnostics.relative_entropy_quadratic", [&] {
    const WavePoint p = wave_.eval(0.0, 0.0);
    auto eta = [&](double d) {
      return relative_entropy_density(
          gas_, CellState{p.v + d, p.u + d, p.theta + d, p.q_ref + d, p.S_ref + d}, p);
    };
    const double ratio = eta(1e-3) / eta(1e-4);
    return Outcome{std::abs(ratio / 100.0 - 1.0) < 0.02, fmt("ratio %.4f vs %.0f", ratio, 100.0)};
  });

  add("diagnostics.trapezoid_and_derivatives_exact", [&] {
    const double dx = 0.1;
    std::vector<double> f(51);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = dx * static_cast<double>(i);
      f[i] = 3.0 * x * x - x + 2.0;
    }
    const auto d1 = first_derivative(f, dx);
    const auto d2 = second_derivative(f, dx);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = dx * static_cast<double>(i);
      worst = std::max({worst, std::abs(d1[i] - (6.0 * x - 1.0)), std::abs(d2[i] - 6.0)});
    }
    const std::vector<double> lin(f.size(), 1.0);
    worst = std::max(worst, std::abs(trapezoid(lin, dx) - 5.0));
    return below(worst, 1e-9);
  });

  // solver kernels
  add("solver.equilibrium_rhs_zero", [&] {
    Grid1D g{-10.0, 10.0, 64};
    const FieldSet f = constant_fields(g, CellState{1.0, 0.0, 1.0, 0.0, 0.0});
    const Rates r = rhs(gas_, g, f, false);
    double worst = 0.0;
    for (const auto& d : r.d)
      for (double a : d) worst = std::max(worst, std::abs(a));
    return below(worst, 1e-15);
  });

  add("solver.exact_damping", [&] {
    Grid1D g{-1.0, 1.0, 16};
    FieldSet f = constant_fields(g, CellState{1.3, 0.0, 1.0, 0.1, -0.2});
    const double dt = 0.37;
    damp_relaxation(gas_, f, dt);
    const double eq = 0.1 * std::exp(-1.3 * dt / gas_.tau1);
    const double es = -0.2 * std::exp(-1.3 * dt / gas_.tau2);
    return below(std::max(std::abs(f(Var::Q, 3) - eq), std::abs(f(Var::S, 3) - es)), 1e-15);
  });

  add("solver.mass_balance_telescopes", [&] {
    SimConfig c = config_;
    c.grid = Grid1D{-20.0, 20.0, 200};
    c.t_end = 2.0;
    c.output_interval = 0.0;
    c.output_every = 0;
    c.profile_count = 0;
    c.perturbation.amplitude = 0.01;
    double worst = 0.0;
    double volume = 0.0;
    RunCallbacks cb;
    cb.on_record = [&](const DiagnosticsRecord& r) {
      worst = std::max(worst, std::abs(r.mass_balance_error));
    };
    const RunSummary s = hnsf::run(c, cb);
    volume = total_volume(c.grid, s.final_fields);
    return below(worst / volume, 1e-12);
  });

  add("solver.positivity_short_run", [&] {
    SimConfig c = config_;
    c.grid = Grid1D{-30.0, 20.0, 250};
    c.t_end = 5.0;
    c.output_interval = 0.0;
    c.profile_count = 0;
    c.perturbation.amplitude = 0.01;
    const RunSummary s = hnsf::run(c);
    double vmin = 1e300;
    double tmin = 1e300;
    for (int i = 0; i < s.final_fields.size(); ++i) {
      vmin = std::min(vmin, s.final_fields(Var::V, i));
      tmin = std::min(tmin, s.final_fields(Var::Theta, i));
    }
    return Outcome{vmin > 0.0 && tmin > 0.0, fmt("min v = %.4f, min theta = %.4f", vmin, tmin)};
  });

  return std::move(results_);
}

}  // namespace

std::vector<CheckResult> run_check_suite(const SimConfig& config, std::uint64_t seed) {
  config.validate();
  if (config.background != BackgroundMode::SmoothWave)
    throw ConfigError("check suite needs run.background = \"smooth_wave\"");
  return Suite(config, seed).run();
}

}  // namespace hnsf
