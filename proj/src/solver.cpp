#include "hnsf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hnsf/errors.hpp"

namespace hnsf {

void SimConfig::validate() const {
  try {
    gas.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  grid.validate();
  if (!(right.v > 0.0)) throw ConfigError("riemann.v_plus must be positive");
  if (!(right.theta > 0.0)) throw ConfigError("riemann.theta_plus must be positive");
  if (background == BackgroundMode::SmoothWave) {
    if (!(v_minus > 0.0)) throw ConfigError("riemann.v_minus must be positive");
    if (!(v_minus < right.v)) throw ConfigError("riemann.v_minus must be below riemann.v_plus");
  }
  if (!(epsilon > 0.0)) throw ConfigError("wave.epsilon must be positive");
  if (!(q_exp > 1.5)) throw ConfigError("q_exp must exceed 1.5");
  if (!(t_end >= 0.0)) throw ConfigError("run.t_end must be non-negative");
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("run.cfl must lie in (0, 1)");
  if (!(perturbation.width > 0.0)) throw ConfigError("perturbation.width must be positive");
  if (output_every < 0) throw ConfigError("run.output_every must be non-negative");
  if (!(output_interval >= 0.0)) throw ConfigError("run.output_interval must be non-negative");
  if (profile_count < 0) throw ConfigError("run.profile_count must be non-negative");
}

SmoothWaveParams SimConfig::wave_params() const {
  SmoothWaveParams p;
  p.gas = gas;
  p.riemann = build_riemann(gas, right, v_minus);
  p.epsilon = epsilon;
  p.q_exp = q_exp;
  return p;
}

Background make_background(const SimConfig& config) {
  if (config.background == BackgroundMode::Constant) {
    return Background::constant(config.gas, config.right);
  }
  return Background::smooth(SmoothWave(config.wave_params()));
}

void apply_bc(FieldSet& fields, const Background& background, const Grid1D& grid, double t) {
  const int n = grid.n;
  for (int g = 1; g <= FieldSet::kGhost; ++g) {
    for (int i : {-g, n - 1 + g}) {
      const WavePoint p = background.eval(t, grid.x(i));
      fields.set_cell(i, {p.v, p.u, p.theta, p.q_ref, p.S_ref});
    }
  }
}

FieldSet constant_fields(const Grid1D& grid, const CellState& state) {
  FieldSet f(grid.n);
  for (int i = -FieldSet::kGhost; i < grid.n + FieldSet::kGhost; ++i) f.set_cell(i, state);
  return f;
}

FieldSet initial_fields(const SimConfig& config, const Background& background) {
  const Grid1D& grid = config.grid;
  const Perturbation& pert = config.perturbation;
  FieldSet f(grid.n);
  f.t = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const WavePoint p = background.eval(0.0, x);
    const double arg = (x - pert.center) / pert.width;
    const double bump = pert.amplitude * std::exp(-arg * arg);
    std::array<double, kNumVars> s{p.v, p.u, p.theta, p.q_ref, p.S_ref};
    for (int c = 0; c < kNumVars; ++c) {
      if (pert.mask[static_cast<std::size_t>(c)]) s[static_cast<std::size_t>(c)] += bump;
    }
    f.set_cell(i, {s[0], s[1], s[2], s[3], s[4]});
  }
  apply_bc(f, background, grid, 0.0);
  try {
    check_invariants(config.gas, f);
  } catch (const InvariantViolation& e) {
    throw ConfigError(std::string("perturbation produces invalid initial data: ") + e.what());
  }
  return f;
}

Rates rhs(const GasParams& gas, const Grid1D& grid, const FieldSet& f, bool split,
          Reconstruction recon) {
  const int n = grid.n;
  const double dx = grid.dx();
  const double inv2dx = 1.0 / (2.0 * dx);

  // Local speeds and pressure on cells -1..n; alpha on faces -1/2..n-1/2.
  std::vector<double> speed(static_cast<std::size_t>(n + 2));
  std::vector<double> pres(static_cast<std::size_t>(n + 2));
  for (int i = -1; i <= n; ++i) {
    const CellState s = f.cell(i);
    const auto k = static_cast<std::size_t>(i + 1);
    try {
      speed[k] = max_wave_speed(gas, s);
    } catch (const ModelBreakdown& e) {
      throw ModelBreakdown("cell " + std::to_string(i) + ": " + e.what());
    }
    pres[k] = pressure(gas, s.v, s.theta);
  }
  std::vector<double> alpha(static_cast<std::size_t>(n + 1));
  for (int i = -1; i < n; ++i) {
    alpha[static_cast<std::size_t>(i + 1)] =
        std::max(speed[static_cast<std::size_t>(i + 1)], speed[static_cast<std::size_t>(i + 2)]);
  }
  auto alpha_face = [&](int i) { return alpha[static_cast<std::size_t>(i + 1)]; };  // face i+1/2
  auto p_at = [&](int i) { return pres[static_cast<std::size_t>(i + 1)]; };

  Rates r;
  for (auto& d : r.d) d.assign(static_cast<std::size_t>(n), 0.0);

  auto slope = [&](Var var, int i) {
    const double a = f(var, i) - f(var, i - 1);
    const double b = f(var, i + 1) - f(var, i);
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) < std::abs(b) ? a : b;
  };
  // jump of the face states at i+1/2
  auto jump = [&](Var var, int i) {
    if (recon == Reconstruction::Constant) return f(var, i + 1) - f(var, i);
    return (f(var, i + 1) - 0.5 * slope(var, i + 1)) - (f(var, i) + 0.5 * slope(var, i));
  };
  auto diss = [&](Var var, int i) {
    const double right = alpha_face(i) * jump(var, i);
    const double left = alpha_face(i - 1) * jump(var, i - 1);
    return (right - left) * inv2dx;
  };

  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double v = f(Var::V, i);
    const double theta = f(Var::Theta, i);
    const double q = f(Var::Q, i);
    const double S = f(Var::S, i);
    const double ux = (f(Var::U, i + 1) - f(Var::U, i - 1)) * inv2dx;
    const double px = (p_at(i + 1) - p_at(i - 1)) * inv2dx;
    const double Sx = (f(Var::S, i + 1) - f(Var::S, i - 1)) * inv2dx;
    const double thx = (f(Var::Theta, i + 1) - f(Var::Theta, i - 1)) * inv2dx;
    const double qx = (f(Var::Q, i + 1) - f(Var::Q, i - 1)) * inv2dx;

    const RelaxCoeff a = relax_coeff_a(gas, theta);
    double c_eff;
    try {
      c_eff = effective_heat_capacity(gas, theta, q);
    } catch (const ModelBreakdown& e) {
      throw ModelBreakdown("cell " + std::to_string(i) + ": " + e.what());
    }
    const double p = p_at(i);
    const double heating = 2.0 * a.a * v / gas.tau1 * q * q + v / gas.mu * S * S;
    const double theta_rate =
        (2.0 * a.a * gas.kappa / gas.tau1 * q * thx - p * ux - qx + heating) / c_eff;

    r.d[0][k] = ux + diss(Var::V, i);
    r.d[1][k] = -px + Sx + diss(Var::U, i);
    r.d[2][k] = theta_rate + diss(Var::Theta, i);
    r.d[3][k] = -gas.kappa * thx / gas.tau1 + diss(Var::Q, i);
    r.d[4][k] = gas.mu * ux / gas.tau2 + diss(Var::S, i);
    if (!split) {
      r.d[3][k] -= v * q / gas.tau1;
      r.d[4][k] -= v * S / gas.tau2;
    }
  }

  auto volume_face_flux = [&](int i) {
    return 0.5 * (f(Var::U, i) + f(Var::U, i + 1)) +
           0.5 * alpha_face(i) * jump(Var::V, i);
  };
  r.volume_flux = volume_face_flux(n - 1) - volume_face_flux(-1);
  return r;
}

double stable_dt(const GasParams& gas, const Grid1D& grid, const FieldSet& fields, double cfl,
                 bool split) {
  double smax = 0.0;
  double vmax = 0.0;
  for (int i = 0; i < fields.size(); ++i) {
    const CellState s = fields.cell(i);
    smax = std::max(smax, max_wave_speed(gas, s));
    vmax = std::max(vmax, s.v);
  }
  double dt = cfl * grid.dx() / smax;
  if (!split) {
    dt = std::min({dt, 0.5 * gas.tau1 / vmax, 0.5 * gas.tau2 / vmax});
  }
  return dt;
}

void damp_relaxation(const GasParams& gas, FieldSet& fields, double dt) {
  for (int i = 0; i < fields.size(); ++i) {
    const double v = fields(Var::V, i);
    fields(Var::Q, i) *= std::exp(-v * dt / gas.tau1);
    fields(Var::S, i) *= std::exp(-v * dt / gas.tau2);
  }
}

void check_invariants(const GasParams& gas, const FieldSet& fields) {
  for (int i = 0; i < fields.size(); ++i) {
    const CellState s = fields.cell(i);
    const bool finite = std::isfinite(s.v) && std::isfinite(s.u) && std::isfinite(s.theta) &&
                        std::isfinite(s.q) && std::isfinite(s.S);
    const bool positive = s.v > 0.0 && s.theta > 0.0;
    if (!finite || !positive || !(effective_heat_capacity_raw(gas, s.theta, s.q) > 0.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "invariant violated at cell " << i << " (t=" << fields.t << "): v=" << s.v
          << " u=" << s.u << " theta=" << s.theta << " q=" << s.q << " S=" << s.S;
      throw InvariantViolation(msg.str());
    }
  }
}

namespace {

void axpy_interior(FieldSet& out, const FieldSet& base, const Rates& r, double dt) {
  for (int c = 0; c < kNumVars; ++c) {
    const Var var = static_cast<Var>(c);
    for (int i = 0; i < out.size(); ++i) {
      out(var, i) = base(var, i) + dt * r.d[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
    }
  }
}

}  // namespace

FieldSet step(const SimConfig& config, const Background& background, const FieldSet& fields,
              double dt) {
  const GasParams& gas = config.gas;
  const Grid1D& grid = config.grid;
  const bool split = config.relaxation_split;
  const double t0 = fields.t;

  FieldSet u0 = fields;
  if (split) damp_relaxation(gas, u0, 0.5 * dt);
  apply_bc(u0, background, grid, t0);
  const Rates r0 = rhs(gas, grid, u0, split, config.reconstruction);

  FieldSet u1 = u0;
  axpy_interior(u1, u0, r0, dt);
  u1.t = t0 + dt;
  apply_bc(u1, background, grid, u1.t);
  const Rates r1 = rhs(gas, grid, u1, split, config.reconstruction);

  FieldSet out = u0;
  for (int c = 0; c < kNumVars; ++c) {
    const Var var = static_cast<Var>(c);
    for (int i = 0; i < out.size(); ++i) {
      out(var, i) = 0.5 * (u0(var, i) + u1(var, i) +
                           dt * r1.d[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]);
    }
  }
  out.boundary_volume_flux += 0.5 * dt * (r0.volume_flux + r1.volume_flux);
  if (split) damp_relaxation(gas, out, 0.5 * dt);
  out.t = t0 + dt;
  apply_bc(out, background, grid, out.t);
  check_invariants(gas, out);
  return out;
}

RunSummary run(const SimConfig& config, const RunCallbacks& callbacks) {
  config.validate();
  const Background background = make_background(config);
  return run_from(config, background, initial_fields(config, background), callbacks);
}

RunSummary run_from(const SimConfig& config, const Background& background, FieldSet fields,
                    const RunCallbacks& callbacks) {
  const Grid1D& grid = config.grid;
  const double t_start = fields.t;
  const double t_end = config.t_end;
  apply_bc(fields, background, grid, fields.t);
  fields.initial_volume = total_volume(grid, fields);
  fields.boundary_volume_flux = 0.0;

  DiagnosticsAccumulator acc;
  auto emit = [&] {
    if (callbacks.on_record) callbacks.on_record(acc.sample(grid, fields, background));
  };

  // profile k lands at t_start + k (t_end - t_start) / (P - 1); a single profile goes at t_end
  const int profiles = config.profile_count;
  auto profile_time = [&](int k) {
    if (profiles <= 1) return t_end;
    if (k == profiles - 1) return t_end;
    return t_start + (t_end - t_start) * k / (profiles - 1);
  };
  int next_profile = 0;
  auto maybe_profile = [&] {
    while (next_profile < profiles && profile_time(next_profile) <= fields.t) {
      if (callbacks.on_profile) callbacks.on_profile(next_profile, fields);
      ++next_profile;
    }
  };

  const double interval = config.output_interval;
  long next_output = 1;
  auto output_time = [&](long k) {
    return interval > 0.0 ? t_start + interval * static_cast<double>(k)
                          : std::numeric_limits<double>::infinity();
  };

  emit();
  maybe_profile();

  long steps = 0;
  while (fields.t < t_end) {
    double dt = stable_dt(config.gas, grid, fields, config.cfl, config.relaxation_split);
    double stop = t_end;
    if (next_profile < profiles) stop = std::min(stop, profile_time(next_profile));
    stop = std::min(stop, output_time(next_output));
    bool landed = false;
    if (fields.t + dt >= stop) {
      dt = stop - fields.t;
      landed = true;
    }
    try {
      fields = step(config, background, fields, dt);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "step " << steps + 1 << " at t=" << fields.t << ": " << e.what();
      throw InvariantViolation(msg.str());
    }
    if (landed) fields.t = stop;
    ++steps;

    bool record = fields.t >= t_end;
    if (config.output_every > 0 && steps % config.output_every == 0) record = true;
    while (fields.t >= output_time(next_output)) {
      record = true;
      ++next_output;
    }
    if (record) emit();
    maybe_profile();
  }
  return {std::move(fields), steps};
}

}  // namespace hnsf
