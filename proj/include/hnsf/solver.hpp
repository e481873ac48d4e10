#ifndef HNSF_SOLVER_HPP_
#define HNSF_SOLVER_HPP_

#include <array>
#include <functional>
#include <vector>

#include "hnsf/diagnostics.hpp"
#include "hnsf/fields.hpp"
#include "hnsf/smoothwave.hpp"
#include "hnsf/thermo.hpp"

namespace hnsf {

/// Additive Gaussian bump a exp(-(x - x_c)^2 / sigma^2) on the masked components.
struct Perturbation {
  double amplitude = 0.0;
  double center = 0.0;
  double width = 2.0;
  std::array<bool, kNumVars> mask{true, true, true, false, false};

  bool operator==(const Perturbation&) const = default;
};

enum class BackgroundMode { SmoothWave, Constant };

/// Face states fed to the dissipation term. Minmod: limited linear
/// reconstruction, second order where the data is smooth and monotone.
/// Constant: cell values, i.e. the plain first-order Rusanov term.
enum class Reconstruction { Minmod, Constant };

struct SimConfig {
  GasParams gas;
  EndState right{1.2, 0.0, 1.0};
  double v_minus = 1.0;  // ignored in constant mode
  double epsilon = 1.0;
  double q_exp = 2.0;
  BackgroundMode background = BackgroundMode::SmoothWave;
  Grid1D grid;
  double t_end = 100.0;
  double cfl = 0.4;
  Perturbation perturbation;
  int output_every = 0;          // steps between records; 0 disables
  double output_interval = 1.0;  // time between records (dt is clipped onto them); 0 disables
  int profile_count = 10;
  bool relaxation_split = true;
  Reconstruction reconstruction = Reconstruction::Minmod;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  SmoothWaveParams wave_params() const;

  bool operator==(const SimConfig&) const = default;
};

Background make_background(const SimConfig& config);

/// Background at t = 0 plus the configured bump; ghosts are filled.
FieldSet initial_fields(const SimConfig& config, const Background& background);

/// Uniform fields equal to `state` everywhere, ghosts included.
FieldSet constant_fields(const Grid1D& grid, const CellState& state);

struct Rates {
  std::array<std::vector<double>, kNumVars> d;
  /// F_right - F_left of the discrete specific-volume flux; sum_i (dv_i/dt) dx equals this.
  double volume_flux = 0.0;
};

/// Semi-discrete right-hand side on interior cells. Ghost cells must be current.
/// With `split` the damping terms -vq/tau1 and -vS/tau2 are left out.
/// Transport terms use central differences; the dissipation is
/// (alpha_{i+1/2} [U]_{i+1/2} - alpha_{i-1/2} [U]_{i-1/2}) / (2 dx) with [U] the
/// jump of the reconstructed face states and alpha the larger neighbouring speed.
Rates rhs(const GasParams& gas, const Grid1D& grid, const FieldSet& fields, bool split,
          Reconstruction recon = Reconstruction::Minmod);

/// Sets every ghost cell to the background at time t.
void apply_bc(FieldSet& fields, const Background& background, const Grid1D& grid, double t);

double stable_dt(const GasParams& gas, const Grid1D& grid, const FieldSet& fields, double cfl,
                 bool split);

/// Exact solution of tau1 q_t = -v q, tau2 S_t = -v S over dt with v frozen.
void damp_relaxation(const GasParams& gas, FieldSet& fields, double dt);

/// Throws InvariantViolation if v, theta or the effective heat capacity is not
/// positive (or a value is not finite) in an interior cell.
void check_invariants(const GasParams& gas, const FieldSet& fields);

/// One SSP-RK2 step; with relaxation_split, wrapped in half-steps of exact damping.
FieldSet step(const SimConfig& config, const Background& background, const FieldSet& fields,
              double dt);

struct RunCallbacks {
  std::function<void(const DiagnosticsRecord&)> on_record;
  std::function<void(int, const FieldSet&)> on_profile;
};

struct RunSummary {
  FieldSet final_fields;
  long steps = 0;
};

RunSummary run(const SimConfig& config, const RunCallbacks& callbacks = {});

/// Runs from explicit initial fields (constant-state tests, restarts in tests).
RunSummary run_from(const SimConfig& config, const Background& background, FieldSet fields,
                    const RunCallbacks& callbacks = {});

}  // namespace hnsf

#endif  // HNSF_SOLVER_HPP_
