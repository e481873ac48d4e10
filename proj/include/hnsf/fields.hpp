#ifndef HNSF_FIELDS_HPP_
#define HNSF_FIELDS_HPP_

#include <array>
#include <optional>
#include <vector>

#include "hnsf/riemann.hpp"
#include "hnsf/smoothwave.hpp"
#include "hnsf/thermo.hpp"

namespace hnsf {

enum class Var : int { V = 0, U = 1, Theta = 2, Q = 3, S = 4 };
inline constexpr int kNumVars = 5;
inline constexpr std::array<const char*, kNumVars> kVarNames = {"v", "u", "theta", "q", "S"};

/// Uniform cell-centred grid; centres at x_min + (i + 1/2) dx.
struct Grid1D {
  double x_min = -60.0;
  double x_max = 140.0;
  int n = 4000;

  double dx() const { return (x_max - x_min) / n; }
  /// Centre of cell i; ghost cells use i < 0 or i >= n.
  double x(int i) const { return x_min + (i + 0.5) * dx(); }

  void validate() const;

  bool operator==(const Grid1D&) const = default;
};

/// The five unknowns on a grid with two ghost cells per side.
class FieldSet {
 public:
  static constexpr int kGhost = 2;

  FieldSet() = default;
  explicit FieldSet(int n);

  int size() const { return n_; }
  double& operator()(Var var, int i) { return data_[static_cast<int>(var)][i + kGhost]; }
  double operator()(Var var, int i) const { return data_[static_cast<int>(var)][i + kGhost]; }

  CellState cell(int i) const;
  void set_cell(int i, const CellState& s);

  double t = 0.0;
  /// Accumulated int (F_right - F_left) dt of the scheme's specific-volume flux.
  double boundary_volume_flux = 0.0;
  /// Cell sum of v dx when the run started.
  double initial_volume = 0.0;

  bool operator==(const FieldSet&) const = default;

 private:
  int n_ = 0;
  std::array<std::vector<double>, kNumVars> data_;
};

/// Reference solution the perturbation is measured against and the boundary
/// data is drawn from: the smooth rarefaction, or a single constant state.
class Background {
 public:
  static Background smooth(const SmoothWave& wave);
  static Background constant(const GasParams& gas, const EndState& state);

  const GasParams& gas() const { return gas_; }
  bool is_smooth() const { return wave_.has_value(); }
  const SmoothWave& wave() const { return *wave_; }
  const EndState& constant_state() const { return constant_; }

  /// Reference point (smooth wave, or the constant state with zero fluxes and slopes).
  WavePoint eval(double t, double x) const;

  /// Target of the uniform convergence statement: centered wave at x/t for
  /// t > 0, the smooth wave itself at t = 0, the constant state in constant mode.
  EndState centered(double t, double x) const;

 private:
  GasParams gas_;
  std::optional<SmoothWave> wave_;
  EndState constant_;
};

}  // namespace hnsf

#endif  // HNSF_FIELDS_HPP_
