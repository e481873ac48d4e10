#ifndef HNSF_DIAGNOSTICS_HPP_
#define HNSF_DIAGNOSTICS_HPP_

#include <array>
#include <span>
#include <vector>

#include "hnsf/fields.hpp"
#include "hnsf/smoothwave.hpp"
#include "hnsf/thermo.hpp"

namespace hnsf {

/// (phi, psi, theta~, q~, S~) = solution minus reference, per interior cell,
/// plus the rarefaction weight |v^R_x|.
struct PerturbationFields {
  std::array<std::vector<double>, kNumVars> comp;
  std::vector<double> weight;
};

/// One time sample of the stability functionals.
struct DiagnosticsRecord {
  double t = 0.0;
  std::array<double, kNumVars> l2{};
  std::array<double, kNumVars> linf{};
  double h1_all = 0.0;
  double h2_all = 0.0;
  double eta_total = 0.0;
  double E_running = 0.0;  // running sup of h2_all^2 over emitted samples
  double D_t = 0.0;
  double GR = 0.0;
  double sup_centered = 0.0;
  double mass_balance_error = 0.0;
  /// int (v/(kappa theta) q~^2 + v/mu S~^2) dx; not part of D_t.
  double weighted_relaxation = 0.0;
};

/// phi(z) = z - 1 - ln z.
double phi_func(double z);

double relative_entropy_density(const GasParams& gas, const CellState& state,
                                const WavePoint& ref);

/// Trapezoid rule on a uniform grid, end samples at half weight.
double trapezoid(std::span<const double> f, double dx);

/// Second-order first/second derivatives; one-sided at the ends.
std::vector<double> first_derivative(std::span<const double> f, double dx);
std::vector<double> second_derivative(std::span<const double> f, double dx);

PerturbationFields perturbation_fields(const FieldSet& fields, std::span<const WavePoint> ref);

/// All functionals from explicit reference data; E_running is set to the
/// instantaneous H^2 energy and mass_balance_error from the FieldSet bookkeeping.
DiagnosticsRecord compute_record(const GasParams& gas, const Grid1D& grid,
                                 const FieldSet& fields, std::span<const WavePoint> ref,
                                 std::span<const EndState> centered);

/// Evaluates the background on the grid and calls compute_record.
DiagnosticsRecord totals(const Grid1D& grid, const FieldSet& fields, const Background& background);

/// Keeps the running sup for E(t) across emitted samples.
class DiagnosticsAccumulator {
 public:
  DiagnosticsRecord sample(const Grid1D& grid, const FieldSet& fields,
                           const Background& background);
  double energy_sup() const { return energy_sup_; }

 private:
  double energy_sup_ = 0.0;
};

/// Cell sum of v dx.
double total_volume(const Grid1D& grid, const FieldSet& fields);

}  // namespace hnsf

#endif  // HNSF_DIAGNOSTICS_HPP_
