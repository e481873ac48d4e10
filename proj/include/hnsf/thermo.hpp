#ifndef HNSF_THERMO_HPP_
#define HNSF_THERMO_HPP_

namespace hnsf {

/// Physical constants of the gamma-law gas with Maxwell stress and Cattaneo heat flux.
struct GasParams {
  double R = 1.0;
  double gamma = 5.0 / 3.0;
  double A = 1.0;  // entropy normalisation; only shifts s by a constant
  double mu = 1.0;
  double kappa = 1.0;
  double tau1 = 0.1;  // thermal relaxation time
  double tau2 = 0.1;  // stress relaxation time

  double Cv() const { return R / (gamma - 1.0); }

  /// Throws DomainError naming the first field that breaks positivity or gamma > 1.
  void validate() const;

  bool operator==(const GasParams&) const = default;
};

/// Point value of the five unknowns (v, u, theta, q, S).
struct CellState {
  double v = 1.0;
  double u = 0.0;
  double theta = 1.0;
  double q = 0.0;
  double S = 0.0;
};

struct RelaxCoeff {
  double a;        // tau1 / (2 kappa theta)
  double a_prime;  // -tau1 / (2 kappa theta^2)
};

double pressure(const GasParams& gas, double v, double theta);

RelaxCoeff relax_coeff_a(const GasParams& gas, double theta);

/// e(theta, q) = Cv theta + a(theta) q^2.
double internal_energy(const GasParams& gas, double theta, double q);

/// Cv + a'(theta) q^2 without the positivity check.
double effective_heat_capacity_raw(const GasParams& gas, double theta, double q);

/// Cv + a'(theta) q^2; throws ModelBreakdown when the value is not positive.
double effective_heat_capacity(const GasParams& gas, double theta, double q);

double entropy(const GasParams& gas, double v, double theta);

struct AcousticSpeeds {
  double lambda1;  // -sqrt(gamma p / v)
  double lambda3;  // -lambda1
};

AcousticSpeeds lambda1(const GasParams& gas, double v, double theta);

/// Upper bound for the spectral radius of the 5x5 quasi-linear system at `state`.
///
/// With c = Cv + a'(theta) q^2 the bound is
///   sqrt((1 + R/c) R theta) / v + sqrt(kappa / (tau1 c)) + sqrt(mu / tau2) + |q| / (theta c),
/// which collapses to |lambda1| + sqrt(kappa / (tau1 Cv)) + sqrt(mu / tau2) when q = 0.
double max_wave_speed(const GasParams& gas, const CellState& state);

}  // namespace hnsf

#endif  // HNSF_THERMO_HPP_
