#include "hnsf/thermo.hpp"

#include <cmath>
#include <string>

#include "hnsf/errors.hpp"

namespace hnsf {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw DomainError(std::string(name) + " must be positive, got " + std::to_string(value));
  }
}

}  // namespace

void GasParams::validate() const {
  require_positive(R, "gas.R");
  require_positive(A, "gas.A");
  require_positive(mu, "gas.mu");
  require_positive(kappa, "gas.kappa");
  require_positive(tau1, "gas.tau1");
  require_positive(tau2, "gas.tau2");
  if (!(gamma > 1.0)) {
    throw DomainError("gas.gamma must exceed 1, got " + std::to_string(gamma));
  }
}

double pressure(const GasParams& gas, double v, double theta) {
  require_positive(v, "v");
  return gas.R * theta / v;
}

RelaxCoeff relax_coeff_a(const GasParams& gas, double theta) {
  require_positive(theta, "theta");
  const double a = gas.tau1 / (2.0 * gas.kappa * theta);
  return {a, -a / theta};
}

double internal_energy(const GasParams& gas, double theta, double q) {
  return gas.Cv() * theta + relax_coeff_a(gas, theta).a * q * q;
}

double effective_heat_capacity_raw(const GasParams& gas, double theta, double q) {
  return gas.Cv() + relax_coeff_a(gas, theta).a_prime * q * q;
}

double effective_heat_capacity(const GasParams& gas, double theta, double q) {
  const double c = effective_heat_capacity_raw(gas, theta, q);
  if (!(c > 0.0)) {
    throw ModelBreakdown("effective heat capacity " + std::to_string(c) +
                         " <= 0 at theta=" + std::to_string(theta) +
                         ", q=" + std::to_string(q));
  }
  return c;
}

double entropy(const GasParams& gas, double v, double theta) {
  require_positive(v, "v");
  require_positive(theta, "theta");
  return gas.Cv() * std::log(gas.R / gas.A * theta * std::pow(v, gas.gamma - 1.0));
}

AcousticSpeeds lambda1(const GasParams& gas, double v, double theta) {
  require_positive(v, "v");
  require_positive(theta, "theta");
  const double l1 = -std::sqrt(gas.gamma * gas.R * theta) / v;
  return {l1, -l1};
}

double max_wave_speed(const GasParams& gas, const CellState& state) {
  require_positive(state.v, "v");
  const double c = effective_heat_capacity(gas, state.theta, state.q);
  const double acoustic = std::sqrt((1.0 + gas.R / c) * gas.R * state.theta) / state.v;
  const double thermal = std::sqrt(gas.kappa / (gas.tau1 * c));
  const double viscous = std::sqrt(gas.mu / gas.tau2);
  const double drift = std::abs(state.q) / (state.theta * c);
  return acoustic + thermal + viscous + drift;
}

}  // namespace hnsf
