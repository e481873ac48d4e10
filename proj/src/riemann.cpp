#include "hnsf/riemann.hpp"

#include <cmath>
#include <string>

#include "hnsf/errors.hpp"

namespace hnsf {

double isentrope_theta(const GasParams& gas, const EndState& right, double v) {
  if (!(v > 0.0)) throw DomainError("isentrope_theta: v must be positive");
  return detail::isentrope_theta(gas.gamma, right.v, right.theta, v);
}

double r1_curve_u(const GasParams& gas, const EndState& right, double v) {
  if (!(v > 0.0)) throw DomainError("r1_curve_u: v must be positive");
  if (v == right.v) return right.u;
  return detail::r1_curve_u(gas.R, gas.gamma, right.v, right.u, right.theta, v);
}

RiemannData build_riemann(const GasParams& gas, const EndState& right, double v_minus) {
  if (!(right.v > 0.0) || !(right.theta > 0.0)) {
    throw DomainError("build_riemann: right state needs v > 0 and theta > 0");
  }
  if (!(v_minus > 0.0)) throw DomainError("build_riemann: v_minus must be positive");
  if (!(v_minus < right.v)) {
    throw DomainError("build_riemann: v_minus=" + std::to_string(v_minus) +
                      " must be below v_plus=" + std::to_string(right.v) +
                      " for a 1-rarefaction");
  }
  RiemannData data;
  data.right = right;
  data.left = {v_minus, r1_curve_u(gas, right, v_minus), isentrope_theta(gas, right, v_minus)};
  data.w_minus = lambda1(gas, data.left.v, data.left.theta).lambda1;
  data.w_plus = lambda1(gas, right.v, right.theta).lambda1;
  return data;
}

EndState centered_wave_at(const GasParams& gas, const RiemannData& data, double xi) {
  if (xi <= data.w_minus) return data.left;
  if (xi >= data.w_plus) return data.right;
  const double v =
      detail::isentrope_volume_for_speed(gas.gamma, data.right.v, data.w_plus, xi);
  return {v, r1_curve_u(gas, data.right, v), isentrope_theta(gas, data.right, v)};
}

EndState centered_wave_eval(const GasParams& gas, const RiemannData& data, double t, double x) {
  if (!(t > 0.0)) throw DomainError("centered_wave_eval: t must be positive");
  return centered_wave_at(gas, data, x / t);
}

RiemannInvariants riemann_invariants(const GasParams& gas, const EndState& state,
                                     const EndState& right) {
  // Integral of lambda1 along the isentrope through `state`, from v_+ to state.v.
  const double s = entropy(gas, state.v, state.theta);
  const double g = gas.gamma;
  const double c = std::sqrt(g * gas.R * state.theta);
  const double integral = 2.0 / (g - 1.0) * c * (1.0 - std::pow(state.v / right.v, (g - 1.0) / 2.0));
  return {state.u + integral, s};
}

}  // namespace hnsf
