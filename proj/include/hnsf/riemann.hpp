#ifndef HNSF_RIEMANN_HPP_
#define HNSF_RIEMANN_HPP_

#include <cmath>

#include "hnsf/thermo.hpp"

namespace hnsf {

/// Far-field Euler state (v, u, theta).
struct EndState {
  double v = 1.0;
  double u = 0.0;
  double theta = 1.0;

  bool operator==(const EndState&) const = default;
};

/// Riemann data for a single 1-rarefaction: `left` lies on R1(right).
struct RiemannData {
  EndState left;
  EndState right;
  double w_minus = 0.0;  // lambda1(left)
  double w_plus = 0.0;   // lambda1(right)

  double strength() const { return std::abs(right.v - left.v); }
};

struct RiemannInvariants {
  double z1;
  double s;
};

/// Temperature on the isentrope through `right`: theta_+ (v_+/v)^(gamma-1).
double isentrope_theta(const GasParams& gas, const EndState& right, double v);

/// Velocity on the 1-rarefaction curve through `right`, closed-form integral of lambda1.
double r1_curve_u(const GasParams& gas, const EndState& right, double v);

/// Left state on R1(right) at specific volume v_minus < v_+.
RiemannData build_riemann(const GasParams& gas, const EndState& right, double v_minus);

/// Self-similar centered rarefaction at (t, x); requires t > 0.
EndState centered_wave_eval(const GasParams& gas, const RiemannData& data, double t, double x);

/// Same as centered_wave_eval with xi = x / t given directly.
EndState centered_wave_at(const GasParams& gas, const RiemannData& data, double xi);

/// z1 = u + int_{v_+}^{v} lambda1(s(state), v') dv' and s(state).
RiemannInvariants riemann_invariants(const GasParams& gas, const EndState& state,
                                     const EndState& right);

namespace detail {

// Gamma-law closed forms shared by the double and extended-precision wave paths.

template <class Real>
Real isentrope_theta(Real gamma, Real v_plus, Real theta_plus, Real v) {
  using std::pow;
  return theta_plus * pow(v_plus / v, gamma - 1);
}

template <class Real>
Real r1_curve_u(Real R, Real gamma, Real v_plus, Real u_plus, Real theta_plus, Real v) {
  using std::pow;
  using std::sqrt;
  const Real c_plus = sqrt(gamma * R * theta_plus);
  return u_plus - 2 / (gamma - 1) * c_plus * (pow(v_plus / v, (gamma - 1) / 2) - 1);
}

// Inverts lambda1 along the isentrope: lambda1(v) = w_plus (v_+/v)^((gamma+1)/2).
template <class Real>
Real isentrope_volume_for_speed(Real gamma, Real v_plus, Real w_plus, Real speed) {
  using std::pow;
  return v_plus * pow(w_plus / speed, 2 / (gamma + 1));
}

}  // namespace detail

}  // namespace hnsf

#endif  // HNSF_RIEMANN_HPP_
