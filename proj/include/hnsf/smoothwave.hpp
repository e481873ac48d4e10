#ifndef HNSF_SMOOTHWAVE_HPP_
#define HNSF_SMOOTHWAVE_HPP_

#include <array>

#include "hnsf/riemann.hpp"
#include "hnsf/thermo.hpp"

namespace hnsf {

/// Everything needed to evaluate the smooth approximate 1-rarefaction.
///
/// The wave is built from the Burgers solution w(tau, x) with the smoothed
/// initial ramp
///
///   w0(x) = (w+ + w-)/2 + (w+ - w-)/2 * K_q * int_0^{eps x} (1 + y^2)^(-q_exp) dy,
///
/// evaluated at the shifted time tau = 1 + t. The fluid state follows from
/// lambda1(v, theta) = w on the isentrope of the right state, with u on the
/// 1-rarefaction curve.
struct SmoothWaveParams {
  GasParams gas;
  RiemannData riemann;
  double epsilon = 1.0;  // smoothing rate
  double q_exp = 2.0;    // tail exponent, must exceed 3/2
};

/// Smooth wave and its relaxed reference fluxes at one (t, x).
struct WavePoint {
  double v = 0.0;
  double u = 0.0;
  double theta = 0.0;
  double q_ref = 0.0;  // -kappa theta_x / v
  double S_ref = 0.0;  // mu u_x / v
  double vx = 0.0;
  double ux = 0.0;
  double thetax = 0.0;
  double w = 0.0;   // Burgers value at 1 + t
  double wx = 0.0;  // its x-derivative
};

struct BurgersValue {
  double w;
  double wx;
  double x0;  // foot of the characteristic through (tau, x)
};

/// Residuals of the three Euler equations along the smooth wave, plus the
/// viscous and conductive forcing terms it leaves behind in the relaxed system.
struct EulerDefect {
  double mass;      // v_t - u_x
  double momentum;  // u_t + p_x
  double energy;    // Cv theta_t + p u_x
  double Q1R;       // -mu (u_x / v)_x
  double Q2R;       // -kappa (theta_x / v)_x
};

/// int_0^z (1 + y^2)^(-q_exp) dy through the incomplete beta function.
double incomplete_ramp_integral(double z, double q_exp);

/// K_q = 1 / int_0^inf (1 + y^2)^(-q_exp) dy. Throws ConfigError unless q_exp > 3/2.
double kq_normalizer(double q_exp);

class SmoothWave {
 public:
  explicit SmoothWave(const SmoothWaveParams& params);

  const SmoothWaveParams& params() const { return params_; }
  const GasParams& gas() const { return params_.gas; }
  const RiemannData& riemann() const { return params_.riemann; }
  double kq() const { return kq_; }

  double w0(double x) const;
  double w0_prime(double x) const;

  /// Solves x = x0 + w0(x0) tau by bisection on [x - w+ tau, x - w- tau]
  /// followed by two Newton steps. `tau` is the Burgers time, i.e. already shifted.
  BurgersValue burgers_w(double tau, double x) const;

  /// Smooth wave at physical time t >= 0 (Burgers time 1 + t).
  WavePoint eval(double t, double x) const;

  /// Euler residuals with centred time differences of step h_t and centred
  /// x-differences of the analytic fluxes with step h_x. Evaluated in extended
  /// precision so that the truncation error dominates rounding at h ~ 1e-5.
  EulerDefect euler_defect(double t, double x, double h_t = 1e-5, double h_x = 1e-5) const;

  /// Centered rarefaction (x/t form); t must be positive.
  EndState centered(double t, double x) const;

 private:
  SmoothWaveParams params_;
  double kq_;
};

/// Quantities bounded in the smooth-wave lemma, with the matching bound shapes.
struct WaveBoundsReport {
  double t = 0.0;
  double p_norm = 2.0;
  double delta_r = 0.0;
  std::array<double, 3> lp_norms{};  // (u_x, v_x, theta_x)
  double lp_bound = 0.0;             // min{delta, delta^(1/p) (1+t)^(-1+1/p)}
  double tail_window = 0.0;
  double right_tail_ratio = 0.0;     // max |state - right| / (delta e^{-2 d}) on the window
  double left_tail_ratio = 0.0;
  double right_tail_distance = 0.0;  // |state - right| at the far end of the window
  double left_tail_distance = 0.0;
  double uxx_over_ux = 0.0;          // sup |u_xx| / |u_x|
  double thetaxx_over_thetax = 0.0;  // sup |theta_xx| / |theta_x|
  double sup_to_centered = 0.0;      // 0 when t == 0
};

/// Discrete L^p norms (trapezoid) on [w- tau - half_width, w+ tau + half_width],
/// tail ratios on windows of width `tail_window` beyond lambda1(+-)(1+t), and the
/// sup distance to the centered wave.
WaveBoundsReport lemma21_bounds_report(const SmoothWave& wave, double t, double p_norm,
                                       double half_width = 200.0, int n = 20001,
                                       double tail_window = 4.0);

/// max over n uniform points in [x_lo, x_hi] of the (v, u, theta) sup-distance
/// between the smooth wave at t and the centered wave at x / t.
double sup_distance_to_centered(const SmoothWave& wave, double t, double x_lo, double x_hi,
                                int n);

}  // namespace hnsf

#endif  // HNSF_SMOOTHWAVE_HPP_
