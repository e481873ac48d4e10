#include "hnsf/smoothwave.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/multiprecision/float128.hpp>

#include "hnsf/errors.hpp"

namespace hnsf {

namespace {

// int_0^z (1 + y^2)^(-q) dy. With t = y^2 / (1 + y^2) the integrand becomes
// t^(-1/2) (1 - t)^(q - 3/2) / 2, i.e. half an incomplete beta B(t; 1/2, q - 1/2).
// Past |z| = 1 the complement is taken in 1/(1 + z^2) to keep full precision.
template <class Real>
Real ramp_integral(Real z, Real q) {
  using boost::math::beta;
  const Real half = Real(1) / 2;
  using std::abs;
  const Real az = abs(z);
  Real value;
  if (az <= 1) {
    value = half * beta(half, q - half, az * az / (1 + az * az));
  } else {
    value = half * (beta(half, q - half) - beta(q - half, half, 1 / (1 + az * az)));
  }
  return z < 0 ? -value : value;
}

template <class Real>
struct Core {
  Real R, gamma, kappa, mu, Cv;
  Real v_plus, u_plus, theta_plus;
  Real w_minus, w_plus;
  Real eps, q, kq;

  explicit Core(const SmoothWave& wave)
      : R(wave.gas().R),
        gamma(wave.gas().gamma),
        kappa(wave.gas().kappa),
        mu(wave.gas().mu),
        Cv(wave.gas().Cv()),
        v_plus(wave.riemann().right.v),
        u_plus(wave.riemann().right.u),
        theta_plus(wave.riemann().right.theta),
        w_minus(wave.riemann().w_minus),
        w_plus(wave.riemann().w_plus),
        eps(wave.params().epsilon),
        q(wave.params().q_exp),
        kq(wave.kq()) {}

  Real w0(Real x) const {
    return (w_plus + w_minus) / 2 + (w_plus - w_minus) / 2 * kq * ramp_integral(eps * x, q);
  }

  Real w0_prime(Real x) const {
    const Real y = eps * x;
    using std::pow;
    return (w_plus - w_minus) / 2 * kq * eps * pow(1 + y * y, -q);
  }

  // Returns (w, wx, x0).
  std::array<Real, 3> burgers(Real tau, Real x) const {
    auto residual = [&](Real x0) { return x0 + w0(x0) * tau - x; };
    Real lo = x - w_plus * tau;
    Real hi = x - w_minus * tau;
    for (int it = 0; it < 400 && hi - lo > Real(1e-13); ++it) {
      const Real mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      if (residual(mid) > 0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    assert(lo <= hi);
    Real x0 = lo + (hi - lo) / 2;
    for (int k = 0; k < 3; ++k) {
      const Real slope = 1 + tau * w0_prime(x0);
      const Real next = x0 - residual(x0) / slope;
      if (!(next >= lo && next <= hi)) break;
      x0 = next;
    }
    const Real d = w0_prime(x0);
    return {w0(x0), d / (1 + tau * d), x0};
  }

  WavePoint eval(Real t, Real x) const {
    const auto [w, wx, x0] = burgers(1 + t, x);
    (void)x0;
    return lift(w, wx);
  }

  WavePoint lift(Real w, Real wx) const {
    const Real v = detail::isentrope_volume_for_speed(gamma, v_plus, w_plus, w);
    const Real theta = detail::isentrope_theta(gamma, v_plus, theta_plus, v);
    const Real u = detail::r1_curve_u(R, gamma, v_plus, u_plus, theta_plus, v);
    const Real ux = 2 * v * wx / (gamma + 1);
    using std::sqrt;
    const Real vx = v * ux / sqrt(R * gamma * theta);
    const Real thetax = -(gamma - 1) * theta * vx / v;
    WavePoint p;
    p.v = static_cast<double>(v);
    p.u = static_cast<double>(u);
    p.theta = static_cast<double>(theta);
    p.ux = static_cast<double>(ux);
    p.vx = static_cast<double>(vx);
    p.thetax = static_cast<double>(thetax);
    p.q_ref = static_cast<double>(-kappa * thetax / v);
    p.S_ref = static_cast<double>(mu * ux / v);
    p.w = static_cast<double>(w);
    p.wx = static_cast<double>(wx);
    return p;
  }

  struct Fields {
    Real v, u, theta, vx, ux, thetax;
  };

  Fields fields(Real t, Real x) const {
    const auto [w, wx, x0] = burgers(1 + t, x);
    (void)x0;
    Fields f;
    f.v = detail::isentrope_volume_for_speed(gamma, v_plus, w_plus, w);
    f.theta = detail::isentrope_theta(gamma, v_plus, theta_plus, f.v);
    f.u = detail::r1_curve_u(R, gamma, v_plus, u_plus, theta_plus, f.v);
    f.ux = 2 * f.v * wx / (gamma + 1);
    using std::sqrt;
    f.vx = f.v * f.ux / sqrt(R * gamma * f.theta);
    f.thetax = -(gamma - 1) * f.theta * f.vx / f.v;
    return f;
  }
};

}  // namespace

double incomplete_ramp_integral(double z, double q_exp) {
  return ramp_integral<double>(z, q_exp);
}

double kq_normalizer(double q_exp) {
  if (!(q_exp > 1.5)) {
    throw ConfigError("q_exp must exceed 1.5, got " + std::to_string(q_exp));
  }
  // int_0^inf (1 + y^2)^(-q) dy = sqrt(pi) Gamma(q - 1/2) / (2 Gamma(q))
  const double total = std::sqrt(std::numbers::pi) / 2.0 *
                       std::exp(std::lgamma(q_exp - 0.5) - std::lgamma(q_exp));
  return 1.0 / total;
}

SmoothWave::SmoothWave(const SmoothWaveParams& params) : params_(params) {
  params_.gas.validate();
  if (!(params_.epsilon > 0.0)) {
    throw ConfigError("wave.epsilon must be positive, got " + std::to_string(params_.epsilon));
  }
  kq_ = kq_normalizer(params_.q_exp);
  if (!(params_.riemann.w_minus < params_.riemann.w_plus)) {
    throw ConfigError("wave needs w_minus < w_plus");
  }
}

double SmoothWave::w0(double x) const { return Core<double>(*this).w0(x); }

double SmoothWave::w0_prime(double x) const { return Core<double>(*this).w0_prime(x); }

BurgersValue SmoothWave::burgers_w(double tau, double x) const {
  if (!(tau >= 0.0)) throw DomainError("burgers_w: tau must be non-negative");
  const auto [w, wx, x0] = Core<double>(*this).burgers(tau, x);
  return {w, wx, x0};
}

WavePoint SmoothWave::eval(double t, double x) const {
  if (!(t >= 0.0)) throw DomainError("wave_eval: t must be non-negative");
  return Core<double>(*this).eval(t, x);
}

EulerDefect SmoothWave::euler_defect(double t, double x, double h_t, double h_x) const {
  // quad precision keeps rounding in the difference quotients far below the O(h^2) error
  using Real = boost::multiprecision::float128;
  const Core<Real> core(*this);
  const Real tt = t;
  const Real xx = x;
  const auto c = core.fields(tt, xx);
  const auto fwd = core.fields(tt + h_t, xx);
  const auto bwd = core.fields(tt - h_t, xx);
  const Real two_h = 2 * static_cast<Real>(h_t);
  const Real v_t = (fwd.v - bwd.v) / two_h;
  const Real u_t = (fwd.u - bwd.u) / two_h;
  const Real theta_t = (fwd.theta - bwd.theta) / two_h;

  const Real p = core.R * c.theta / c.v;
  const Real p_x = core.R * (c.thetax * c.v - c.theta * c.vx) / (c.v * c.v);

  const auto right = core.fields(tt, xx + h_x);
  const auto left = core.fields(tt, xx - h_x);
  const Real two_hx = 2 * static_cast<Real>(h_x);
  const Real dux_v = (right.ux / right.v - left.ux / left.v) / two_hx;
  const Real dthx_v = (right.thetax / right.v - left.thetax / left.v) / two_hx;

  EulerDefect d;
  d.mass = static_cast<double>(v_t - c.ux);
  d.momentum = static_cast<double>(u_t + p_x);
  d.energy = static_cast<double>(core.Cv * theta_t + p * c.ux);
  d.Q1R = static_cast<double>(-core.mu * dux_v);
  d.Q2R = static_cast<double>(-core.kappa * dthx_v);
  return d;
}

EndState SmoothWave::centered(double t, double x) const {
  return centered_wave_eval(params_.gas, params_.riemann, t, x);
}

double sup_distance_to_centered(const SmoothWave& wave, double t, double x_lo, double x_hi,
                                int n) {
  double sup = 0.0;
  const double h = n > 1 ? (x_hi - x_lo) / (n - 1) : 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = x_lo + i * h;
    const WavePoint p = wave.eval(t, x);
    const EndState c = wave.centered(t, x);
    sup = std::max({sup, std::abs(p.v - c.v), std::abs(p.u - c.u), std::abs(p.theta - c.theta)});
  }
  return sup;
}

WaveBoundsReport lemma21_bounds_report(const SmoothWave& wave, double t, double p_norm,
                                       double half_width, int n, double tail_window) {
  if (!(t >= 0.0)) throw DomainError("lemma21_bounds_report: t must be non-negative");
  if (!(p_norm >= 1.0)) throw DomainError("lemma21_bounds_report: p must be >= 1");
  const RiemannData& rd = wave.riemann();
  const double tau = 1.0 + t;
  const double delta = rd.strength();

  WaveBoundsReport rep;
  rep.t = t;
  rep.p_norm = p_norm;
  rep.delta_r = delta;
  rep.tail_window = tail_window;
  rep.lp_bound = std::min(delta, std::pow(delta, 1.0 / p_norm) * std::pow(tau, -1.0 + 1.0 / p_norm));

  const double x_lo = rd.w_minus * tau - half_width;
  const double x_hi = rd.w_plus * tau + half_width;
  const double h = (x_hi - x_lo) / (n - 1);
  std::array<double, 3> sums{};
  const double fd = 1e-4;
  for (int i = 0; i < n; ++i) {
    const double x = x_lo + i * h;
    const WavePoint p = wave.eval(t, x);
    const double weight = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    sums[0] += weight * std::pow(std::abs(p.ux), p_norm);
    sums[1] += weight * std::pow(std::abs(p.vx), p_norm);
    sums[2] += weight * std::pow(std::abs(p.thetax), p_norm);
    // second derivatives by centred differences of the analytic first derivatives
    if (std::abs(x - 0.5 * (rd.w_minus + rd.w_plus) * tau) < 0.25 * half_width) {
      const WavePoint r = wave.eval(t, x + fd);
      const WavePoint l = wave.eval(t, x - fd);
      const double uxx = (r.ux - l.ux) / (2 * fd);
      const double thxx = (r.thetax - l.thetax) / (2 * fd);
      if (p.ux > 0.0) rep.uxx_over_ux = std::max(rep.uxx_over_ux, std::abs(uxx) / p.ux);
      if (p.thetax < 0.0) {
        rep.thetaxx_over_thetax = std::max(rep.thetaxx_over_thetax, std::abs(thxx) / -p.thetax);
      }
    }
  }
  for (int k = 0; k < 3; ++k) rep.lp_norms[k] = std::pow(sums[k] * h, 1.0 / p_norm);

  auto distance = [](const WavePoint& p, const EndState& e) {
    return std::max({std::abs(p.v - e.v), std::abs(p.u - e.u), std::abs(p.theta - e.theta)});
  };
  const int tail_samples = 201;
  for (int i = 0; i < tail_samples; ++i) {
    const double d = tail_window * i / (tail_samples - 1);
    const double denom = delta * std::exp(-2.0 * d);
    const WavePoint pr = wave.eval(t, rd.w_plus * tau + d);
    const WavePoint pl = wave.eval(t, rd.w_minus * tau - d);
    rep.right_tail_ratio = std::max(rep.right_tail_ratio, distance(pr, rd.right) / denom);
    rep.left_tail_ratio = std::max(rep.left_tail_ratio, distance(pl, rd.left) / denom);
    if (i == tail_samples - 1) {
      rep.right_tail_distance = distance(pr, rd.right);
      rep.left_tail_distance = distance(pl, rd.left);
    }
  }

  if (t > 0.0) rep.sup_to_centered = sup_distance_to_centered(wave, t, x_lo, x_hi, n);
  return rep;
}

}  // namespace hnsf
