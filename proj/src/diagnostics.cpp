#include "hnsf/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "hnsf/errors.hpp"

namespace hnsf {

double phi_func(double z) {
  if (!(z > 0.0)) throw DomainError("phi_func: argument must be positive");
  return z - 1.0 - std::log(z);
}

double relative_entropy_density(const GasParams& gas, const CellState& s, const WavePoint& ref) {
  const double psi = s.u - ref.u;
  const double qt = s.q - ref.q_ref;
  const double st = s.S - ref.S_ref;
  if (!(s.theta > 0.0)) throw DomainError("relative entropy: theta must be positive");
  return gas.Cv() * ref.theta * phi_func(s.theta / ref.theta) +
         gas.R * ref.theta * phi_func(s.v / ref.v) + 0.5 * psi * psi +
         gas.tau1 / (2.0 * gas.kappa * s.theta) * qt * qt + gas.tau2 / (2.0 * gas.mu) * st * st;
}

double trapezoid(std::span<const double> f, double dx) {
  if (f.empty()) return 0.0;
  if (f.size() == 1) return 0.0;
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
  return sum * dx;
}

std::vector<double> first_derivative(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 3) return d;
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dx);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  return d;
}

std::vector<double> second_derivative(std::span<const double> f, double dx) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 4) return d;
  const double h2 = dx * dx;
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
  d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
  return d;
}

PerturbationFields perturbation_fields(const FieldSet& fields, std::span<const WavePoint> ref) {
  const int n = fields.size();
  PerturbationFields pf;
  for (auto& c : pf.comp) c.resize(static_cast<std::size_t>(n));
  pf.weight.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const WavePoint& r = ref[k];
    pf.comp[0][k] = fields(Var::V, i) - r.v;
    pf.comp[1][k] = fields(Var::U, i) - r.u;
    pf.comp[2][k] = fields(Var::Theta, i) - r.theta;
    pf.comp[3][k] = fields(Var::Q, i) - r.q_ref;
    pf.comp[4][k] = fields(Var::S, i) - r.S_ref;
    pf.weight[k] = std::abs(r.vx);
  }
  return pf;
}

double total_volume(const Grid1D& grid, const FieldSet& fields) {
  double sum = 0.0;
  for (int i = 0; i < fields.size(); ++i) sum += fields(Var::V, i);
  return sum * grid.dx();
}

namespace {

double squared_l2(std::span<const double> f, double dx) {
  std::vector<double> sq(f.size());
  std::transform(f.begin(), f.end(), sq.begin(), [](double a) { return a * a; });
  return trapezoid(sq, dx);
}

}  // namespace

DiagnosticsRecord compute_record(const GasParams& gas, const Grid1D& grid, const FieldSet& fields,
                                 std::span<const WavePoint> ref,
                                 std::span<const EndState> centered) {
  const double dx = grid.dx();
  const int n = fields.size();
  const PerturbationFields pf = perturbation_fields(fields, ref);

  DiagnosticsRecord rec;
  rec.t = fields.t;

  // per component: ||f||^2, ||f_x||^2, ||f_xx||^2
  std::array<std::array<double, 3>, kNumVars> sq{};
  for (int c = 0; c < kNumVars; ++c) {
    const auto& f = pf.comp[static_cast<std::size_t>(c)];
    const auto fx = first_derivative(f, dx);
    const auto fxx = second_derivative(f, dx);
    sq[c] = {squared_l2(f, dx), squared_l2(fx, dx), squared_l2(fxx, dx)};
    rec.l2[c] = std::sqrt(sq[c][0]);
    double m = 0.0;
    for (double a : f) m = std::max(m, std::abs(a));
    rec.linf[c] = m;
  }

  double h1 = 0.0;
  double h2 = 0.0;
  for (const auto& s : sq) {
    h1 += s[0] + s[1];
    h2 += s[0] + s[1] + s[2];
  }
  rec.h1_all = std::sqrt(h1);
  rec.h2_all = std::sqrt(h2);
  rec.E_running = h2;

  std::vector<double> eta(static_cast<std::size_t>(n));
  std::vector<double> gr(static_cast<std::size_t>(n));
  std::vector<double> relax(static_cast<std::size_t>(n));
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const CellState s = fields.cell(i);
    eta[k] = relative_entropy_density(gas, s, ref[k]);
    const double phi = pf.comp[0][k];
    const double th = pf.comp[2][k];
    gr[k] = pf.weight[k] * (phi * phi + th * th);
    const double qt = pf.comp[3][k];
    const double st = pf.comp[4][k];
    relax[k] = s.v / (gas.kappa * s.theta) * qt * qt + s.v / gas.mu * st * st;
    const EndState& c = centered[k];
    sup = std::max({sup, std::abs(s.v - c.v), std::abs(s.u - c.u), std::abs(s.theta - c.theta),
                    std::abs(s.q), std::abs(s.S)});
  }
  rec.eta_total = trapezoid(eta, dx);
  rec.GR = trapezoid(gr, dx);
  rec.weighted_relaxation = trapezoid(relax, dx);
  rec.sup_centered = sup;

  // ||(phi_x, psi_x, theta~_x)||_{H^1}^2 + ||(q~, S~)||_{H^2}^2 + G^R
  double d = rec.GR;
  for (int c = 0; c < 3; ++c) d += sq[c][1] + sq[c][2];
  for (int c = 3; c < 5; ++c) d += sq[c][0] + sq[c][1] + sq[c][2];
  rec.D_t = d;

  rec.mass_balance_error =
      total_volume(grid, fields) - fields.initial_volume - fields.boundary_volume_flux;
  return rec;
}

DiagnosticsRecord totals(const Grid1D& grid, const FieldSet& fields, const Background& background) {
  const int n = fields.size();
  std::vector<WavePoint> ref(static_cast<std::size_t>(n));
  std::vector<EndState> centered(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    ref[static_cast<std::size_t>(i)] = background.eval(fields.t, x);
    centered[static_cast<std::size_t>(i)] = background.centered(fields.t, x);
  }
  return compute_record(background.gas(), grid, fields, ref, centered);
}

DiagnosticsRecord DiagnosticsAccumulator::sample(const Grid1D& grid, const FieldSet& fields,
                                                 const Background& background) {
  DiagnosticsRecord rec = totals(grid, fields, background);
  energy_sup_ = std::max(energy_sup_, rec.E_running);
  rec.E_running = energy_sup_;
  return rec;
}

}  // namespace hnsf
