#include "hnsf/fields.hpp"

#include <string>

#include "hnsf/errors.hpp"

namespace hnsf {

void Grid1D::validate() const {
  if (!(x_min < x_max)) throw ConfigError("grid.x_min must be below grid.x_max");
  if (n < 16) throw ConfigError("grid.n must be at least 16, got " + std::to_string(n));
}

FieldSet::FieldSet(int n) : n_(n) {
  for (auto& d : data_) d.assign(static_cast<std::size_t>(n + 2 * kGhost), 0.0);
}

CellState FieldSet::cell(int i) const {
  return {(*this)(Var::V, i), (*this)(Var::U, i), (*this)(Var::Theta, i), (*this)(Var::Q, i),
          (*this)(Var::S, i)};
}

void FieldSet::set_cell(int i, const CellState& s) {
  (*this)(Var::V, i) = s.v;
  (*this)(Var::U, i) = s.u;
  (*this)(Var::Theta, i) = s.theta;
  (*this)(Var::Q, i) = s.q;
  (*this)(Var::S, i) = s.S;
}

Background Background::smooth(const SmoothWave& wave) {
  Background b;
  b.gas_ = wave.gas();
  b.wave_ = wave;
  b.constant_ = wave.riemann().right;
  return b;
}

Background Background::constant(const GasParams& gas, const EndState& state) {
  Background b;
  b.gas_ = gas;
  b.constant_ = state;
  return b;
}

WavePoint Background::eval(double t, double x) const {
  if (wave_) return wave_->eval(t, x);
  WavePoint p;
  p.v = constant_.v;
  p.u = constant_.u;
  p.theta = constant_.theta;
  p.w = lambda1(gas_, constant_.v, constant_.theta).lambda1;
  return p;
}

EndState Background::centered(double t, double x) const {
  if (!wave_) return constant_;
  if (t > 0.0) return wave_->centered(t, x);
  const WavePoint p = wave_->eval(0.0, x);
  return {p.v, p.u, p.theta};
}

}  // namespace hnsf
