#ifndef HNSF_CHECKS_HPP_
#define HNSF_CHECKS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hnsf/solver.hpp"

namespace hnsf {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured quantity vs threshold, or the exception text
};

/// Property checks for thermo, riemann, smoothwave, diagnostics and the solver
/// kernels, built on the gas and wave of `config`. Random samples use `seed`.
std::vector<CheckResult> run_check_suite(const SimConfig& config, std::uint64_t seed = 20240611);

}  // namespace hnsf

#endif  // HNSF_CHECKS_HPP_
