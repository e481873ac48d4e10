#ifndef HNSF_CONFIG_HPP_
#define HNSF_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hnsf/solver.hpp"

namespace hnsf {

/// Configuration file layout (TOML, flat sections):
///
///   [gas]          R gamma A mu kappa tau1 tau2
///   [riemann]      v_plus u_plus theta_plus v_minus     (v_minus unused in constant mode)
///   [wave]         epsilon q_exp
///   [grid]         x_min x_max n
///   [run]          t_end cfl output_every output_interval profile_count
///                  relaxation_split background ("smooth_wave" | "constant")
///                  reconstruction ("minmod" | "constant")
///   [perturbation] amplitude center width mask (array of "v","u","theta","q","S")
///
/// Riemann end states are required; everything else has a default.
SimConfig parse_config_string(std::string_view text);
SimConfig parse_config(const std::filesystem::path& path);

/// TOML text that parses back to an identical SimConfig.
std::string serialize_config(const SimConfig& config);

nlohmann::json config_to_json(const SimConfig& config);
SimConfig config_from_json(const nlohmann::json& j);

/// The acceptance-suite setup: v_+ = 1.2, u_+ = 0, theta_+ = 1, v_- = 1.0 on [-60, 140].
SimConfig standard_config();

std::string_view version_string();
std::string platform_string();

}  // namespace hnsf

#endif  // HNSF_CONFIG_HPP_
