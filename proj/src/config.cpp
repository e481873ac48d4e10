#include "hnsf/config.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>
#include <vector>

#include <toml.hpp>

#include "hnsf/errors.hpp"

namespace hnsf {

namespace {

using DoubleRef = double& (*)(SimConfig&);
using IntRef = int& (*)(SimConfig&);
using BoolRef = bool& (*)(SimConfig&);

template <class Ref>
struct Entry {
  std::string_view section;
  std::string_view key;
  Ref ref;
};

const std::array<Entry<DoubleRef>, 21> kDoubles = {{
    {"gas", "R", [](SimConfig& c) -> double& { return c.gas.R; }},
    {"gas", "gamma", [](SimConfig& c) -> double& { return c.gas.gamma; }},
    {"gas", "A", [](SimConfig& c) -> double& { return c.gas.A; }},
    {"gas", "mu", [](SimConfig& c) -> double& { return c.gas.mu; }},
    {"gas", "kappa", [](SimConfig& c) -> double& { return c.gas.kappa; }},
    {"gas", "tau1", [](SimConfig& c) -> double& { return c.gas.tau1; }},
    {"gas", "tau2", [](SimConfig& c) -> double& { return c.gas.tau2; }},
    {"riemann", "v_plus", [](SimConfig& c) -> double& { return c.right.v; }},
    {"riemann", "u_plus", [](SimConfig& c) -> double& { return c.right.u; }},
    {"riemann", "theta_plus", [](SimConfig& c) -> double& { return c.right.theta; }},
    {"riemann", "v_minus", [](SimConfig& c) -> double& { return c.v_minus; }},
    {"wave", "epsilon", [](SimConfig& c) -> double& { return c.epsilon; }},
    {"wave", "q_exp", [](SimConfig& c) -> double& { return c.q_exp; }},
    {"grid", "x_min", [](SimConfig& c) -> double& { return c.grid.x_min; }},
    {"grid", "x_max", [](SimConfig& c) -> double& { return c.grid.x_max; }},
    {"run", "t_end", [](SimConfig& c) -> double& { return c.t_end; }},
    {"run", "cfl", [](SimConfig& c) -> double& { return c.cfl; }},
    {"run", "output_interval", [](SimConfig& c) -> double& { return c.output_interval; }},
    {"perturbation", "amplitude", [](SimConfig& c) -> double& { return c.perturbation.amplitude; }},
    {"perturbation", "center", [](SimConfig& c) -> double& { return c.perturbation.center; }},
    {"perturbation", "width", [](SimConfig& c) -> double& { return c.perturbation.width; }},
}};

const std::array<Entry<IntRef>, 3> kInts = {{
    {"grid", "n", [](SimConfig& c) -> int& { return c.grid.n; }},
    {"run", "output_every", [](SimConfig& c) -> int& { return c.output_every; }},
    {"run", "profile_count", [](SimConfig& c) -> int& { return c.profile_count; }},
}};

const std::array<Entry<BoolRef>, 1> kBools = {{
    {"run", "relaxation_split", [](SimConfig& c) -> bool& { return c.relaxation_split; }},
}};

constexpr std::array<std::string_view, 6> kSections = {"gas",  "riemann", "wave",
                                                       "grid", "run",     "perturbation"};

constexpr std::string_view kBackgroundKey = "background";
constexpr std::string_view kReconstructionKey = "reconstruction";
constexpr std::string_view kMaskKey = "mask";

using Value = std::variant<double, std::int64_t, bool, std::string, std::vector<std::string>>;
using Document = std::map<std::string, std::map<std::string, Value>, std::less<>>;

bool is_known_key(std::string_view section, std::string_view key) {
  for (const auto& e : kDoubles) {
    if (e.section == section && e.key == key) return true;
  }
  for (const auto& e : kInts) {
    if (e.section == section && e.key == key) return true;
  }
  for (const auto& e : kBools) {
    if (e.section == section && e.key == key) return true;
  }
  return (section == "run" && (key == kBackgroundKey || key == kReconstructionKey)) ||
         (section == "perturbation" && key == kMaskKey);
}

std::string full_key(std::string_view section, std::string_view key) {
  return std::string(section) + "." + std::string(key);
}

const Value* lookup(const Document& doc, std::string_view section, std::string_view key) {
  const auto s = doc.find(section);
  if (s == doc.end()) return nullptr;
  const auto k = s->second.find(std::string(key));
  return k == s->second.end() ? nullptr : &k->second;
}

SimConfig resolve(const Document& doc) {
  for (const auto& [section, keys] : doc) {
    if (std::find(kSections.begin(), kSections.end(), section) == kSections.end()) {
      throw ConfigError("unknown key: " + section);
    }
    for (const auto& [key, value] : keys) {
      if (!is_known_key(section, key)) throw ConfigError("unknown key: " + full_key(section, key));
    }
  }

  SimConfig c;
  for (const auto& e : kDoubles) {
    if (const Value* v = lookup(doc, e.section, e.key)) {
      if (const auto* d = std::get_if<double>(v)) {
        e.ref(c) = *d;
      } else if (const auto* i = std::get_if<std::int64_t>(v)) {
        e.ref(c) = static_cast<double>(*i);
      } else {
        throw ConfigError(full_key(e.section, e.key) + " must be a number");
      }
    }
  }
  for (const auto& e : kInts) {
    if (const Value* v = lookup(doc, e.section, e.key)) {
      const auto* i = std::get_if<std::int64_t>(v);
      if (!i) throw ConfigError(full_key(e.section, e.key) + " must be an integer");
      e.ref(c) = static_cast<int>(*i);
    }
  }
  for (const auto& e : kBools) {
    if (const Value* v = lookup(doc, e.section, e.key)) {
      const auto* b = std::get_if<bool>(v);
      if (!b) throw ConfigError(full_key(e.section, e.key) + " must be a boolean");
      e.ref(c) = *b;
    }
  }
  if (const Value* v = lookup(doc, "run", kBackgroundKey)) {
    const auto* s = std::get_if<std::string>(v);
    if (s && *s == "smooth_wave") {
      c.background = BackgroundMode::SmoothWave;
    } else if (s && *s == "constant") {
      c.background = BackgroundMode::Constant;
    } else {
      throw ConfigError("run.background must be \"smooth_wave\" or \"constant\"");
    }
  }
  if (const Value* v = lookup(doc, "run", kReconstructionKey)) {
    const auto* s = std::get_if<std::string>(v);
    if (s && *s == "minmod") {
      c.reconstruction = Reconstruction::Minmod;
    } else if (s && *s == "constant") {
      c.reconstruction = Reconstruction::Constant;
    } else {
      throw ConfigError("run.reconstruction must be \"minmod\" or \"constant\"");
    }
  }
  if (const Value* v = lookup(doc, "perturbation", kMaskKey)) {
    const auto* names = std::get_if<std::vector<std::string>>(v);
    if (!names) throw ConfigError("perturbation.mask must be an array of component names");
    c.perturbation.mask.fill(false);
    for (const auto& name : *names) {
      const auto it = std::find(kVarNames.begin(), kVarNames.end(), name);
      if (it == kVarNames.end()) throw ConfigError("perturbation.mask: unknown component " + name);
      c.perturbation.mask[static_cast<std::size_t>(it - kVarNames.begin())] = true;
    }
  }

  for (std::string_view key : {"v_plus", "u_plus", "theta_plus"}) {
    if (!lookup(doc, "riemann", key)) throw ConfigError("riemann." + std::string(key) + " required");
  }
  if (c.background == BackgroundMode::SmoothWave && !lookup(doc, "riemann", "v_minus")) {
    throw ConfigError("riemann.v_minus required");
  }
  c.validate();
  return c;
}

Value from_toml(const toml::node& node, std::string_view section, std::string_view key) {
  if (const auto* d = node.as_floating_point()) return d->get();
  if (const auto* i = node.as_integer()) return static_cast<std::int64_t>(i->get());
  if (const auto* b = node.as_boolean()) return b->get();
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* a = node.as_array()) {
    std::vector<std::string> out;
    for (const auto& el : *a) {
      const auto* s = el.as_string();
      if (!s) throw ConfigError(full_key(section, key) + " must contain only strings");
      out.push_back(s->get());
    }
    return out;
  }
  throw ConfigError(full_key(section, key) + " has an unsupported type");
}

Value from_json(const nlohmann::json& j, std::string_view section, std::string_view key) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::vector<std::string> out;
    for (const auto& el : j) {
      if (!el.is_string()) throw ConfigError(full_key(section, key) + " must contain only strings");
      out.push_back(el.get<std::string>());
    }
    return out;
  }
  throw ConfigError(full_key(section, key) + " has an unsupported type");
}

std::vector<std::string> mask_names(const Perturbation& p) {
  std::vector<std::string> names;
  for (int k = 0; k < kNumVars; ++k) {
    if (p.mask[static_cast<std::size_t>(k)]) names.emplace_back(kVarNames[static_cast<std::size_t>(k)]);
  }
  return names;
}

const char* background_name(BackgroundMode m) {
  return m == BackgroundMode::Constant ? "constant" : "smooth_wave";
}

const char* reconstruction_name(Reconstruction r) {
  return r == Reconstruction::Constant ? "constant" : "minmod";
}

}  // namespace

SimConfig parse_config_string(std::string_view text) {
  toml::table table;
  try {
    table = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string("TOML parse error: ") + std::string(e.description()));
  }
  Document doc;
  for (const auto& [section, node] : table) {
    const std::string name(section.str());
    const auto* sub = node.as_table();
    if (!sub) {
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) {
        throw ConfigError("unknown key: " + name);
      }
      throw ConfigError(name + " must be a table");
    }
    auto& keys = doc[name];
    for (const auto& [key, value] : *sub) {
      keys[std::string(key.str())] = from_toml(value, name, key.str());
    }
  }
  return resolve(doc);
}

SimConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_string(ss.str());
}

nlohmann::json config_to_json(const SimConfig& config) {
  SimConfig c = config;
  nlohmann::json j = nlohmann::json::object();
  for (const auto& e : kDoubles) {
    j[std::string(e.section)][std::string(e.key)] = e.ref(c);
  }
  for (const auto& e : kInts) j[std::string(e.section)][std::string(e.key)] = e.ref(c);
  for (const auto& e : kBools) j[std::string(e.section)][std::string(e.key)] = e.ref(c);
  j["run"][std::string(kBackgroundKey)] = background_name(c.background);
  j["run"][std::string(kReconstructionKey)] = reconstruction_name(c.reconstruction);
  j["perturbation"][std::string(kMaskKey)] = mask_names(c.perturbation);
  return j;
}

SimConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config JSON must be an object");
  Document doc;
  for (const auto& [section, keys] : j.items()) {
    if (!keys.is_object()) throw ConfigError(section + " must be an object");
    auto& out = doc[section];
    for (const auto& [key, value] : keys.items()) out[key] = from_json(value, section, key);
  }
  return resolve(doc);
}

std::string serialize_config(const SimConfig& config) {
  SimConfig c = config;
  toml::table root;
  for (std::string_view section : kSections) root.insert(section, toml::table{});
  auto sec = [&](std::string_view name) -> toml::table& { return *root[name].as_table(); };
  for (const auto& e : kDoubles) {
    sec(e.section).insert_or_assign(e.key, e.ref(c));
  }
  for (const auto& e : kInts) sec(e.section).insert_or_assign(e.key, static_cast<std::int64_t>(e.ref(c)));
  for (const auto& e : kBools) sec(e.section).insert_or_assign(e.key, e.ref(c));
  sec("run").insert_or_assign(kBackgroundKey, std::string(background_name(c.background)));
  sec("run").insert_or_assign(kReconstructionKey, std::string(reconstruction_name(c.reconstruction)));
  toml::array mask;
  for (const auto& name : mask_names(c.perturbation)) mask.push_back(name);
  sec("perturbation").insert_or_assign(kMaskKey, mask);
  std::ostringstream out;
  out << root << "\n";
  return out.str();
}

SimConfig standard_config() {
  SimConfig c;
  c.right = {1.2, 0.0, 1.0};
  c.v_minus = 1.0;
  c.grid = {-60.0, 140.0, 4000};
  c.t_end = 100.0;
  c.perturbation = {0.01, 0.0, 2.0, {true, true, true, false, false}};
  return c;
}

std::string_view version_string() { return "hnsf 0.1.0"; }

std::string platform_string() {
  std::ostringstream s;
#if defined(__linux__)
  s << "linux";
#elif defined(__APPLE__)
  s << "darwin";
#else
  s << "unknown-os";
#endif
#if defined(__x86_64__)
  s << "-x86_64";
#elif defined(__aarch64__)
  s << "-aarch64";
#endif
#if defined(__clang__)
  s << " clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  s << " gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#endif
  return s.str();
}

}  // namespace hnsf
