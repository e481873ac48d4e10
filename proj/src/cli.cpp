#include "hnsf/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnsf/checks.hpp"
#include "hnsf/config.hpp"
#include "hnsf/errors.hpp"

namespace hnsf {

namespace fs = std::filesystem;

std::string csv_row(const std::vector<double>& values) {
  std::string line;
  char buf[40];
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    line += buf;
  }
  line += '\n';
  return line;
}

std::string diagnostics_csv_header() {
  return "t,l2_phi,l2_psi,l2_theta,l2_q,l2_S,linf_phi,linf_psi,linf_theta,linf_q,linf_S,"
         "h1_all,h2_all,eta_total,E_running,D_t,GR,sup_centered,mass_balance_error\n";
}

std::vector<double> diagnostics_csv_values(const DiagnosticsRecord& r) {
  std::vector<double> v{r.t};
  v.insert(v.end(), r.l2.begin(), r.l2.end());
  v.insert(v.end(), r.linf.begin(), r.linf.end());
  v.insert(v.end(), {r.h1_all, r.h2_all, r.eta_total, r.E_running, r.D_t, r.GR, r.sup_centered,
                     r.mass_balance_error});
  return v;
}

std::string profile_csv_header() { return "x,v,u,theta,q,S,vR,uR,thetaR,qR,SR\n"; }

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SimConfig load(const CliArgs& args) {
  return args.config ? parse_config(*args.config) : standard_config();
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

// Runs `body`, mapping exception families onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const ModelBreakdown& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

// With --out the CSV goes to DIR/name, otherwise to `out`.
template <class F>
void write_csv(const CliArgs& args, const char* name, std::ostream& out, F&& fill) {
  if (!args.out) {
    fill(out);
    return;
  }
  fs::create_directories(*args.out);
  std::ofstream f = open_out(*args.out / name);
  fill(f);
}

}  // namespace

int cmd_simulate(const CliArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!args.out) throw ConfigError("simulate needs --out DIR");
    SimConfig config = load(args);
    if (args.t) config.t_end = *args.t;
    if (args.n) config.grid.n = *args.n;
    config.validate();

    const fs::path dir = *args.out;
    fs::create_directories(dir);
    const std::string started = utc_now();

    std::ofstream diag = open_out(dir / "diagnostics.csv");
    diag << diagnostics_csv_header();
    std::vector<std::string> profile_files;
    const Background background = make_background(config);

    RunCallbacks cb;
    cb.on_record = [&](const DiagnosticsRecord& r) { diag << csv_row(diagnostics_csv_values(r)); };
    cb.on_profile = [&](int k, const FieldSet& f) {
      const std::string name = "profiles_" + std::to_string(k) + ".csv";
      std::ofstream p = open_out(dir / name);
      p << profile_csv_header();
      for (int i = 0; i < f.size(); ++i) {
        const double x = config.grid.x(i);
        const CellState s = f.cell(i);
        const WavePoint r = background.eval(f.t, x);
        p << csv_row({x, s.v, s.u, s.theta, s.q, s.S, r.v, r.u, r.theta, r.q_ref, r.S_ref});
      }
      profile_files.push_back(name);
    };

    int code = kExitOk;
    std::string failure;
    long steps = 0;
    try {
      steps = run_from(config, background, initial_fields(config, background), cb).steps;
    } catch (const InvariantViolation& e) {
      failure = e.what();
      code = kExitRuntime;
    }
    diag.close();

    nlohmann::json manifest;
    manifest["config"] = config_to_json(config);
    manifest["version"] = std::string(version_string());
    manifest["platform"] = platform_string();
    manifest["start_time"] = started;
    manifest["end_time"] = utc_now();
    manifest["steps"] = steps;
    manifest["status"] = code == kExitOk ? "ok" : "invariant_violation";
    if (!failure.empty()) manifest["error"] = failure;
    manifest["outputs"] = {{"diagnostics", "diagnostics.csv"}, {"profiles", profile_files}};
    std::ofstream m = open_out(dir / "manifest.json");
    m << manifest.dump(2) << '\n';

    if (code != kExitOk) {
      err << "invariant violation: " << failure << '\n';
      return code;
    }
    out << "wrote " << (dir / "diagnostics.csv").string() << ", " << profile_files.size()
        << " profiles, manifest.json (" << steps << " steps)\n";
    return kExitOk;
  });
}

int cmd_wave(const CliArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig config = load(args);
    const double t = args.t.value_or(10.0);
    const int n = args.n.value_or(2000);
    if (!(t >= 0.0)) throw ConfigError("--t must be >= 0 for wave");
    if (n < 2) throw ConfigError("--n must be at least 2");
    const SmoothWave wave(config.wave_params());
    const double lo = wave.riemann().w_minus * (1.0 + t) - 20.0;
    const double hi = wave.riemann().w_plus * (1.0 + t) + 20.0;
    write_csv(args, "wave.csv", out, [&](std::ostream& o) {
      o << "x,vR,uR,thetaR,qR,SR,vRx,uRx,thetaRx,w\n";
      for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const WavePoint p = wave.eval(t, x);
        o << csv_row({x, p.v, p.u, p.theta, p.q_ref, p.S_ref, p.vx, p.ux, p.thetax, p.w});
      }
    });
    return kExitOk;
  });
}

int cmd_riemann(const CliArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig config = load(args);
    const int n = args.n.value_or(1001);
    if (n < 2) throw ConfigError("--n must be at least 2");
    const RiemannData rd = build_riemann(config.gas, config.right, config.v_minus);
    const double pad = 0.1 * (rd.w_plus - rd.w_minus);
    const double lo = rd.w_minus - pad;
    const double hi = rd.w_plus + pad;
    write_csv(args, "riemann.csv", out, [&](std::ostream& o) {
      o << "xi,v,u,theta,z1,s\n";
      for (int i = 0; i < n; ++i) {
        const double xi = lo + (hi - lo) * i / (n - 1);
        const EndState s = centered_wave_at(config.gas, rd, xi);
        const RiemannInvariants z = riemann_invariants(config.gas, s, rd.right);
        o << csv_row({xi, s.v, s.u, s.theta, z.z1, z.s});
      }
    });
    return kExitOk;
  });
}

int cmd_check(const CliArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig config = load(args);
    const std::vector<CheckResult> results = run_check_suite(config, args.seed);
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    int failed = 0;
    const CheckResult* first = nullptr;
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2)
          << r.name << r.detail << '\n';
      if (!r.passed) {
        ++failed;
        if (!first) first = &r;
      }
    }
    out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
        << " properties passed\n";
    if (first) {
      err << "first failing invariant: " << first->name << " (" << first->detail << ")\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolized Navier-Stokes-Fourier rarefaction simulator", "hnsf"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);

  CliArgs args;
  std::string config_path;
  std::string out_path;
  double t = 0.0;
  int n = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "TOML experiment file");
    sub->add_option("--out", out_path, "output directory");
    sub->add_option("--t", t, "end time (simulate) or sample time (wave)");
    sub->add_option("--n", n, "cells (simulate) or rows (wave, riemann)");
    sub->add_option("--seed", args.seed, "sampling seed for check");
  };
  CLI::App* sim = app.add_subcommand("simulate", "run the solver and write CSV output");
  CLI::App* wave = app.add_subcommand("wave", "dump the smooth rarefaction at one time");
  CLI::App* riem = app.add_subcommand("riemann", "dump the centered rarefaction against x/t");
  CLI::App* check = app.add_subcommand("check", "run the invariant suite");
  for (CLI::App* s : {sim, wave, riem, check}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* used = app.get_subcommands().front();
  if (used->count("--config")) args.config = config_path;
  if (used->count("--out")) args.out = out_path;
  if (used->count("--t")) args.t = t;
  if (used->count("--n")) args.n = n;

  if (used == sim) return cmd_simulate(args, out, err);
  if (used == wave) return cmd_wave(args, out, err);
  if (used == riem) return cmd_riemann(args, out, err);
  return cmd_check(args, out, err);
}

}  // namespace hnsf
