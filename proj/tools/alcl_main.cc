// Command-line driver: run, sweep, check, oracle.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "alcl/config.h"
#include "alcl/conserved.h"
#include "alcl/errors.h"
#include "alcl/grid_spectral.h"
#include "alcl/pipeline.h"
#include "alcl/report.h"
#include "oracles.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitVerdict = 3;

struct Options {
  std::string config;
  std::string out;
  int jobs = 1;
  std::optional<double> only_h;
  bool strict = false;
};

void PrintVerdicts(const alcl::RunRecord& record) {
  const auto line = [](const alcl::Verdict& v, const std::string& prefix) {
    const char* tag = !v.evaluated ? "SKIP" : (v.pass ? "PASS" : "FAIL");
    std::printf("[%s] %s%s measured=%.6g %s=%.6g%s%s\n", tag, prefix.c_str(), v.name.c_str(),
                v.measured, v.tolerance_name.c_str(), v.tolerance, v.note.empty() ? "" : " ",
                v.note.c_str());
  };
  for (const alcl::RunBlock& b : record.blocks) {
    char prefix[64];
    std::snprintf(prefix, sizeof prefix, "h=%g ", b.h);
    if (b.status != "ok") {
      std::printf("[FAIL] %serror: %s\n", prefix, b.error.c_str());
      continue;
    }
    for (const alcl::Verdict& v : b.verdicts) line(v, prefix);
  }
  for (const alcl::Verdict& v : record.verdicts) line(v, "sweep ");
  if (record.partial) std::printf("record is partial: at least one mesh failed\n");
}

int RunOrSweep(const Options& opt, bool single) {
  alcl::SimConfig cfg;
  try {
    cfg = alcl::LoadConfig(opt.config);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }
  std::optional<double> only = opt.only_h;
  if (single && !only) only = cfg.h_list.front();
  try {
    const alcl::RunRecord record = alcl::RunSweep(cfg, opt.jobs, only);
    const std::string out = opt.out.empty() ? cfg.out_dir : opt.out;
    alcl::EmitReports(record, out);
    for (const alcl::RunBlock& b : record.blocks) {
      std::fprintf(stderr, "h=%g wall=%.2fs\n", b.h, b.wall_seconds);
    }
    PrintVerdicts(record);
    if (opt.strict && !record.AllPass()) return kExitVerdict;
  } catch (const alcl::PreconditionError& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int Check(const Options& opt) {
  alcl::SimConfig cfg;
  try {
    cfg = alcl::LoadConfig(opt.config);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }
  const double h0 = alcl::SmallMeshThreshold(cfg.psi0, cfg.phi0);
  std::printf("config ok: sign=%s gamma=%g T=%g L=%g K=%d h_0=%.6g\n",
              std::string(alcl::ToString(cfg.sign)).c_str(), cfg.gamma, cfg.T, cfg.L,
              cfg.snapshots, h0);
  std::printf("%10s %10s %8s %12s %12s %14s\n", "h", "N", "M", "dt_lat", "steps", "memory_MB");
  for (double h : cfg.h_list) {
    const int m = alcl::SiteCount(h, cfg.L);
    const double t_final = cfg.T / (h * h);
    const double stride = t_final / cfg.snapshots;
    const long per = static_cast<long>(std::ceil(stride / cfg.dt_lat - 1e-9));
    const double snaps = 2.0 * cfg.snapshots + 1.0;
    double bytes = snaps * m * 16.0 * (1.0 + 2.0 * alcl::kContinuumOversampling);
    if (m <= alcl::kMaxDenseSites) bytes += 2.0 * m * double(m) * 16.0;
    std::printf("%10g %10.4g %8d %12.6g %12ld %14.1f\n", h, alcl::CutoffFrequency(h, cfg.gamma),
                m, stride / per, per * cfg.snapshots, bytes / 1e6);
  }
  return kExitOk;
}

int Oracle() {
  bool ok = true;
  for (const auto& r : alcl::tools::RunOracles()) {
    std::printf("[%s] %s: %.3g (tolerance %.1g)\n", r.pass() ? "PASS" : "FAIL", r.name.c_str(),
                r.measured, r.tolerance);
    ok = ok && r.pass();
  }
  return ok ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ablowitz-Ladik continuum-limit laboratory"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", opt.config, "JSON experiment config");
    if (needs_config) c->required()->check(CLI::ExistingFile);
  };
  const auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "output directory (overrides out_dir)");
    sub->add_option("--jobs", opt.jobs, "worker cap")->check(CLI::PositiveNumber);
    sub->add_option("--only-h", opt.only_h, "run only this mesh from h_list");
    sub->add_flag("--strict", opt.strict, "exit 3 when any verdict fails");
  };
  CLI::App* run = app.add_subcommand("run", "run one mesh (first in h_list or --only-h)");
  add_common(run, true);
  add_run_flags(run);
  CLI::App* sweep = app.add_subcommand("sweep", "run the whole h_list");
  add_common(sweep, true);
  add_run_flags(sweep);
  CLI::App* check = app.add_subcommand("check", "validate a config and print derived sizes");
  add_common(check, true);
  app.add_subcommand("oracle", "run the closed-form oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }
  if (run->parsed()) return RunOrSweep(opt, true);
  if (sweep->parsed()) return RunOrSweep(opt, false);
  if (check->parsed()) return Check(opt);
  return Oracle();
}
