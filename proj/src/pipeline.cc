#include "alcl/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "alcl/errors.h"
#include "alcl/grid_spectral.h"

namespace alcl {
namespace {

constexpr double kPi = std::numbers::pi;

ContinuumField ChannelOnGrid(const ChannelSpec& spec, double L, int points) {
  if (spec.IsZero()) return ContinuumField::Zeros(L, points);
  return FromContinuumSpectrum(L, spec.WindowSpectrum(L, points));
}

// Merges the backward leg (t <= 0) and forward leg (t >= 0) into increasing time.
std::vector<NlsState> Merge(const NlsSolution& backward, const NlsSolution& forward) {
  std::vector<NlsState> out(backward.snapshots.rbegin(), backward.snapshots.rend() - 1);
  out.insert(out.end(), forward.snapshots.begin(), forward.snapshots.end());
  return out;
}

Verdict Bound(const std::string& name, const std::string& tol_name, double tol,
              double measured) {
  return {name, tol_name, tol, measured, true, measured <= tol, ""};
}

Verdict Skipped(const std::string& name, const std::string& tol_name, double tol,
                const std::string& note) {
  return {name, tol_name, tol, 0.0, false, false, note};
}

double BoundaryFraction(const LatticeField& f) {
  const double edge = (1.0 - kBoundaryFraction) * f.half_width();
  double outer = 0.0, total = 0.0;
  for (int j = 0; j < f.sites(); ++j) {
    const double w = std::norm(f[j]);
    total += w;
    if (std::abs(f.position(j)) >= edge) outer += w;
  }
  return total > 0.0 ? outer / total : 0.0;
}

// Largest ratio value_{j+1} / value_j along the sweep; strictly below 1 means
// strictly decreasing.
double WorstStepRatio(const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t j = 1; j < v.size(); ++j) {
    const double r = v[j - 1] > 0.0 ? v[j] / v[j - 1] : (v[j] > 0.0 ? kInf : 0.0);
    worst = std::max(worst, r);
  }
  return worst;
}

Verdict Decreasing(const std::string& name, const std::vector<double>& v) {
  Verdict out{name, "strict_decrease", 1.0, WorstStepRatio(v), true, false, ""};
  out.pass = out.measured < 1.0;
  if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
    out.pass = false;
    out.note = "all values are zero";
  }
  return out;
}

}  // namespace

const NormProfile* RunBlock::profile(const std::string& label, double parameter) const {
  for (const NormProfile& p : profiles) {
    if (p.label == label && p.parameter == parameter) return &p;
  }
  return nullptr;
}

bool RunRecord::AllPass() const {
  if (partial) return false;
  for (const Verdict& v : verdicts) {
    if (v.evaluated && !v.pass) return false;
  }
  for (const RunBlock& b : blocks) {
    for (const Verdict& v : b.verdicts) {
      if (v.evaluated && !v.pass) return false;
    }
  }
  return true;
}

std::pair<double, double> FitScale(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.empty() || x.size() != y.size()) throw PreconditionError("fit needs aligned data");
  double lo = kInf, hi = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] > 0.0) || !(y[j] > 0.0)) throw PreconditionError("fit needs positive data");
    lo = std::min(lo, y[j] / x[j]);
    hi = std::max(hi, y[j] / x[j]);
  }
  const double c = 0.5 * (lo + hi);
  return {c, std::max(hi / c - 1.0, 1.0 - lo / c)};
}

Reference ComputeReference(const SimConfig& cfg) {
  Reference ref;
  const double h_min = *std::min_element(cfg.h_list.begin(), cfg.h_list.end());
  ref.points = kContinuumOversampling * SiteCount(h_min, cfg.L);
  ref.dx = 2.0 * cfg.L / ref.points;
  const ContinuumField psi0 = ChannelOnGrid(cfg.psi0, cfg.L, ref.points);
  const ContinuumField phi0 = ChannelOnGrid(cfg.phi0, cfg.L, ref.points);
  NlsOptions opt;
  opt.intervals = cfg.snapshots;
  const auto solve = [&](const ContinuumField& u0, Orientation o) {
    const NlsSolution fwd = NlsSolve(u0, cfg.T, cfg.sign, o, opt);
    const NlsSolution bwd = NlsSolve(u0, -cfg.T, cfg.sign, o, opt);
    ref.dt = std::max({ref.dt, fwd.dt, bwd.dt});
    const double res = std::max(DuhamelResidual(fwd.snapshots, cfg.sign, o),
                                DuhamelResidual(bwd.snapshots, cfg.sign, o));
    return std::make_pair(Merge(bwd, fwd), res);
  };
  auto [psi, res_psi] = solve(psi0, Orientation::kForward);
  auto [phi, res_phi] = solve(phi0, Orientation::kReversed);
  ref.psi = std::move(psi);
  ref.phi = std::move(phi);
  ref.duhamel_psi = res_psi;
  ref.duhamel_phi = res_phi;
  return ref;
}

RunBlock RunSingle(const SimConfig& cfg, double h, const Reference& ref) {
  const auto wall_start = std::chrono::steady_clock::now();
  RunBlock b;
  b.h = h;
  std::string stage = "sample";
  try {
    const LatticeField a0 =
        SampleInitialData(cfg.psi0, cfg.phi0, h, cfg.gamma, cfg.L, cfg.sampling());
    b.sites = a0.sites();
    b.cutoff = CutoffFrequency(h, cfg.gamma);
    b.norm0 = std::sqrt(a0.NormSquared());

    stage = "evolve";
    EvolutionParams params;
    params.sign = cfg.sign;
    params.t_final_lat = cfg.T / (h * h);
    params.snapshot_stride = params.t_final_lat / cfg.snapshots;
    params.two_sided = true;
    params.record_norms = true;
    params.mass_tolerance = cfg.tolerance("mass_drift");
    params.dt = cfg.dt_lat;
    Trajectory traj;
    for (;; ++b.dt_halvings) {
      try {
        traj = Evolve(a0, params);
        break;
      } catch (const ResolutionError&) {
        if (b.dt_halvings >= 4) throw;
        params.dt *= 0.5;
      }
    }
    b.dt_lat = traj.dt;
    b.steps = traj.steps;
    const std::size_t origin = static_cast<std::size_t>(cfg.snapshots);

    stage = "conserved";
    std::vector<double> times, m, ham, h2;
    for (const LatticeField& f : traj.snapshots) {
      times.push_back(h * h * f.t_lat());
      m.push_back(Mass(f, cfg.sign));
      ham.push_back(Hamiltonian(f, cfg.sign));
      h2.push_back(H2(f, cfg.sign));
    }
    b.drifts.push_back(MeasureDrift("mass", times, m, origin));
    b.drifts.push_back(MeasureDrift("hamiltonian", times, ham, origin));
    b.drifts.push_back(MeasureDrift("h2", times, h2, origin));
    b.verdicts.push_back(Bound("mass_drift", "mass_drift", cfg.tolerance("mass_drift"),
                               b.drifts[0].max_rel_drift));
    b.verdicts.push_back(Bound("hamiltonian_drift", "hamiltonian_drift",
                               cfg.tolerance("hamiltonian_drift"), b.drifts[1].max_rel_drift));
    b.verdicts.push_back(
        Bound("h2_drift", "h2_drift", cfg.tolerance("h2_drift"), b.drifts[2].max_rel_drift));

    const double g_tol = cfg.tolerance("g_drift");
    const double kappa_start = 0.99 * kPi / (4.0 * h);
    bool kappa_ok = true;
    try {
      b.kappa0 = ScanKappaThreshold(traj.snapshots, kappa_start);
    } catch (const PreconditionError&) {
      kappa_ok = false;
    }
    if (!kappa_ok) {
      b.verdicts.push_back(Skipped("g_drift", "g_drift", g_tol,
                                   "no kappa below pi/(4h) meets the convergence margin"));
    } else if (b.sites > kMaxDenseSites) {
      std::ostringstream note;
      note << "M = " << b.sites << " exceeds the dense limit " << kMaxDenseSites;
      b.verdicts.push_back(Skipped("g_drift", "g_drift", g_tol, note.str()));
    } else {
      const int total = static_cast<int>(traj.snapshots.size());
      const int stride = std::max(1, (total - 1) / (kMaxGSnapshots - 1));
      std::vector<double> gt, gv;
      std::size_t g_origin = 0;
      for (int j = 0; j < total; j += stride) {
        if (static_cast<std::size_t>(j) == origin) g_origin = gt.size();
        gt.push_back(times[j]);
        gv.push_back(GFunctional(traj.snapshots[j], b.kappa0, cfg.sign));
      }
      b.drifts.push_back(MeasureDrift("g", gt, gv, g_origin));
      b.verdicts.push_back(Bound("g_drift", "g_drift", g_tol, b.drifts.back().max_abs_drift));
    }

    for (const LatticeField& f : traj.snapshots) {
      b.boundary_mass = std::max(b.boundary_mass, BoundaryFraction(f));
    }
    b.verdicts.push_back(Bound("boundary_mass", "boundary_mass", cfg.tolerance("boundary_mass"),
                               b.boundary_mass));

    stage = "split";
    std::vector<ContinuumField> psi_h, phi_h;
    for (std::size_t j = 0; j < traj.snapshots.size(); ++j) {
      ChannelPair ch = SplitChannels(traj.snapshots[j], times[j]);
      b.psi_channel_max = std::max(b.psi_channel_max, std::sqrt(ch.psi.NormSquared()));
      b.phi_channel_max = std::max(b.phi_channel_max, std::sqrt(ch.phi.NormSquared()));
      psi_h.push_back(std::move(ch.psi));
      phi_h.push_back(std::move(ch.phi));
    }

    stage = "convergence";
    b.errors = ConvergenceError(traj, ref.psi, ref.phi);

    stage = "diagnostics";
    b.strichartz_l6 = StrichartzNorm(traj, 6.0, 6.0);
    b.strichartz_l4inf = StrichartzNorm(traj, 4.0, kInf);
    for (double kappa : cfg.kappa_list) {
      if (kappa * h >= kPi / 2.0) {
        std::ostringstream note;
        note << "equicontinuity at kappa = " << kappa << " skipped: kappa h >= pi/2";
        b.notes.push_back(note.str());
        continue;
      }
      b.profiles.push_back(EquicontinuityProfile(traj, kappa));
    }
    for (double r : cfg.R_list) b.profiles.push_back(TightnessProfile(traj, r));
    for (double delta : cfg.delta_list) {
      b.profiles.push_back({"suppression", delta, times, SuppressionRatio(traj, delta)});
    }
    // A channel that starts at zero carries only a fast nonresonant response,
    // which the snapshots cannot resolve; the measurement is then unavailable.
    for (CrossChannel ch : {CrossChannel::kPsi, CrossChannel::kPhi}) {
      double& slot = ch == CrossChannel::kPsi ? b.cross_psi : b.cross_phi;
      try {
        slot = CrossTermMagnitude(psi_h, phi_h, times, h, ch);
      } catch (const ResolutionError& e) {
        slot = std::numeric_limits<double>::quiet_NaN();
        b.notes.push_back(std::string(ch == CrossChannel::kPsi ? "cross_psi" : "cross_phi") +
                          " unavailable: " + e.what());
      }
    }
    const double band = 1.0 / std::sqrt(h);
    for (std::size_t j = 0; j < times.size(); ++j) {
      b.sign_flip = std::max(b.sign_flip,
                             SignFlipCheck(ProjectBelow(psi_h[j], band), ProjectBelow(phi_h[j], band),
                                           h, times[j], cfg.sign));
    }
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(stage, e.what());
  }
  b.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return b;
}

double ReferenceProfileSup(const Reference& ref, const std::string& label, double parameter) {
  double best = 0.0;
  for (std::size_t j = 0; j < ref.psi.size(); ++j) {
    double total = 0.0;
    for (const ContinuumField* f : {&ref.psi[j].field, &ref.phi[j].field}) {
      if (label == "equicontinuity") {
        const CVec spec = ContinuumSpectrum(*f);
        const int n = f->points();
        double tail = 0.0;
        for (int k = 0; k < n; ++k) {
          if (std::abs(SignedIndex(k, n) * kPi / f->half_width()) >= parameter) {
            tail += std::norm(spec[k]);
          }
        }
        total += tail / (2.0 * f->half_width());
      } else {
        throw PreconditionError("no reference profile for " + label);
      }
    }
    best = std::max(best, label == "equicontinuity" ? std::sqrt(total) : total);
  }
  return best;
}

std::vector<Verdict> SweepVerdicts(const SimConfig& cfg, const Reference& ref,
                                   const std::vector<RunBlock>& blocks) {
  std::vector<const RunBlock*> ok;
  for (const RunBlock& b : blocks) {
    if (b.status == "ok") ok.push_back(&b);
  }
  std::vector<Verdict> out;
  const auto collect = [&](auto get) {
    std::vector<double> v;
    for (const RunBlock* b : ok) v.push_back(get(*b));
    return v;
  };
  const bool enough = ok.size() >= 2;
  const std::string vacuous = "needs at least two successful meshes";

  const auto decreasing = [&](const std::string& name, auto get) {
    out.push_back(enough ? Decreasing(name, collect(get))
                         : Skipped(name, "strict_decrease", 1.0, vacuous));
  };
  decreasing("convergence_monotone_psi", [](const RunBlock& b) { return b.errors.psi; });
  decreasing("convergence_monotone_phi", [](const RunBlock& b) { return b.errors.phi; });

  const double final_tol = cfg.tolerance("convergence_final_ratio");
  for (const char* channel : {"psi", "phi"}) {
    const std::string name = std::string("convergence_final_ratio_") + channel;
    if (!enough) {
      out.push_back(Skipped(name, "convergence_final_ratio", final_tol, vacuous));
      continue;
    }
    const bool psi = std::string(channel) == "psi";
    const double first = psi ? ok.front()->errors.psi : ok.front()->errors.phi;
    const double last = psi ? ok.back()->errors.psi : ok.back()->errors.phi;
    out.push_back(Bound(name, "convergence_final_ratio", final_tol,
                        first > 0.0 ? last / first : (last > 0.0 ? kInf : 0.0)));
  }

  const double fit_tol = cfg.tolerance("suppression_fit_residual");
  for (double delta : cfg.delta_list) {
    std::ostringstream name;
    name << "suppression_fit_delta_" << delta;
    if (!enough) {
      out.push_back(Skipped(name.str(), "suppression_fit_residual", fit_tol, vacuous));
      continue;
    }
    std::vector<double> x, y;
    for (const RunBlock* b : ok) {
      const NormProfile* p = b->profile("suppression", delta);
      x.push_back(b->h * b->cutoff + std::sqrt(b->h));
      y.push_back(p ? p->sup() : 0.0);
    }
    try {
      const auto [c, residual] = FitScale(x, y);
      Verdict v = Bound(name.str(), "suppression_fit_residual", fit_tol, residual);
      std::ostringstream note;
      note << "fitted C = " << c;
      v.note = note.str();
      out.push_back(v);
    } catch (const PreconditionError& e) {
      out.push_back(Skipped(name.str(), "suppression_fit_residual", fit_tol, e.what()));
    }
  }

  const double spread_tol = cfg.tolerance("strichartz_spread");
  const auto spread = [&](const std::string& name, auto get) {
    if (!enough) {
      out.push_back(Skipped(name, "strichartz_spread", spread_tol, vacuous));
      return;
    }
    std::vector<double> v;
    for (const RunBlock* b : ok) v.push_back(b->norm0 > 0.0 ? get(*b) / b->norm0 : 0.0);
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    Verdict verdict = Bound(name, "strichartz_spread", spread_tol, lo > 0.0 ? hi / lo : kInf);
    verdict.pass = verdict.measured < spread_tol;
    out.push_back(verdict);
  };
  spread("strichartz_spread_l6", [](const RunBlock& b) { return b.strichartz_l6; });
  spread("strichartz_spread_l4inf", [](const RunBlock& b) { return b.strichartz_l4inf; });

  if (!cfg.phi0.IsZero() && !cfg.psi0.IsZero()) {
    decreasing("cross_term_monotone_psi", [](const RunBlock& b) { return b.cross_psi; });
    decreasing("cross_term_monotone_phi", [](const RunBlock& b) { return b.cross_phi; });
  }
  if (cfg.psi0.IsZero() && !cfg.phi0.IsZero()) {
    decreasing("decoupling_psi", [](const RunBlock& b) { return b.psi_channel_max; });
  }
  if (cfg.phi0.IsZero() && !cfg.psi0.IsZero()) {
    decreasing("decoupling_phi", [](const RunBlock& b) { return b.phi_channel_max; });
  }

  // Uniform boundedness in h, measured against the limit solution's profile:
  // the data cutoff N grows as h shrinks, so lattice tails grow toward it.
  const double growth_tol = cfg.tolerance("profile_growth");
  const auto bounded = [&](const std::string& label, double parameter) {
    std::ostringstream name;
    name << label << "_bounded_" << parameter;
    double worst = 0.0;
    int used = 0;
    const double level = ReferenceProfileSup(ref, label, parameter);
    for (const RunBlock* b : ok) {
      const NormProfile* p = b->profile(label, parameter);
      if (!p) continue;
      ++used;
      const double v = p->sup();
      worst = std::max(worst, level > 0.0 ? v / level : (v > 0.0 ? kInf : 0.0));
    }
    if (used == 0) {
      out.push_back(Skipped(name.str(), "profile_growth", growth_tol, "no mesh measured it"));
      return;
    }
    Verdict v = Bound(name.str(), "profile_growth", growth_tol, worst);
    std::ostringstream note;
    note << "max over h of sup_t profile / limit-solution level " << level;
    v.note = note.str();
    out.push_back(v);
  };
  for (double kappa : cfg.kappa_list) bounded("equicontinuity", kappa);
  // Tightness at coarse h is dominated by the tails of the sharp data cutoff,
  // which shrink with h, so the check is that the profile never grows.
  for (double r : cfg.R_list) {
    std::ostringstream name;
    name << "tightness_no_growth_" << r;
    std::vector<double> v;
    for (const RunBlock* b : ok) {
      if (const NormProfile* p = b->profile("tightness", r)) v.push_back(p->sup());
    }
    if (v.size() < 2) {
      out.push_back(Skipped(name.str(), "profile_growth", growth_tol, vacuous));
      continue;
    }
    out.push_back(Bound(name.str(), "profile_growth", growth_tol, WorstStepRatio(v)));
  }
  return out;
}

RunRecord RunSweep(const SimConfig& cfg, int jobs, std::optional<double> only_h) {
  RunRecord record;
  record.config = cfg;
  std::vector<double> hs;
  for (double h : cfg.h_list) {
    if (!only_h || std::abs(h - *only_h) <= 1e-12 * h) hs.push_back(h);
  }
  if (hs.empty()) throw PreconditionError("no mesh in h_list matches the requested filter");
  std::sort(hs.begin(), hs.end(), std::greater<>());
  record.reference = ComputeReference(cfg);

  record.blocks.resize(hs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < hs.size(); i = next++) {
      try {
        record.blocks[i] = RunSingle(cfg, hs[i], record.reference);
      } catch (const std::exception& e) {
        RunBlock failed;
        failed.h = hs[i];
        failed.status = "error";
        failed.error = e.what();
        record.blocks[i] = std::move(failed);
      }
    }
  };
  const int workers = std::clamp(jobs, 1, static_cast<int>(hs.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const RunBlock& b : record.blocks) {
    if (b.status != "ok") record.partial = true;
  }
  record.verdicts = SweepVerdicts(cfg, record.reference, record.blocks);
  return record;
}

}  // namespace alcl
