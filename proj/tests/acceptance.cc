// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "alcl/config.h"
#include "alcl/nls_reference.h"
#include "alcl/pipeline.h"
#include "oracles.h"
#include "spectral_examples.h"

namespace {

using namespace alcl;
using Clock = std::chrono::steady_clock;

struct Line {
  bool pass = true;
  std::ostringstream detail;

  void Check(bool ok, const std::string& what) {
    pass = pass && ok;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [x]");
  }
};

std::string Fmt(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool Report(int id, const std::string& title, const Line& line) {
  std::printf("[%s] criterion %d: %s | %s\n", line.pass ? "PASS" : "FAIL", id, title.c_str(),
              line.detail.str().c_str());
  std::fflush(stdout);
  return line.pass;
}

void Runtime(Line& line, double seconds, double limit) {
  line.Check(seconds < limit, Fmt("runtime %.1fs < %.0fs", seconds, limit));
}

const DriftReport* FindDrift(const RunBlock& b, const std::string& name) {
  for (const DriftReport& d : b.drifts) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

void StrictlyDecreasing(Line& line, const std::string& what, const std::vector<double>& v) {
  bool ok = v.size() >= 2;
  std::ostringstream s;
  s << what << " [";
  for (std::size_t j = 0; j < v.size(); ++j) {
    s << (j ? ", " : "") << Fmt("%.4g", v[j]);
    if (j > 0) ok = ok && std::isfinite(v[j]) && v[j] < v[j - 1];
  }
  s << "] strictly decreasing";
  line.Check(ok, s.str());
}

std::vector<double> Column(const RunRecord& rec, const std::function<double(const RunBlock&)>& get) {
  std::vector<double> v;
  for (const RunBlock& b : rec.blocks) v.push_back(b.status == "ok" ? get(b) : std::nan(""));
  return v;
}

const RunBlock* BlockAt(const RunRecord& rec, double h) {
  for (const RunBlock& b : rec.blocks) {
    if (std::abs(b.h - h) <= 1e-12 && b.status == "ok") return &b;
  }
  return nullptr;
}

void CheckBlocks(Line& line, const RunRecord& rec) {
  for (const RunBlock& b : rec.blocks) {
    if (b.status != "ok") line.Check(false, Fmt("h=%g failed", b.h) + ": " + b.error);
  }
}

double ReferenceDuhamel(const SimConfig& cfg) {
  const int points = kContinuumOversampling * SiteCount(cfg.h_list.back(), cfg.L);
  NlsOptions opt;
  opt.intervals = 64;
  double worst = 0.0;
  for (const ChannelSpec* spec : {&cfg.psi0, &cfg.phi0}) {
    if (spec->IsZero()) continue;
    const ContinuumField u0 = FromContinuumSpectrum(cfg.L, spec->WindowSpectrum(cfg.L, points));
    const Orientation o = spec == &cfg.psi0 ? Orientation::kForward : Orientation::kReversed;
    for (double T : {cfg.T, -cfg.T}) {
      const NlsSolution sol = NlsSolve(u0, T, cfg.sign, o, opt);
      worst = std::max(worst, DuhamelResidual(sol.snapshots, cfg.sign, o));
    }
  }
  return worst;
}

}  // namespace

int main() {
  const SimConfig cfg = LoadConfig(ALCL_SOURCE_DIR "/configs/default.json");
  const int jobs = std::max(1u, std::thread::hardware_concurrency());
  bool all = true;

  {
    const auto start = Clock::now();
    const double err = tools::PlaneWaveError();
    Line line;
    line.Check(err <= 1e-8, Fmt("max site error %.3g <= 1e-08", err));
    Runtime(line, Seconds(start), 1.0);
    all &= Report(1, "AL plane-wave oracle at t = 50", line);
  }

  std::fprintf(stderr, "running the default sweep on %d workers\n", jobs);
  const auto sweep_start = Clock::now();
  const RunRecord rec = RunSweep(cfg, jobs);
  const double sweep_seconds = Seconds(sweep_start);

  {
    Line line;
    const RunBlock* b = BlockAt(rec, 0.1);
    if (!b) {
      line.Check(false, "h=0.1 block missing or failed");
    } else {
      const struct {
        const char* name;
        bool relative;
        double tol;
      } checks[] = {{"mass", true, 1e-8}, {"hamiltonian", true, 1e-7}, {"h2", true, 1e-7},
                    {"g", false, 1e-6}};
      for (const auto& c : checks) {
        const DriftReport* d = FindDrift(*b, c.name);
        if (!d) {
          line.Check(false, std::string(c.name) + " drift not measured");
          continue;
        }
        const double v = c.relative ? d->max_rel_drift : d->max_abs_drift;
        line.Check(v <= c.tol, std::string(c.name) + (c.relative ? " rel" : " abs") +
                                   Fmt(" drift %.3g <= %.0e", v, c.tol));
      }
      Runtime(line, b->wall_seconds, 120.0);
    }
    all &= Report(2, "conservation at h = 0.1 over the full horizon", line);
  }

  {
    Line line;
    std::vector<double> x, y;
    for (double h : {0.2, 0.1, 0.05}) {
      const RunBlock* b = BlockAt(rec, h);
      const NormProfile* p = b ? b->profile("suppression", 0.75) : nullptr;
      if (!p) {
        line.Check(false, Fmt("h=%g suppression profile missing", h));
        continue;
      }
      x.push_back(h * b->cutoff + std::sqrt(h));
      y.push_back(p->sup());
      line.Check(true, Fmt("h=%g ratio %.3g", h, p->sup()));
    }
    if (x.size() == 3 && *std::min_element(y.begin(), y.end()) > 0.0) {
      const auto [c, residual] = FitScale(x, y);
      line.Check(residual <= 0.5, Fmt("C = %.3g, max pointwise residual %.3g <= 0.5", c, residual));
    } else {
      line.Check(false, "no positive suppression data to fit");
    }
    Runtime(line, sweep_seconds, 600.0);
    all &= Report(3, "suppression fit C (hN + h^1/2)", line);
  }

  {
    Line line;
    CheckBlocks(line, rec);
    const auto psi = Column(rec, [](const RunBlock& b) { return b.errors.psi; });
    const auto phi = Column(rec, [](const RunBlock& b) { return b.errors.phi; });
    StrictlyDecreasing(line, "err_psi", psi);
    StrictlyDecreasing(line, "err_phi", phi);
    line.Check(psi.back() <= 0.25 * psi.front(), Fmt("psi final/first %.3g <= 0.25", psi.back() / psi.front()));
    line.Check(phi.back() <= 0.25 * phi.front(), Fmt("phi final/first %.3g <= 0.25", phi.back() / phi.front()));
    Runtime(line, sweep_seconds, 1800.0);
    all &= Report(4, "convergence to the limit system", line);
  }

  {
    const auto start = Clock::now();
    SimConfig dec = cfg;
    dec.psi0 = ChannelSpec::Gaussian(0.0);
    const RunRecord drec = RunSweep(dec, jobs);
    Line line;
    CheckBlocks(line, drec);
    StrictlyDecreasing(line, "max_t |psi^h|", Column(drec, [](const RunBlock& b) { return b.psi_channel_max; }));
    Runtime(line, Seconds(start), 900.0);
    all &= Report(5, "decoupling with psi_0 = 0", line);
  }

  {
    const auto start = Clock::now();
    const double frozen = tools::FrozenCrossTermError();
    Line line;
    CheckBlocks(line, rec);
    StrictlyDecreasing(line, "cross_psi", Column(rec, [](const RunBlock& b) { return b.cross_psi; }));
    StrictlyDecreasing(line, "cross_phi", Column(rec, [](const RunBlock& b) { return b.cross_phi; }));
    line.Check(frozen <= 1e-6, Fmt("frozen closed form rel error %.3g <= 1e-06", frozen));
    Runtime(line, sweep_seconds + Seconds(start), 300.0);
    all &= Report(6, "nonresonant cross terms", line);
  }

  {
    Line line;
    CheckBlocks(line, rec);
    for (const char* which : {"l6", "l4inf"}) {
      std::vector<double> v;
      for (const RunBlock& b : rec.blocks) {
        if (b.status != "ok" || b.norm0 == 0.0) continue;
        v.push_back((which[1] == '6' ? b.strichartz_l6 : b.strichartz_l4inf) / b.norm0);
      }
      const double lo = *std::min_element(v.begin(), v.end());
      const double hi = *std::max_element(v.begin(), v.end());
      line.Check(lo > 0.0 && hi / lo < 2.0, std::string(which) + Fmt(" spread %.4g < 2", hi / lo));
    }
    all &= Report(7, "uniform Strichartz norms across h", line);
  }

  {
    const auto start = Clock::now();
    const double soliton = tools::SolitonError();
    const double duhamel = ReferenceDuhamel(cfg);
    Line line;
    line.Check(soliton <= 1e-6, Fmt("soliton max-t L2 error %.3g <= 1e-06", soliton));
    line.Check(duhamel <= 1e-5, Fmt("reference Duhamel residual (65 snapshots) %.3g <= 1e-05", duhamel));
    Runtime(line, Seconds(start), 30.0);
    all &= Report(8, "limit-system reference solver", line);
  }

  {
    const auto start = Clock::now();
    Line line;
    int passed = 0;
    const std::vector<testing::ExampleResult> ex = testing::SpectralExamples();
    for (const auto& r : ex) {
      if (r.pass()) {
        ++passed;
      } else {
        line.Check(false, r.name + Fmt(" %.3g > %.3g", r.measured, r.tolerance));
      }
    }
    line.Check(passed == static_cast<int>(ex.size()), Fmt("%g of %g examples", passed, ex.size()));
    Runtime(line, Seconds(start), 10.0);
    all &= Report(9, "spectral infrastructure examples", line);
  }

  return all ? 0 : 1;
}
