#include "alcl/nls_reference.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "alcl/errors.h"
#include "alcl/quadrature.h"

namespace alcl {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> WaveNumbersSquared(int n, double half_width) {
  std::vector<double> xi2(n);
  for (int k = 0; k < n; ++k) {
    const double xi = SignedIndex(k, n) * kPi / half_width;
    xi2[k] = xi * xi;
  }
  return xi2;
}

ContinuumField Conjugate(const ContinuumField& f) {
  CVec v(f.values().begin(), f.values().end());
  for (cplx& x : v) x = std::conj(x);
  return f.WithValues(std::move(v));
}

double MaxModulusSquared(const ContinuumField& f) {
  double best = 0.0;
  for (const cplx& v : f.values()) best = std::max(best, std::norm(v));
  return best;
}

// Forward-orientation Strang solve with a fixed step.
NlsSolution StrangSolve(const ContinuumField& init, double T, double s, double coeff,
                        double dt_target, int intervals, double drift_tolerance) {
  const int n = init.points();
  const double interval = T / intervals;
  const long per = std::max<long>(1, static_cast<long>(std::ceil(std::abs(interval) / dt_target - 1e-9)));
  const double dt = interval / per;

  const std::vector<double> xi2 = WaveNumbersSquared(n, init.half_width());
  CVec half(n), full(n);
  for (int k = 0; k < n; ++k) {
    half[k] = std::polar(1.0 / n, -0.5 * dt * xi2[k]);
    full[k] = std::polar(1.0 / n, -dt * xi2[k]);
  }
  const auto linear = [&](CVec& u, const CVec& mult) {
    CVec spec = Dft(u);
    for (int k = 0; k < n; ++k) spec[k] *= mult[k];
    u = InverseDft(spec);
  };
  const auto nonlinear = [&](CVec& u) {
    if (coeff == 0.0) return;
    for (cplx& v : u) v *= std::polar(1.0, -s * coeff * std::norm(v) * dt);
  };

  NlsSolution sol;
  sol.dt = std::abs(dt);
  sol.steps = per * intervals;
  sol.snapshots.push_back({init, 0.0});
  const double mass0 = init.NormSquared();
  CVec u(init.values().begin(), init.values().end());
  for (int j = 1; j <= intervals; ++j) {
    linear(u, half);
    for (long i = 0; i < per; ++i) {
      nonlinear(u);
      linear(u, i + 1 < per ? full : half);
    }
    ContinuumField f = init.WithValues(u);
    const double t = j * interval;
    if (mass0 > 0.0) {
      const double drift = std::abs(f.NormSquared() - mass0) / mass0;
      if (drift > drift_tolerance * std::max(std::abs(t), 1.0)) {
        std::ostringstream msg;
        msg << "L2 drift " << drift << " at t = " << t << " exceeds tolerance";
        throw ResolutionError(msg.str());
      }
    }
    sol.snapshots.push_back({std::move(f), t});
  }
  return sol;
}

double MaxDeviation(const NlsSolution& a, const NlsSolution& b) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.snapshots.size(); ++j) {
    const auto va = a.snapshots[j].field.values();
    const auto vb = b.snapshots[j].field.values();
    double sum = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) sum += std::norm(va[i] - vb[i]);
    best = std::max(best, std::sqrt(sum * a.snapshots[j].field.dx()));
  }
  return best;
}

}  // namespace

std::string_view ToString(Orientation o) {
  return o == Orientation::kForward ? "forward" : "reversed";
}

ContinuumField SchrodingerGroup(const ContinuumField& f, double t, Orientation o) {
  const int n = f.points();
  const double dir = o == Orientation::kForward ? -1.0 : 1.0;
  const std::vector<double> xi2 = WaveNumbersSquared(n, f.half_width());
  CVec spec = Dft(f.values());
  for (int k = 0; k < n; ++k) spec[k] *= std::polar(1.0 / n, dir * t * xi2[k]);
  return f.WithValues(InverseDft(spec));
}

NlsSolution NlsSolve(const ContinuumField& init, double T, Sign sign, Orientation o,
                     const NlsOptions& options) {
  if (options.intervals < 1) throw PreconditionError("need at least one snapshot interval");
  if (o == Orientation::kReversed) {
    NlsOptions fwd = options;
    NlsSolution sol = NlsSolve(Conjugate(init), T, sign, Orientation::kForward, fwd);
    for (NlsState& st : sol.snapshots) st.field = Conjugate(st.field);
    return sol;
  }
  const double s = SignFactor(sign);
  const double peak = MaxModulusSquared(init);
  double dt = options.dt > 0.0 ? options.dt
                               : std::min(1e-3, peak > 0.0 ? 0.1 / peak : 1e-3);
  if (T == 0.0) {
    NlsSolution sol;
    sol.dt = dt;
    for (int j = 0; j <= options.intervals; ++j) sol.snapshots.push_back({init, 0.0});
    return sol;
  }
  const auto solve = [&](double step) {
    return StrangSolve(init, T, s, options.nonlinear_coefficient, step, options.intervals,
                       options.drift_tolerance);
  };
  if (!options.self_check || peak == 0.0 || options.nonlinear_coefficient == 0.0) {
    return solve(dt);
  }
  const double scale = std::sqrt(init.NormSquared());
  for (int attempt = 0; attempt < 4; ++attempt, dt *= 0.5) {
    const NlsSolution coarse = solve(dt);
    const NlsSolution mid = solve(0.5 * dt);
    NlsSolution fine = solve(0.25 * dt);
    const double d1 = MaxDeviation(coarse, mid);
    const double d2 = MaxDeviation(mid, fine);
    // commuting substeps (plane waves) leave only accumulated roundoff
    const double steps = std::abs(T) / (0.25 * dt);
    const bool at_floor = d2 <= steps * std::numeric_limits<double>::epsilon() * scale;
    if (at_floor || d1 >= 3.5 * d2) {
      fine.self_convergence_ratio = at_floor ? 0.0 : d1 / d2;
      return fine;
    }
  }
  throw ResolutionError("split-step self-convergence check did not pass after refinement");
}

double DuhamelResidual(const std::vector<NlsState>& snapshots, Sign sign, Orientation o,
                       double nonlinear_coefficient) {
  const int count = static_cast<int>(snapshots.size());
  if (count < 5) throw PreconditionError("Duhamel residual needs at least 5 snapshots");
  const double step = snapshots[1].t - snapshots[0].t;
  for (int j = 1; j < count; ++j) {
    const double gap = snapshots[j].t - snapshots[j - 1].t;
    if (std::abs(gap - step) > 1e-9 * std::max(1.0, std::abs(step))) {
      throw PreconditionError("Duhamel residual needs equally spaced snapshots");
    }
  }
  const ContinuumField& first = snapshots.front().field;
  const int n = first.points();
  const double L = first.half_width();
  const double s = SignFactor(sign);
  // The reversed residual is the conjugate of the forward residual of conj(u).
  const bool flip = o == Orientation::kReversed;
  const auto values = [&](int j) {
    CVec v(snapshots[j].field.values().begin(), snapshots[j].field.values().end());
    if (flip) for (cplx& x : v) x = std::conj(x);
    return v;
  };
  const std::vector<double> xi2 = WaveNumbersSquared(n, L);
  const double t0 = snapshots.front().t;

  // Interaction-picture integrand e^{i s xi^2} hat(|u|^2 u)(s) per snapshot.
  std::vector<CVec> g(count);
  std::vector<CVec> u_hat(count);
  for (int j = 0; j < count; ++j) {
    CVec u = values(j);
    u_hat[j] = Dft(u);
    CVec cubic(n);
    for (int i = 0; i < n; ++i) cubic[i] = std::norm(u[i]) * u[i];
    g[j] = Dft(cubic);
    const double t = snapshots[j].t - t0;
    for (int k = 0; k < n; ++k) g[j][k] *= std::polar(1.0, t * xi2[k]);
  }

  double worst = 0.0;
  for (int j = 1; j < count; ++j) {
    const std::vector<double> w = CumulativeWeights(j, step);
    if (static_cast<int>(w.size()) > count) continue;
    const double t = snapshots[j].t - t0;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      cplx integral = 0.0;
      for (std::size_t q = 0; q < w.size(); ++q) integral += w[q] * g[q][k];
      const cplx prop = std::polar(1.0, -t * xi2[k]);
      const cplx r = u_hat[j][k] - prop * u_hat[0][k] +
                     cplx(0.0, s * nonlinear_coefficient) * prop * integral;
      sum += std::norm(r);
    }
    // (1/2L) sum |dx hat r|^2 with the unnormalized DFT carrying no dx.
    const double dx = first.dx();
    worst = std::max(worst, std::sqrt(sum * dx * dx / (2.0 * L)));
  }
  return worst;
}

}  // namespace alcl
