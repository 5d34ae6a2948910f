#include "oracles.h"

#include <cmath>
#include <numbers>
#include <random>

#include "alcl/al_dynamics.h"
#include "alcl/conserved.h"
#include "alcl/diagnostics.h"
#include "alcl/grid_spectral.h"
#include "alcl/nls_reference.h"

namespace alcl::tools {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double NaiveDftError() {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  const int m = 96;
  CVec v(m);
  for (cplx& x : v) x = {g(rng), g(rng)};
  const LatticeField f(0.1, v);
  const SpectralCoefficients c = ForwardTransform(f);
  double err = 0.0, scale = 0.0;
  for (int k = 0; k < m; ++k) {
    cplx sum = 0.0;
    for (int j = 0; j < m; ++j) sum += v[j] * std::polar(1.0, -2.0 * kPi * k * f.site(j) / m);
    err = std::max(err, std::abs(sum - c.values[k]));
    scale = std::max(scale, std::abs(sum));
  }
  return err / scale;
}

double PlaneWaveError() {
  const int m = 128;
  const double a = 0.1, theta = 2.0 * kPi * 5 / m, t = 50.0;
  CVec v(m);
  for (int j = 0; j < m; ++j) v[j] = a * std::polar(1.0, (j - m / 2) * theta);
  EvolutionParams p;
  p.t_final_lat = t;
  const Trajectory traj = Evolve(LatticeField(1.0, v), p);
  const double s = std::sin(theta / 2.0);
  const double w = 4.0 * s * s + 2.0 * a * a * std::cos(theta);
  double err = 0.0;
  const LatticeField& last = traj.snapshots.back();
  for (int j = 0; j < m; ++j) {
    err = std::max(err, std::abs(last[j] - a * std::polar(1.0, (j - m / 2) * theta - w * t)));
  }
  return err;
}

double SolitonError() {
  const double L = 20.0;
  const int n = 512;
  CVec v(n);
  const ContinuumField grid = ContinuumField::Zeros(L, n);
  for (int j = 0; j < n; ++j) v[j] = 1.0 / std::cosh(grid.x(j));
  NlsOptions opt;
  opt.intervals = 64;
  const NlsSolution sol = NlsSolve(grid.WithValues(v), 1.0, Sign::kFocusing, Orientation::kForward, opt);
  double worst = 0.0;
  for (const NlsState& st : sol.snapshots) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += std::norm(st.field[j] - v[j] * std::polar(1.0, st.t));
    worst = std::max(worst, std::sqrt(sum * grid.dx()));
  }
  return worst;
}

double FreeGaussianError() {
  const double L = 40.0, t = 0.7;
  const int n = 1024;
  const ContinuumField grid = ContinuumField::Zeros(L, n);
  CVec v(n);
  for (int j = 0; j < n; ++j) v[j] = std::exp(-grid.x(j) * grid.x(j));
  const ContinuumField out = SchrodingerGroup(grid.WithValues(v), t, Orientation::kForward);
  const cplx d(1.0, 4.0 * t);
  double err = 0.0;
  for (int j = 0; j < n; ++j) {
    err = std::max(err, std::abs(out[j] - std::exp(-grid.x(j) * grid.x(j) / d) / std::sqrt(d)));
  }
  return err;
}

double MassScalarError() {
  CVec v(8);
  v[4] = 0.1;
  const LatticeField f(1.0, v);
  return std::abs(Mass(f, Sign::kDefocusing) + std::log(0.99)) +
         std::abs(Mass(f, Sign::kFocusing) + std::log(1.01));
}

double FrozenCrossTermError() {
  const double L = 16.0, h = 0.1;
  const int n = 4 * static_cast<int>(std::lround(2.0 * L / h));
  const ContinuumField grid = ContinuumField::Zeros(L, n);
  CVec ps(n), ph(n);
  for (int j = 0; j < n; ++j) {
    const double x = grid.x(j);
    ps[j] = std::exp(-x * x);
    ph[j] = 0.5 * std::exp(-(x - 1.0) * (x - 1.0));
  }
  const int count = 33;
  std::vector<double> times;
  for (int j = 0; j < count; ++j) times.push_back(-0.25 + 0.5 * j / (count - 1));
  const std::vector<ContinuumField> psi(count, grid.WithValues(ps));
  const std::vector<ContinuumField> phi(count, grid.WithValues(ph));
  const double measured = CrossTermMagnitude(psi, phi, times, h, CrossChannel::kPsi);

  CVec e(n);
  for (int j = 0; j < n; ++j) e[j] = ph[j] * ph[j] * std::conj(ps[j]);
  const CVec ehat = Dft(e);
  double closed = 0.0;
  for (double t : times) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double xi = SignedIndex(k, n) * kPi / L;
      const double omega = xi * xi - 8.0 / (h * h);
      sum += std::norm(ehat[k] * (std::polar(1.0, omega * t) - 1.0) / omega);
    }
    closed = std::max(closed, std::sqrt(sum * grid.dx() * grid.dx() / (2.0 * L)));
  }
  return std::abs(measured - closed) / closed;
}

std::vector<OracleResult> RunOracles() {
  return {
      {"lattice transform vs direct summation (relative)", NaiveDftError(), 1e-12},
      {"AL plane wave at t = 50 (max site error)", PlaneWaveError(), 1e-8},
      {"focusing soliton to T = 1 (max-t L2 error)", SolitonError(), 1e-6},
      {"free Schrodinger Gaussian (max error)", FreeGaussianError(), 1e-10},
      {"single-site mass, both signs", MassScalarError(), 1e-15},
      {"frozen-envelope cross term vs closed form (relative)", FrozenCrossTermError(), 1e-6},
  };
}

}  // namespace alcl::tools
