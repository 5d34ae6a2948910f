#include "alcl/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "alcl/errors.h"
#include "alcl/grid_spectral.h"
#include "alcl/quadrature.h"

namespace alcl {
namespace {

constexpr double kPi = std::numbers::pi;

double SimpsonIntegral(const std::vector<double>& f, double step) {
  const std::vector<double> w = SimpsonWeights(static_cast<int>(f.size()), step);
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) total += w[i] * f[i];
  return total;
}

double L2FromSpectrum(const CVec& spec, double dx, double half_width) {
  double sum = 0.0;
  for (const cplx& v : spec) sum += std::norm(v);
  return std::sqrt(sum * dx * dx / (2.0 * half_width));
}

bool SameTime(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// int_0^1 e^{i theta u} du and int_0^1 u e^{i theta u} du.
void FilonMoments(double theta, cplx& p0, cplx& p1) {
  if (std::abs(theta) < 0.1) {
    p0 = 0.0;
    p1 = 0.0;
    cplx term = 1.0;  // (i theta)^m / m!
    for (int m = 0; m < 14; ++m) {
      p0 += term / static_cast<double>(m + 1);
      p1 += term / static_cast<double>(m + 2);
      term *= cplx(0.0, theta) / static_cast<double>(m + 1);
    }
    return;
  }
  const cplx e = std::polar(1.0, theta);
  const cplx it(0.0, theta);
  p0 = (e - 1.0) / it;
  p1 = e / it + (e - 1.0) / (theta * theta);
}

}  // namespace

double NormProfile::sup() const {
  double best = 0.0;
  for (double v : values) best = std::max(best, v);
  return best;
}

double StrichartzNorm(const Trajectory& traj, double q, double r) {
  const bool l6 = q == 6.0 && r == 6.0;
  const bool l4inf = q == 4.0 && std::isinf(r);
  if (!l6 && !l4inf) throw PreconditionError("Strichartz pair must be (6,6) or (4,inf)");

  std::vector<double> times, integrand;
  if (!traj.norms.t_lat.empty()) {
    times = traj.norms.t_lat;
    for (std::size_t i = 0; i < times.size(); ++i) {
      integrand.push_back(l6 ? traj.norms.sum_pow6[i] : std::pow(traj.norms.sup[i], 4.0));
    }
  } else {
    for (const LatticeField& f : traj.snapshots) {
      times.push_back(f.t_lat());
      integrand.push_back(std::pow(f.NormLp(r), q));
    }
  }
  const int n = static_cast<int>(times.size());
  if (n == 1) return 0.0;
  if ((n - 1) % 4 != 0) {
    throw PreconditionError("Strichartz quadrature needs a multiple of 4 time intervals");
  }
  const double step = (times.back() - times.front()) / (n - 1);
  for (int i = 1; i < n; ++i) {
    if (!SameTime(times[i] - times[i - 1], step)) {
      throw PreconditionError("Strichartz quadrature needs equally spaced times");
    }
  }
  const double full = SimpsonIntegral(integrand, step);
  std::vector<double> coarse;
  for (int i = 0; i < n; i += 2) coarse.push_back(integrand[i]);
  const double half = SimpsonIntegral(coarse, 2.0 * step);
  const double value = std::pow(std::max(full, 0.0), 1.0 / q);
  const double value_half = std::pow(std::max(half, 0.0), 1.0 / q);
  if (value > 0.0 && std::abs(value - value_half) >= 0.01 * value) {
    std::ostringstream msg;
    msg << "time grid under-resolved for the L^" << q << " norm: full " << value
        << " vs half density " << value_half;
    throw ResolutionError(msg.str());
  }
  return value;
}

NormProfile EquicontinuityProfile(const Trajectory& traj, double kappa) {
  NormProfile p{"equicontinuity", kappa, {}, {}};
  for (const LatticeField& f : traj.snapshots) {
    const double h = f.h();
    if (!(kappa * h < kPi / 2.0) || kappa < 0.0) {
      throw PreconditionError("equicontinuity needs 0 <= kappa h < pi/2");
    }
    const SpectralCoefficients c = ForwardTransform(f);
    double tail = 0.0;
    for (int k = 0; k < c.sites(); ++k) {
      const double theta = c.theta(k);
      const double offset = theta < kPi / 2.0 ? theta : theta - kPi;
      if (std::abs(offset) >= kappa * h) tail += std::norm(c.values[k]);
    }
    p.times.push_back(h * h * f.t_lat());
    p.values.push_back(std::sqrt(tail / (c.sites() * h)));
  }
  return p;
}

NormProfile TightnessProfile(const Trajectory& traj, double R) {
  NormProfile p{"tightness", R, {}, {}};
  for (const LatticeField& f : traj.snapshots) {
    if (!(R >= 1.0) || !(R < f.half_width())) {
      throw PreconditionError("tightness radius must satisfy 1 <= R < L");
    }
    const double h = f.h();
    double total = 0.0;
    for (int j = 0; j < f.sites(); ++j) {
      const double cut = 1.0 - SmoothCutoff(f.position(j) / R);
      total += cut * cut * std::norm(f[j]);
    }
    p.times.push_back(h * h * f.t_lat());
    p.values.push_back(total / h);
  }
  return p;
}

double SignFlipCheck(const ContinuumField& psi, const ContinuumField& phi, double h,
                     double t, Sign sign) {
  const double band = 1.0 / std::sqrt(h);
  if (SpectralLeakage(psi, band) > 1e-10 || SpectralLeakage(phi, band) > 1e-10) {
    throw PreconditionError("bandlimit violation: sign-flip inputs must live below h^{-1/2}");
  }
  if (psi.half_width() != phi.half_width()) {
    throw PreconditionError("sign-flip inputs must share a window");
  }
  const int m = SiteCount(h, psi.half_width());
  const ContinuumField ps = Resample(psi, m);
  const ContinuumField ph = Resample(phi, m);
  const double s = SignFactor(sign);
  const cplx phase = std::polar(1.0, -4.0 * t / (h * h));

  CVec alpha(m), slow_minus_fast(m);
  for (int j = 0; j < m; ++j) {
    const int n = j - m / 2;
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    alpha[j] = h * (ps[j] + parity * phase * ph[j]);
    slow_minus_fast[j] = ps[j] - parity * phase * ph[j];
  }
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx left = alpha[(j + m - 1) % m];
    const cplx right = alpha[(j + 1) % m];
    const double ab = s * std::norm(alpha[j]);
    const cplx exact = ab * (left + right);
    const cplx effective = 2.0 * h * ab * slow_minus_fast[j];
    sum += std::norm(exact - effective);
  }
  return std::sqrt(sum) / std::pow(h, 2.5);
}

double CrossTermMagnitude(const std::vector<ContinuumField>& psi,
                          const std::vector<ContinuumField>& phi,
                          const std::vector<double>& times, double h, CrossChannel channel) {
  const int count = static_cast<int>(times.size());
  if (count == 0 || psi.size() != times.size() || phi.size() != times.size()) {
    throw PreconditionError("cross term needs aligned, non-empty snapshot lists");
  }
  int origin = -1;
  for (int j = 0; j < count; ++j) {
    if (SameTime(times[j], 0.0)) origin = j;
  }
  if (origin < 0) throw PreconditionError("cross term snapshots must include t = 0");
  if (count > 1) {
    const double step = times[1] - times[0];
    for (int j = 1; j < count; ++j) {
      if (!SameTime(times[j] - times[j - 1], step) || step <= 0.0) {
        throw PreconditionError("cross term needs increasing, equally spaced snapshots");
      }
    }
  }

  const int n = psi.front().points();
  const double L = psi.front().half_width();
  const double dx = psi.front().dx();
  const bool psi_channel = channel == CrossChannel::kPsi;
  const double fast = 8.0 / (h * h);

  // Envelopes E = phi^2 conj(psi) or psi^2 conj(phi), in Fourier space.
  std::vector<CVec> env(count);
  double env_max = 0.0;
  for (int j = 0; j < count; ++j) {
    if (psi[j].points() != n || phi[j].points() != n) {
      throw PreconditionError("cross term snapshots must share a grid");
    }
    CVec e(n);
    for (int i = 0; i < n; ++i) {
      const cplx a = psi[j][i], b = phi[j][i];
      e[i] = psi_channel ? b * b * std::conj(a) : a * a * std::conj(b);
    }
    env[j] = Dft(e);
    env_max = std::max(env_max, L2FromSpectrum(env[j], dx, L));
  }
  if (env_max == 0.0) return 0.0;
  // The envelope must be resolved by the snapshots for the linear model to hold.
  for (int j = 1; j < count; ++j) {
    CVec diff(n);
    for (int k = 0; k < n; ++k) diff[k] = env[j][k] - env[j - 1][k];
    if (L2FromSpectrum(diff, dx, L) > 0.5 * env_max) {
      throw ResolutionError("cross-term envelope changes too much between snapshots");
    }
  }

  std::vector<double> xi2(n), omega(n);
  for (int k = 0; k < n; ++k) {
    const double xi = SignedIndex(k, n) * kPi / L;
    xi2[k] = xi * xi;
    omega[k] = psi_channel ? xi2[k] - fast : fast - xi2[k];
  }
  const double outer_dir = psi_channel ? -1.0 : 1.0;

  double worst = 0.0;
  for (int dir : {1, -1}) {
    CVec acc(n, 0.0);
    for (int j = origin + dir; j >= 0 && j < count; j += dir) {
      const int a = j - dir;
      const double ta = times[a];
      const double delta = times[j] - ta;
      CVec total(n);
      for (int k = 0; k < n; ++k) {
        cplx p0, p1;
        FilonMoments(omega[k] * delta, p0, p1);
        acc[k] += delta * std::polar(1.0, omega[k] * ta) *
                  (env[a][k] * (p0 - p1) + env[j][k] * p1);
        total[k] = std::polar(1.0, outer_dir * times[j] * xi2[k]) * acc[k];
      }
      worst = std::max(worst, L2FromSpectrum(total, dx, L));
    }
  }
  return worst;
}

ConvergenceErrors ConvergenceError(const Trajectory& traj,
                                   const std::vector<NlsState>& psi_ref,
                                   const std::vector<NlsState>& phi_ref) {
  ConvergenceErrors out;
  const auto find = [](const std::vector<NlsState>& refs, double t) -> const NlsState& {
    for (const NlsState& st : refs) {
      if (SameTime(st.t, t)) return st;
    }
    std::ostringstream msg;
    msg << "time-grid mismatch: no reference state at t = " << t;
    throw PreconditionError(msg.str());
  };
  const auto distance = [](const ContinuumField& a, const ContinuumField& b) {
    double sum = 0.0;
    for (int i = 0; i < a.points(); ++i) sum += std::norm(a[i] - b[i]);
    return std::sqrt(sum * a.dx());
  };
  for (const LatticeField& f : traj.snapshots) {
    const double h = f.h();
    const double t = h * h * f.t_lat();
    const NlsState& pr = find(psi_ref, t);
    const NlsState& fr = find(phi_ref, t);
    if (std::abs(pr.field.half_width() - f.half_width()) > 1e-12 * f.half_width()) {
      throw PreconditionError("reference window differs from the lattice window");
    }
    const ChannelPair ch = SplitChannels(f, t);
    out.psi = std::max(out.psi, distance(Resample(ch.psi, pr.field.points()), pr.field));
    out.phi = std::max(out.phi, distance(Resample(ch.phi, fr.field.points()), fr.field));
  }
  return out;
}

}  // namespace alcl
