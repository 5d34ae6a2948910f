#include "alcl/grid_spectral.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "alcl/errors.h"

namespace alcl {
namespace {

constexpr double kPi = std::numbers::pi;

// Signed index range [lo, hi) of the semicircle theta in [-pi/2, pi/2).
std::pair<int, int> SemicircleRange(int sites) {
  return {static_cast<int>(std::ceil(-sites / 4.0)),
          static_cast<int>(std::ceil(sites / 4.0))};
}

}  // namespace

SpectralCoefficients ForwardTransform(const LatticeField& f) {
  // Storage index j carries site n = j - M/2, so e^{-i n theta_k} picks up (-1)^k.
  CVec values = Dft(f.values());
  for (std::size_t k = 1; k < values.size(); k += 2) values[k] = -values[k];
  return SpectralCoefficients{std::move(values)};
}

LatticeField InverseTransform(const SpectralCoefficients& c, double h, double t_lat) {
  const int m = c.sites();
  CVec shifted = c.values;
  for (int k = 0; k < m; ++k) shifted[k] *= (k % 2 == 0 ? 1.0 : -1.0) / m;
  return LatticeField(h, InverseDft(shifted), t_lat);
}

double SmallMeshThreshold(const ChannelSpec& psi0, const ChannelSpec& phi0) {
  const double mass = psi0.NormSquared() + phi0.NormSquared();
  if (mass == 0.0) return 1.0;
  return std::min(1.0, 1.0 / (100.0 * mass));
}

int SiteCount(double h, double half_width) {
  const double exact = 2.0 * half_width / h;
  const long rounded = std::lround(exact);
  if (std::abs(exact - rounded) > 1e-9 * exact || rounded <= 0 || rounded % 2 != 0) {
    std::ostringstream msg;
    msg << "window 2L = " << 2.0 * half_width << " is not an even multiple of h = " << h;
    throw PreconditionError(msg.str());
  }
  return static_cast<int>(rounded);
}

LatticeField SampleInitialData(const ChannelSpec& psi0, const ChannelSpec& phi0,
                               double h, double gamma, double half_width,
                               const SamplingOptions& options) {
  if (!(gamma > 0.0)) throw PreconditionError("gamma must be positive");
  if (gamma > kMaxGamma && !options.allow_large_gamma) {
    std::ostringstream msg;
    msg << "gamma = " << gamma << " exceeds the power-law bound 13/18 for N = h^{-gamma}";
    throw PreconditionError(msg.str());
  }
  const double cutoff = CutoffFrequency(h, gamma);
  if (2.0 * cutoff * h >= kPi) {
    std::ostringstream msg;
    msg << "aliasing: 2 N h = " << 2.0 * cutoff * h
        << " >= pi, the slow and modulated spectral bumps would overlap";
    throw PreconditionError(msg.str());
  }
  const double h0 = SmallMeshThreshold(psi0, phi0);
  if (h > h0 && !options.allow_large_h) {
    std::ostringstream msg;
    msg << "h = " << h << " exceeds the small-mesh threshold h_0 = " << h0
        << " = min{1, 1/(100 (|psi_0|^2 + |phi_0|^2))}";
    throw PreconditionError(msg.str());
  }

  const int m = SiteCount(h, half_width);
  const int fine = kContinuumOversampling * m;
  const CVec psi_hat = psi0.IsZero() ? CVec(fine) : psi0.WindowSpectrum(half_width, fine);
  const CVec phi_hat = phi0.IsZero() ? CVec(fine) : phi0.WindowSpectrum(half_width, fine);

  // On the window, theta_k / h = pi k / L is exactly the window frequency xi_k.
  const double xi_unit = kPi / half_width;
  CVec alpha_hat(m);
  const auto [lo, hi] = SemicircleRange(m);
  for (int s = lo; s < hi; ++s) {
    if (std::abs(s * xi_unit) > cutoff) continue;
    const int slot = (s + fine) % fine;
    alpha_hat[(s + m) % m] += psi_hat[slot];
    alpha_hat[((s + m / 2) % m + m) % m] += phi_hat[slot];
  }
  return InverseTransform(SpectralCoefficients{std::move(alpha_hat)}, h, 0.0);
}

ChannelPair SplitChannels(const LatticeField& f, double t_macro) {
  const int m = f.sites();
  const int fine = kContinuumOversampling * m;
  const double h = f.h();
  const SpectralCoefficients alpha_hat = ForwardTransform(f);
  const cplx modulation = std::exp(cplx(0.0, 4.0 * t_macro / (h * h)));

  CVec psi_hat(fine), phi_hat(fine);
  const auto [lo, hi] = SemicircleRange(m);
  for (int s = lo; s < hi; ++s) {
    const int slot = (s + fine) % fine;
    psi_hat[slot] = alpha_hat.values[(s + m) % m];
    phi_hat[slot] = modulation * alpha_hat.values[((s + m / 2) % m + m) % m];
  }
  const double band = kPi / (2.0 * h);
  const double half_width = f.half_width();
  return ChannelPair{FromContinuumSpectrum(half_width, psi_hat, band),
                     FromContinuumSpectrum(half_width, phi_hat, band)};
}

ContinuumField Reconstruct(const LatticeField& c) {
  const int m = c.sites();
  const int fine = kContinuumOversampling * m;
  const SpectralCoefficients c_hat = ForwardTransform(c);
  CVec out(fine);
  const auto [lo, hi] = SemicircleRange(m);
  for (int s = lo; s < hi; ++s) out[(s + fine) % fine] = c_hat.values[(s + m) % m];
  return FromContinuumSpectrum(c.half_width(), out, kPi / (2.0 * c.h()));
}

LatticeField ProjectArc(const LatticeField& f, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw PreconditionError("arc parameter delta must lie in (0, 1)");
  }
  SpectralCoefficients c = ForwardTransform(f);
  for (int k = 0; k < c.sites(); ++k) {
    const double s = std::sin(c.theta(k));
    if (!(s * s < delta * delta)) c.values[k] = 0.0;
  }
  return InverseTransform(c, f.h(), f.t_lat());
}

double SmoothCutoff(double x) {
  const double a = std::abs(x);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const auto g = [](double s) { return std::exp(-1.0 / s); };
  const double up = g(2.0 - a);
  return up / (up + g(a - 1.0));
}

LatticeField ProjectSmooth(const LatticeField& f, double kappa) {
  const double width = kappa * f.h();
  if (!(width > 0.0) || width >= kPi / 4.0) {
    throw PreconditionError("smooth projection needs 0 < kappa h < pi/4");
  }
  SpectralCoefficients c = ForwardTransform(f);
  for (int k = 0; k < c.sites(); ++k) {
    const double theta = c.theta(k);
    c.values[k] *= SmoothCutoff(theta / width) + SmoothCutoff((theta - kPi) / width);
  }
  return InverseTransform(c, f.h(), f.t_lat());
}

ContinuumField ProjectBelow(const ContinuumField& f, double radius, bool inclusive) {
  CVec spec = ContinuumSpectrum(f);
  const int n = f.points();
  const double unit = kPi / f.half_width();
  for (int k = 0; k < n; ++k) {
    const double xi = std::abs(SignedIndex(k, n) * unit);
    const bool keep = inclusive ? xi <= radius : xi < radius;
    if (!keep) spec[k] = 0.0;
  }
  std::optional<double> band = radius;
  if (f.bandlimit()) band = std::min(radius, *f.bandlimit());
  return FromContinuumSpectrum(f.half_width(), spec, band);
}

ContinuumField Resample(const ContinuumField& f, int points) {
  const int n = f.points();
  if (points == n) return f;
  const CVec spec = ContinuumSpectrum(f);
  CVec out(points);
  for (int k = 0; k < points; ++k) {
    const int s = SignedIndex(k, points);
    if (s >= -n / 2 && s < n / 2) out[k] = spec[(s + n) % n];
  }
  return FromContinuumSpectrum(f.half_width(), out, f.bandlimit());
}

double SpectralLeakage(const ContinuumField& f, double radius) {
  const CVec spec = ContinuumSpectrum(f);
  const int n = f.points();
  const double unit = kPi / f.half_width();
  double outside = 0.0, overall = 0.0;
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(spec[k]);
    overall = std::max(overall, mag);
    if (std::abs(SignedIndex(k, n) * unit) > radius) outside = std::max(outside, mag);
  }
  return overall > 0.0 ? outside / overall : 0.0;
}

}  // namespace alcl
