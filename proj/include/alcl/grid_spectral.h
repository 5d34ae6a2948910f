#ifndef ALCL_GRID_SPECTRAL_H_
#define ALCL_GRID_SPECTRAL_H_

#include <cmath>

#include "alcl/fields.h"
#include "alcl/initial_data.h"

namespace alcl {

// Largest admissible power-law exponent in N = h^{-gamma}.
inline constexpr double kMaxGamma = 13.0 / 18.0;

// Oversampling of continuum output grids relative to the lattice (dx = h/4).
inline constexpr int kContinuumOversampling = 4;

SpectralCoefficients ForwardTransform(const LatticeField& f);
LatticeField InverseTransform(const SpectralCoefficients& c, double h,
                              double t_lat = 0.0);

// Small-h threshold h_0 = min{1, 1 / (100 (|psi_0|^2 + |phi_0|^2))}.
double SmallMeshThreshold(const ChannelSpec& psi0, const ChannelSpec& phi0);

struct SamplingOptions {
  bool allow_large_gamma = false;  // accept gamma > 13/18
  bool allow_large_h = false;      // accept h above the small-h threshold
};

// alpha_n(0) = h [P_{<=N} psi_0](hn) + (-1)^n h [P_{<=N} phi_0](hn), N = h^{-gamma},
// on M = 2L/h periodic sites. The cutoff is applied to the window spectrum of
// each channel, so no aliasing is committed before the projection.
LatticeField SampleInitialData(const ChannelSpec& psi0, const ChannelSpec& phi0,
                               double h, double gamma, double half_width,
                               const SamplingOptions& options = {});

// Sites for a window: M = 2L/h, required to be an even integer.
int SiteCount(double h, double half_width);

// Cutoff frequency N = h^{-gamma}.
inline double CutoffFrequency(double h, double gamma) { return std::pow(h, -gamma); }

struct ChannelPair {
  ContinuumField psi;  // slow channel, spectrum on theta in [-pi/2, pi/2)
  ContinuumField phi;  // modulated channel, spectrum on theta in [pi/2, 3pi/2)
};

// Splits the lattice spectrum into the two semicircles and returns both
// channels on the grid dx = h/4 over the same window. The modulated channel
// carries the phase e^{4 i h^{-2} t_macro}. The arc boundary theta = -pi/2 is
// assigned to the slow channel and pi/2 to the modulated channel, so
// |psi|^2 + |phi|^2 = h^{-1} |f|^2 holds for every lattice field.
ChannelPair SplitChannels(const LatticeField& f, double t_macro);

// Reconstruction [R c](x) = h^{-1} int_{|theta|<pi/2} e^{i x theta/h} hat(c) dtheta/2pi
// on the dx = h/4 grid (the slow channel of SplitChannels).
ContinuumField Reconstruct(const LatticeField& c);

// Sharp cutoff to G_delta = {sin^2(theta) < delta^2}.
LatticeField ProjectArc(const LatticeField& f, double delta);

// C-infinity plateau function: 1 on |x| <= 1, 0 on |x| >= 2.
double SmoothCutoff(double x);

// Symbol chi(theta/(kappa h)) + chi((theta - pi)/(kappa h)) on [-pi/2, 3pi/2).
// Requires kappa h < pi/4.
LatticeField ProjectSmooth(const LatticeField& f, double kappa);

// Sharp continuum projection to |xi| < radius (or <= radius when inclusive).
ContinuumField ProjectBelow(const ContinuumField& f, double radius,
                            bool inclusive = false);

// Spectral resampling onto `points` grid points over the same window:
// zero-padding when refining, truncation of |xi| beyond the new Nyquist
// frequency when coarsening.
ContinuumField Resample(const ContinuumField& f, int points);

// Largest |hat(f)(xi)| over |xi| > radius relative to the largest overall.
double SpectralLeakage(const ContinuumField& f, double radius);

}  // namespace alcl

#endif  // ALCL_GRID_SPECTRAL_H_
