#ifndef ALCL_INITIAL_DATA_H_
#define ALCL_INITIAL_DATA_H_

#include <optional>
#include <string>

#include "alcl/fields.h"

namespace alcl {

enum class ProfileKind { kGaussian, kModulatedGaussian, kFile };

std::string_view ToString(ProfileKind kind);
ProfileKind ParseProfileKind(std::string_view text);

// One continuum channel of the initial data (psi_0 or phi_0).
//   gaussian:            A exp(-((x - c)/w)^2)
//   modulated_gaussian:  A exp(-((x - c)/w)^2) exp(i k0 x)
//   file:                samples on a uniform grid over the window
struct ChannelSpec {
  ProfileKind kind = ProfileKind::kGaussian;
  double amplitude = 0.0;
  double width = 1.0;
  double center = 0.0;
  double wavenumber = 0.0;
  std::string path;
  std::optional<ContinuumField> samples;

  static ChannelSpec Gaussian(double amplitude, double width = 1.0,
                              double center = 0.0);
  static ChannelSpec FromSamples(ContinuumField samples);

  bool IsZero() const;
  double NormSquared() const;

  // Transform hat(f)(xi) = int f(x) e^{-i x xi} dx. For sampled data this is
  // only defined on the window frequencies xi = pi k / L.
  cplx Transform(double xi) const;

  // Coefficients at xi_k = pi k / L for a length-`points` grid, DFT order.
  CVec WindowSpectrum(double half_width, int points) const;

  // Point samples on the window grid (the unprojected profile).
  ContinuumField Sample(double half_width, int points) const;
};

// Reads a CSV of x,re,im rows (header optional) into a window field.
ContinuumField LoadSamples(const std::string& path, double half_width);

}  // namespace alcl

#endif  // ALCL_INITIAL_DATA_H_
