#include "alcl/initial_data.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "alcl/errors.h"

namespace alcl {

std::string_view ToString(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::kGaussian:
      return "gaussian";
    case ProfileKind::kModulatedGaussian:
      return "modulated_gaussian";
    case ProfileKind::kFile:
      return "file";
  }
  return "gaussian";
}

ProfileKind ParseProfileKind(std::string_view text) {
  if (text == "gaussian") return ProfileKind::kGaussian;
  if (text == "modulated_gaussian") return ProfileKind::kModulatedGaussian;
  if (text == "file") return ProfileKind::kFile;
  throw PreconditionError("unknown initial-data kind '" + std::string(text) +
                          "', expected gaussian|modulated_gaussian|file");
}

ChannelSpec ChannelSpec::Gaussian(double amplitude, double width, double center) {
  ChannelSpec spec;
  spec.amplitude = amplitude;
  spec.width = width;
  spec.center = center;
  return spec;
}

ChannelSpec ChannelSpec::FromSamples(ContinuumField samples) {
  ChannelSpec spec;
  spec.kind = ProfileKind::kFile;
  spec.amplitude = 1.0;
  spec.samples = std::move(samples);
  return spec;
}

bool ChannelSpec::IsZero() const {
  if (kind == ProfileKind::kFile) {
    if (!samples) return true;
    for (const cplx& v : samples->values()) {
      if (v != cplx{}) return false;
    }
    return true;
  }
  return amplitude == 0.0;
}

double ChannelSpec::NormSquared() const {
  if (kind == ProfileKind::kFile) {
    return samples ? amplitude * amplitude * samples->NormSquared() : 0.0;
  }
  // int exp(-2 (x/w)^2) dx = w sqrt(pi/2)
  return amplitude * amplitude * width * std::sqrt(std::numbers::pi / 2.0);
}

cplx ChannelSpec::Transform(double xi) const {
  if (kind == ProfileKind::kFile) {
    throw PreconditionError("sampled initial data has no closed-form transform");
  }
  const double k0 = kind == ProfileKind::kModulatedGaussian ? wavenumber : 0.0;
  const double s = xi - k0;
  const double mag = amplitude * width * std::sqrt(std::numbers::pi) *
                     std::exp(-0.25 * width * width * s * s);
  return mag * std::exp(cplx(0.0, -s * center));
}

CVec ChannelSpec::WindowSpectrum(double half_width, int points) const {
  CVec out(points);
  if (kind != ProfileKind::kFile) {
    for (int k = 0; k < points; ++k) {
      out[k] = Transform(std::numbers::pi * SignedIndex(k, points) / half_width);
    }
    return out;
  }
  if (!samples) throw PreconditionError("file initial data has no samples loaded");
  if (std::abs(samples->half_width() - half_width) > 1e-12 * half_width) {
    throw PreconditionError("sampled initial data window does not match the lattice window");
  }
  const CVec own = ContinuumSpectrum(*samples);
  const int n = samples->points();
  for (int k = 0; k < points; ++k) {
    const int s = SignedIndex(k, points);
    if (s >= -n / 2 && s < n / 2) out[k] = amplitude * own[(s + n) % n];
  }
  return out;
}

ContinuumField ChannelSpec::Sample(double half_width, int points) const {
  if (kind == ProfileKind::kFile) {
    return FromContinuumSpectrum(half_width, WindowSpectrum(half_width, points));
  }
  CVec values(points);
  const double dx = 2.0 * half_width / points;
  for (int j = 0; j < points; ++j) {
    const double x = -half_width + j * dx;
    const double u = (x - center) / width;
    cplx v = amplitude * std::exp(-u * u);
    if (kind == ProfileKind::kModulatedGaussian) v *= std::exp(cplx(0.0, wavenumber * x));
    values[j] = v;
  }
  return ContinuumField(half_width, std::move(values));
}

ContinuumField LoadSamples(const std::string& path, double half_width) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open initial-data file " + path);
  std::vector<double> xs;
  CVec values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream row(line);
    double x, re, im = 0.0;
    if (!(row >> x >> re)) continue;  // header or malformed row
    row >> im;
    xs.push_back(x);
    values.emplace_back(re, im);
  }
  if (values.size() < 2 || values.size() % 2 != 0) {
    throw PreconditionError("initial-data file " + path +
                            " must hold an even number (>= 2) of samples");
  }
  const double dx = 2.0 * half_width / values.size();
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (std::abs(xs[j] - (-half_width + j * dx)) > 1e-9 * half_width) {
      throw PreconditionError("initial-data file " + path +
                              " is not on the uniform window grid x_j = -L + j dx");
    }
  }
  return ContinuumField(half_width, std::move(values));
}

}  // namespace alcl
