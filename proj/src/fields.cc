#include "alcl/fields.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "alcl/errors.h"

namespace alcl {

std::string_view ToString(Sign sign) {
  return sign == Sign::kDefocusing ? "defocusing" : "focusing";
}

Sign ParseSign(std::string_view text) {
  if (text == "defocusing") return Sign::kDefocusing;
  if (text == "focusing") return Sign::kFocusing;
  throw PreconditionError("unknown sign '" + std::string(text) +
                          "', expected focusing|defocusing");
}

LatticeField::LatticeField(double h, CVec values, double t_lat)
    : h_(h), t_lat_(t_lat), values_(std::move(values)) {
  if (!(h_ > 0.0)) throw PreconditionError("lattice mesh h must be positive");
  if (values_.empty() || values_.size() % 2 != 0) {
    throw PreconditionError("lattice site count must be even and positive");
  }
}

LatticeField LatticeField::Zeros(double h, int sites, double t_lat) {
  return LatticeField(h, CVec(sites), t_lat);
}

double LatticeField::NormSquared() const {
  double s = 0.0;
  for (const cplx& v : values_) s += std::norm(v);
  return s;
}

double LatticeField::NormSup() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double LatticeField::NormLp(double p) const {
  if (std::isinf(p)) return NormSup();
  double s = 0.0;
  for (const cplx& v : values_) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

double ArcAngle(int k, int sites) {
  double theta = 2.0 * std::numbers::pi * k / sites;
  if (theta >= 1.5 * std::numbers::pi) theta -= 2.0 * std::numbers::pi;
  return theta;
}

double SpectralCoefficients::theta(int k) const { return ArcAngle(k, sites()); }

double SpectralCoefficients::NormSquared() const {
  double s = 0.0;
  for (const cplx& v : values) s += std::norm(v);
  return s / sites();
}

ContinuumField::ContinuumField(double half_width, CVec values,
                               std::optional<double> bandlimit)
    : half_width_(half_width), values_(std::move(values)), bandlimit_(bandlimit) {
  if (!(half_width_ > 0.0)) throw PreconditionError("window half-width must be positive");
  if (values_.empty() || values_.size() % 2 != 0) {
    throw PreconditionError("continuum grid point count must be even and positive");
  }
}

ContinuumField ContinuumField::Zeros(double half_width, int points) {
  return ContinuumField(half_width, CVec(points));
}

double ContinuumField::NormSquared() const {
  double s = 0.0;
  for (const cplx& v : values_) s += std::norm(v);
  return s * dx();
}

double ContinuumField::NormLp(double p) const {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : values_) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const cplx& v : values_) s += std::pow(std::abs(v), p);
  return std::pow(s * dx(), 1.0 / p);
}

CVec ContinuumSpectrum(const ContinuumField& f) {
  // e^{-i xi_k x_j} = (-1)^k e^{-2 pi i jk/n} since x_j = -L + j dx.
  CVec out = Dft(f.values());
  const double dx = f.dx();
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] *= (k % 2 == 0) ? dx : -dx;
  }
  return out;
}

ContinuumField FromContinuumSpectrum(double half_width, std::span<const cplx> spectrum,
                                     std::optional<double> bandlimit) {
  CVec shifted(spectrum.begin(), spectrum.end());
  const double scale = 1.0 / (2.0 * half_width);
  for (std::size_t k = 0; k < shifted.size(); ++k) {
    shifted[k] *= (k % 2 == 0) ? scale : -scale;
  }
  return ContinuumField(half_width, InverseDft(shifted), bandlimit);
}

}  // namespace alcl
