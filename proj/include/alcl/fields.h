#ifndef ALCL_FIELDS_H_
#define ALCL_FIELDS_H_

#include <optional>
#include <span>
#include <string_view>

#include "alcl/fourier.h"

namespace alcl {

// Sign convention of the lattice and continuum nonlinearities:
// beta_n = +conj(alpha_n) when defocusing, -conj(alpha_n) when focusing.
enum class Sign { kFocusing, kDefocusing };

inline double SignFactor(Sign sign) {
  return sign == Sign::kDefocusing ? 1.0 : -1.0;
}

std::string_view ToString(Sign sign);
Sign ParseSign(std::string_view text);

// Complex field on a periodic lattice of M sites with mesh h. Storage index
// j = 0..M-1 holds site n = j - M/2, i.e. position x = nh in [-L, L) with
// L = Mh/2. Sites n and n + M are identified.
class LatticeField {
 public:
  LatticeField(double h, CVec values, double t_lat = 0.0);

  static LatticeField Zeros(double h, int sites, double t_lat = 0.0);

  double h() const { return h_; }
  double t_lat() const { return t_lat_; }
  int sites() const { return static_cast<int>(values_.size()); }
  double half_width() const { return 0.5 * h_ * sites(); }
  int site(int j) const { return j - sites() / 2; }
  double position(int j) const { return h_ * site(j); }

  std::span<const cplx> values() const { return values_; }
  const cplx& operator[](int j) const { return values_[j]; }
  // Periodic neighbour access by storage index.
  const cplx& wrapped(int j) const {
    const int m = sites();
    return values_[((j % m) + m) % m];
  }

  LatticeField WithValues(CVec values) const {
    return LatticeField(h_, std::move(values), t_lat_);
  }
  LatticeField WithTime(double t_lat) const {
    return LatticeField(h_, values_, t_lat);
  }

  double NormSquared() const;
  double NormSup() const;
  double NormLp(double p) const;

 private:
  double h_;
  double t_lat_;
  CVec values_;
};

// Discrete Fourier data hat(alpha)(theta_k) = sum_n alpha_n e^{-i n theta_k},
// theta_k = 2 pi k / M, stored in DFT order k = 0..M-1. Plancherel reads
// sum_n |alpha_n|^2 = (1/M) sum_k |hat(alpha)_k|^2.
struct SpectralCoefficients {
  CVec values;

  int sites() const { return static_cast<int>(values.size()); }
  // theta_k folded into the fundamental arc [-pi/2, 3pi/2).
  double theta(int k) const;
  double NormSquared() const;  // equals the l2 norm squared of the field
};

// Angle 2 pi k / M folded into [-pi/2, 3pi/2).
double ArcAngle(int k, int sites);

// Samples of a function on the periodic window [-L, L), x_j = -L + j dx.
class ContinuumField {
 public:
  ContinuumField(double half_width, CVec values,
                 std::optional<double> bandlimit = std::nullopt);

  static ContinuumField Zeros(double half_width, int points);

  double half_width() const { return half_width_; }
  double dx() const { return 2.0 * half_width_ / points(); }
  int points() const { return static_cast<int>(values_.size()); }
  double x(int j) const { return -half_width_ + j * dx(); }
  std::optional<double> bandlimit() const { return bandlimit_; }

  std::span<const cplx> values() const { return values_; }
  const cplx& operator[](int j) const { return values_[j]; }

  ContinuumField WithValues(CVec values) const {
    return ContinuumField(half_width_, std::move(values), bandlimit_);
  }

  double NormSquared() const;  // int |f|^2 dx by the rectangle rule
  double NormLp(double p) const;

 private:
  double half_width_;
  CVec values_;
  std::optional<double> bandlimit_;
};

// Fourier coefficients hat(f)(xi_k) = dx sum_j f_j e^{-i xi_k x_j} with
// xi_k = pi k / L, k signed and stored in DFT order. With this normalization
// int |f|^2 dx = (1/2L) sum_k |hat(f)_k|^2.
CVec ContinuumSpectrum(const ContinuumField& f);
ContinuumField FromContinuumSpectrum(double half_width, std::span<const cplx> spectrum,
                                     std::optional<double> bandlimit = std::nullopt);

// Signed wavenumber index for DFT slot k of a length-n transform.
inline int SignedIndex(int k, int n) { return k < n / 2 ? k : k - n; }

}  // namespace alcl

#endif  // ALCL_FIELDS_H_
