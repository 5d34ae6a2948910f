#ifndef ALCL_TESTS_SUPPORT_H_
#define ALCL_TESTS_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "alcl/fields.h"

namespace alcl::testing {

inline constexpr double kPi = std::numbers::pi;

CVec RandomValues(int n, std::uint64_t seed, double scale = 1.0);
LatticeField RandomLattice(double h, int sites, std::uint64_t seed, double scale = 1.0);

// O(M^2) lattice transform sum_n alpha_n e^{-i n theta_k} with n the signed site.
CVec NaiveLatticeDft(const LatticeField& f);

// A trigonometric polynomial on the periodic window [-L, L):
// f(x) = (1/2L) sum_k c_k e^{i pi k x / L}.
struct TrigPolynomial {
  double half_width;
  std::vector<int> modes;
  CVec coefficients;

  cplx operator()(double x) const;
  double NormSquared() const;  // int_{-L}^{L} |f|^2 dx
  ContinuumField Sample(int points) const;
};

// Random coefficients on every mode with |pi k / L| < radius (or <= when inclusive).
TrigPolynomial RandomTrigPolynomial(double half_width, double radius, std::uint64_t seed,
                                    bool inclusive = false);

double L2Distance(const ContinuumField& a, const ContinuumField& b);
double L2Distance(const LatticeField& a, const LatticeField& b);

// Composite Simpson on [a, b] with `panels` (even) subintervals.
double Simpson(const std::function<double(double)>& f, double a, double b, int panels);

}  // namespace alcl::testing

#endif  // ALCL_TESTS_SUPPORT_H_
