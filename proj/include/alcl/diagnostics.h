#ifndef ALCL_DIAGNOSTICS_H_
#define ALCL_DIAGNOSTICS_H_

#include <limits>
#include <string>
#include <vector>

#include "alcl/al_dynamics.h"
#include "alcl/fields.h"
#include "alcl/nls_reference.h"

namespace alcl {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct NormProfile {
  std::string label;
  double parameter = 0.0;
  std::vector<double> times;  // macroscopic
  std::vector<double> values;

  double sup() const;
};

// (int |alpha(t)|_{l^r}^q dt)^{1/q} over lattice time by composite Simpson.
// Uses the per-step norm series when the trajectory recorded one, the
// snapshots otherwise. (q, r) must be (6, 6) or (4, inf). Throws
// ResolutionError when halving the sample density moves the value by >= 1%.
double StrichartzNorm(const Trajectory& traj, double q, double r);

// Per snapshot (|P_{|xi|>=kappa} psi^h|^2 + |P_{|xi|>=kappa} phi^h|^2)^{1/2},
// read off the lattice spectrum. Requires kappa h < pi/2.
NormProfile EquicontinuityProfile(const Trajectory& traj, double kappa);

// Per snapshot h^{-1} sum_n phi_R(n)^2 |alpha_n|^2, phi_R(n) = 1 - chi(nh/R).
// Requires 1 <= R < L.
NormProfile TightnessProfile(const Trajectory& traj, double R);

// |F(tilde alpha) - tilde F|_{l^2} / h^{5/2} with
//   tilde alpha_n = h [psi(nh) + (-1)^n e^{-4i t/h^2} phi(nh)],
//   F_n = alpha_n beta_n (alpha_{n-1} + alpha_{n+1}),
//   tilde F_n = +-2h |tilde alpha_n|^2 [psi(nh) - (-1)^n e^{-4i t/h^2} phi(nh)].
// Inputs must be band-limited below h^{-1/2}.
double SignFlipCheck(const ContinuumField& psi, const ContinuumField& phi, double h,
                     double t, Sign sign);

enum class CrossChannel {
  kPsi,  // int_0^t e^{i(t-s)Delta} [e^{-8i s/h^2} phi^2 conj(psi)] ds
  kPhi,  // int_0^t e^{-i(t-s)Delta} [e^{+8i s/h^2} psi^2 conj(phi)] ds
};

// max_t of the L^2 norm of the nonresonant interaction integral. The envelope
// is linear on each snapshot interval and the phase is integrated exactly.
// Snapshots must be equally spaced in macroscopic time and include t = 0.
double CrossTermMagnitude(const std::vector<ContinuumField>& psi,
                          const std::vector<ContinuumField>& phi,
                          const std::vector<double>& times, double h, CrossChannel channel);

struct ConvergenceErrors {
  double psi = 0.0;
  double phi = 0.0;
};

// max_t |psi^h - psi| and max_t |phi^h - phi| after resampling the split
// channels onto the reference grid. Every lattice snapshot must have a
// reference state at the same macroscopic time.
ConvergenceErrors ConvergenceError(const Trajectory& traj,
                                   const std::vector<NlsState>& psi_ref,
                                   const std::vector<NlsState>& phi_ref);

}  // namespace alcl

#endif  // ALCL_DIAGNOSTICS_H_
