#ifndef ALCL_NLS_REFERENCE_H_
#define ALCL_NLS_REFERENCE_H_

#include <vector>

#include "alcl/fields.h"

namespace alcl {

// forward:  i d_t u = -u_xx + s c |u|^2 u   (psi type)
// reversed: -i d_t u = -u_xx + s c |u|^2 u  (phi type)
// with s = +1 defocusing, -1 focusing and c = 2 unless stated otherwise.
enum class Orientation { kForward, kReversed };

std::string_view ToString(Orientation o);

struct NlsState {
  ContinuumField field;
  double t;
};

struct NlsOptions {
  double dt = 0.0;        // 0 selects min(1e-3, 0.1 / max|u_0|^2)
  int intervals = 32;     // snapshots at j T / intervals, j = 0..intervals
  bool self_check = true; // refine dt until halving it shrinks the error >= 3.5x
  double nonlinear_coefficient = 2.0;
  double drift_tolerance = 1e-9;  // relative L^2 drift per unit time
};

struct NlsSolution {
  std::vector<NlsState> snapshots;
  double dt = 0.0;
  long steps = 0;
  double self_convergence_ratio = 0.0;  // 0 when not measured
};

// Spectral multiplier e^{-i t xi^2} (forward) or e^{+i t xi^2} (reversed).
ContinuumField SchrodingerGroup(const ContinuumField& f, double t, Orientation o);

// Strang split-step solution on the periodic window. T may be negative.
// The reversed orientation is solved as the conjugate of a forward solve.
NlsSolution NlsSolve(const ContinuumField& init, double T, Sign sign, Orientation o,
                     const NlsOptions& options = {});

// max_j |u(t_j) - e^{+-i t_j Delta} u(0) +- i s c int_0^{t_j} e^{+-i(t_j-s)Delta} |u|^2 u ds|
// over equally spaced snapshots starting at t = 0.
double DuhamelResidual(const std::vector<NlsState>& snapshots, Sign sign, Orientation o,
                       double nonlinear_coefficient = 2.0);

}  // namespace alcl

#endif  // ALCL_NLS_REFERENCE_H_
