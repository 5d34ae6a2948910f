#ifndef ALCL_AL_DYNAMICS_H_
#define ALCL_AL_DYNAMICS_H_

#include <vector>

#include "alcl/fields.h"

namespace alcl {

struct EvolutionParams {
  Sign sign = Sign::kDefocusing;
  double dt = 0.1;             // requested lattice step, snapped down (see Evolve)
  double t_final_lat = 0.0;    // horizon in lattice time
  double snapshot_stride = 0.0;  // 0 means a single interval [0, t_final_lat]
  bool two_sided = false;      // also evolve backward to -t_final_lat
  bool nonlinear = true;
  bool record_norms = false;   // sample l^6 and l^inf norms after every step
  double mass_tolerance = 1e-8;  // relative drift allowed over the horizon
};

// Norms sampled on the step grid, ordered by time.
struct NormSeries {
  std::vector<double> t_lat;
  std::vector<double> sum_pow6;  // sum_n |alpha_n|^6
  std::vector<double> sup;       // max_n |alpha_n|
};

struct Trajectory {
  std::vector<LatticeField> snapshots;  // strictly increasing t_lat
  EvolutionParams params;
  double dt = 0.0;      // step actually used
  long steps = 0;       // steps taken in each direction
  NormSeries norms;

  const LatticeField& at_time(double t_lat) const;
  std::vector<double> times() const;
};

// d alpha / dt for i d_t alpha_n = -(alpha_{n-1} - 2 alpha_n + alpha_{n+1})
//                                  + alpha_n beta_n (alpha_{n-1} + alpha_{n+1}).
LatticeField AlRhs(const LatticeField& f, Sign sign);

// Spectral multiplier e^{-4 i tau sin^2(theta/2)}.
LatticeField FreePropagator(const LatticeField& f, double tau);

// Lawson RK4 for the AL flow. The step is snapped down so every snapshot
// interval holds a whole number of steps. Throws ResolutionError when the
// mass drifts past the tolerance and DomainError when a defocusing field
// reaches |alpha_n| >= 1.
Trajectory Evolve(const LatticeField& f0, const EvolutionParams& params);

}  // namespace alcl

#endif  // ALCL_AL_DYNAMICS_H_
