#ifndef ALCL_CONSERVED_H_
#define ALCL_CONSERVED_H_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "alcl/al_dynamics.h"
#include "alcl/fields.h"

namespace alcl {

// Dense eigen/LU work on Lambda Gamma is refused above this many sites.
inline constexpr int kMaxDenseSites = 2048;

// M = -sum ln(1 - alpha_n beta_n).
double Mass(const LatticeField& f, Sign sign);
// H = -sum [alpha_n beta_{n+1} + alpha_{n+1} beta_n + 2 ln(1 - alpha_n beta_n)].
double Hamiltonian(const LatticeField& f, Sign sign);
// Imaginary part of the sum defining H; zero up to roundoff for both signs.
double HamiltonianImaginaryPart(const LatticeField& f, Sign sign);
// H_2 = -sum [2 ln(1 - alpha_n beta_n)
//             + 2 Re(alpha_{n+2} beta_n - alpha_n^2 beta_{n-1}^2 / 2
//                    - alpha_{n+1} alpha_n beta_n beta_{n-1})].
double H2(const LatticeField& f, Sign sign);

// Lambda = alpha (S - 1/z)^{-1} and Gamma = beta (z - S)^{-1} on the periodic
// lattice, (S f)_n = f_{n+1}. The resolvents are circulants built from their
// Fourier symbols.
struct GeneratingFunctionContext {
  cplx z;
  Eigen::MatrixXcd lambda;
  Eigen::MatrixXcd gamma;

  static GeneratingFunctionContext Build(const LatticeField& f, cplx z, Sign sign);

  double LambdaHsSquared() const { return lambda.squaredNorm(); }
  double GammaHsSquared() const { return gamma.squaredNorm(); }
  Eigen::MatrixXcd Product() const { return lambda * gamma; }
};

// |z| / (|z|^2 - 1) |alpha|^2, the quantity that must stay below 1.
double ConvergenceParameter(const LatticeField& f, cplx z);

// A(z) = sum_j Log(1 + lambda_j) over the eigenvalues of Lambda Gamma.
cplx GeneratingFunction(const LatticeField& f, cplx z, Sign sign);
// Re A(z) = ln |det(1 + Lambda Gamma)| by LU; same value, no eigensolve.
double GeneratingFunctionReal(const LatticeField& f, cplx z, Sign sign);
// Truncated trace series sum_{l <= terms} (-1)^{l+1}/l tr (Lambda Gamma)^l.
cplx GeneratingFunctionSeries(const LatticeField& f, cplx z, Sign sign, int terms);

// G(kappa h) = +-2/(e^{4 kappa h} + 1) M -+ tanh(2 kappa h) Re[A(e^{kappa h}) + A(i e^{kappa h})].
double GFunctional(const LatticeField& f, double kappa, Sign sign);
// Quadratic part: (1/M) sum_k sin^2 / (sinh^2(2 kappa h) + sin^2) |hat(alpha)_k|^2.
double GQuadratic(const LatticeField& f, double kappa);

// Smallest kappa on the downward geometric scan from `start` at which
// 2 |z|/(|z|^2-1) sup_t |alpha(t)|^2 <= 1 for z = e^{kappa h}.
double ScanKappaThreshold(const std::vector<LatticeField>& snapshots, double start,
                          double ratio = 0.95);

// |(1 - P_delta) alpha(t)| / |alpha(0)| per snapshot, where alpha(0) is the
// snapshot at t_lat = 0.
std::vector<double> SuppressionRatio(const Trajectory& traj, double delta);

struct DriftReport {
  std::string name;
  std::vector<double> times;
  std::vector<double> values;
  double max_abs_drift = 0.0;
  double max_rel_drift = 0.0;
};

// Drift of a sampled functional relative to its value at `reference_index`.
DriftReport MeasureDrift(std::string name, std::vector<double> times,
                         std::vector<double> values, std::size_t reference_index);

}  // namespace alcl

#endif  // ALCL_CONSERVED_H_
