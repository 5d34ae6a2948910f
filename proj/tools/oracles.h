#ifndef ALCL_TOOLS_ORACLES_H_
#define ALCL_TOOLS_ORACLES_H_

#include <string>
#include <vector>

namespace alcl::tools {

struct OracleResult {
  std::string name;
  double measured;
  double tolerance;
  bool pass() const { return measured <= tolerance; }
};

// Each returns the measured deviation from its closed form.
double NaiveDftError();           // relative, lattice transform vs direct sum
double PlaneWaveError();          // max site error, a = 0.1, theta = 10 pi / 128, t = 50
double SolitonError();            // max-t L2 error of sech(x) e^{it} to T = 1
double FreeGaussianError();       // max error of the free Schrodinger Gaussian
double MassScalarError();         // single-site mass, both signs
double FrozenCrossTermError();    // relative, frozen envelopes vs the oscillatory integral

// Closed-form checks that need no simulation horizon.
std::vector<OracleResult> RunOracles();

}  // namespace alcl::tools

#endif  // ALCL_TOOLS_ORACLES_H_
