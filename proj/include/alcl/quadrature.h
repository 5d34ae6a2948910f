#ifndef ALCL_QUADRATURE_H_
#define ALCL_QUADRATURE_H_

#include <vector>

namespace alcl {

// Composite Simpson weights on n equally spaced samples (n odd, n >= 3).
std::vector<double> SimpsonWeights(int n, double step);

// Weights for int_0^{t_j} on samples 0..max(j, 3) spaced by `step`: Simpson
// for even j, Simpson then 3/8 for odd j >= 3, a four-point cubic for j = 1.
// The returned vector has max(j, 3) + 1 entries (j = 0 gives all zeros).
std::vector<double> CumulativeWeights(int j, double step);

}  // namespace alcl

#endif  // ALCL_QUADRATURE_H_
