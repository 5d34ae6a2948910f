#ifndef ALCL_FOURIER_H_
#define ALCL_FOURIER_H_

#include <complex>
#include <span>
#include <vector>

namespace alcl {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Unnormalized length-n DFT, out_k = sum_j in_j e^{-2 pi i jk/n}.
CVec Dft(std::span<const cplx> in);

// Unnormalized inverse, out_j = sum_k in_k e^{+2 pi i jk/n}.
CVec InverseDft(std::span<const cplx> in);

}  // namespace alcl

#endif  // ALCL_FOURIER_H_
