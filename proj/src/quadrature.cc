#include "alcl/quadrature.h"

#include <algorithm>

#include "alcl/errors.h"

namespace alcl {
namespace {

void AddSimpson(std::vector<double>& w, int first, int intervals, double step) {
  for (int i = 0; i < intervals; i += 2) {
    w[first + i] += step / 3.0;
    w[first + i + 1] += 4.0 * step / 3.0;
    w[first + i + 2] += step / 3.0;
  }
}

}  // namespace

std::vector<double> SimpsonWeights(int n, double step) {
  if (n < 3 || n % 2 == 0) throw PreconditionError("Simpson rule needs an odd sample count >= 3");
  std::vector<double> w(n, 0.0);
  AddSimpson(w, 0, n - 1, step);
  return w;
}

std::vector<double> CumulativeWeights(int j, double step) {
  if (j < 0) throw PreconditionError("cumulative weights need j >= 0");
  std::vector<double> w(std::max(j, 3) + 1, 0.0);
  if (j == 0) return w;
  if (j == 1) {
    w[0] = 9.0 * step / 24.0;
    w[1] = 19.0 * step / 24.0;
    w[2] = -5.0 * step / 24.0;
    w[3] = step / 24.0;
    return w;
  }
  if (j % 2 == 0) {
    AddSimpson(w, 0, j, step);
    return w;
  }
  AddSimpson(w, 0, j - 3, step);
  const double e = 3.0 * step / 8.0;
  w[j - 3] += e;
  w[j - 2] += 3.0 * e;
  w[j - 1] += 3.0 * e;
  w[j] += e;
  return w;
}

}  // namespace alcl
