#include "alcl/fourier.h"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace alcl {
namespace {

// FFTW's planner is not thread-safe, execution with the new-array interface is.
// Plans are built with FFTW_ESTIMATE so the chosen algorithm (and therefore the
// rounding) does not depend on timing measurements.
fftw_plan GetPlan(int n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = plans.find({n, sign});
  if (it != plans.end()) return it->second;
  CVec a(n), b(n);
  fftw_plan plan = fftw_plan_dft_1d(
      n, reinterpret_cast<fftw_complex*>(a.data()),
      reinterpret_cast<fftw_complex*>(b.data()), sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(std::make_pair(n, sign), plan);
  return plan;
}

CVec Execute(std::span<const cplx> in, int sign) {
  const int n = static_cast<int>(in.size());
  CVec out(n);
  if (n == 0) return out;
  fftw_plan plan = GetPlan(n, sign);
  // Out-of-place complex transforms leave the input untouched.
  fftw_execute_dft(plan,
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

CVec Dft(std::span<const cplx> in) { return Execute(in, FFTW_FORWARD); }

CVec InverseDft(std::span<const cplx> in) { return Execute(in, FFTW_BACKWARD); }

}  // namespace alcl
