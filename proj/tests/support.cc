#include "support.h"

#include <cmath>
#include <random>
#include <stdexcept>

namespace alcl::testing {

CVec RandomValues(int n, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CVec v(n);
  for (cplx& x : v) x = scale * cplx(g(rng), g(rng));
  return v;
}

LatticeField RandomLattice(double h, int sites, std::uint64_t seed, double scale) {
  return LatticeField(h, RandomValues(sites, seed, scale));
}

CVec NaiveLatticeDft(const LatticeField& f) {
  const int m = f.sites();
  CVec out(m);
  for (int k = 0; k < m; ++k) {
    cplx sum = 0.0;
    for (int j = 0; j < m; ++j) {
      // reduce the phase index exactly before scaling to an angle
      const long idx = ((static_cast<long>(f.site(j)) * k) % m + m) % m;
      sum += f[j] * std::polar(1.0, -2.0 * kPi * idx / m);
    }
    out[k] = sum;
  }
  return out;
}

cplx TrigPolynomial::operator()(double x) const {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    sum += coefficients[i] * std::polar(1.0, kPi * modes[i] * x / half_width);
  }
  return sum / (2.0 * half_width);
}

double TrigPolynomial::NormSquared() const {
  double sum = 0.0;
  for (const cplx& c : coefficients) sum += std::norm(c);
  return sum / (2.0 * half_width);
}

ContinuumField TrigPolynomial::Sample(int points) const {
  ContinuumField grid = ContinuumField::Zeros(half_width, points);
  CVec v(points);
  for (int j = 0; j < points; ++j) v[j] = (*this)(grid.x(j));
  return grid.WithValues(std::move(v));
}

TrigPolynomial RandomTrigPolynomial(double half_width, double radius, std::uint64_t seed,
                                    bool inclusive) {
  TrigPolynomial p{half_width, {}, {}};
  const int kmax = static_cast<int>(std::ceil(radius * half_width / kPi)) + 1;
  for (int k = -kmax; k <= kmax; ++k) {
    const double xi = std::abs(kPi * k / half_width);
    if (xi < radius || (inclusive && xi == radius)) p.modes.push_back(k);
  }
  p.coefficients = RandomValues(static_cast<int>(p.modes.size()), seed);
  return p;
}

double L2Distance(const ContinuumField& a, const ContinuumField& b) {
  if (a.points() != b.points()) throw std::invalid_argument("grid mismatch");
  double sum = 0.0;
  for (int j = 0; j < a.points(); ++j) sum += std::norm(a[j] - b[j]);
  return std::sqrt(sum * a.dx());
}

double L2Distance(const LatticeField& a, const LatticeField& b) {
  if (a.sites() != b.sites()) throw std::invalid_argument("lattice mismatch");
  double sum = 0.0;
  for (int j = 0; j < a.sites(); ++j) sum += std::norm(a[j] - b[j]);
  return std::sqrt(sum);
}

double Simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2 != 0) throw std::invalid_argument("Simpson needs an even panel count");
  const double step = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * step);
  return sum * step / 3.0;
}

}  // namespace alcl::testing
