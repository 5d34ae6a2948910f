#include "alcl/conserved.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "alcl/errors.h"
#include "alcl/grid_spectral.h"

namespace alcl {
namespace {

constexpr double kPi = std::numbers::pi;

// alpha_n beta_n = s |alpha_n|^2, checked against the logarithm's domain.
double CheckedLogTerm(const cplx& a, double s) {
  const double ab = s * std::norm(a);
  if (!(1.0 - ab > 0.0)) throw DomainError("1 - alpha_n beta_n <= 0: field left the unit disk");
  return std::log1p(-ab);
}

void CheckDenseSize(int m) {
  if (m > kMaxDenseSites) {
    std::ostringstream msg;
    msg << "dense generating-function work needs M <= " << kMaxDenseSites << ", got " << m;
    throw PreconditionError(msg.str());
  }
}

// Circulant with Fourier symbol sigma(theta_k): C[n][m] = (1/M) sum_k sigma_k e^{i(n-m)theta_k}.
Eigen::MatrixXcd Circulant(const CVec& symbol) {
  const int m = static_cast<int>(symbol.size());
  CVec column = InverseDft(symbol);
  for (cplx& v : column) v /= static_cast<double>(m);
  Eigen::MatrixXcd c(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) c(i, j) = column[((i - j) % m + m) % m];
  }
  return c;
}

// Lambda Gamma = diag(alpha) C1 diag(beta) C2 with C1 applied column by column
// through its symbol, which avoids a dense matrix product.
Eigen::MatrixXcd LambdaGammaProduct(const LatticeField& f, cplx z, Sign sign) {
  const int m = f.sites();
  CheckDenseSize(m);
  const double s = SignFactor(sign);
  CVec sym_lambda(m), sym_gamma(m);
  for (int k = 0; k < m; ++k) {
    const cplx e = std::polar(1.0, 2.0 * kPi * k / m);
    sym_lambda[k] = 1.0 / (e - 1.0 / z) / static_cast<double>(m);
    sym_gamma[k] = 1.0 / (z - e);
  }
  Eigen::MatrixXcd out = Circulant(sym_gamma);
  for (int i = 0; i < m; ++i) out.row(i) *= s * std::conj(f[i]);
  CVec column(m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) column[i] = out(i, j);
    CVec spec = Dft(column);
    for (int k = 0; k < m; ++k) spec[k] *= sym_lambda[k];
    const CVec back = InverseDft(spec);
    for (int i = 0; i < m; ++i) out(i, j) = f[i] * back[i];
  }
  return out;
}

void CheckZ(cplx z) {
  if (!(std::abs(z) > 1.0)) throw PreconditionError("generating function needs |z| > 1");
}

void CheckConvergence(const LatticeField& f, cplx z) {
  const double p = ConvergenceParameter(f, z);
  if (!(p < 1.0)) {
    std::ostringstream msg;
    msg << "generating function series diverges: |z|/(|z|^2-1) |alpha|^2 = " << p;
    throw PreconditionError(msg.str());
  }
}

}  // namespace

double Mass(const LatticeField& f, Sign sign) {
  const double s = SignFactor(sign);
  double total = 0.0;
  for (int n = 0; n < f.sites(); ++n) total -= CheckedLogTerm(f[n], s);
  return total;
}

namespace {

cplx HamiltonianSum(const LatticeField& f, Sign sign) {
  const double s = SignFactor(sign);
  cplx total = 0.0;
  for (int n = 0; n < f.sites(); ++n) {
    const cplx a = f[n], a1 = f.wrapped(n + 1);
    const cplx b = s * std::conj(a), b1 = s * std::conj(a1);
    total -= a * b1 + a1 * b + 2.0 * CheckedLogTerm(a, s);
  }
  return total;
}

}  // namespace

double Hamiltonian(const LatticeField& f, Sign sign) {
  return HamiltonianSum(f, sign).real();
}

double HamiltonianImaginaryPart(const LatticeField& f, Sign sign) {
  return HamiltonianSum(f, sign).imag();
}

double H2(const LatticeField& f, Sign sign) {
  const double s = SignFactor(sign);
  double total = 0.0;
  for (int n = 0; n < f.sites(); ++n) {
    const cplx a = f[n], a1 = f.wrapped(n + 1), a2 = f.wrapped(n + 2);
    const cplx b = s * std::conj(a), bm = s * std::conj(f.wrapped(n - 1));
    const cplx bracket = a2 * b - 0.5 * a * a * bm * bm - a1 * a * b * bm;
    total -= 2.0 * CheckedLogTerm(a, s) + 2.0 * bracket.real();
  }
  return total;
}

GeneratingFunctionContext GeneratingFunctionContext::Build(const LatticeField& f, cplx z,
                                                           Sign sign) {
  CheckZ(z);
  const int m = f.sites();
  CheckDenseSize(m);
  const double s = SignFactor(sign);
  // With hat(alpha)(theta) = sum alpha_n e^{-i n theta}, S acts as e^{i theta}.
  CVec sym_lambda(m), sym_gamma(m);
  for (int k = 0; k < m; ++k) {
    const cplx e = std::polar(1.0, 2.0 * kPi * k / m);
    sym_lambda[k] = 1.0 / (e - 1.0 / z);
    sym_gamma[k] = 1.0 / (z - e);
  }
  GeneratingFunctionContext ctx{z, Circulant(sym_lambda), Circulant(sym_gamma)};
  for (int i = 0; i < m; ++i) {
    ctx.lambda.row(i) *= f[i];
    ctx.gamma.row(i) *= s * std::conj(f[i]);
  }
  return ctx;
}

double ConvergenceParameter(const LatticeField& f, cplx z) {
  const double r = std::abs(z);
  return r / (r * r - 1.0) * f.NormSquared();
}

cplx GeneratingFunction(const LatticeField& f, cplx z, Sign sign) {
  CheckZ(z);
  CheckConvergence(f, z);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(LambdaGammaProduct(f, z, sign), false);
  if (solver.info() != Eigen::Success) {
    throw ResolutionError("eigensolver failed on Lambda Gamma");
  }
  cplx total = 0.0;
  for (const cplx& lam : solver.eigenvalues()) total += std::log(1.0 + lam);
  return total;
}

double GeneratingFunctionReal(const LatticeField& f, cplx z, Sign sign) {
  CheckZ(z);
  CheckConvergence(f, z);
  const int m = f.sites();
  Eigen::MatrixXcd a = LambdaGammaProduct(f, z, sign);
  a += Eigen::MatrixXcd::Identity(m, m);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  const Eigen::MatrixXcd& packed = lu.matrixLU();
  double total = 0.0;
  for (int i = 0; i < m; ++i) total += std::log(std::abs(packed(i, i)));
  return total;
}

cplx GeneratingFunctionSeries(const LatticeField& f, cplx z, Sign sign, int terms) {
  CheckZ(z);
  const Eigen::MatrixXcd p = LambdaGammaProduct(f, z, sign);
  Eigen::MatrixXcd power = p;
  cplx total = 0.0;
  for (int l = 1; l <= terms; ++l) {
    if (l > 1) power = power * p;
    total += (l % 2 == 1 ? 1.0 : -1.0) / l * power.trace();
  }
  return total;
}

double GFunctional(const LatticeField& f, double kappa, Sign sign) {
  const double a = kappa * f.h();
  const double s = SignFactor(sign);
  const double re_a = GeneratingFunctionReal(f, std::exp(a), sign) +
                      GeneratingFunctionReal(f, cplx(0.0, std::exp(a)), sign);
  return s * 2.0 / (std::exp(4.0 * a) + 1.0) * Mass(f, sign) - s * std::tanh(2.0 * a) * re_a;
}

double GQuadratic(const LatticeField& f, double kappa) {
  const SpectralCoefficients c = ForwardTransform(f);
  const double sh = std::sinh(2.0 * kappa * f.h());
  double total = 0.0;
  for (int k = 0; k < c.sites(); ++k) {
    const double sn = std::sin(2.0 * kPi * k / c.sites());
    total += sn * sn / (sh * sh + sn * sn) * std::norm(c.values[k]);
  }
  return total / c.sites();
}

double ScanKappaThreshold(const std::vector<LatticeField>& snapshots, double start,
                          double ratio) {
  if (snapshots.empty()) throw PreconditionError("kappa scan needs at least one snapshot");
  if (!(ratio > 0.0 && ratio < 1.0)) throw PreconditionError("scan ratio must lie in (0, 1)");
  double sup_mass = 0.0;
  for (const LatticeField& f : snapshots) sup_mass = std::max(sup_mass, f.NormSquared());
  const double h = snapshots.front().h();
  // With z = e^{kappa h}, |z|/(|z|^2 - 1) = 1 / (2 sinh(kappa h)).
  const auto ok = [&](double kappa) { return sup_mass <= std::sinh(kappa * h); };
  if (!ok(start)) throw PreconditionError("kappa scan start does not satisfy the margin");
  double kappa = start;
  while (ok(kappa * ratio) && kappa * ratio > 1e-12) kappa *= ratio;
  return kappa;
}

std::vector<double> SuppressionRatio(const Trajectory& traj, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw PreconditionError("delta must lie in (0, 1)");
  const LatticeField& initial = traj.at_time(0.0);
  const double norm0 = std::sqrt(initial.NormSquared());
  std::vector<double> out;
  out.reserve(traj.snapshots.size());
  for (const LatticeField& f : traj.snapshots) {
    if (norm0 == 0.0) {
      out.push_back(0.0);
      continue;
    }
    const SpectralCoefficients c = ForwardTransform(f);
    double outside = 0.0;
    for (int k = 0; k < c.sites(); ++k) {
      const double sn = std::sin(c.theta(k));
      if (!(sn * sn < delta * delta)) outside += std::norm(c.values[k]);
    }
    out.push_back(std::sqrt(outside / c.sites()) / norm0);
  }
  return out;
}

DriftReport MeasureDrift(std::string name, std::vector<double> times,
                         std::vector<double> values, std::size_t reference_index) {
  if (values.empty() || reference_index >= values.size() || times.size() != values.size()) {
    throw PreconditionError("drift needs aligned, non-empty series");
  }
  DriftReport r{std::move(name), std::move(times), std::move(values), 0.0, 0.0};
  const double ref = r.values[reference_index];
  for (double v : r.values) r.max_abs_drift = std::max(r.max_abs_drift, std::abs(v - ref));
  r.max_rel_drift = r.max_abs_drift / (std::abs(ref) + 1e-30);
  return r;
}

}  // namespace alcl
