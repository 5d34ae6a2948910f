#include "alcl/al_dynamics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "alcl/errors.h"

namespace alcl {
namespace {

constexpr double kPi = std::numbers::pi;

// Dispersion symbol 4 sin^2(theta_k/2) in plain DFT order; the (-1)^k site
// offset cancels between forward and inverse transforms.
std::vector<double> DispersionSymbol(int m) {
  std::vector<double> w(m);
  for (int k = 0; k < m; ++k) {
    const double s = std::sin(kPi * k / m);
    w[k] = 4.0 * s * s;
  }
  return w;
}

class LinearFlow {
 public:
  LinearFlow(int m, double tau) : factor_(m) {
    const std::vector<double> w = DispersionSymbol(m);
    for (int k = 0; k < m; ++k) factor_[k] = std::polar(1.0 / m, -w[k] * tau);
  }

  CVec Apply(const CVec& u) const {
    CVec spec = Dft(u);
    for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= factor_[k];
    return InverseDft(spec);
  }

 private:
  CVec factor_;
};

void Nonlinearity(const CVec& a, double s, CVec& out) {
  const int m = static_cast<int>(a.size());
  out.resize(m);
  for (int n = 0; n < m; ++n) {
    const cplx& left = a[n == 0 ? m - 1 : n - 1];
    const cplx& right = a[n == m - 1 ? 0 : n + 1];
    out[n] = cplx(0.0, -s * std::norm(a[n])) * (left + right);
  }
}

double MassOf(const CVec& a, double s) {
  double total = 0.0;
  for (const cplx& v : a) total -= std::log1p(-s * std::norm(v));
  return total;
}

double SupOf(const CVec& a) {
  double best = 0.0;
  for (const cplx& v : a) best = std::max(best, std::abs(v));
  return best;
}

double SumPow6(const CVec& a) {
  double total = 0.0;
  for (const cplx& v : a) {
    const double p = std::norm(v);
    total += p * p * p;
  }
  return total;
}

class Stepper {
 public:
  Stepper(int m, double dt, Sign sign, bool nonlinear)
      : half_(m, 0.5 * dt), full_(m, dt), dt_(dt), s_(SignFactor(sign)),
        nonlinear_(nonlinear) {}

  void Step(CVec& u) {
    if (!nonlinear_) {
      u = full_.Apply(u);
      return;
    }
    const int m = static_cast<int>(u.size());
    Nonlinearity(u, s_, k1_);
    const CVec eu = half_.Apply(u);
    const CVec ek1 = half_.Apply(k1_);
    for (int n = 0; n < m; ++n) tmp_[n] = eu[n] + 0.5 * dt_ * ek1[n];
    Nonlinearity(tmp_, s_, k2_);
    for (int n = 0; n < m; ++n) tmp_[n] = eu[n] + 0.5 * dt_ * k2_[n];
    Nonlinearity(tmp_, s_, k3_);
    for (int n = 0; n < m; ++n) tmp_[n] = eu[n] + dt_ * k3_[n];
    Nonlinearity(half_.Apply(tmp_), s_, k4_);
    for (int n = 0; n < m; ++n) {
      tmp_[n] = eu[n] + dt_ / 6.0 * (ek1[n] + 2.0 * k2_[n] + 2.0 * k3_[n]);
    }
    u = half_.Apply(tmp_);
    for (int n = 0; n < m; ++n) u[n] += dt_ / 6.0 * k4_[n];
  }

  void Resize(int m) { tmp_.resize(m); }

 private:
  LinearFlow half_;
  LinearFlow full_;
  double dt_;
  double s_;
  bool nonlinear_;
  CVec k1_, k2_, k3_, k4_, tmp_;
};

struct Leg {
  std::vector<LatticeField> snapshots;  // excluding the initial field
  NormSeries norms;                     // excluding the initial time
};

Leg RunLeg(const LatticeField& f0, const EvolutionParams& p, double dt,
           long steps_per_interval, int intervals, double direction) {
  const double h = f0.h();
  const double s = SignFactor(p.sign);
  const bool defocusing = p.sign == Sign::kDefocusing;
  const double signed_dt = direction * dt;
  Stepper stepper(f0.sites(), signed_dt, p.sign, p.nonlinear);
  stepper.Resize(f0.sites());

  CVec u(f0.values().begin(), f0.values().end());
  const double mass0 = p.nonlinear ? MassOf(u, s) : 0.0;
  const double scale = std::max(std::abs(mass0), 1e-300);
  Leg leg;
  long taken = 0;
  for (int j = 1; j <= intervals; ++j) {
    for (long i = 0; i < steps_per_interval; ++i) {
      stepper.Step(u);
      ++taken;
      if (defocusing && p.nonlinear && SupOf(u) >= 1.0) {
        std::ostringstream msg;
        msg << "defocusing field left the unit disk at t_lat = " << signed_dt * taken;
        throw DomainError(msg.str());
      }
      if (p.record_norms) {
        leg.norms.t_lat.push_back(signed_dt * taken);
        leg.norms.sum_pow6.push_back(SumPow6(u));
        leg.norms.sup.push_back(SupOf(u));
      }
    }
    const double t = direction * j * steps_per_interval * dt;
    if (p.nonlinear && mass0 != 0.0) {
      const double drift = std::abs(MassOf(u, s) - mass0) / scale;
      if (!(drift <= p.mass_tolerance)) {
        std::ostringstream msg;
        msg << "mass drift " << drift << " exceeds " << p.mass_tolerance
            << " at t_lat = " << t << " with dt = " << dt;
        throw ResolutionError(msg.str());
      }
    }
    leg.snapshots.emplace_back(h, u, t);
  }
  return leg;
}

}  // namespace

const LatticeField& Trajectory::at_time(double t_lat) const {
  for (const LatticeField& f : snapshots) {
    if (std::abs(f.t_lat() - t_lat) <= 1e-9 * std::max(1.0, std::abs(t_lat))) return f;
  }
  throw PreconditionError("no snapshot at the requested time");
}

std::vector<double> Trajectory::times() const {
  std::vector<double> out;
  out.reserve(snapshots.size());
  for (const LatticeField& f : snapshots) out.push_back(f.t_lat());
  return out;
}

LatticeField AlRhs(const LatticeField& f, Sign sign) {
  const int m = f.sites();
  const double s = SignFactor(sign);
  CVec out(m);
  for (int n = 0; n < m; ++n) {
    const cplx sum = f.wrapped(n - 1) + f.wrapped(n + 1);
    const cplx lap = sum - 2.0 * f[n];
    out[n] = cplx(0.0, 1.0) * (lap - s * std::norm(f[n]) * sum);
  }
  return f.WithValues(std::move(out));
}

LatticeField FreePropagator(const LatticeField& f, double tau) {
  const LinearFlow flow(f.sites(), tau);
  CVec u(f.values().begin(), f.values().end());
  return LatticeField(f.h(), flow.Apply(u), f.t_lat() + tau);
}

Trajectory Evolve(const LatticeField& f0, const EvolutionParams& params) {
  if (!(params.dt > 0.0)) throw PreconditionError("dt must be positive");
  if (!(params.t_final_lat >= 0.0)) throw PreconditionError("horizon must be non-negative");
  if (params.sign == Sign::kDefocusing && params.nonlinear && f0.NormSup() >= 1.0) {
    throw DomainError("defocusing data must satisfy |alpha_n| < 1");
  }
  const double stride = params.snapshot_stride > 0.0 ? params.snapshot_stride
                                                     : params.t_final_lat;
  Trajectory traj;
  traj.params = params;
  const LatticeField start = f0.WithTime(0.0);
  if (params.t_final_lat == 0.0) {
    traj.snapshots.push_back(start);
    traj.dt = params.dt;
    return traj;
  }
  const int intervals = static_cast<int>(std::lround(params.t_final_lat / stride));
  if (intervals < 1 || std::abs(intervals * stride - params.t_final_lat) >
                           1e-9 * params.t_final_lat) {
    throw PreconditionError("snapshot stride must divide the horizon");
  }
  const long per_interval = static_cast<long>(std::ceil(stride / params.dt - 1e-9));
  const double dt = stride / per_interval;
  traj.dt = dt;
  traj.steps = per_interval * intervals;

  Leg forward = RunLeg(start, params, dt, per_interval, intervals, 1.0);
  if (params.two_sided) {
    Leg backward = RunLeg(start, params, dt, per_interval, intervals, -1.0);
    traj.snapshots.assign(backward.snapshots.rbegin(), backward.snapshots.rend());
    if (params.record_norms) {
      auto& n = traj.norms;
      n.t_lat.assign(backward.norms.t_lat.rbegin(), backward.norms.t_lat.rend());
      n.sum_pow6.assign(backward.norms.sum_pow6.rbegin(), backward.norms.sum_pow6.rend());
      n.sup.assign(backward.norms.sup.rbegin(), backward.norms.sup.rend());
    }
  }
  traj.snapshots.push_back(start);
  if (params.record_norms) {
    CVec u(start.values().begin(), start.values().end());
    traj.norms.t_lat.push_back(0.0);
    traj.norms.sum_pow6.push_back(SumPow6(u));
    traj.norms.sup.push_back(SupOf(u));
  }
  for (LatticeField& f : forward.snapshots) traj.snapshots.push_back(std::move(f));
  if (params.record_norms) {
    auto append = [](std::vector<double>& dst, const std::vector<double>& src) {
      dst.insert(dst.end(), src.begin(), src.end());
    };
    append(traj.norms.t_lat, forward.norms.t_lat);
    append(traj.norms.sum_pow6, forward.norms.sum_pow6);
    append(traj.norms.sup, forward.norms.sup);
  }
  return traj;
}

}  // namespace alcl
