#include "sigma3/flows.hpp"

#include <algorithm>
#include <cmath>

#include "sigma3/sigmalimit.hpp"

namespace sigma3 {

namespace {

// Dormand-Prince 5(4) coefficients
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// 5th-order weights equal the last A row; 4th-order weights:
constexpr double kB4[7] = {5179.0 / 57600, 0.0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

bool finite(const State4& s) {
  for (const auto& z : s)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace

Trajectory integrate(SystemId system, const State4& init, const YParams4& y,
                     std::complex<double> t_end, double rel_tol, double abs_tol,
                     double max_step_frac) {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (!std::isfinite(t_end.real()) || !std::isfinite(t_end.imag()))
    throw std::invalid_argument("integrate: t_end must be finite");

  VectorField vf = make_system(system);
  std::array<CompiledGPoly, 4> f;
  for (size_t i = 0; i < 4; ++i) f[i] = CompiledGPoly(vf.comp[i], y);
  auto [i12p, i14p] = make_integrals();
  CompiledGPoly i12c(i12p, y), i14c(i14p, y);

  Trajectory traj;
  traj.system = system;
  traj.y = y;
  traj.t_end = t_end;
  traj.rel_tol = rel_tol;
  traj.abs_tol = abs_tol;
  traj.max_step = max_step_frac;

  auto push_sample = [&](double s, const State4& st) {
    traj.samples.push_back({s, t_end * s, st, i12c.eval(st), i14c.eval(st)});
  };

  push_sample(0.0, init);
  if (std::abs(t_end) == 0.0) return traj;

  // dy/ds = t_end * V(y)
  auto rhs = [&](const State4& st) {
    State4 out;
    for (size_t i = 0; i < 4; ++i) out[i] = t_end * f[i].eval(st);
    return out;
  };

  const double h_max = max_step_frac;  // in s units; time step is h * |t_end|
  double s = 0.0;
  State4 ycur = init;
  if (!finite(ycur)) throw FlowError("integrate: non-finite initial state", 0.0, ycur);
  double h = h_max;
  traj.stats.h_min = h_max;

  State4 k[7];
  k[0] = rhs(ycur);
  int guard = 0;
  while (s < 1.0) {
    if (++guard > 2000000) throw FlowError("integrate: step bound exceeded", s, ycur);
    h = std::min(h, 1.0 - s);
    // stages (FSAL: k[0] carried over)
    for (int st = 1; st < 7; ++st) {
      State4 arg = ycur;
      for (int j = 0; j < st; ++j) {
        if (kA[st][j] == 0.0) continue;
        for (size_t i = 0; i < 4; ++i) arg[i] += h * kA[st][j] * k[j][i];
      }
      k[st] = rhs(arg);
    }
    // 5th-order solution is the last stage argument (k[6] evaluated there)
    State4 y5 = ycur;
    for (int j = 0; j < 6; ++j)
      for (size_t i = 0; i < 4; ++i) y5[i] += h * kA[6][j] * k[j][i];
    State4 y4 = ycur;
    for (int j = 0; j < 7; ++j)
      for (size_t i = 0; i < 4; ++i) y4[i] += h * kB4[j] * k[j][i];

    if (!finite(y5)) throw FlowError("integrate: non-finite state (blow-up)", s, ycur);

    double err = 0.0;
    for (size_t i = 0; i < 4; ++i) {
      double sc = abs_tol + rel_tol * std::max(std::abs(ycur[i]), std::abs(y5[i]));
      double e = std::abs(y5[i] - y4[i]) / sc;
      err += e * e;
    }
    err = std::sqrt(err / 4.0);

    if (err <= 1.0) {
      s += h;
      ycur = y5;
      k[0] = k[6];  // FSAL
      push_sample(s, ycur);
      traj.stats.accepted += 1;
      traj.stats.h_min = std::min(traj.stats.h_min, h);
      traj.stats.h_max = std::max(traj.stats.h_max, h);
    } else {
      traj.stats.rejected += 1;
    }
    double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    h *= factor;
    h = std::min(h, h_max);
    if (h < 1e-14)
      throw FlowError("integrate: step size underflow (blow-up near s = " + std::to_string(s) + ")",
                      s, ycur);
  }
  return traj;
}

std::pair<double, double> drift_report(const Trajectory& traj) {
  if (traj.samples.empty()) throw std::invalid_argument("drift_report: empty trajectory");
  const auto& first = traj.samples.front();
  double d12 = 0.0, d14 = 0.0;
  double s12 = std::max(1.0, std::abs(first.i12));
  double s14 = std::max(1.0, std::abs(first.i14));
  for (const auto& smp : traj.samples) {
    d12 = std::max(d12, std::abs(smp.i12 - first.i12) / s12);
    d14 = std::max(d14, std::abs(smp.i14 - first.i14) / s14);
  }
  return {d12, d14};
}

State4 initial_from_curve_points(const CurveParams& params, std::complex<double> X1,
                                 std::complex<double> Y1, std::complex<double> X2,
                                 std::complex<double> Y2, double tol) {
  auto check = [&](std::complex<double> X, std::complex<double> Y, const char* which) {
    std::complex<double> q = params.Q(X);
    double resid = std::abs(Y * Y - q) / std::max(1.0, std::abs(q));
    if (resid > tol)
      throw std::invalid_argument(std::string("initial_from_curve_points: point ") + which +
                                  " is not on the curve (residual " + std::to_string(resid) + ")");
  };
  check(X1, Y1, "P1");
  check(X2, Y2, "P2");
  if (std::abs(X1 - X2) < tol)
    throw std::invalid_argument("initial_from_curve_points: coincident X coordinates");
  auto u = u_point(X1, Y1, X2, Y2);
  return {u[0], u[1], u[2], u[3]};
}

FlowPreset preset_example2() {
  FlowPreset p;
  p.name = "example2";
  p.system = SystemId::II;
  p.y = {};
  const double pr = p_field()->embedded_root().real();  // the real fifth root of -45
  const double p3 = pr * pr * pr;
  p.init = {{{-p3 / 30.0, 0.0}, {3.0 * pr / 20.0, 0.0}, {0.2, 0.0}, {-p3 / 50.0, 0.0}}};
  p.closed_form = [p3, pr](std::complex<double> tau) {
    std::complex<double> w = 1.0 + tau;
    return State4{{-p3 / 30.0 * std::pow(w, -0.4), 3.0 * pr / 20.0 * std::pow(w, -0.8),
                   0.2 * std::pow(w, -1.0), -p3 / 50.0 * std::pow(w, -1.4)}};
  };
  return p;
}

FlowPreset preset_example3() {
  FlowPreset p;
  p.name = "example3";
  p.system = SystemId::I;
  p.y = {};
  const double q = q_field()->embedded_root().real();  // real root with q^3 = (15+sqrt(405))/2
  const double q2 = q * q, q3 = q * q * q;
  const double g2 = q / 6.0;
  const double g4 = -q2 * (q3 + 15.0) / (108.0 * (q3 + 3.0));
  const double g5 = q / 9.0;
  const double g7 = -q2 * (q3 + 15.0) / (162.0 * (q3 + 3.0));
  p.init = {{{g2, 0.0}, {g4, 0.0}, {g5, 0.0}, {g7, 0.0}}};
  p.closed_form = [=](std::complex<double> t) {
    std::complex<double> w = 1.0 + t;
    return State4{{g2 * std::pow(w, -2.0 / 3.0), g4 * std::pow(w, -4.0 / 3.0),
                   g5 * std::pow(w, -5.0 / 3.0), g7 * std::pow(w, -7.0 / 3.0)}};
  };
  return p;
}

}  // namespace sigma3
