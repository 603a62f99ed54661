#pragma once

// Complex-time integration of the two systems along the straight segment
// time(s) = s * t_end, s in [0, 1], with an adaptive embedded 5(4)
// Runge-Kutta pair and conserved-quantity monitoring at every accepted step.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigma3/curvering.hpp"
#include "sigma3/dynsys.hpp"

namespace sigma3 {

struct FlowError : std::runtime_error {
  FlowError(const std::string& what, double s, const State4& st)
      : std::runtime_error(what), s_last(s), state_last(st) {}
  double s_last;
  State4 state_last;
};

struct TrajectorySample {
  double s = 0.0;
  std::complex<double> time;
  State4 state{};
  std::complex<double> i12, i14;
};

struct StepStats {
  int accepted = 0;
  int rejected = 0;
  double h_min = 0.0;
  double h_max = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  SystemId system = SystemId::I;
  YParams4 y{};
  std::complex<double> t_end;
  double rel_tol = 0.0, abs_tol = 0.0, max_step = 0.0;
  StepStats stats;
  const TrajectorySample& front() const { return samples.front(); }
  const TrajectorySample& back() const { return samples.back(); }
};

Trajectory integrate(SystemId system, const State4& init, const YParams4& y,
                     std::complex<double> t_end, double rel_tol = 1e-10, double abs_tol = 1e-12,
                     double max_step_frac = 0.05);

// max over samples of |I(s) - I(0)| / max(1, |I(0)|), for I12 then I14
std::pair<double, double> drift_report(const Trajectory& traj);

// u-map of a pair of numeric curve points; checks both points lie on the
// curve and the X coordinates are distinct
State4 initial_from_curve_points(const CurveParams& params, std::complex<double> X1,
                                 std::complex<double> Y1, std::complex<double> X2,
                                 std::complex<double> Y2, double tol = 1e-8);

// named initial states with exact closed-form solutions, used by the CLI
// presets and the verification suites
struct FlowPreset {
  std::string name;
  SystemId system = SystemId::II;
  YParams4 y{};
  State4 init{};
  // closed-form state at complex time T (regular for |T| < 1 on the ray)
  std::function<State4(std::complex<double>)> closed_form;
};
FlowPreset preset_example2();
FlowPreset preset_example3();

}  // namespace sigma3
