#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qre/errors.hpp"
#include "qre/hardware.hpp"
#include "qre/trotter.hpp"

namespace qre {

struct SurfaceCodeResult {
  int distance = 0;  // odd
  std::uint64_t physical_qubits = 0;
  double runtime = 0.0;    // seconds
  double spacetime = 0.0;  // qubit-seconds, physical_qubits * runtime
  double total_error = 0.0;
  int distillation_levels = 0;
};

/// Layout and sweep knobs. The defaults are a rotated-surface-code patch of
/// 2d^2 physical qubits and a 2x routing allowance on logical qubit count.
struct SurfaceCodeOptions {
  double route_factor = 2.0;
  double patch_factor = 2.0;  // physical qubits per patch = patch_factor * d^2
  double eps_sc = 0.1;        // total error budget
};

/// p_L = 0.1 * (100 p_phys)^{(d+1)/2}.
inline double logical_error_rate(double p_phys, int d) {
  if (d < 3 || d % 2 == 0)
    throw Error(errc::invalid_distance,
                "distance must be odd and >= 3, got " + std::to_string(d));
  if (!(p_phys > 0.0))
    throw Error(errc::invalid_probability, "p_phys must be positive");
  if (p_phys > 1e-2)
    throw Error(errc::above_threshold,
                "p_phys " + std::to_string(p_phys) + " is above threshold");
  return 0.1 * std::pow(100.0 * p_phys, (d + 1) / 2);
}

/// Error per output T state of a 15-to-1 cascade:
/// eps_1 = 35 p^3, eps_l = 35 eps_{l-1}^3.
inline double distillation_error(double p_phys, int levels) {
  if (levels < 1) throw std::invalid_argument("distillation levels must be >= 1");
  double eps = 35.0 * p_phys * p_phys * p_phys;
  for (int l = 2; l <= levels; ++l) eps = 35.0 * eps * eps * eps;
  return eps;
}

/// Sweeps odd code distances 3..201 and returns the feasible point of minimum
/// space-time volume (ties to the smaller distance). The error budget is
/// split evenly between logical failures and distillation.
inline SurfaceCodeResult optimize(const LogicalEstimate& est, const HardwareProfile& hw,
                                  const SurfaceCodeOptions& options = {}) {
  if (est.total_t_gates < 1)
    throw std::invalid_argument("estimate carries no T gates");
  load_profile(hw);
  const double eps_sc = options.eps_sc;
  const auto t_gates = static_cast<double>(est.total_t_gates);

  int levels = 0;
  double distill = 0.0;
  for (int l = 1; l <= 100; ++l) {
    distill = t_gates * distillation_error(hw.p_phys, l);
    if (distill < eps_sc / 2.0) {
      levels = l;
      break;
    }
  }

  bool found = false;
  SurfaceCodeResult best;
  for (int d = 3; d <= 201; d += 2) {
    const double logical_failure = static_cast<double>(est.logical_qubits) * t_gates *
                                   logical_error_rate(hw.p_phys, d);
    const double total_error = logical_failure + distill;
    if (levels == 0 || !(total_error < eps_sc)) continue;

    const double patches =
        options.route_factor * static_cast<double>(est.logical_qubits);
    const auto physical = static_cast<std::uint64_t>(
        std::llround(patches * options.patch_factor * d * d));
    const double n_cycles = t_gates * d;
    const double runtime = n_cycles * hw.cycle_time;
    const double spacetime = static_cast<double>(physical) * runtime;
    if (!found || spacetime < best.spacetime) {
      found = true;
      best = {d, physical, runtime, spacetime, total_error, levels};
    }
  }
  if (!found)
    throw Error(errc::no_feasible_distance,
                hw.name + ": no distance up to 201 meets the " +
                    std::to_string(eps_sc) + " error budget");
  return best;
}

}  // namespace qre
