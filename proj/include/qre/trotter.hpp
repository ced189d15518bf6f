#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "qre/errors.hpp"
#include "qre/hardware.hpp"
#include "qre/jordan_wigner.hpp"
#include "qre/numeric.hpp"
#include "qre/pauli.hpp"

namespace qre {

/// Gate tally for exponentiating every Hamiltonian term once.
struct TrotterStepCost {
  std::uint64_t n_r = 0;      // arbitrary-angle Z rotations
  std::uint64_t n_c = 0;      // CNOTs (always even: ladder in and out)
  std::uint64_t n_cliff = 0;  // single-qubit basis changes
};

/// Phase-estimation precision knobs. delta_E (the first excitation gap)
/// selects gap mode when present; otherwise the eigenstate is treated as known.
struct PrecisionConfig {
  double eps_p = 1e-3;      // target precision, Hartree
  double delta_E_R = 1.0;   // spectral-range scale, Hartree
  double p_f = 0.1;         // QPE failure budget
  double eps_t = 1.6e-3;    // target Trotter error, Hartree
  std::optional<double> delta_E;  // first excitation gap, Hartree
};

struct LogicalEstimate {
  std::int64_t n_steps = 0;
  int n_b = 0;
  int n_a = 0;
  std::uint64_t total_rotations = 0;
  std::uint64_t total_cnots = 0;
  std::uint64_t total_t_gates = 0;
  std::uint64_t logical_depth = 0;
  std::uint64_t logical_qubits = 0;  // n_qubits + n_a
};

/// Cost of one first-order Trotter step: per term of weight w with x X-axes
/// and y Y-axes, 1 rotation + 2(w-1) ladder CNOTs + 2(x+y) basis changes.
inline TrotterStepCost single_step_cost(const QubitHamiltonian& ham) {
  if (ham.terms.empty())
    throw Error(errc::empty_hamiltonian, "no terms to exponentiate");
  TrotterStepCost cost;
  for (const auto& term : ham.terms) {
    const auto w = static_cast<std::uint64_t>(term.string.weight());
    const auto xy = static_cast<std::uint64_t>(term.string.count(Axis::X) +
                                               term.string.count(Axis::Y));
    cost.n_r += 1;
    cost.n_c += 2 * (w - 1);
    cost.n_cliff += 2 * xy;
  }
  return cost;
}

/// ceil(n_o^{3/2}) first-order Trotter steps.
inline std::int64_t num_trotter_steps(std::int64_t n_o) {
  if (n_o < 1) throw std::invalid_argument("orbital count must be >= 1");
  const auto x = static_cast<double>(n_o);
  return snap_ceil(x * std::sqrt(x));
}

/// n_b = ceil(-log2(eps_p / delta_E_R)), at least 1.
inline int bits_of_precision(double eps_p, double delta_E_R) {
  if (!(eps_p > 0.0) || !(delta_E_R > 0.0) || eps_p >= delta_E_R)
    throw Error(errc::invalid_precision,
                "need 0 < eps_p < delta_E_R, got eps_p=" + std::to_string(eps_p) +
                    " delta_E_R=" + std::to_string(delta_E_R));
  const auto bits = snap_ceil(-std::log2(eps_p / delta_E_R));
  return static_cast<int>(bits < 1 ? 1 : bits);
}

/// Known-eigenstate readout register: n_a = n_b + ceil(log2(2 + 1/(2 p_f))).
inline int ancilla_count_known(int n_b, double p_f) {
  if (!(p_f > 0.0 && p_f < 1.0))
    throw Error(errc::invalid_probability, "p_f must lie in (0,1)");
  return n_b + static_cast<int>(snap_ceil(std::log2(2.0 + 1.0 / (2.0 * p_f))));
}

/// Gap-resolved register: n_a = n_b + ceil(log2(2 + eps_t^2 / (2 p_f gap^2))).
inline int ancilla_count_gap(int n_b, double p_f, double eps_t, double delta_E) {
  if (delta_E <= 0.0)
    throw Error(errc::zero_gap, "excitation gap must be positive");
  if (!(p_f > 0.0 && p_f < 1.0))
    throw Error(errc::invalid_probability, "p_f must lie in (0,1)");
  if (eps_t < 0.0)
    throw Error(errc::invalid_precision, "eps_t must be non-negative");
  const double arg = 2.0 + eps_t * eps_t / (2.0 * p_f * delta_E * delta_E);
  return n_b + static_cast<int>(snap_ceil(std::log2(arg)));
}

/// Scales one step's cost to the full phase-estimation run. Gate totals and
/// depth all scale by n_steps * n_a (each ancilla controls one evolution).
/// depth_lanes sets the single-qubit batching width for the depth figure;
/// 0 batches across the full register (one lane per qubit).
inline LogicalEstimate assemble_logical(const TrotterStepCost& step, std::int64_t n_o,
                                        std::uint64_t n_qubits,
                                        const PrecisionConfig& cfg, double eps_ss,
                                        std::uint64_t depth_lanes = 0) {
  if (step.n_r == 0)
    throw Error(errc::empty_hamiltonian, "step cost has no rotations");

  LogicalEstimate est;
  est.n_steps = num_trotter_steps(n_o);
  est.n_b = bits_of_precision(cfg.eps_p, cfg.delta_E_R);
  est.n_a = cfg.delta_E
                ? ancilla_count_gap(est.n_b, cfg.p_f, cfg.eps_t, *cfg.delta_E)
                : ancilla_count_known(est.n_b, cfg.p_f);

  const auto scale =
      static_cast<std::uint64_t>(est.n_steps) * static_cast<std::uint64_t>(est.n_a);
  const auto lanes = depth_lanes ? depth_lanes : n_qubits;
  est.total_rotations = step.n_r * scale;
  est.total_cnots = step.n_c * scale;
  est.logical_depth = logical_depth_per_step(step.n_r, step.n_c, lanes) * scale;
  est.total_t_gates = t_count(est.total_rotations, eps_ss);
  est.logical_qubits = n_qubits + static_cast<std::uint64_t>(est.n_a);
  return est;
}

}  // namespace qre
