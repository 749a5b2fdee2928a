#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qaoadiag/model.hpp"
#include "qaoadiag/types.hpp"

namespace qaoadiag {

// Angle lists gamma_1..gamma_p, beta_1..beta_p plus the generating recipe.
struct Schedule {
  enum class Kind { Ramp, Sampled };
  Kind kind = Kind::Ramp;
  int p = 0;
  double delta = 0.0;  // meaningful for ramps
  RealVector gammas;
  RealVector betas;
};

// Linear ramp: gamma_j = Delta*f_j, beta_j = Delta*(1-f_j), f_j = j/(p+1).
// p = 0 gives the empty schedule (identity circuit).
Schedule ramp_schedule(double delta, int p);

using AngleFn = std::function<double(double)>;
Schedule sampled_schedule(const AngleFn& gamma_fn, const AngleFn& beta_fn, int p);

struct QaoaResult {
  Vector final_state;
  double ground_overlap_sq = 0.0;
  double expected_cost = 0.0;
  double log_infidelity = 0.0;  // -ln|1 - ground_overlap_sq|, clamped finite
  std::optional<RealVector> per_eigenstate_overlap_sq;
};

// One QAOA layer: cost unitary, then mixer unitary.
Vector qaoa_step(const HamiltonianPair& pair, double beta, double gamma,
                 const Vector& state);

// Mixer ground state; errors if the ground eigenvalue is degenerate within
// tau_deg_rel * spectral range.
Vector mixer_ground_state(const HamiltonianPair& pair, double tau_deg_rel = 1e-9);

// Applies steps j = 1..p in order and evaluates metrics against the cost
// eigensystem. `stop_after_step`, when set, truncates the circuit (used by
// mid-schedule probes).
QaoaResult evolve(const HamiltonianPair& pair, const Schedule& schedule,
                  const Vector& initial, bool per_eigenstate = false,
                  std::optional<int> stop_after_step = std::nullopt);

// Same, starting from the (unique) mixer ground state.
QaoaResult evolve(const HamiltonianPair& pair, const Schedule& schedule,
                  bool per_eigenstate = false,
                  std::optional<int> stop_after_step = std::nullopt);

QaoaResult evolve_general(const HamiltonianPair& pair, const AngleFn& gamma_fn,
                          const AngleFn& beta_fn, int p, bool per_eigenstate = false);

// Metrics of a bare state (the p = 0 result).
QaoaResult state_metrics(const HamiltonianPair& pair, const Vector& state,
                         bool per_eigenstate = false);

// Squared overlap with the cost ground eigenspace (degenerate levels within
// tau_deg_rel * range are grouped).
double ground_space_overlap(const HamiltonianPair& pair, const Vector& state,
                            double tau_deg_rel = 1e-9);

}  // namespace qaoadiag
