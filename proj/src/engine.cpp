#include "qaoadiag/engine.hpp"

namespace qaoadiag {

Schedule ramp_schedule(double delta, int p) {
  if (p < 0) throw UsageError("schedule needs p >= 0");
  if (delta < 0) throw UsageError("schedule needs delta >= 0");
  Schedule s;
  s.kind = Schedule::Kind::Ramp;
  s.p = p;
  s.delta = delta;
  s.gammas.resize(p);
  s.betas.resize(p);
  for (int j = 1; j <= p; ++j) {
    const double f = static_cast<double>(j) / (p + 1);
    s.gammas(j - 1) = delta * f;
    s.betas(j - 1) = delta * (1.0 - f);
  }
  return s;
}

Schedule sampled_schedule(const AngleFn& gamma_fn, const AngleFn& beta_fn, int p) {
  if (p < 0) throw UsageError("schedule needs p >= 0");
  Schedule s;
  s.kind = Schedule::Kind::Sampled;
  s.p = p;
  s.gammas.resize(p);
  s.betas.resize(p);
  for (int j = 1; j <= p; ++j) {
    const double f = static_cast<double>(j) / (p + 1);
    s.gammas(j - 1) = gamma_fn(f);
    s.betas(j - 1) = beta_fn(f);
  }
  return s;
}

namespace {

inline Vector phase_apply(const RealVector& eigenvalues, double angle, Vector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) *= std::exp(cxd(0.0, -angle * eigenvalues(i)));
  return v;
}

// Runs the circuit keeping the state in the cost eigenbasis:
//   chi' = W^dag D_beta W D_gamma chi,  W = Vm^dag Vc.
Vector evolve_cost_basis(const HamiltonianPair& pair, const Schedule& schedule,
                         Vector chi, int steps) {
  const Matrix& w = pair.basis_change();
  const RealVector& lm = pair.mixer_eigensystem().values;
  const RealVector& lc = pair.cost_eigensystem().values;
  for (int j = 0; j < steps; ++j) {
    chi = phase_apply(lc, schedule.gammas(j), std::move(chi));
    Vector in_mixer = w * chi;
    in_mixer = phase_apply(lm, schedule.betas(j), std::move(in_mixer));
    chi = w.adjoint() * in_mixer;
  }
  return chi;
}

int ground_block_size(const HamiltonianPair& pair, double tau_deg_rel = 1e-9) {
  const RealVector& values = pair.cost_eigensystem().values;
  const double tol = tau_deg_rel * std::max(pair.cost_range(), 1e-300);
  int size = 1;
  while (size < pair.dim() && values(size) - values(0) <= tol) ++size;
  return size;
}

}  // namespace

Vector qaoa_step(const HamiltonianPair& pair, double beta, double gamma,
                 const Vector& state) {
  if (state.size() != pair.dim()) throw UsageError("state dimension mismatch");
  const Eigensystem& me = pair.mixer_eigensystem();
  const Eigensystem& ce = pair.cost_eigensystem();
  Vector v = ce.vectors * phase_apply(ce.values, gamma, ce.vectors.adjoint() * state);
  return me.vectors * phase_apply(me.values, beta, me.vectors.adjoint() * v);
}

Vector mixer_ground_state(const HamiltonianPair& pair, double tau_deg_rel) {
  const Eigensystem& me = pair.mixer_eigensystem();
  const double range = pair.mixer_range();
  if (pair.dim() > 1 && me.values(1) - me.values(0) <= tau_deg_rel * std::max(range, 1e-300))
    throw NumericsError(
        "mixer ground state is degenerate; pass an explicit initial state");
  return me.vectors.col(0);
}

double ground_space_overlap(const HamiltonianPair& pair, const Vector& state,
                            double tau_deg_rel) {
  const Eigensystem& ce = pair.cost_eigensystem();
  const double tol = tau_deg_rel * std::max(pair.cost_range(), 1e-300);
  double overlap = 0.0;
  for (int j = 0; j < pair.dim(); ++j) {
    if (ce.values(j) - ce.values(0) > tol) break;
    overlap += std::norm(ce.vectors.col(j).dot(state));
  }
  return overlap;
}

QaoaResult state_metrics(const HamiltonianPair& pair, const Vector& state,
                         bool per_eigenstate) {
  QaoaResult r;
  r.final_state = state;
  r.ground_overlap_sq = ground_space_overlap(pair, state);
  const Vector in_cost = pair.cost_eigensystem().vectors.adjoint() * state;
  r.expected_cost =
      (in_cost.array().abs2() * pair.cost_eigensystem().values.array()).sum();
  const double miss = std::max(std::abs(1.0 - r.ground_overlap_sq), 1e-300);
  r.log_infidelity = -std::log(miss);
  if (per_eigenstate) r.per_eigenstate_overlap_sq = in_cost.array().abs2().matrix();
  return r;
}

QaoaResult evolve(const HamiltonianPair& pair, const Schedule& schedule,
                  const Vector& initial, bool per_eigenstate,
                  std::optional<int> stop_after_step) {
  if (initial.size() != pair.dim()) throw UsageError("initial state dimension mismatch");
  const int steps = stop_after_step ? std::min(*stop_after_step, schedule.p) : schedule.p;
  Vector chi = pair.cost_eigensystem().vectors.adjoint() * initial;
  chi = evolve_cost_basis(pair, schedule, std::move(chi), steps);
  QaoaResult r;
  r.final_state = pair.cost_eigensystem().vectors * chi;
  r.ground_overlap_sq = chi.head(ground_block_size(pair)).squaredNorm();
  r.expected_cost = (chi.array().abs2() * pair.cost_eigensystem().values.array()).sum();
  const double miss = std::max(std::abs(1.0 - r.ground_overlap_sq), 1e-300);
  r.log_infidelity = -std::log(miss);
  if (per_eigenstate) r.per_eigenstate_overlap_sq = chi.array().abs2().matrix();
  return r;
}

QaoaResult evolve(const HamiltonianPair& pair, const Schedule& schedule,
                  bool per_eigenstate, std::optional<int> stop_after_step) {
  return evolve(pair, schedule, mixer_ground_state(pair), per_eigenstate,
                stop_after_step);
}

QaoaResult evolve_general(const HamiltonianPair& pair, const AngleFn& gamma_fn,
                          const AngleFn& beta_fn, int p, bool per_eigenstate) {
  return evolve(pair, sampled_schedule(gamma_fn, beta_fn, p), per_eigenstate);
}

}  // namespace qaoadiag
