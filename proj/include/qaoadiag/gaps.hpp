#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qaoadiag/events.hpp"
#include "qaoadiag/model.hpp"
#include "qaoadiag/types.hpp"

namespace qaoadiag {

// Sparse row access to the perturbing operator in the edge eigenbasis.
// row(i) returns the nonzero off-diagonal entries <i|P|j>, j != i.
struct ElementOracle {
  int dim = 0;
  std::function<std::vector<std::pair<int, cxd>>(int)> row;
  std::function<double(int)> diagonal;
};

// X-mixer oracle over bitstring indices (qubit 0 = most significant bit).
ElementOracle x_mixer_oracle(int n, double a, double b);
// Generic oracle from a dense matrix; entries below `nonzero_tol` * max|P|
// are treated as zero.
ElementOracle dense_oracle(const Matrix& p, double nonzero_tol = 1e-12);

// The frame an edge event is analyzed in: edge-Hamiltonian eigenvalues plus
// the other operator expressed in that eigenbasis. For f = 1 the roles are
// (cost eigenvalues, mixer); for f = 0 they are exchanged.
struct EdgeFrame {
  RealVector edge_energies;
  ElementOracle perturber;
};

EdgeFrame edge_frame(const HamiltonianPair& pair, int edge);

// Ordered intermediate states of one shortest coupling path from x to y
// (excluding both endpoints) and the product of hop elements P(S).
struct CouplingPath {
  std::vector<int> states;
  cxd product{0.0, 0.0};
};

struct CouplingSearch {
  int k = -1;  // -1: uncoupled
  std::vector<CouplingPath> paths;
};

// BFS distance over the nonzero-element graph and enumeration of all
// shortest paths via the layered DAG. Throws BudgetError beyond `path_cap`.
CouplingSearch coupling_distance_and_paths(const ElementOracle& oracle, int x, int y,
                                           long long path_cap = 1000000);

// Q^n(b_1..b_n) = 1/(n+1)! - sum_m (1 + i b_m) / (2 m!) Q^{n-m}(b_{m+1}..b_n).
cxd q_poly(const std::vector<double>& b);

struct EffectiveCoupling {
  cxd value{0.0, 0.0};
  int k = -1;
  bool reliable = true;  // false when some cot argument was singular
  long long path_count = 0;
};

// c_eff = sum_S P(S) Q^{k-1}(a_1^S, ..., a_{k-1}^S) with
// a_j = cot(Delta*/2 (E_{s_j} - E_x)). Refuses degenerate wraps.
EffectiveCoupling effective_coupling(const EdgeFrame& frame, const WrapEvent& event,
                                     long long path_cap = 1000000);

// Fills coupling_distance, c_eff, gamma_ratio (and the reliability flag).
void annotate_event(const HamiltonianPair& pair, WrapEvent& event,
                    long long path_cap = 1000000);

struct GapPrediction {
  double delta_offset = 0.0;     // delta = Delta - Delta*
  double magnitude = 0.0;        // predicted |g| (chordal)
  double location_f = 1.0;       // predicted gap location along f
  int k = 1;
  bool k1_regime = false;
};

// |g| = 2|c_eff| |delta/(Gamma-1)|^k for k >= 2, with the closed two-level
// form when k = 1. Throws NumericsError when Gamma is within 1e-6 of 1.
GapPrediction gap_prediction(const HamiltonianPair& pair, const WrapEvent& event,
                             double delta_offset);

// Swap-interval length at fixed Delta = Delta* + delta for overlap ratio
// ctilde_sq = |c_x|^2 / |c_x0|^2 (normalized form). The unnormalized variant
// evaluates the same expression on the raw |c_x|^2.
double swap_interval(const HamiltonianPair& pair, const WrapEvent& event,
                     double delta_offset, double ctilde_sq);
double swap_interval_unnormalized(const HamiltonianPair& pair, const WrapEvent& event,
                                  double delta_offset, double cx_sq);

struct EigenvectorCorrection {
  double cx0_sq = 1.0;
  std::vector<int> flagged_terms;  // j with a near-zero sine denominator
};

// First-order dressing of the edge eigenstate x at gap location f*:
// |c_x0|^2 = 1 - sum_j (Delta (1-f*) P_xj / (2 sin(Delta f* (E_j-E_x)/2)))^2.
EigenvectorCorrection eigenvector_correction(const HamiltonianPair& pair,
                                             const WrapEvent& event, double f_star);

}  // namespace qaoadiag
