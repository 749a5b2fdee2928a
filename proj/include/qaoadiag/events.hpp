#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qaoadiag/types.hpp"

namespace qaoadiag {

// One wrap-around record. Indices x, y live in the eigenbasis of the edge
// Hamiltonian (cost for f = 1, mixer for f = 0); x is the lower-energy state.
struct WrapEvent {
  double delta_star = 0.0;
  int edge = 1;  // f* in {0, 1}
  int x = 0, y = 0;
  double energy_x = 0.0, energy_y = 0.0;  // edge-Hamiltonian eigenvalues
  double diag_x = 0.0, diag_y = 0.0;      // perturber diagonal in edge basis
  int winding = 1;                        // m >= 1
  int mult_x = 1, mult_y = 1;             // eigenvalue multiplicities

  // Filled by annotation (gaps machinery + ring test).
  std::optional<int> coupling_distance;   // k; empty when uncoupled/unannotated
  std::optional<cxd> c_eff;
  std::optional<double> gamma_ratio;      // (D_x-D_y)/(E_x-E_y)
  std::optional<bool> isolated;
  bool degenerate = false;                // mult_x > 1 or mult_y > 1
  bool involves_ground = false;
  bool exceeds_ground_multiplicity = false;  // "pushed out" bookkeeping
  bool c_eff_reliable = true;             // false near a cot singularity
  bool ring_ceff_mismatch = false;        // isolation cross-check disagreed
  std::string note;

  double energy_gap() const { return energy_y - energy_x; }
};

}  // namespace qaoadiag
