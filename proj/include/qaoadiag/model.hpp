#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qaoadiag/types.hpp"

namespace qaoadiag {

struct Eigensystem {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns, vectors.col(j) <-> values(j)
};

// Eigendecomposition of a Hermitian matrix with validated invariants.
Eigensystem hermitian_eigensystem(const Matrix& h, double residual_tol = 1e-10);

// Ising problem on n spins, s_i = +/-1. Basis order: qubit 0 is the most
// significant bit of the basis index; bit 0 maps to s = +1.
struct IsingInstance {
  struct Coupling {
    int i = 0, j = 0;  // i < j
    double value = 0.0;
  };
  int n = 0;
  std::vector<double> h;
  std::vector<Coupling> couplings;
  std::optional<std::uint64_t> seed;

  void validate() const;
  double energy(std::uint64_t basis_index) const;
  int degree(int qubit) const;
};

struct XMixerParams {
  int n = 0;
  double a = 0.0;  // diagonal shift per qubit
  double b = 0.0;  // flip strength
};

// One side of a HamiltonianPair: the dense matrix plus the structural
// description it was built from (kept so serialization and the coupling-path
// oracles can avoid the dense form).
struct Component {
  Matrix matrix;
  std::optional<XMixerParams> x_mixer;
  std::optional<RealVector> diagonal;
  std::optional<IsingInstance> ising;
};

Component build_transverse_field_mixer(int n, double a, double b);
Component build_diagonal_cost(const RealVector& energies);
Component build_ising(const IsingInstance& inst);
Component build_dense(Matrix m);

// Expanded Ising diagonal in basis order.
RealVector ising_diagonal(const IsingInstance& inst);

// Random sparse instance: each pair coupled with probability min(1, 3/n),
// weights and fields uniform in (-1, 1); isolated qubits are post-connected
// to one uniformly chosen partner. `post_process=false` is exposed for the
// statistics of the raw draw.
IsingInstance sample_sparse_ising(int n, std::uint64_t seed, bool post_process = true);

class HamiltonianPair {
 public:
  HamiltonianPair(Component mixer, Component cost, std::string label,
                  const Tolerances& tol = Tolerances{});

  int dim() const { return static_cast<int>(mixer_.matrix.rows()); }
  const std::string& label() const { return label_; }
  const Matrix& mixer() const { return mixer_.matrix; }
  const Matrix& cost() const { return cost_.matrix; }
  const Component& mixer_component() const { return mixer_; }
  const Component& cost_component() const { return cost_; }
  const Eigensystem& mixer_eigensystem() const { return mixer_eig_; }
  const Eigensystem& cost_eigensystem() const { return cost_eig_; }
  // Cached Vm^dag * Vc, the only mixed product evolution needs.
  const Matrix& basis_change() const { return basis_change_; }
  double cost_range() const;
  double mixer_range() const;

 private:
  Component mixer_, cost_;
  std::string label_;
  Eigensystem mixer_eig_, cost_eig_;
  Matrix basis_change_;
};

using PairPtr = std::shared_ptr<const HamiltonianPair>;

PairPtr make_pair(Component mixer, Component cost, std::string label,
                  const Tolerances& tol = Tolerances{});

// Instance JSON schema:
//   {"label": .., "dim": .., "mixer": {"type": ...}, "cost": {"type": ...}}
// with dense matrices stored row-major as [re, im] pairs.
PairPtr load_pair(const std::string& path, const Tolerances& tol = Tolerances{});
void save_pair(const HamiltonianPair& pair, const std::string& path);
std::string pair_to_json(const HamiltonianPair& pair);
PairPtr pair_from_json(const std::string& text, const Tolerances& tol = Tolerances{});

}  // namespace qaoadiag
