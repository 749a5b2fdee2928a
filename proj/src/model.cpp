#include "qaoadiag/model.hpp"

#include <Eigen/Eigenvalues>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qaoadiag/rng.hpp"

namespace qaoadiag {

using nlohmann::json;

namespace {

void check_hermitian(const Matrix& m, double tol, const std::string& what) {
  Eigen::Index bi = 0, bj = 0;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double dev = std::abs(m(i, j) - std::conj(m(j, i)));
      if (dev > worst) {
        worst = dev;
        bi = i;
        bj = j;
      }
    }
  }
  if (worst > tol) {
    std::ostringstream os;
    os << what << " is not Hermitian: |M(" << bi << "," << bj << ") - conj(M(" << bj
       << "," << bi << "))| = " << worst << " exceeds " << tol;
    throw UsageError(os.str());
  }
}

}  // namespace

Eigensystem hermitian_eigensystem(const Matrix& h, double residual_tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericsError("eigendecomposition failed");
  Eigensystem eig{solver.eigenvalues(), solver.eigenvectors()};
  const double scale = std::max(eig.values.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index j = 0; j < h.rows(); ++j) {
    const double res =
        (h * eig.vectors.col(j) - eig.values(j) * eig.vectors.col(j)).norm();
    if (res > residual_tol * scale)
      throw NumericsError("eigenpair residual " + std::to_string(res) +
                          " exceeds tolerance");
  }
  return eig;
}

void IsingInstance::validate() const {
  if (n < 1) throw UsageError("Ising instance needs n >= 1");
  if (static_cast<int>(h.size()) != n)
    throw UsageError("Ising fields h must have length n");
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& c : couplings) {
    if (c.i < 0 || c.j < 0 || c.i >= n || c.j >= n)
      throw UsageError("Ising coupling index out of range");
    if (c.i >= c.j) throw UsageError("Ising couplings must have i < j");
    if (seen[c.i][c.j]) throw UsageError("duplicate Ising coupling");
    seen[c.i][c.j] = true;
  }
}

double IsingInstance::energy(std::uint64_t basis_index) const {
  auto spin = [&](int q) {
    // Qubit 0 is the most significant bit; bit 0 -> s = +1.
    const int bit = static_cast<int>((basis_index >> (n - 1 - q)) & 1u);
    return 1.0 - 2.0 * bit;
  };
  double e = 0.0;
  for (int q = 0; q < n; ++q) e += h[q] * spin(q);
  for (const auto& c : couplings) e += c.value * spin(c.i) * spin(c.j);
  return e;
}

int IsingInstance::degree(int qubit) const {
  int d = 0;
  for (const auto& c : couplings)
    if (c.i == qubit || c.j == qubit) ++d;
  return d;
}

Component build_transverse_field_mixer(int n, double a, double b) {
  if (n < 1 || n > 14)
    throw UsageError("transverse-field mixer supports 1 <= n <= 14");
  const int d = 1 << n;
  Matrix m = Matrix::Zero(d, d);
  for (int x = 0; x < d; ++x) {
    m(x, x) = static_cast<double>(n) * a;
    for (int q = 0; q < n; ++q) m(x, x ^ (1 << (n - 1 - q))) = -b;
  }
  Component c;
  c.matrix = std::move(m);
  c.x_mixer = XMixerParams{n, a, b};
  return c;
}

Component build_diagonal_cost(const RealVector& energies) {
  if (energies.size() < 2) throw UsageError("diagonal cost needs at least 2 levels");
  Component c;
  c.matrix = energies.cast<cxd>().asDiagonal();
  c.diagonal = energies;
  return c;
}

RealVector ising_diagonal(const IsingInstance& inst) {
  inst.validate();
  if (inst.n > 14) throw UsageError("Ising expansion supports n <= 14");
  const int d = 1 << inst.n;
  RealVector diag(d);
  for (int x = 0; x < d; ++x) diag(x) = inst.energy(static_cast<std::uint64_t>(x));
  return diag;
}

Component build_ising(const IsingInstance& inst) {
  Component c = build_diagonal_cost(ising_diagonal(inst));
  c.ising = inst;
  return c;
}

Component build_dense(Matrix m) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw UsageError("dense component must be square with dim >= 2");
  Component c;
  c.matrix = std::move(m);
  return c;
}

IsingInstance sample_sparse_ising(int n, std::uint64_t seed, bool post_process) {
  if (n < 2) throw UsageError("sparse Ising sampling needs n >= 2");
  Rng rng(seed);
  IsingInstance inst;
  inst.n = n;
  inst.seed = seed;
  inst.h.resize(n);
  for (int q = 0; q < n; ++q) inst.h[q] = rng.uniform(-1.0, 1.0);
  const double prob = std::min(1.0, 3.0 / n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(prob))
        inst.couplings.push_back({i, j, rng.uniform(-1.0, 1.0)});
  if (post_process) {
    for (int q = 0; q < n; ++q) {
      if (inst.degree(q) > 0) continue;
      int partner = static_cast<int>(rng.below(n - 1));
      if (partner >= q) ++partner;
      inst.couplings.push_back({std::min(q, partner), std::max(q, partner),
                                rng.uniform(-1.0, 1.0)});
    }
  }
  inst.validate();
  return inst;
}

HamiltonianPair::HamiltonianPair(Component mixer, Component cost, std::string label,
                                 const Tolerances& tol)
    : mixer_(std::move(mixer)), cost_(std::move(cost)), label_(std::move(label)) {
  if (mixer_.matrix.rows() != cost_.matrix.rows())
    throw UsageError("mixer and cost dimensions differ");
  check_hermitian(mixer_.matrix, tol.hermiticity, "mixer");
  check_hermitian(cost_.matrix, tol.hermiticity, "cost");
  mixer_eig_ = hermitian_eigensystem(mixer_.matrix, tol.eigen_residual);
  cost_eig_ = hermitian_eigensystem(cost_.matrix, tol.eigen_residual);
  basis_change_ = mixer_eig_.vectors.adjoint() * cost_eig_.vectors;
}

double HamiltonianPair::cost_range() const {
  return cost_eig_.values(dim() - 1) - cost_eig_.values(0);
}

double HamiltonianPair::mixer_range() const {
  return mixer_eig_.values(dim() - 1) - mixer_eig_.values(0);
}

PairPtr make_pair(Component mixer, Component cost, std::string label,
                  const Tolerances& tol) {
  return std::make_shared<const HamiltonianPair>(std::move(mixer), std::move(cost),
                                                 std::move(label), tol);
}

namespace {

json dense_to_json(const Matrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"type", "dense"}, {"data", data}};
}

json component_to_json(const Component& c) {
  if (c.x_mixer) {
    return {{"type", "x_mixer"},
            {"n", c.x_mixer->n},
            {"a", c.x_mixer->a},
            {"b", c.x_mixer->b}};
  }
  if (c.ising) {
    json couplings = json::array();
    for (const auto& cpl : c.ising->couplings)
      couplings.push_back({cpl.i, cpl.j, cpl.value});
    json out = {{"type", "ising"},
                {"n", c.ising->n},
                {"h", c.ising->h},
                {"J", couplings}};
    if (c.ising->seed) out["seed"] = *c.ising->seed;
    return out;
  }
  if (c.diagonal) {
    std::vector<double> e(c.diagonal->data(), c.diagonal->data() + c.diagonal->size());
    return {{"type", "diagonal"}, {"energies", e}};
  }
  return dense_to_json(c.matrix);
}

Component component_from_json(const json& j, int dim) {
  if (!j.contains("type")) throw UsageError("component is missing \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "x_mixer") {
    const int n = j.at("n").get<int>();
    Component c = build_transverse_field_mixer(n, j.at("a").get<double>(),
                                               j.at("b").get<double>());
    if ((1 << n) != dim) throw UsageError("x_mixer size disagrees with dim");
    return c;
  }
  if (type == "diagonal") {
    const auto e = j.at("energies").get<std::vector<double>>();
    if (static_cast<int>(e.size()) != dim)
      throw UsageError("diagonal energies length disagrees with dim");
    return build_diagonal_cost(Eigen::Map<const RealVector>(e.data(), e.size()));
  }
  if (type == "ising") {
    IsingInstance inst;
    inst.n = j.at("n").get<int>();
    inst.h = j.at("h").get<std::vector<double>>();
    for (const auto& cpl : j.at("J"))
      inst.couplings.push_back(
          {cpl.at(0).get<int>(), cpl.at(1).get<int>(), cpl.at(2).get<double>()});
    if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
    Component c = build_ising(inst);
    if ((1 << inst.n) != dim) throw UsageError("ising size disagrees with dim");
    return c;
  }
  if (type == "dense") {
    const auto& data = j.at("data");
    if (static_cast<int>(data.size()) != dim * dim)
      throw UsageError("dense data length disagrees with dim*dim");
    Matrix m(dim, dim);
    int idx = 0;
    for (int i = 0; i < dim; ++i)
      for (int jj = 0; jj < dim; ++jj, ++idx)
        m(i, jj) = cxd(data[idx].at(0).get<double>(), data[idx].at(1).get<double>());
    return build_dense(std::move(m));
  }
  throw UsageError("unknown component type \"" + type + "\"");
}

}  // namespace

std::string pair_to_json(const HamiltonianPair& pair) {
  json j = {{"label", pair.label()},
            {"dim", pair.dim()},
            {"mixer", component_to_json(pair.mixer_component())},
            {"cost", component_to_json(pair.cost_component())}};
  return j.dump(2) + "\n";
}

PairPtr pair_from_json(const std::string& text, const Tolerances& tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed instance JSON: ") + e.what());
  }
  try {
    const int dim = j.at("dim").get<int>();
    if (dim < 2 || dim > (1 << 14)) throw UsageError("dim out of supported range");
    return make_pair(component_from_json(j.at("mixer"), dim),
                     component_from_json(j.at("cost"), dim),
                     j.value("label", std::string("pair")), tol);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed instance JSON: ") + e.what());
  }
}

PairPtr load_pair(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return pair_from_json(buf.str(), tol);
}

void save_pair(const HamiltonianPair& pair, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write instance file " + path);
  out << pair_to_json(pair);
}

}  // namespace qaoadiag
