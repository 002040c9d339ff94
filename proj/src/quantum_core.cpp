#include "mirrorclone/quantum_core.hpp"

#include <algorithm>
#include <cmath>

namespace mirrorclone {

int qubit_count(Eigen::Index dim) {
  switch (dim) {
    case 2:
      return 1;
    case 4:
      return 2;
    case 8:
      return 3;
    default:
      throw DimensionError("register dimension must be 2, 4 or 8, got " +
                           std::to_string(dim));
  }
}

Matrix partial_trace(const Matrix& op, const std::vector<int>& keep) {
  if (op.rows() != op.cols())
    throw DimensionError("partial_trace: operator is not square");
  const int n = qubit_count(op.rows());
  if (keep.empty() || static_cast<int>(keep.size()) >= n)
    throw DomainError("partial_trace: keep set must be a nonempty strict subset");
  std::vector<bool> kept(n + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n || kept[q])
      throw DomainError("partial_trace: invalid or repeated qubit index");
    kept[q] = true;
  }

  // Bit of qubit q (1-based, big-endian) inside a full index.
  auto bit = [n](Eigen::Index index, int q) {
    return (index >> (n - q)) & 1;
  };
  auto reduced = [&](Eigen::Index index) {
    Eigen::Index r = 0;
    for (int q : keep) r = (r << 1) | bit(index, q);
    return r;
  };
  auto traced_part = [&](Eigen::Index index) {
    Eigen::Index r = 0;
    for (int q = 1; q <= n; ++q)
      if (!kept[q]) r = (r << 1) | bit(index, q);
    return r;
  };

  const Eigen::Index dim_out = Eigen::Index{1} << keep.size();
  Matrix out = Matrix::Zero(dim_out, dim_out);
  for (Eigen::Index i = 0; i < op.rows(); ++i)
    for (Eigen::Index j = 0; j < op.cols(); ++j)
      if (traced_part(i) == traced_part(j))
        out(reduced(i), reduced(j)) += op(i, j);
  return out;
}

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  qubit_count(amplitudes_.size());
  if (!amplitudes_.allFinite())
    throw DomainError("PureState: non-finite amplitude");
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kAlgebraicTol)
    throw DomainError("PureState: amplitudes are not unit norm");
}

PureState PureState::basis(int qubits, Eigen::Index index) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  if (index < 0 || index >= dim)
    throw DomainError("PureState::basis: index out of range");
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

PureState PureState::normalized(const Vector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw DomainError("PureState::normalized: zero or non-finite vector");
  return PureState(v / norm);
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw DimensionError("DensityMatrix: not square");
  qubit_count(entries_.rows());
  if (!entries_.allFinite())
    throw DomainError("DensityMatrix: non-finite entry");
  if (hermiticity_defect(entries_) > kAlgebraicTol)
    throw DomainError("DensityMatrix: not Hermitian");
  if (std::abs(entries_.trace() - Complex{1.0}) > kAlgebraicTol)
    throw DomainError("DensityMatrix: trace is not 1");
  if (eigenvalues_hermitian(entries_).minCoeff() < -kSpectralTol)
    throw DomainError("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

HermitianOperator::HermitianOperator(Matrix entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw DimensionError("HermitianOperator: not square");
  if (!entries_.allFinite())
    throw DomainError("HermitianOperator: non-finite entry");
  if (hermiticity_defect(entries_) > kAlgebraicTol)
    throw DomainError("HermitianOperator: not Hermitian");
}

namespace pauli {
Matrix2 identity() { return Matrix2::Identity(); }
Matrix2 x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}
Matrix2 y() {
  Matrix2 m;
  m << 0, -kI, kI, 0;
  return m;
}
Matrix2 z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}
Matrix2 raising() {
  Matrix2 m;
  m << 0, 1, 0, 0;
  return m;
}
Matrix2 lowering() { return raising().transpose(); }
}  // namespace pauli

PureState ket_from_angles(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw DomainError("ket_from_angles: non-finite angle");
  Vector v(2);
  v << std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2);
  return PureState(std::move(v));
}

PureState tensor(const PureState& a, const PureState& b) {
  const Vector v = kron(a.amplitudes(), b.amplitudes());
  if (v.size() > 8) throw DimensionError("tensor: more than three qubits");
  return PureState(v);
}

HermitianOperator tensor(const HermitianOperator& a,
                         const HermitianOperator& b) {
  return HermitianOperator(kron(a.entries(), b.entries()));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  Matrix out = partial_trace(rho.entries(), keep);
  // Summing diagonal blocks may leave round-off asymmetry.
  out = (out + out.adjoint()).eval() * 0.5;
  return DensityMatrix(std::move(out));
}

double fidelity_pure(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim())
    throw DimensionError("fidelity_pure: dimension mismatch");
  const Complex f =
      psi.amplitudes().dot(rho.entries() * psi.amplitudes());
  return f.real();
}

Bloch bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw DimensionError("bloch_vector: expects a single-qubit state");
  const Matrix& m = rho.entries();
  return {(m * pauli::x()).trace().real(), (m * pauli::y()).trace().real(),
          (m * pauli::z()).trace().real()};
}

Matrix2 from_bloch(const Bloch& r) {
  return 0.5 * (pauli::identity() + r.x() * pauli::x() + r.y() * pauli::y() +
                r.z() * pauli::z());
}

EigenSystem eig_hermitian(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenSystem eig_hermitian(const Matrix& h) {
  if (h.rows() != h.cols())
    throw DimensionError("eig_hermitian: not square");
  if (hermiticity_defect(h) > kSpectralTol)
    throw DomainError("eig_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd eigenvalues_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix unitary_exp(const HermitianOperator& h, double t) {
  if (!std::isfinite(t)) throw DomainError("unitary_exp: non-finite time");
  const EigenSystem es = eig_hermitian(h);
  const Vector phases = (-kI * t * es.values.cast<Complex>()).array().exp();
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

PureState evolve(const HermitianOperator& h, double t, const PureState& psi) {
  if (h.dim() != psi.dim())
    throw DimensionError("evolve: dimension mismatch");
  return PureState(unitary_exp(h, t) * psi.amplitudes());
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace mirrorclone
