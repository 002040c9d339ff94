#include "mirrorclone/choi.hpp"

#include <cmath>

namespace mirrorclone {

ChoiMatrix::ChoiMatrix(const Matrix8& entries) : entries_(entries) {
  if (!entries_.allFinite()) throw DomainError("ChoiMatrix: non-finite entry");
  if (hermiticity_defect(entries_) > kAlgebraicTol)
    throw DomainError("ChoiMatrix: not Hermitian");
  if (eigenvalues_hermitian(entries_).minCoeff() < -kSpectralTol)
    throw DomainError("ChoiMatrix: not positive semidefinite");
  if (trace_preservation_defect(entries_) > kSpectralTol)
    throw DomainError("ChoiMatrix: not trace preserving");
}

Matrix2 trace_out(const Matrix8& chi) {
  Matrix2 y;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) y(i, j) = chi.block<4, 4>(4 * i, 4 * j).trace();
  return y;
}

double trace_preservation_defect(const Matrix8& chi) {
  return (trace_out(chi) - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

ChoiMatrix choi_from_isometry(const Isometry& v) {
  Matrix8 chi = Matrix8::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // E(|i><j|) = Tr_anc(V|i><j|V^dagger); ancilla is the last qubit.
      const Matrix outer = v.col(i) * v.col(j).adjoint();
      chi.block<4, 4>(4 * i, 4 * j) = partial_trace(outer, {1, 2});
    }
  }
  chi = (0.5 * (chi + chi.adjoint())).eval();
  return ChoiMatrix(chi);
}

DensityMatrix apply_channel(const ChoiMatrix& chi,
                            const DensityMatrix& rho_in) {
  if (rho_in.dim() != 2)
    throw DimensionError("apply_channel: input must be a single qubit");
  const Matrix8 lifted =
      kron(rho_in.entries().transpose(), Matrix::Identity(4, 4));
  Matrix out = partial_trace(Matrix(chi.entries() * lifted), {2, 3});
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out));
}

Matrix2 inverse_sqrt_psd(const Matrix2& m, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Matrix2> solver(m);
  const Eigen::Vector2d w = solver.eigenvalues();
  const double top = w.cwiseAbs().maxCoeff();
  Eigen::Vector2cd inv;
  for (int k = 0; k < 2; ++k)
    inv(k) = w(k) > cutoff * top ? 1.0 / std::sqrt(w(k)) : 0.0;
  return solver.eigenvectors() * inv.asDiagonal() *
         solver.eigenvectors().adjoint();
}

Matrix8 normalize_trace_preserving(const Matrix8& chi, double cutoff) {
  const Matrix2 y = inverse_sqrt_psd(trace_out(chi), cutoff);
  Matrix8 k = Matrix8::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      k.block<4, 4>(4 * i, 4 * j) =
          y(i, j) * Eigen::Matrix<Complex, 4, 4>::Identity();
  Matrix8 out = k * chi * k;
  return 0.5 * (out + out.adjoint());
}

ChoiMatrix random_choi(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix8 g;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  return ChoiMatrix(normalize_trace_preserving(g * g.adjoint()));
}

}  // namespace mirrorclone
