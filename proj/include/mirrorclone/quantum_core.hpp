#pragma once

// Small dense complex linear algebra for registers of at most three qubits.
//
// Qubits are labelled 1..n and the basis is big-endian: |q1 q2 q3> has index
// 4*q1 + 2*q2 + q3. Every state or operator in the library follows this
// ordering.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorclone {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;
using RealMatrix8 = Eigen::Matrix<double, 8, 8>;
using Bloch = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr Complex kI{0.0, 1.0};

// Tolerances shared by all modules.
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& message)
      : std::domain_error(message) {}
};

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& message)
      : std::invalid_argument(message) {}
};

/// Number of qubits for a register of dimension 2, 4 or 8; throws otherwise.
int qubit_count(Eigen::Index dim);

/// Largest absolute entry of M - M^dagger.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Kronecker product, left factor most significant.
template <typename A, typename B>
Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.template cast<typename A::Scalar>();
  return out;
}

/// Partial trace of a raw square operator on `n` qubits. `keep` lists the
/// surviving qubits (1-based); the result's qubit order follows `keep`.
/// Works on any operator, not only unit-trace ones (Choi matrices, products).
Matrix partial_trace(const Matrix& op, const std::vector<int>& keep);

/// Unit-norm state vector of 1, 2 or 3 qubits.
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  static PureState basis(int qubits, Eigen::Index index);
  /// Normalizes `v` first; throws if the norm vanishes.
  static PureState normalized(const Vector& v);

  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_(i); }
  Eigen::Index dim() const { return amplitudes_.size(); }
  int qubits() const { return qubit_count(dim()); }
  /// |psi><psi|
  Matrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Vector amplitudes_;
};

/// Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);
  static DensityMatrix from_pure(const PureState& psi);

  const Matrix& entries() const { return entries_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }
  Eigen::Index dim() const { return entries_.rows(); }
  int qubits() const { return qubit_count(dim()); }

 private:
  Matrix entries_;
};

class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries);

  const Matrix& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
};

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns, matching `values`
};

namespace pauli {
Matrix2 identity();
Matrix2 x();
Matrix2 y();
Matrix2 z();
/// Ladder operators |0><1| and |1><0| (spin raising/lowering).
Matrix2 raising();
Matrix2 lowering();
}  // namespace pauli

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
PureState ket_from_angles(double theta, double phi);

PureState tensor(const PureState& a, const PureState& b);
HermitianOperator tensor(const HermitianOperator& a,
                         const HermitianOperator& b);

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// <psi|rho|psi>
double fidelity_pure(const PureState& psi, const DensityMatrix& rho);

/// (Tr rho X, Tr rho Y, Tr rho Z) for a single qubit.
Bloch bloch_vector(const DensityMatrix& rho);
/// (1 + r.sigma)/2; does not enforce |r| <= 1.
Matrix2 from_bloch(const Bloch& r);

EigenSystem eig_hermitian(const HermitianOperator& h);
/// Accepts a raw matrix Hermitian within kSpectralTol.
EigenSystem eig_hermitian(const Matrix& h);
Eigen::VectorXd eigenvalues_hermitian(const Matrix& h);

/// exp(-i H t) from the eigendecomposition of H.
Matrix unitary_exp(const HermitianOperator& h, double t);
PureState evolve(const HermitianOperator& h, double t, const PureState& psi);

/// Largest entry of U^dagger U - 1.
double unitarity_defect(const Matrix& u);

}  // namespace mirrorclone
