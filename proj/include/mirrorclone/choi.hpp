#pragma once

// Choi representation of a 1 -> 2 qubit channel.
//
// The 8-dimensional space is H_in (x) H_out1 (x) H_out2, index
// 4*q_in + 2*q_out1 + q_out2. A channel E is encoded as
//   chi = sum_ij |i><j| (x) E(|i><j|)
// and acts as rho_out = Tr_in[chi (rho_in^T (x) 1_out)], the transpose
// taken in the computational basis.

#include "mirrorclone/quantum_core.hpp"

#include <random>

namespace mirrorclone {

/// Columns are the images of |0> and |1> on (clone1, clone2, ancilla).
using Isometry = Eigen::Matrix<Complex, 8, 2>;

class ChoiMatrix {
 public:
  /// Validates Hermiticity, positivity and trace preservation.
  explicit ChoiMatrix(const Matrix8& entries);

  const Matrix8& entries() const { return entries_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }

 private:
  Matrix8 entries_;
};

/// Tr_out(chi) as a 2x2 operator on the input.
Matrix2 trace_out(const Matrix8& chi);
/// max |Tr_out(chi) - 1|
double trace_preservation_defect(const Matrix8& chi);

ChoiMatrix choi_from_isometry(const Isometry& v);

/// rho_out = Tr_in[chi (rho_in^T (x) 1)], a 4x4 two-clone state.
DensityMatrix apply_channel(const ChoiMatrix& chi, const DensityMatrix& rho_in);

/// Ginibre-distributed Choi matrix, congruence-normalized to be
/// trace preserving. Full rank with probability one.
ChoiMatrix random_choi(std::mt19937_64& rng);

/// (Y^{-1/2} (x) 1) chi (Y^{-1/2} (x) 1) with Y = Tr_out(chi); eigenvalues of
/// Y below cutoff*max are dropped (pseudo-inverse).
Matrix8 normalize_trace_preserving(const Matrix8& chi, double cutoff = 1e-12);

/// Pseudo-inverse square root of a positive semidefinite 2x2 matrix.
Matrix2 inverse_sqrt_psd(const Matrix2& m, double cutoff = 1e-12);

}  // namespace mirrorclone
