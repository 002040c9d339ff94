#pragma once

// Optimality of cloning channels: the Lagrange-multiplier certificate for the
// closed-form MPCC, and an independent fixed-point maximizer of Tr(chi R)
// over trace-preserving completely positive maps.

#include "mirrorclone/choi.hpp"
#include "mirrorclone/fidelity_functional.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace mirrorclone {

/// lambda = Tr_out(R chi), an operator on the input qubit.
Matrix2 lagrange_operator(const ChoiMatrix& chi, const FidelityOperator& r);

/// Largest entry of lambda - (Tr lambda / 2) 1.
double proportionality_defect(const Matrix2& lambda);

struct OptimalityCertificate {
  double theta = 0.0;
  double fidelity = 0.0;        // closed-form optimum
  double lambda_scalar = 0.0;   // Re Tr(lambda) / 2
  double lambda_defect = 0.0;   // distance of lambda from a multiple of 1
  double lambda_closed_form = 0.0;  // [(1+c1^2)A + 2B + 2 s1^2 C] / 4
  double lambda_half_fidelity = 0.0;  // F / 2
  double trace_gap = 0.0;       // Tr lambda - F
  std::array<double, 8> delta_spectrum{};  // ascending
  std::array<double, 4> delta_closed_form{};  // delta_1 .. delta_4
  double spectrum_mismatch = 0.0;
  double r_bar = 0.0;
  double bound_residual = 0.0;   // |F - R11 - R22 - Rbar|
  bool psd_ok = false;
  bool saturation_ok = false;
  bool spectrum_ok = false;

  bool passed(double tol) const {
    return psd_ok && saturation_ok && spectrum_ok && bound_residual <= tol;
  }
};

/// Certificate for the closed-form MPCC at theta. Failures are recorded in
/// the flags, never thrown.
OptimalityCertificate certificate(double theta, double tol = kSpectralTol);

struct OptimizeResult {
  ChoiMatrix chi_star;
  double f_star = 0.0;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;  // |F_k - F_{k-1}| at exit
  double max_trace_defect = 0.0;  // over all iterates
  double min_eigenvalue = 0.0;    // over all iterates
  double max_f_seen = 0.0;        // over all iterates
};

struct OptimizeOptions {
  double tol = 1e-13;
  int max_iter = 20000;
  double pinv_cutoff = 1e-12;
  /// Eigen-decompose every iterate to track positivity (costly).
  bool track_positivity = false;
  /// Average each iterate over the symmetries R is found to have.
  bool exploit_symmetry = true;
};

/// Symmetries of a score operator that the optimizer can average over.
struct ScoreSymmetry {
  /// W R W^dagger = R for W = Z(phi)^dagger (x) Z(phi) (x) Z(phi).
  bool phase_covariant = false;
  /// X (x) X (x) X commutes with R.
  bool bit_flip = false;
};

ScoreSymmetry detect_symmetry(const FidelityOperator& r,
                              double tol = kAlgebraicTol);

/// Group average of chi over the detected symmetries. Preserves positivity,
/// trace preservation and Tr(chi R).
Matrix8 symmetrize(const Matrix8& chi, const ScoreSymmetry& symmetry);

/// Fixed-point iteration chi <- L^-1 R chi R L^-1, L = sqrt(Tr_out(R chi R))
/// (x) 1, from a seeded random channel. Stops when |dF| < tol.
OptimizeResult optimize_map(const FidelityOperator& r, std::uint64_t seed,
                            const OptimizeOptions& options = {});

/// Best result over seeds first_seed .. first_seed + count - 1.
OptimizeResult optimize_multistart(const FidelityOperator& r,
                                   std::uint64_t first_seed, int count,
                                   const OptimizeOptions& options = {});

/// Largest deviation of |chi| from the closed-form |chi_MPCC(theta)| entry
/// magnitudes; insensitive to the phase gauge of the outputs.
double mpcc_pattern_defect(const ChoiMatrix& chi, double theta);

}  // namespace mirrorclone
