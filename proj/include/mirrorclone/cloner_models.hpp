#pragma once

// Closed-form optimal 1 -> 2 cloners: the mirror phase-covariant cloner
// (MPCC), the phase-covariant cloner (PCC) and the universal cloner (UC).

#include "mirrorclone/choi.hpp"
#include "mirrorclone/quantum_core.hpp"

#include <array>

namespace mirrorclone {

/// Parameters of the optimal MPCC at polar angle theta.
struct MpccParams {
  double theta = 0.0;
  /// P = 2 - 4 cos^2 + 3 cos^4, in [2/3, 2].
  double p = 1.0;
  /// The four stationary points Lambda_{i+2j} of the fidelity.
  std::array<double, 4> candidates{};
  double lambda = 1.0;
  /// sqrt(1 - lambda^2)
  double lambda_bar = 0.0;
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
};

MpccParams mpcc_params(double theta);

/// Fidelity of the symmetric cloner family (parametrized by Lambda) averaged
/// over the mirror prior. Valid for any Lambda in [-1, 1].
double fidelity_of_lambda(double theta, double lambda);

/// A / sqrt(A^2 + 2 C^2); recovers Lambda from Choi-matrix entries.
double lambda_from_choi_entries(double a, double c);

double mpcc_fidelity(double theta);

/// Choi matrix of the isometry family at a given Lambda:
///   |0> -> L|00>|0> + Lbar|psi+>|1>,  |1> -> L|11>|1> + Lbar|psi+>|0>.
ChoiMatrix choi_from_lambda(double lambda);
Isometry isometry_from_lambda(double lambda);

ChoiMatrix mpcc_choi(double theta);

/// Output ordering (clone1, clone2, ancilla).
PureState mpcc_isometry_apply(double theta, const PureState& psi);

struct CloneResult {
  DensityMatrix joint;   // rho_out on (clone1, clone2)
  DensityMatrix first;   // rho_1
  DensityMatrix second;  // rho_2
};

CloneResult clone(const PureState& psi, const ChoiMatrix& chi);

/// Closed-form clone state at (theta, phi).
Matrix2 mpcc_clone_density(double theta, double phi);
Bloch mpcc_clone_bloch(double theta, double phi);

/// sgn(pi - 2 theta), with +1 at theta = pi/2 (any value in [-1, 1] is
/// optimal there and the fidelity does not depend on it).
double pcc_hemisphere_sign(double theta);
Bloch pcc_clone_bloch(double theta, double phi);
double pcc_fidelity(double theta);

/// (2M + 1) / (3M) for 1 -> M universal cloning.
double uc_fidelity(int copies);
Bloch uc_clone_bloch(double theta, double phi);
/// The 1 -> 2 universal cloner in Choi form.
ChoiMatrix uc_choi();

enum class ClonerKind { Mpcc, Pcc, Uc };

/// One of the three reference machines evaluated for inputs at polar angle
/// theta. The UC ignores theta except in clone_bloch.
class ClonerModel {
 public:
  static ClonerModel mpcc(double theta);
  static ClonerModel pcc(double theta);
  static ClonerModel uc(double theta, int copies = 2);

  ClonerKind kind() const { return kind_; }
  double theta() const { return theta_; }
  int copies() const { return copies_; }

  double fidelity() const;
  /// Bloch vector of a clone of the input at azimuth phi. The UC form is
  /// the 1 -> 2 one regardless of copies().
  Bloch clone_bloch(double phi) const;

 private:
  ClonerModel(ClonerKind kind, double theta, int copies)
      : kind_(kind), theta_(theta), copies_(copies) {}

  ClonerKind kind_;
  double theta_;
  int copies_;
};

}  // namespace mirrorclone
