#pragma once

// Priors over input qubits and the score operator R for which the
// prior-averaged single-clone fidelity of a channel is Tr(chi R).

#include "mirrorclone/choi.hpp"
#include "mirrorclone/quantum_core.hpp"

#include <optional>
#include <vector>

namespace mirrorclone {

enum class PriorKind { Universal, PhaseCovariant, MirrorPhaseCovariant };

/// A Dirac atom of the polar-angle distribution; the azimuth is uniform.
struct PolarAtom {
  double theta;
  double weight;
};

class PriorDistribution {
 public:
  /// Density sin(vartheta)/2 in the polar angle.
  static PriorDistribution universal();
  /// Single atom at theta.
  static PriorDistribution phase_covariant(double theta);
  /// Equal atoms at theta and pi - theta.
  static PriorDistribution mirror(double theta);

  PriorKind kind() const { return kind_; }
  /// Unset for the universal prior.
  std::optional<double> theta() const { return theta_; }
  const std::vector<PolarAtom>& atoms() const { return atoms_; }

 private:
  PriorDistribution(PriorKind kind, std::optional<double> theta,
                    std::vector<PolarAtom> atoms)
      : kind_(kind), theta_(theta), atoms_(std::move(atoms)) {}

  PriorKind kind_;
  std::optional<double> theta_;
  std::vector<PolarAtom> atoms_;
};

/// Real symmetric 8x8 score operator on (in, out1, out2).
class FidelityOperator {
 public:
  explicit FidelityOperator(const RealMatrix8& entries,
                            std::optional<double> theta = std::nullopt);

  const RealMatrix8& entries() const { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }
  Matrix8 complex() const { return entries_.cast<Complex>(); }
  std::optional<double> theta() const { return theta_; }

 private:
  RealMatrix8 entries_;
  std::optional<double> theta_;
};

/// Closed-form score matrix for inputs on the cone of polar angle theta.
FidelityOperator r_theta(double theta);

/// Mirror: (r_theta + r_{pi-theta})/2. Phase-covariant: r_theta.
/// Universal: quadrature.
FidelityOperator score_operator(const PriorDistribution& g);

inline constexpr int kDefaultAzimuthNodes = 64;
inline constexpr int kDefaultPolarNodes = 32;

/// Builds R directly from its integral definition: the prior average of
///   (1/2) rho_in^T (x) (|psi><psi| (x) 1 + 1 (x) |psi><psi|)
/// with the trapezoidal rule in phi and Gauss-Legendre in cos(vartheta)
/// for the universal prior.
FidelityOperator score_operator_quadrature(
    const PriorDistribution& g, int azimuth_nodes = kDefaultAzimuthNodes,
    int polar_nodes = kDefaultPolarNodes);

/// Re Tr(chi R).
double average_fidelity(const ChoiMatrix& chi, const FidelityOperator& r);

/// Applies chi to sampled input states and averages (F1 + F2)/2 over the
/// prior. `phase_offset` shifts the azimuthal sampling grid.
double average_fidelity_direct(const ChoiMatrix& chi,
                               const PriorDistribution& g,
                               int azimuth_nodes = kDefaultAzimuthNodes,
                               double phase_offset = 0.0,
                               int polar_nodes = kDefaultPolarNodes);

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Legendre rule on [-1, 1] (Golub-Welsch).
QuadratureRule gauss_legendre(int n);

/// Permutation swapping the two output qubits.
RealMatrix8 output_swap();

}  // namespace mirrorclone
