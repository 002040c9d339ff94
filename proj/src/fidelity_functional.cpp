#include "mirrorclone/fidelity_functional.hpp"

#include <algorithm>
#include <cmath>

namespace mirrorclone {
namespace {

void require_polar(double theta, const char* where) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
    throw DomainError(std::string(where) + ": theta must lie in [0, pi]");
}

// (|psi><psi| (x) 1 + 1 (x) |psi><psi|) / 2 lifted by rho^T on the input.
Matrix8 score_kernel(const PureState& psi) {
  const Matrix p = psi.projector();
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix sym = 0.5 * (kron(p, id) + kron(id, p));
  return kron(Matrix(p.transpose()), sym);
}

struct PolarSample {
  double theta;
  double weight;
};

std::vector<PolarSample> polar_samples(const PriorDistribution& g,
                                       int polar_nodes) {
  std::vector<PolarSample> out;
  if (g.kind() == PriorKind::Universal) {
    if (polar_nodes < 32)
      throw DomainError("universal prior needs at least 32 polar nodes");
    const QuadratureRule rule = gauss_legendre(polar_nodes);
    for (Eigen::Index k = 0; k < rule.nodes.size(); ++k)
      out.push_back({std::acos(rule.nodes(k)), 0.5 * rule.weights(k)});
  } else {
    for (const PolarAtom& a : g.atoms()) out.push_back({a.theta, a.weight});
  }
  return out;
}

}  // namespace

PriorDistribution PriorDistribution::universal() {
  return PriorDistribution(PriorKind::Universal, std::nullopt, {});
}

PriorDistribution PriorDistribution::phase_covariant(double theta) {
  require_polar(theta, "PriorDistribution::phase_covariant");
  return PriorDistribution(PriorKind::PhaseCovariant, theta, {{theta, 1.0}});
}

PriorDistribution PriorDistribution::mirror(double theta) {
  require_polar(theta, "PriorDistribution::mirror");
  return PriorDistribution(PriorKind::MirrorPhaseCovariant, theta,
                           {{theta, 0.5}, {kPi - theta, 0.5}});
}

FidelityOperator::FidelityOperator(const RealMatrix8& entries,
                                   std::optional<double> theta)
    : entries_(entries), theta_(theta) {
  if (!entries_.allFinite())
    throw DomainError("FidelityOperator: non-finite entry");
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kAlgebraicTol)
    throw DomainError("FidelityOperator: not symmetric");
}

FidelityOperator r_theta(double theta) {
  require_polar(theta, "r_theta");
  const double s1 = std::sin(theta);
  const double c2 = std::cos(theta / 2);
  const double s2 = std::sin(theta / 2);
  const double s1sq = s1 * s1;

  RealMatrix8 r = RealMatrix8::Zero();
  r.diagonal() << 8 * std::pow(c2, 4), 4 * c2 * c2, 4 * c2 * c2, 2 * s1sq,
      2 * s1sq, 4 * s2 * s2, 4 * s2 * s2, 8 * std::pow(s2, 4);
  for (auto [i, j] : {std::pair{0, 5}, {0, 6}, {1, 7}, {2, 7}}) {
    r(i, j) = s1sq;
    r(j, i) = s1sq;
  }
  return FidelityOperator(r / 8.0, theta);
}

FidelityOperator score_operator(const PriorDistribution& g) {
  switch (g.kind()) {
    case PriorKind::PhaseCovariant:
      return r_theta(*g.theta());
    case PriorKind::MirrorPhaseCovariant: {
      const double theta = *g.theta();
      const RealMatrix8 r = 0.5 * (r_theta(theta).entries() +
                                   r_theta(kPi - theta).entries());
      return FidelityOperator(r, theta);
    }
    case PriorKind::Universal:
      break;
  }
  return score_operator_quadrature(g);
}

FidelityOperator score_operator_quadrature(const PriorDistribution& g,
                                           int azimuth_nodes,
                                           int polar_nodes) {
  if (azimuth_nodes < 8)
    throw DomainError("score_operator_quadrature: need at least 8 phi nodes");
  Matrix8 acc = Matrix8::Zero();
  for (const PolarSample& s : polar_samples(g, polar_nodes)) {
    for (int k = 0; k < azimuth_nodes; ++k) {
      const double phi = 2.0 * kPi * k / azimuth_nodes;
      acc += (s.weight / azimuth_nodes) *
             score_kernel(ket_from_angles(s.theta, phi));
    }
  }
  if (acc.imag().cwiseAbs().maxCoeff() > kAlgebraicTol)
    throw std::logic_error("score_operator_quadrature: complex score matrix");
  const RealMatrix8 r = acc.real();
  return FidelityOperator(0.5 * (r + r.transpose()), g.theta());
}

double average_fidelity(const ChoiMatrix& chi, const FidelityOperator& r) {
  const Complex f = (chi.entries() * r.complex()).trace();
  return f.real();
}

double average_fidelity_direct(const ChoiMatrix& chi,
                               const PriorDistribution& g, int azimuth_nodes,
                               double phase_offset, int polar_nodes) {
  if (azimuth_nodes < 8)
    throw DomainError("average_fidelity_direct: need at least 8 phi nodes");
  double total = 0.0;
  for (const PolarSample& s : polar_samples(g, polar_nodes)) {
    double ring = 0.0;
    for (int k = 0; k < azimuth_nodes; ++k) {
      const double phi = phase_offset + 2.0 * kPi * k / azimuth_nodes;
      const PureState psi = ket_from_angles(s.theta, phi);
      const DensityMatrix out =
          apply_channel(chi, DensityMatrix::from_pure(psi));
      const double f1 = fidelity_pure(psi, partial_trace(out, {1}));
      const double f2 = fidelity_pure(psi, partial_trace(out, {2}));
      ring += 0.5 * (f1 + f2);
    }
    total += s.weight * ring / azimuth_nodes;
  }
  return total;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  // Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

RealMatrix8 output_swap() {
  RealMatrix8 s = RealMatrix8::Zero();
  for (int i = 0; i < 8; ++i) {
    const int in = i >> 2, a = (i >> 1) & 1, b = i & 1;
    s((in << 2) | (b << 1) | a, i) = 1.0;
  }
  return s;
}

}  // namespace mirrorclone
