#include "mirrorclone/optimality.hpp"

#include "mirrorclone/cloner_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace mirrorclone {

Matrix2 lagrange_operator(const ChoiMatrix& chi, const FidelityOperator& r) {
  return trace_out(r.complex() * chi.entries());
}

double proportionality_defect(const Matrix2& lambda) {
  const Complex scalar = 0.5 * lambda.trace();
  return (lambda - scalar * Matrix2::Identity()).cwiseAbs().maxCoeff();
}

OptimalityCertificate certificate(double theta, double tol) {
  const MpccParams p = mpcc_params(theta);
  const ChoiMatrix chi = mpcc_choi(theta);
  const FidelityOperator r = score_operator(PriorDistribution::mirror(theta));
  const double s1sq = std::sin(theta) * std::sin(theta);
  const double c1sq = std::cos(theta) * std::cos(theta);

  OptimalityCertificate cert;
  cert.theta = theta;
  cert.fidelity = mpcc_fidelity(theta);

  const Matrix2 lambda = lagrange_operator(chi, r);
  cert.lambda_scalar = 0.5 * lambda.trace().real();
  cert.lambda_defect = proportionality_defect(lambda);
  cert.lambda_closed_form =
      0.25 * ((1.0 + c1sq) * p.a + 2.0 * p.b + 2.0 * s1sq * p.c);
  cert.lambda_half_fidelity = 0.5 * cert.fidelity;
  cert.trace_gap = lambda.trace().real() - cert.fidelity;

  // Delta = lambda (x) 1_out - R
  const Matrix2 lambda_h = 0.5 * (lambda + lambda.adjoint());
  Matrix8 delta = -r.complex();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      delta.block<4, 4>(4 * i, 4 * j) +=
          lambda_h(i, j) * Eigen::Matrix<Complex, 4, 4>::Identity();
  const Eigen::VectorXd spectrum = eigenvalues_hermitian(delta);
  for (int k = 0; k < 8; ++k) cert.delta_spectrum[k] = spectrum(k);

  const double r11 = r(0, 0);
  const double r22 = r(1, 1);
  const double r16 = r(0, 5);
  cert.r_bar = std::sqrt((r11 - r22) * (r11 - r22) + 8.0 * r16 * r16);
  const double f = cert.fidelity;
  cert.delta_closed_form = {0.5 * (f - 0.5), 0.5 * (f - 0.5 * s1sq),
                            0.5 * (f - r11 - r22 + cert.r_bar),
                            0.5 * (f - r11 - r22 - cert.r_bar)};
  cert.bound_residual = std::abs(f - r11 - r22 - cert.r_bar);

  std::array<double, 8> expected{};
  for (int k = 0; k < 4; ++k) {
    expected[2 * k] = cert.delta_closed_form[k];
    expected[2 * k + 1] = cert.delta_closed_form[k];
  }
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < 8; ++k)
    cert.spectrum_mismatch = std::max(
        cert.spectrum_mismatch, std::abs(expected[k] - cert.delta_spectrum[k]));

  cert.psd_ok = cert.delta_spectrum[0] >= -tol;
  cert.saturation_ok = std::abs(cert.trace_gap) <= tol;
  cert.spectrum_ok = cert.spectrum_mismatch <= tol;
  return cert;
}

namespace {

// U(1) charge of a basis state |in, out1, out2> under the phase twirl.
int charge(int index) {
  return -((index >> 2) & 1) + ((index >> 1) & 1) + (index & 1);
}

RealMatrix8 flip_all() {
  RealMatrix8 x = RealMatrix8::Zero();
  for (int i = 0; i < 8; ++i) x(7 - i, i) = 1.0;
  return x;
}

}  // namespace

ScoreSymmetry detect_symmetry(const FidelityOperator& r, double tol) {
  ScoreSymmetry sym;
  const double phi = 0.7;
  Eigen::Matrix<Complex, 8, 1> w;
  for (int i = 0; i < 8; ++i) w(i) = std::polar(1.0, phi * charge(i));
  const Matrix8 rc = r.complex();
  const Matrix8 rotated = w.asDiagonal() * rc * w.conjugate().asDiagonal();
  sym.phase_covariant = (rotated - rc).cwiseAbs().maxCoeff() <= tol;

  const RealMatrix8 x = flip_all();
  sym.bit_flip =
      (x * r.entries() * x - r.entries()).cwiseAbs().maxCoeff() <= tol;
  return sym;
}

Matrix8 symmetrize(const Matrix8& chi, const ScoreSymmetry& symmetry) {
  Matrix8 out = chi;
  if (symmetry.bit_flip) {
    const Matrix8 x = flip_all().cast<Complex>();
    out = (0.5 * (out + x * out * x)).eval();
  }
  if (symmetry.phase_covariant) {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (charge(i) != charge(j)) out(i, j) = 0.0;
  }
  return out;
}

OptimizeResult optimize_map(const FidelityOperator& r, std::uint64_t seed,
                            const OptimizeOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("optimize_map: tol must be > 0");
  if (options.max_iter < 1)
    throw DomainError("optimize_map: max_iter must be positive");

  const Matrix8 score = r.complex();
  auto fidelity = [&score](const Matrix8& chi) {
    return (chi * score).trace().real();
  };
  auto min_eig = [](const Matrix8& chi) {
    return eigenvalues_hermitian(chi).minCoeff();
  };

  const ScoreSymmetry symmetry =
      options.exploit_symmetry ? detect_symmetry(r) : ScoreSymmetry{};

  std::mt19937_64 rng(seed);
  Matrix8 chi = symmetrize(random_choi(rng).entries(), symmetry);
  double f = fidelity(chi);

  Matrix8 best = chi;
  double best_f = f;
  double max_defect = trace_preservation_defect(chi);
  double lowest_eig = min_eig(chi);
  double max_f = f;
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  int it = 0;

  while (it < options.max_iter) {
    ++it;
    chi = normalize_trace_preserving(
        symmetrize(score * chi * score, symmetry), options.pinv_cutoff);
    const double f_next = fidelity(chi);
    residual = std::abs(f_next - f);
    f = f_next;

    max_defect = std::max(max_defect, trace_preservation_defect(chi));
    if (options.track_positivity) lowest_eig = std::min(lowest_eig, min_eig(chi));
    max_f = std::max(max_f, f);
    if (f > best_f) {
      best_f = f;
      best = chi;
    }
    if (residual < options.tol) {
      converged = true;
      break;
    }
  }
  lowest_eig = std::min(lowest_eig, min_eig(best));

  return OptimizeResult{ChoiMatrix(best), best_f,     it,
                        converged,        residual,   max_defect,
                        lowest_eig,       max_f};
}

OptimizeResult optimize_multistart(const FidelityOperator& r,
                                   std::uint64_t first_seed, int count,
                                   const OptimizeOptions& options) {
  if (count < 1) throw DomainError("optimize_multistart: need a seed");
  OptimizeResult best = optimize_map(r, first_seed, options);
  for (int k = 1; k < count; ++k) {
    OptimizeResult next = optimize_map(r, first_seed + k, options);
    best.max_trace_defect =
        std::max(best.max_trace_defect, next.max_trace_defect);
    best.min_eigenvalue = std::min(best.min_eigenvalue, next.min_eigenvalue);
    best.max_f_seen = std::max(best.max_f_seen, next.max_f_seen);
    if (next.f_star > best.f_star) {
      next.max_trace_defect = best.max_trace_defect;
      next.min_eigenvalue = best.min_eigenvalue;
      next.max_f_seen = best.max_f_seen;
      best = std::move(next);
    }
  }
  return best;
}

double mpcc_pattern_defect(const ChoiMatrix& chi, double theta) {
  const ChoiMatrix ref = mpcc_choi(theta);
  return (chi.entries().cwiseAbs() - ref.entries().cwiseAbs())
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace mirrorclone
