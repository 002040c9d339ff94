#include "mirrorclone/cloner_models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mirrorclone {
namespace {

void require_polar(double theta, const char* where) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
    throw DomainError(std::string(where) + ": theta must lie in [0, pi]");
}

Bloch input_bloch(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

}  // namespace

double fidelity_of_lambda(double theta, double lambda) {
  if (!(std::abs(lambda) <= 1.0 + kAlgebraicTol))
    throw DomainError("fidelity_of_lambda: |Lambda| must not exceed 1");
  const double l2 = std::min(lambda * lambda, 1.0);
  const double s = std::sin(theta);
  return 0.5 * (1.0 + l2) -
         0.5 * s * s * (l2 - lambda * std::sqrt(2.0 - 2.0 * l2));
}

double lambda_from_choi_entries(double a, double c) {
  return a / std::sqrt(a * a + 2.0 * c * c);
}

MpccParams mpcc_params(double theta) {
  require_polar(theta, "mpcc_params");
  MpccParams out;
  out.theta = theta;
  const double cos2 = std::cos(theta) * std::cos(theta);
  out.p = 2.0 - 4.0 * cos2 + 3.0 * cos2 * cos2;
  const double shift = cos2 / (2.0 * std::sqrt(out.p));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double sq = std::clamp(0.5 + (j == 0 ? shift : -shift), 0.0, 1.0);
      out.candidates[i + 2 * j] = (i == 0 ? 1.0 : -1.0) * std::sqrt(sq);
    }
  }
  out.lambda = out.candidates[0];

  const double chosen = fidelity_of_lambda(theta, out.lambda);
  for (double cand : out.candidates) {
    if (fidelity_of_lambda(theta, cand) > chosen + kAlgebraicTol) {
      std::ostringstream msg;
      msg << "mpcc_params: root Lambda_0 is not the best stationary point at "
             "theta = "
          << theta;
      throw std::logic_error(msg.str());
    }
  }

  out.lambda_bar = std::sqrt(std::max(0.0, 1.0 - out.lambda * out.lambda));
  out.a = out.lambda * out.lambda;
  out.b = 0.5 * out.lambda_bar * out.lambda_bar;
  out.c = out.lambda * out.lambda_bar / kSqrt2;
  return out;
}

double mpcc_fidelity(double theta) {
  const MpccParams p = mpcc_params(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return 0.5 * (1.0 + p.a * c * c + kSqrt2 * p.lambda * p.lambda_bar * s * s);
}

Isometry isometry_from_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("isometry_from_lambda: Lambda must lie in [0, 1]");
  const double bar = std::sqrt(1.0 - lambda * lambda);
  Isometry v = Isometry::Zero();
  // |0> -> L|00>|0> + Lbar|psi+>|1>
  v(0b000, 0) = lambda;
  v(0b011, 0) = bar / kSqrt2;
  v(0b101, 0) = bar / kSqrt2;
  // |1> -> L|11>|1> + Lbar|psi+>|0>
  v(0b111, 1) = lambda;
  v(0b010, 1) = bar / kSqrt2;
  v(0b100, 1) = bar / kSqrt2;
  return v;
}

ChoiMatrix choi_from_lambda(double lambda) {
  return choi_from_isometry(isometry_from_lambda(lambda));
}

ChoiMatrix mpcc_choi(double theta) {
  const MpccParams p = mpcc_params(theta);
  Matrix8 chi = Matrix8::Zero();
  chi(0, 0) = p.a;
  chi(7, 7) = p.a;
  for (int i : {1, 2})
    for (int j : {1, 2}) chi(i, j) = p.b;
  for (int i : {5, 6})
    for (int j : {5, 6}) chi(i, j) = p.b;
  for (auto [i, j] : {std::pair{0, 5}, {0, 6}, {1, 7}, {2, 7}}) {
    chi(i, j) = p.c;
    chi(j, i) = p.c;
  }
  return ChoiMatrix(chi);
}

PureState mpcc_isometry_apply(double theta, const PureState& psi) {
  if (psi.dim() != 2)
    throw DimensionError("mpcc_isometry_apply: input must be a single qubit");
  const MpccParams p = mpcc_params(theta);
  return PureState(isometry_from_lambda(p.lambda) * psi.amplitudes());
}

CloneResult clone(const PureState& psi, const ChoiMatrix& chi) {
  if (psi.dim() != 2)
    throw DimensionError("clone: input must be a single qubit");
  DensityMatrix joint = apply_channel(chi, DensityMatrix::from_pure(psi));
  DensityMatrix first = partial_trace(joint, {1});
  DensityMatrix second = partial_trace(joint, {2});
  return {std::move(joint), std::move(first), std::move(second)};
}

Matrix2 mpcc_clone_density(double theta, double phi) {
  const MpccParams p = mpcc_params(theta);
  const double c = std::cos(theta);
  const Complex off =
      std::polar(p.lambda * p.lambda_bar * std::sin(theta) / kSqrt2, -phi);
  Matrix2 rho;
  rho << 0.5 * (1.0 + p.a * c), off, std::conj(off), 0.5 * (1.0 - p.a * c);
  return rho;
}

Bloch mpcc_clone_bloch(double theta, double phi) {
  const MpccParams p = mpcc_params(theta);
  const double radial = kSqrt2 * p.lambda * p.lambda_bar * std::sin(theta);
  return {radial * std::cos(phi), radial * std::sin(phi),
          p.a * std::cos(theta)};
}

double pcc_hemisphere_sign(double theta) {
  const double d = kPi - 2.0 * theta;
  return d < 0.0 ? -1.0 : 1.0;
}

Bloch pcc_clone_bloch(double theta, double phi) {
  require_polar(theta, "pcc_clone_bloch");
  const double s = std::sin(theta);
  return {s * std::cos(phi) / kSqrt2, s * std::sin(phi) / kSqrt2,
          0.5 * (pcc_hemisphere_sign(theta) + std::cos(theta))};
}

double pcc_fidelity(double theta) {
  require_polar(theta, "pcc_fidelity");
  return 0.5 * (1.0 + pcc_clone_bloch(theta, 0.0).dot(input_bloch(theta, 0.0)));
}

double uc_fidelity(int copies) {
  if (copies < 1) throw DomainError("uc_fidelity: need at least one copy");
  return (2.0 * copies + 1.0) / (3.0 * copies);
}

Bloch uc_clone_bloch(double theta, double phi) {
  return (2.0 / 3.0) * input_bloch(theta, phi);
}

ChoiMatrix uc_choi() { return choi_from_lambda(std::sqrt(2.0 / 3.0)); }

ClonerModel ClonerModel::mpcc(double theta) {
  require_polar(theta, "ClonerModel::mpcc");
  return {ClonerKind::Mpcc, theta, 2};
}

ClonerModel ClonerModel::pcc(double theta) {
  require_polar(theta, "ClonerModel::pcc");
  return {ClonerKind::Pcc, theta, 2};
}

ClonerModel ClonerModel::uc(double theta, int copies) {
  require_polar(theta, "ClonerModel::uc");
  if (copies < 1) throw DomainError("ClonerModel::uc: need at least one copy");
  return {ClonerKind::Uc, theta, copies};
}

double ClonerModel::fidelity() const {
  switch (kind_) {
    case ClonerKind::Mpcc:
      return mpcc_fidelity(theta_);
    case ClonerKind::Pcc:
      return pcc_fidelity(theta_);
    case ClonerKind::Uc:
      return uc_fidelity(copies_);
  }
  throw std::logic_error("ClonerModel: unknown kind");
}

Bloch ClonerModel::clone_bloch(double phi) const {
  switch (kind_) {
    case ClonerKind::Mpcc:
      return mpcc_clone_bloch(theta_, phi);
    case ClonerKind::Pcc:
      return pcc_clone_bloch(theta_, phi);
    case ClonerKind::Uc:
      return uc_clone_bloch(theta_, phi);
  }
  throw std::logic_error("ClonerModel: unknown kind");
}

}  // namespace mirrorclone
