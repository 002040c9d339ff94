#include "commands.hpp"

#include "mirrorclone/mirrorclone.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace mirrorclone::app {
namespace {

constexpr int kRandomInputs = 50;
constexpr double kOptimizeGapTol = 1e-6;

std::vector<PureState> circuit_inputs(std::uint64_t seed) {
  std::vector<PureState> inputs{PureState::basis(1, 0), PureState::basis(1, 1)};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int k = 0; k < kRandomInputs; ++k) {
    Vector v(2);
    v << Complex{normal(rng), normal(rng)}, Complex{normal(rng), normal(rng)};
    inputs.push_back(PureState::normalized(v));
  }
  return inputs;
}

// psi (x) |00>
PureState register_input(const PureState& psi) {
  return tensor(psi, PureState::basis(2, 0));
}

}  // namespace

void SweepConfig::validate() const {
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max) ||
      theta_min < 0.0 || theta_max > kPi)
    throw UsageError("theta range must lie within [0, pi]");
  if (!(theta_min < theta_max))
    throw UsageError("--theta-min must be smaller than --theta-max");
  if (steps < 2) throw UsageError("--steps must be at least 2");
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  if (seeds < 1) throw UsageError("--seeds must be at least 1");
  if (!std::isfinite(phi)) throw UsageError("--phi must be finite");
  if (!(coupling > 0.0) || !std::isfinite(coupling))
    throw UsageError("--coupling must be positive");
}

std::vector<double> uniform_grid(const SweepConfig& cfg) {
  std::vector<double> grid;
  grid.reserve(cfg.steps);
  const double span = cfg.theta_max - cfg.theta_min;
  for (int k = 0; k < cfg.steps; ++k)
    grid.push_back(cfg.theta_min +
                   span * (static_cast<double>(k) / (cfg.steps - 1)));
  grid.back() = cfg.theta_max;
  return grid;
}

std::vector<double> special_grid(const SweepConfig& cfg) {
  std::vector<double> grid = uniform_grid(cfg);
  const double minimum = std::acos(1.0 / std::sqrt(3.0));
  const bool present = std::any_of(grid.begin(), grid.end(), [&](double t) {
    return std::abs(t - minimum) < 1e-15;
  });
  if (!present && minimum >= cfg.theta_min && minimum <= cfg.theta_max) {
    grid.push_back(minimum);
    std::sort(grid.begin(), grid.end());
  }
  return grid;
}

CommandOutput cmd_sweep(const SweepConfig& cfg) {
  cfg.validate();
  CommandOutput result;
  result.table.columns = {"theta", "F_mpcc", "F_pcc", "F_uc",
                          "Lambda", "A",     "B",     "C"};
  const double f_uc = uc_fidelity(2);
  for (double theta : uniform_grid(cfg)) {
    const MpccParams p = mpcc_params(theta);
    result.table.add_row({theta, mpcc_fidelity(theta), pcc_fidelity(theta),
                          f_uc, p.lambda, p.a, p.b, p.c});
  }
  return result;
}

CommandOutput cmd_bloch(const SweepConfig& cfg) {
  cfg.validate();
  CommandOutput result;
  result.table.columns = {"theta",  "rx_mpcc", "rz_mpcc",    "rx_pcc",
                          "rz_pcc", "rx_uc",   "rz_uc",      "rx_perfect",
                          "rz_perfect"};
  // In-plane radial direction of the cross-section at azimuth phi.
  const Bloch radial{std::cos(cfg.phi), std::sin(cfg.phi), 0.0};
  for (double theta : uniform_grid(cfg)) {
    const Bloch m = mpcc_clone_bloch(theta, cfg.phi);
    const Bloch p = pcc_clone_bloch(theta, cfg.phi);
    const Bloch u = uc_clone_bloch(theta, cfg.phi);
    result.table.add_row({theta, m.dot(radial), m.z(), p.dot(radial), p.z(),
                          u.dot(radial), u.z(), std::sin(theta),
                          std::cos(theta)});
  }
  return result;
}

CommandOutput cmd_certify(const SweepConfig& cfg) {
  cfg.validate();
  CommandOutput result;
  result.default_format = Format::Json;
  auto& cols = result.table.columns;
  cols = {"theta",         "F",
          "lambda_scalar", "lambda_defect",
          "lambda_closed_form", "lambda_half_fidelity",
          "trace_gap"};
  for (int k = 0; k < 8; ++k) cols.push_back("delta_spectrum_" + std::to_string(k));
  for (int k = 1; k <= 4; ++k) cols.push_back("delta_" + std::to_string(k));
  for (const char* c : {"spectrum_mismatch", "R_bar", "bound_residual", "psd_ok",
                        "saturation_ok", "spectrum_ok"})
    cols.push_back(c);

  for (double theta : special_grid(cfg)) {
    const OptimalityCertificate c = certificate(theta, cfg.tol);
    std::vector<Cell> row{c.theta,
                          c.fidelity,
                          c.lambda_scalar,
                          c.lambda_defect,
                          c.lambda_closed_form,
                          c.lambda_half_fidelity,
                          c.trace_gap};
    for (double d : c.delta_spectrum) row.emplace_back(d);
    for (double d : c.delta_closed_form) row.emplace_back(d);
    row.insert(row.end(), {c.spectrum_mismatch, c.r_bar, c.bound_residual,
                           c.psd_ok, c.saturation_ok, c.spectrum_ok});
    result.table.add_row(std::move(row));
    if (!(c.psd_ok && c.saturation_ok && c.bound_residual <= cfg.tol)) {
      result.exit_code = kCheckFailed;
      std::ostringstream msg;
      msg << "certificate failed at theta = " << format_double(theta)
          << " (min delta " << format_double(c.delta_spectrum[0])
          << ", trace gap " << format_double(c.trace_gap) << ", bound residual "
          << format_double(c.bound_residual) << ")";
      result.messages.push_back(msg.str());
    }
  }
  return result;
}

CommandOutput cmd_circuits(const SweepConfig& cfg) {
  cfg.validate();
  CommandOutput result;
  result.table.columns = {"theta", "variant", "input", "residual"};
  const std::vector<PureState> inputs = circuit_inputs(cfg.seed);

  std::ostringstream dump;
  double worst = 0.0;
  for (double theta : special_grid(cfg)) {
    std::vector<std::pair<std::string, Circuit>> circuits;
    if (cfg.variant != Variant::V2)
      circuits.emplace_back("v1", circuit_mpcc_v1(theta));
    if (cfg.variant != Variant::V1)
      circuits.emplace_back("v2", circuit_mpcc_v2(theta, cfg.coupling));

    for (const auto& [name, circuit] : circuits) {
      if (!cfg.dump.empty())
        dump << "# " << name << " theta " << format_double(theta) << '\n'
             << to_text(circuit);
      const Matrix8 u = circuit.matrix();
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        const PureState out(u * register_input(inputs[k]).amplitudes());
        const PureState target = mpcc_isometry_apply(theta, inputs[k]);
        const double residual =
            equal_up_to_global_phase(out, target, cfg.tol).residual;
        worst = std::max(worst, residual);
        result.table.add_row(
            {theta, name, static_cast<std::int64_t>(k), residual});
      }
    }
  }
  result.dump = dump.str();
  if (worst > cfg.tol) {
    result.exit_code = kCheckFailed;
    result.messages.push_back("circuit residual " + format_double(worst) +
                              " exceeds tolerance " + format_double(cfg.tol));
  }
  return result;
}

CommandOutput cmd_optimize(const SweepConfig& cfg) {
  cfg.validate();
  CommandOutput result;
  result.table.columns = {"theta",      "F_star",    "F_analytic",
                          "gap",        "excess",    "iterations",
                          "converged",  "pattern_defect"};
  for (double theta : special_grid(cfg)) {
    const FidelityOperator r = score_operator(PriorDistribution::mirror(theta));
    const OptimizeResult best = optimize_multistart(r, cfg.seed, cfg.seeds);
    const double analytic = mpcc_fidelity(theta);
    const double gap = analytic - best.f_star;
    result.table.add_row({theta, best.f_star, analytic, gap,
                          best.max_f_seen - analytic,
                          static_cast<std::int64_t>(best.iterations),
                          best.converged,
                          mpcc_pattern_defect(best.chi_star, theta)});
    if (std::abs(gap) > kOptimizeGapTol) {
      result.exit_code = kCheckFailed;
      result.messages.push_back("optimizer gap " + format_double(gap) +
                                " at theta = " + format_double(theta));
    }
  }
  return result;
}

CommandOutput run_command(const std::string& name, const SweepConfig& cfg) {
  if (name == "sweep") return cmd_sweep(cfg);
  if (name == "bloch") return cmd_bloch(cfg);
  if (name == "certify") return cmd_certify(cfg);
  if (name == "circuits") return cmd_circuits(cfg);
  if (name == "optimize") return cmd_optimize(cfg);
  throw UsageError("unknown command '" + name + "'");
}

std::string render(const CommandOutput& result, const SweepConfig& cfg) {
  std::ostringstream out;
  write_table(result.table, cfg.format.value_or(result.default_format), out);
  return out.str();
}

}  // namespace mirrorclone::app
