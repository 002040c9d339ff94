// One line per acceptance criterion; nonzero exit if any fails.

#include "mirrorclone/mirrorclone.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace mirrorclone;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const double kMinimumTheta = std::acos(std::sqrt(3.0) / 3);

std::vector<double> grid181() {
  std::vector<double> g;
  for (int k = 0; k < 181; ++k) g.push_back(kPi * (k / 180.0));
  return g;
}

std::vector<double> grid_with_minimum() {
  std::vector<double> g = grid181();
  g.push_back(kMinimumTheta);
  return g;
}

std::string num(double v) { return format_double(v); }

Outcome fidelity_values() {
  double worst = 0;
  worst = std::max(worst, std::abs(mpcc_fidelity(0.0) - 1.0));
  worst = std::max(worst, std::abs(mpcc_fidelity(kPi) - 1.0));
  worst = std::max(worst, std::abs(mpcc_fidelity(kPi / 2) - (0.5 + kSqrt2 / 4)));
  worst = std::max(worst, std::abs(mpcc_fidelity(kMinimumTheta) - 5.0 / 6));
  worst = std::max(worst, std::abs(mpcc_fidelity(kPi - kMinimumTheta) - 5.0 / 6));
  return {worst <= 1e-12, "max deviation " + num(worst)};
}

Outcome p_extremes() {
  const double t = std::acos(std::sqrt(6.0) / 3);
  const double worst = std::max({std::abs(mpcc_params(t).p - 2.0 / 3),
                                 std::abs(mpcc_params(kPi - t).p - 2.0 / 3),
                                 std::abs(mpcc_params(kPi / 2).p - 2.0)});
  return {worst <= 1e-12, "max deviation " + num(worst)};
}

Outcome functional_consistency() {
  double worst = 0;
  for (double theta : grid181()) {
    const FidelityOperator r = score_operator(PriorDistribution::mirror(theta));
    const double tr = (mpcc_choi(theta).entries() * r.complex()).trace().real();
    worst = std::max(worst, std::abs(tr - mpcc_fidelity(theta)));
  }
  return {worst <= 1e-10, "max |Tr(chi R) - F| " + num(worst)};
}

Outcome score_oracle() {
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const double theta = kPi * k / 19.0;
    const auto g = PriorDistribution::mirror(theta);
    worst = std::max(worst, (score_operator(g).entries() -
                             score_operator_quadrature(g).entries())
                                .cwiseAbs()
                                .maxCoeff());
  }
  const FidelityOperator r_uc = score_operator_quadrature(PriorDistribution::universal());
  const double uc_gap = std::abs(average_fidelity(uc_choi(), r_uc) - 5.0 / 6);
  return {worst <= 1e-9 && uc_gap <= 1e-9,
          "entrywise " + num(worst) + ", UC gap " + num(uc_gap)};
}

Outcome certificates() {
  double min_delta = 1, mismatch = 0, trace_gap = 0, bound = 0;
  for (double theta : grid_with_minimum()) {
    const OptimalityCertificate c = certificate(theta);
    min_delta = std::min(min_delta, c.delta_spectrum[0]);
    mismatch = std::max(mismatch, c.spectrum_mismatch);
    trace_gap = std::max(trace_gap, std::abs(c.trace_gap));
    bound = std::max(bound, c.bound_residual);
  }
  const bool ok = min_delta >= -1e-10 && mismatch <= 1e-10 &&
                  trace_gap <= 1e-10 && bound <= 1e-10;
  return {ok, "min eigenvalue " + num(min_delta) + ", spectrum mismatch " +
                  num(mismatch) + ", trace gap " + num(trace_gap) +
                  ", bound residual " + num(bound)};
}

Outcome optimizer() {
  double worst_gap = 0, worst_excess = -1;
  for (double theta : grid_with_minimum()) {
    const FidelityOperator r = score_operator(PriorDistribution::mirror(theta));
    const double analytic = mpcc_fidelity(theta);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const OptimizeResult res = optimize_map(r, seed);
      worst_gap = std::max(worst_gap, std::abs(analytic - res.f_star));
      worst_excess = std::max(worst_excess, res.max_f_seen - analytic);
    }
  }
  return {worst_gap <= 1e-6 && worst_excess <= 1e-9,
          "max gap " + num(worst_gap) + ", max excess " + num(worst_excess)};
}

Outcome circuits() {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<PureState> inputs;
  for (int k = 0; k < 50; ++k) {
    Vector v(2);
    v << Complex{normal(rng), normal(rng)}, Complex{normal(rng), normal(rng)};
    inputs.push_back(PureState::normalized(v));
  }
  double worst = 0;
  for (int k = 0; k < 19; ++k) {
    const double theta = kPi * k / 18.0;
    for (const Circuit& c : {circuit_mpcc_v1(theta), circuit_mpcc_v2(theta, 1.0)}) {
      const Matrix8 u = c.matrix();
      for (const PureState& psi : inputs) {
        const PureState out(u * tensor(psi, PureState::basis(2, 0)).amplitudes());
        worst = std::max(
            worst,
            equal_up_to_global_phase(out, mpcc_isometry_apply(theta, psi), 1e-10)
                .residual);
      }
    }
  }

  // first three gates of the second circuit
  bool exact = true;
  for (const PureState& psi : inputs) {
    const Circuit full = circuit_mpcc_v2(1.0, 1.0);
    const Circuit prefix{{full.gates.begin(), full.gates.begin() + 3}};
    const PureState out = run_circuit(prefix, tensor(psi, PureState::basis(2, 0)));
    Vector expected = Vector::Zero(8);
    expected(0b001) = psi[0];
    expected(0b110) = psi[1];
    exact = exact && out.amplitudes() == expected;
  }
  return {worst <= 1e-10 && exact, "max residual " + num(worst) +
                                       (exact ? ", intermediate exact"
                                              : ", intermediate mismatch")};
}

Outcome propagator() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  double worst = 0, norm_gap = 0;
  for (int k = 0; k < 20; ++k) {
    const double t = u(rng), kappa = u(rng);
    const Matrix8 prop = eqneighbor_propagator(t, kappa);
    const Complex c0 =
        (std::exp(-2.0 * kI * kappa * t) + 2.0 * std::exp(kI * kappa * t)) / 3.0;
    const Complex c1 = (2.0 / 3) * std::sin(1.5 * kappa * t) *
                       std::exp(-0.5 * kI * (kPi + kappa * t));
    worst = std::max({worst, std::abs(prop(0b001, 0b001) - c0),
                      std::abs(prop(0b010, 0b001) - c1),
                      std::abs(prop(0b100, 0b001) - c1)});
    norm_gap = std::max(norm_gap, std::abs(std::norm(prop(0b001, 0b001)) +
                                           2 * std::norm(prop(0b010, 0b001)) - 1));
  }
  return {worst <= 1e-10 && norm_gap <= 1e-12,
          "max coefficient error " + num(worst) + ", norm gap " + num(norm_gap)};
}

Outcome hierarchy() {
  bool ok = true;
  for (double theta : grid_with_minimum()) {
    const double pcc = pcc_fidelity(theta), mpcc = mpcc_fidelity(theta);
    ok = ok && pcc >= mpcc - 1e-12 && mpcc >= 5.0 / 6 - 1e-12 &&
         5.0 / 6 - 1e-12 >= uc_fidelity(2) - 1e-12;
  }
  const double eq = std::abs(pcc_fidelity(kPi / 2) - mpcc_fidelity(kPi / 2));
  return {ok && eq <= 1e-12, "equator gap " + num(eq)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("mirrorclone_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::vector<std::string> runs{
      "sweep", "bloch", "certify", "circuits --steps 19 --dump {}.txt",
      "optimize --steps 19"};
  Outcome result{true, "5 commands run twice"};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::string outputs[2], dumps[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto stem = dir / (std::to_string(i) + "_" + std::to_string(rep));
      std::string args = runs[i];
      if (const auto pos = args.find("{}"); pos != std::string::npos)
        args.replace(pos, 2, stem.string());
      const std::string cmd = std::string(MIRROR_CLONE_EXE) + " " + args +
                              " --output " + stem.string() + ".out 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        result = {false, "'" + runs[i] + "' exited abnormally"};
      }
      outputs[rep] = slurp(stem.string() + ".out");
      dumps[rep] = slurp(stem.string() + ".txt");
    }
    if (outputs[0].empty() || outputs[0] != outputs[1] || dumps[0] != dumps[1])
      result = {false, "'" + runs[i] + "' output differs between runs"};
  }
  std::filesystem::remove_all(dir);
  return result;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form fidelity values", fidelity_values},
      {"P extremes", p_extremes},
      {"functional consistency on 181-point grid", functional_consistency},
      {"score operator vs quadrature oracle", score_oracle},
      {"optimality certificate", certificates},
      {"fixed-point optimizer from 5 seeds", optimizer},
      {"circuit equivalence", circuits},
      {"propagator closed form", propagator},
      {"fidelity hierarchy", hierarchy},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
              << criteria[i].first << " (" << o.detail << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
