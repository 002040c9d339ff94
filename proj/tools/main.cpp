#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace mirrorclone::app;

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.flush();
  return static_cast<bool>(out);
}

void add_common_options(CLI::App* cmd, SweepConfig& cfg) {
  cmd->add_option("--theta-min", cfg.theta_min, "Lower end of the theta grid");
  cmd->add_option("--theta-max", cfg.theta_max, "Upper end of the theta grid");
  cmd->add_option("--steps", cfg.steps, "Number of grid points");
  cmd->add_option("--tol", cfg.tol, "Check tolerance");
  cmd->add_option("--seed", cfg.seed, "Random seed");
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::Csv},
                                        {"json", Format::Json}}));
  cmd->add_option("--output", cfg.output, "Write the report here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror phase-covariant cloner: sweeps, certificates, circuits"};
  app.require_subcommand(1);
  SweepConfig cfg;

  auto* sweep = app.add_subcommand("sweep", "Fidelity of MPCC, PCC and UC");
  auto* bloch = app.add_subcommand("bloch", "Bloch cross-section of clones");
  auto* certify = app.add_subcommand("certify", "Optimality certificates");
  auto* circuits = app.add_subcommand("circuits", "Verify gate circuits");
  auto* optimize = app.add_subcommand("optimize", "Numerical optimum vs analytic");
  for (auto* cmd : {sweep, bloch, certify, circuits, optimize})
    add_common_options(cmd, cfg);

  bloch->add_option("--phi", cfg.phi, "Azimuth of the cross-section plane");
  circuits->add_option("--variant", cfg.variant, "Circuit variant")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Variant>{
          {"v1", Variant::V1}, {"v2", Variant::V2}, {"both", Variant::Both}}));
  circuits->add_option("--dump", cfg.dump, "Write serialized circuits here");
  circuits->add_option("--coupling", cfg.coupling,
                       "Exchange coupling of the second circuit");
  optimize->add_option("--seeds", cfg.seeds, "Random starts per angle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  CommandOutput result;
  try {
    result = run_command(name, cfg);
  } catch (const UsageError& e) {
    std::cerr << "mirror-clone: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string report = render(result, cfg);
  if (cfg.output.empty()) {
    std::cout << report;
  } else if (!write_file(cfg.output, report)) {
    std::cerr << "mirror-clone: cannot write " << cfg.output << '\n';
    return kUsageError;
  }
  if (!cfg.dump.empty() && !write_file(cfg.dump, result.dump)) {
    std::cerr << "mirror-clone: cannot write " << cfg.dump << '\n';
    return kUsageError;
  }
  for (const auto& msg : result.messages) std::cerr << msg << '\n';
  return result.exit_code;
}
