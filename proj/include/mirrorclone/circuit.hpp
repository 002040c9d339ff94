#pragma once

// Gate-level simulation of the two three-qubit MPCC circuits.
//
// Qubits 1 and 2 carry the clones and qubit 3 the ancilla. Gates are listed
// in application order; `control, target` fields follow the superscript
// order U^(control target).

#include "mirrorclone/quantum_core.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mirrorclone {

struct RotY {
  int target;
  double angle;
};
struct Cnot {
  int control;
  int target;
};
struct Not {
  int target;
};
/// Hadamard on target, built as A^(t) CNOT^(c t) A^(t).
struct ControlledH {
  int control;
  int target;
};
/// R(angle) = diag(e^{-i angle/2}, e^{i angle/2}) on target when control = 1.
struct ControlledR {
  int control;
  int target;
  double angle;
};
enum class ControlPattern { Ones, Zeros };
/// R(angle) on target when both controls match the pattern.
struct DoubleControlledR {
  int control1;
  int control2;
  int target;
  ControlPattern pattern;
  double angle;
};
/// exp(-i H t) for the equal-coupling exchange Hamiltonian on all qubits.
struct EqNeighborEvolve {
  double time;
  double coupling;
};

using Gate = std::variant<RotY, Cnot, Not, ControlledH, ControlledR,
                          DoubleControlledR, EqNeighborEvolve>;

struct Circuit {
  std::vector<Gate> gates;

  /// Product of the gate matrices, last gate leftmost.
  Matrix8 matrix() const;
};

/// The real single-qubit matrix with A X A = H and A^2 = 1.
Matrix2 hadamard_conjugator();
/// diag(e^{-i angle/2}, e^{i angle/2})
Matrix2 rz(double angle);

Matrix8 gate_matrix(const Gate& gate);

/// Two-qubit-gate realization of a double-controlled rotation. The zero
/// pattern is conjugated by NOTs on both controls.
std::vector<Gate> decompose_ccr(const DoubleControlledR& gate);
std::vector<Gate> decompose_ccr(double angle, ControlPattern pattern);

/// H = (kappa/2) sum_{n != m} (s+^n s-^m + s-^n s+^m), s+ = |0><1|.
HermitianOperator eqneighbor_hamiltonian(double coupling);
Matrix8 eqneighbor_propagator(double time, double coupling);

struct PropagatorCoefficients {
  Complex c0;  // <001|U|001>
  Complex c1;  // <010|U|001> = <100|U|001>
};
/// Closed-form single-excitation amplitudes; identical for two excitations.
PropagatorCoefficients propagator_coefficients(double time, double coupling);

struct EvolutionParams {
  double coupling = 1.0;
  double time = 0.0;
  Complex c0{1.0};
  Complex c1{0.0};
  double phase0 = 0.0;
  double phase1 = 0.0;
  /// 2 (phase0 - phase1)
  double correction = 0.0;
};

double interaction_time(double theta, double coupling);
EvolutionParams evolution_params(double theta, double coupling);

/// R_y(2 arccos Lambda), CH, and three CNOTs.
Circuit circuit_mpcc_v1(double theta);
/// Repetition encoding, NOT, exchange evolution, phase corrections, NOT.
Circuit circuit_mpcc_v2(double theta, double coupling);

PureState run_circuit(const Circuit& circuit, const PureState& psi);

struct PhaseComparison {
  bool equal;
  double residual;  // 1 - |<a|b>|
};
PhaseComparison equal_up_to_global_phase(const PureState& a,
                                         const PureState& b, double tol);

/// One gate per line: `KIND q... [angle...]`, numbers with 17 significant
/// digits. Lines starting with '#' are comments.
std::string to_text(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace mirrorclone
