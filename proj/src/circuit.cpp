#include "mirrorclone/circuit.hpp"

#include "mirrorclone/cloner_models.hpp"
#include "mirrorclone/format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace mirrorclone {
namespace {

constexpr int kQubits = 3;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_qubits(std::initializer_list<int> qubits) {
  for (auto it = qubits.begin(); it != qubits.end(); ++it) {
    if (*it < 1 || *it > kQubits)
      throw DomainError("gate qubit index must be 1, 2 or 3");
    for (auto jt = qubits.begin(); jt != it; ++jt)
      if (*jt == *it) throw DomainError("gate qubit indices must be distinct");
  }
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value))
    throw DomainError(std::string(what) + " must be finite");
}

int bit_of(int index, int qubit) { return (index >> (kQubits - qubit)) & 1; }

struct Condition {
  int qubit;
  int value;
};

// u on `target` whenever every condition holds, identity elsewhere.
Matrix8 embed(const Matrix2& u, int target,
              std::initializer_list<Condition> conditions = {}) {
  Matrix8 out = Matrix8::Zero();
  const int mask = 1 << (kQubits - target);
  for (int col = 0; col < 8; ++col) {
    bool active = true;
    for (const Condition& c : conditions)
      active = active && bit_of(col, c.qubit) == c.value;
    if (!active) {
      out(col, col) = 1.0;
      continue;
    }
    const int in_bit = bit_of(col, target);
    for (int out_bit = 0; out_bit < 2; ++out_bit)
      out((col & ~mask) | (out_bit ? mask : 0), col) = u(out_bit, in_bit);
  }
  return out;
}

Matrix2 ry(double angle) {
  Matrix2 m;
  m << std::cos(angle / 2), -std::sin(angle / 2), std::sin(angle / 2),
      std::cos(angle / 2);
  return m;
}

void require_coupling(double coupling) {
  if (!(coupling > 0.0) || !std::isfinite(coupling))
    throw DomainError("coupling must be positive and finite");
}

void require_polar(double theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
    throw DomainError("theta must lie in [0, pi]");
}

}  // namespace

Matrix2 hadamard_conjugator() {
  const double norm = std::sqrt(4.0 + 2.0 * kSqrt2);
  Matrix2 a;
  a << 1.0, 1.0 + kSqrt2, 1.0 + kSqrt2, -1.0;
  return a / norm;
}

Matrix2 rz(double angle) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::polar(1.0, -angle / 2);
  m(1, 1) = std::polar(1.0, angle / 2);
  return m;
}

Matrix8 gate_matrix(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const RotY& g) -> Matrix8 {
            require_qubits({g.target});
            require_finite(g.angle, "RotY angle");
            return embed(ry(g.angle), g.target);
          },
          [](const Cnot& g) -> Matrix8 {
            require_qubits({g.control, g.target});
            return embed(pauli::x(), g.target, {{g.control, 1}});
          },
          [](const Not& g) -> Matrix8 {
            require_qubits({g.target});
            return embed(pauli::x(), g.target);
          },
          [](const ControlledH& g) -> Matrix8 {
            require_qubits({g.control, g.target});
            const Matrix8 a = embed(hadamard_conjugator(), g.target);
            return a * embed(pauli::x(), g.target, {{g.control, 1}}) * a;
          },
          [](const ControlledR& g) -> Matrix8 {
            require_qubits({g.control, g.target});
            require_finite(g.angle, "CR angle");
            return embed(rz(g.angle), g.target, {{g.control, 1}});
          },
          [](const DoubleControlledR& g) -> Matrix8 {
            require_qubits({g.control1, g.control2, g.target});
            require_finite(g.angle, "CCR angle");
            const int v = g.pattern == ControlPattern::Ones ? 1 : 0;
            return embed(rz(g.angle), g.target,
                         {{g.control1, v}, {g.control2, v}});
          },
          [](const EqNeighborEvolve& g) -> Matrix8 {
            return eqneighbor_propagator(g.time, g.coupling);
          },
      },
      gate);
}

Matrix8 Circuit::matrix() const {
  Matrix8 u = Matrix8::Identity();
  for (const Gate& g : gates) u = (gate_matrix(g) * u).eval();
  return u;
}

std::vector<Gate> decompose_ccr(const DoubleControlledR& gate) {
  require_qubits({gate.control1, gate.control2, gate.target});
  const double half = gate.angle / 2;
  // Application order of CR13(a/2) CNOT12 CR23(-a/2) CNOT12 CR23(a/2).
  std::vector<Gate> core{
      ControlledR{gate.control2, gate.target, half},
      Cnot{gate.control1, gate.control2},
      ControlledR{gate.control2, gate.target, -half},
      Cnot{gate.control1, gate.control2},
      ControlledR{gate.control1, gate.target, half},
  };
  if (gate.pattern == ControlPattern::Ones) return core;

  std::vector<Gate> out{Not{gate.control1}, Not{gate.control2}};
  out.insert(out.end(), core.begin(), core.end());
  out.push_back(Not{gate.control1});
  out.push_back(Not{gate.control2});
  return out;
}

std::vector<Gate> decompose_ccr(double angle, ControlPattern pattern) {
  return decompose_ccr(DoubleControlledR{1, 2, 3, pattern, angle});
}

HermitianOperator eqneighbor_hamiltonian(double coupling) {
  require_finite(coupling, "coupling");
  const Matrix id = Matrix::Identity(2, 2);
  auto on = [&](int qubit, const Matrix2& op) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 1; q <= kQubits; ++q)
      out = kron(out, q == qubit ? Matrix(op) : id);
    return out;
  };
  Matrix h = Matrix::Zero(8, 8);
  for (int n = 1; n <= kQubits; ++n) {
    for (int m = 1; m <= kQubits; ++m) {
      if (n == m) continue;
      h += on(n, pauli::raising()) * on(m, pauli::lowering()) +
           on(n, pauli::lowering()) * on(m, pauli::raising());
    }
  }
  return HermitianOperator(0.5 * coupling * h);
}

Matrix8 eqneighbor_propagator(double time, double coupling) {
  require_finite(time, "evolution time");
  return unitary_exp(eqneighbor_hamiltonian(coupling), time);
}

PropagatorCoefficients propagator_coefficients(double time, double coupling) {
  const double kt = coupling * time;
  const Complex c0 = (std::polar(1.0, -2.0 * kt) + 2.0 * std::polar(1.0, kt)) /
                     3.0;
  const Complex c1 =
      (2.0 / 3.0) * std::sin(1.5 * kt) * std::polar(1.0, -0.5 * (kPi + kt));
  return {c0, c1};
}

double interaction_time(double theta, double coupling) {
  require_coupling(coupling);
  const MpccParams p = mpcc_params(theta);
  return 2.0 / (3.0 * coupling) *
         std::asin(3.0 / (2.0 * kSqrt2) * p.lambda_bar);
}

EvolutionParams evolution_params(double theta, double coupling) {
  EvolutionParams e;
  e.coupling = coupling;
  e.time = interaction_time(theta, coupling);
  const PropagatorCoefficients c = propagator_coefficients(e.time, coupling);
  e.c0 = c.c0;
  e.c1 = c.c1;
  e.phase0 = std::arg(c.c0);
  // arg(0) is 0 at t = 0, where the correction is irrelevant.
  e.phase1 = std::arg(c.c1);
  e.correction = 2.0 * (e.phase0 - e.phase1);
  return e;
}

Circuit circuit_mpcc_v1(double theta) {
  require_polar(theta);
  const double lambda = mpcc_params(theta).lambda;
  const double gamma = 2.0 * std::acos(std::min(lambda, 1.0));
  return Circuit{{RotY{3, gamma}, ControlledH{3, 2}, Cnot{1, 3}, Cnot{2, 1},
                  Cnot{3, 2}}};
}

Circuit circuit_mpcc_v2(double theta, double coupling) {
  require_polar(theta);
  require_coupling(coupling);
  const EvolutionParams e = evolution_params(theta, coupling);
  return Circuit{{
      Cnot{1, 2},
      Cnot{1, 3},
      Not{3},
      EqNeighborEvolve{e.time, coupling},
      DoubleControlledR{1, 2, 3, ControlPattern::Ones, e.correction},
      DoubleControlledR{1, 2, 3, ControlPattern::Zeros, -e.correction},
      Not{3},
  }};
}

PureState run_circuit(const Circuit& circuit, const PureState& psi) {
  if (psi.dim() != 8)
    throw DimensionError("run_circuit: expects a three-qubit state");
  Vector v = psi.amplitudes();
  for (const Gate& g : circuit.gates) v = gate_matrix(g) * v;
  return PureState(std::move(v));
}

PhaseComparison equal_up_to_global_phase(const PureState& a,
                                         const PureState& b, double tol) {
  if (a.dim() != b.dim())
    throw DimensionError("equal_up_to_global_phase: dimension mismatch");
  const double overlap = std::abs(a.amplitudes().dot(b.amplitudes()));
  const double residual = std::max(0.0, 1.0 - overlap);
  return {residual <= tol, residual};
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream out;
  for (const Gate& gate : circuit.gates) {
    std::visit(
        Overloaded{
            [&](const RotY& g) {
              out << "ROTY " << g.target << ' ' << format_double(g.angle);
            },
            [&](const Cnot& g) { out << "CNOT " << g.control << ' ' << g.target; },
            [&](const Not& g) { out << "NOT " << g.target; },
            [&](const ControlledH& g) {
              out << "CH " << g.control << ' ' << g.target;
            },
            [&](const ControlledR& g) {
              out << "CR " << g.control << ' ' << g.target << ' '
                  << format_double(g.angle);
            },
            [&](const DoubleControlledR& g) {
              out << (g.pattern == ControlPattern::Ones ? "CCR11 " : "CCR00 ")
                  << g.control1 << ' ' << g.control2 << ' ' << g.target << ' '
                  << format_double(g.angle);
            },
            [&](const EqNeighborEvolve& g) {
              out << "EVOLVE 1 2 3 " << format_double(g.time) << ' '
                  << format_double(g.coupling);
            },
        },
        gate);
    out << '\n';
  }
  return out.str();
}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    auto fail = [&](const std::string& why) {
      return DomainError("parse_circuit: line " + std::to_string(line_no) +
                         ": " + why);
    };
    auto next_int = [&]() {
      int v;
      if (!(fields >> v)) throw fail("expected a qubit index");
      return v;
    };
    auto next_double = [&]() {
      std::string token;
      if (!(fields >> token)) throw fail("expected a number");
      double v = 0.0;
      const auto res =
          std::from_chars(token.data(), token.data() + token.size(), v);
      if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw fail("malformed number '" + token + "'");
      return v;
    };

    Gate gate;
    if (kind == "ROTY") {
      const int t = next_int();
      gate = RotY{t, next_double()};
    } else if (kind == "CNOT") {
      const int c = next_int();
      gate = Cnot{c, next_int()};
    } else if (kind == "NOT") {
      gate = Not{next_int()};
    } else if (kind == "CH") {
      const int c = next_int();
      gate = ControlledH{c, next_int()};
    } else if (kind == "CR") {
      const int c = next_int();
      const int t = next_int();
      gate = ControlledR{c, t, next_double()};
    } else if (kind == "CCR11" || kind == "CCR00") {
      const int c1 = next_int();
      const int c2 = next_int();
      const int t = next_int();
      gate = DoubleControlledR{
          c1, c2, t,
          kind == "CCR11" ? ControlPattern::Ones : ControlPattern::Zeros,
          next_double()};
    } else if (kind == "EVOLVE") {
      for (int q = 1; q <= kQubits; ++q)
        if (next_int() != q) throw fail("EVOLVE acts on qubits 1 2 3");
      const double t = next_double();
      gate = EqNeighborEvolve{t, next_double()};
    } else {
      throw fail("unknown gate kind '" + kind + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing field '" + extra + "'");
    gate_matrix(gate);  // validates indices and angles
    circuit.gates.push_back(gate);
  }
  return circuit;
}

}  // namespace mirrorclone
