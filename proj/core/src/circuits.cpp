// Copyright 2026 The trinest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trinest/circuits.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trinest {

namespace {

struct GateSpec {
  GateKind kind;
  std::uint8_t arity;
};

const std::map<std::string, GateSpec, std::less<>>& gate_table() {
  static const std::map<std::string, GateSpec, std::less<>> table = {
      {"cnot", {GateKind::Cnot, 2}}, {"t", {GateKind::T, 1}},
      {"tdg", {GateKind::Tdg, 1}},   {"s", {GateKind::S, 1}},
      {"sdg", {GateKind::Sdg, 1}},   {"z", {GateKind::Z, 1}},
      {"cz", {GateKind::Cz, 2}},     {"ccz", {GateKind::Ccz, 3}}};
  return table;
}

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::Cnot:
      return "cnot";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::Z:
      return "z";
    case GateKind::Cz:
      return "cz";
    case GateKind::Ccz:
      return "ccz";
  }
  return "?";
}

std::uint8_t single_qubit_coeff(GateKind kind) {
  switch (kind) {
    case GateKind::T:
      return 1;
    case GateKind::Tdg:
      return 7;
    case GateKind::S:
      return 2;
    case GateKind::Sdg:
      return 6;
    case GateKind::Z:
      return 4;
    default:
      return 0;
  }
}

}  // namespace

Circuit read_circuit(std::istream& in) {
  Circuit circuit;
  bool header_seen = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token)) {
      continue;
    }

    if (!header_seen) {
      if (token != "qubits") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected \"qubits <n>\" header");
      }
      long long n = -1;
      if (!(ls >> n) || n < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed qubit count");
      }
      circuit.num_qubits = static_cast<std::size_t>(n);
      header_seen = true;
      continue;
    }

    const auto spec = gate_table().find(token);
    if (spec == gate_table().end()) {
      throw ParseError("line " + std::to_string(line_no) + ": unknown gate \"" + token +
                       "\" (supported: qubits, cnot, t, tdg, s, sdg, z, cz, ccz)");
    }
    Gate gate;
    gate.kind = spec->second.kind;
    gate.arity = spec->second.arity;
    for (std::uint8_t i = 0; i < gate.arity; ++i) {
      long long q = -1;
      if (!(ls >> q)) {
        throw ParseError("line " + std::to_string(line_no) + ": gate \"" + token +
                         "\" expects " + std::to_string(gate.arity) + " qubit indices");
      }
      if (q < 0 || static_cast<std::size_t>(q) >= circuit.num_qubits) {
        throw ParseError("line " + std::to_string(line_no) + ": qubit index out of range");
      }
      gate.qubits[i] = static_cast<std::uint32_t>(q);
      for (std::uint8_t j = 0; j < i; ++j) {
        if (gate.qubits[j] == gate.qubits[i]) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": gate arguments must be distinct");
        }
      }
    }
    std::string rest;
    if (ls >> rest) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing input");
    }
    circuit.gates.push_back(gate);
  }

  if (!header_seen) {
    throw ParseError("circuit is missing the \"qubits <n>\" header");
  }
  return circuit;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_circuit(in);
}

void write_circuit(std::ostream& out, const Circuit& c) {
  out << "qubits " << c.num_qubits << '\n';
  for (const Gate& g : c.gates) {
    out << mnemonic(g.kind);
    for (std::uint8_t i = 0; i < g.arity; ++i) {
      out << ' ' << g.qubits[i];
    }
    out << '\n';
  }
}

PhaseData extract_phase_data(const Circuit& c) {
  const std::size_t n = c.num_qubits;
  std::vector<BitVec> parity;
  parity.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    parity.push_back(BitVec::unit(n, q));
  }
  PhasePolynomial phases(n);

  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        parity[g.qubits[1]] ^= parity[g.qubits[0]];
        break;
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::Z:
        phases.add_term(parity[g.qubits[0]], single_qubit_coeff(g.kind));
        break;
      case GateKind::Cz: {
        const BitVec& pa = parity[g.qubits[0]];
        const BitVec& pb = parity[g.qubits[1]];
        phases.add_term(pa, 2);
        phases.add_term(pb, 2);
        phases.add_term(pa ^ pb, 6);
        break;
      }
      case GateKind::Ccz: {
        const BitVec& pa = parity[g.qubits[0]];
        const BitVec& pb = parity[g.qubits[1]];
        const BitVec& pc = parity[g.qubits[2]];
        phases.add_term(pa, 1);
        phases.add_term(pb, 1);
        phases.add_term(pc, 1);
        phases.add_term(pa ^ pb, 7);
        phases.add_term(pb ^ pc, 7);
        phases.add_term(pa ^ pc, 7);
        phases.add_term(pa ^ pb ^ pc, 1);
        break;
      }
    }
  }

  return PhaseData{BitMatrix::from_rows(parity, n), std::move(phases)};
}

bool circuits_equivalent(const Circuit& c1, const Circuit& c2) {
  if (c1.num_qubits != c2.num_qubits) {
    throw std::invalid_argument("circuits act on different qubit counts");
  }
  const PhaseData d1 = extract_phase_data(c1);
  const PhaseData d2 = extract_phase_data(c2);
  // Both gadget layers live over the input frame, so once the CNOT layers
  // agree the difference polynomial must classify as the identity.
  if (d1.linear != d2.linear) {
    return false;
  }
  return equal(d1.phases, d2.phases);
}

}  // namespace trinest
