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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "trinest/bitmat.hpp"
#include "trinest/phasepoly.hpp"

namespace trinest {

enum class GateKind : std::uint8_t { Cnot, T, Tdg, S, Sdg, Z, Cz, Ccz };

struct Gate {
  GateKind kind;
  std::array<std::uint32_t, 3> qubits{};  // first `arity` entries valid
  std::uint8_t arity = 0;

  bool operator==(const Gate&) const = default;
};

/// CNOT+T circuit (Hadamard-free by design; split circuits on Hadamards
/// before using this frontend).
struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

/// Phase-folding normal form: a layer of phase gadgets over the inputs
/// followed by the CNOT layer `linear` (rows are the output parities, always
/// invertible over F2).
struct PhaseData {
  BitMatrix linear;
  PhasePolynomial phases;
};

// Circuit text format: header "qubits <n>", then one gate per line with
// lowercase mnemonics and zero-based indices: cnot, t, tdg, s, sdg, z, cz,
// ccz. '#' comments. Unknown gates, bad indices, and repeated arguments are
// rejected with the offending line number.
Circuit read_circuit(std::istream& in);
Circuit parse_circuit(std::string_view text);
void write_circuit(std::ostream& out, const Circuit& c);

/// Sweeps the circuit keeping one parity per qubit: CNOTs fold parities,
/// phase gates append gadgets over the current parities (T=1, TDG=7, S=2,
/// SDG=6, Z=4; CZ(a,b) expands to (p_a,2),(p_b,2),(p_a+p_b,6); CCZ expands
/// to the seven-gadget pattern with coefficients (1,1,1,7,7,7,1)).
PhaseData extract_phase_data(const Circuit& c);

/// Corollary-1 equivalence up to global phase: the CNOT layers are equal
/// and the gadget layers' difference classifies as the identity. Throws on
/// a qubit-count mismatch.
bool circuits_equivalent(const Circuit& c1, const Circuit& c2);

}  // namespace trinest
