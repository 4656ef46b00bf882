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

#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

using namespace trinest;
using namespace trinest::testing;

namespace {

const char* kCcz7T =
    "qubits 3\n"
    "t 0\nt 1\nt 2\n"
    "cnot 0 1\ntdg 1\ncnot 0 1\n"
    "cnot 1 2\ntdg 2\ncnot 1 2\n"
    "cnot 0 2\ntdg 2\ncnot 0 2\n"
    "cnot 0 2\ncnot 1 2\nt 2\ncnot 1 2\ncnot 0 2\n";

Circuit random_circuit(std::mt19937& rng, std::size_t qubits, std::size_t length) {
  std::uniform_int_distribution<int> kind(0, 7);
  std::uniform_int_distribution<std::uint32_t> qubit(0, static_cast<std::uint32_t>(qubits - 1));
  Circuit c;
  c.num_qubits = qubits;
  while (c.gates.size() < length) {
    Gate g;
    switch (kind(rng)) {
      case 0:
        g = {GateKind::Cnot, {}, 2};
        break;
      case 1:
        g = {GateKind::T, {}, 1};
        break;
      case 2:
        g = {GateKind::Tdg, {}, 1};
        break;
      case 3:
        g = {GateKind::S, {}, 1};
        break;
      case 4:
        g = {GateKind::Sdg, {}, 1};
        break;
      case 5:
        g = {GateKind::Z, {}, 1};
        break;
      case 6:
        g = {GateKind::Cz, {}, 2};
        break;
      default:
        g = {GateKind::Ccz, {}, 3};
        break;
    }
    if (g.arity > qubits) {
      continue;
    }
    for (std::uint8_t i = 0; i < g.arity;) {
      const std::uint32_t q = qubit(rng);
      bool fresh = true;
      for (std::uint8_t j = 0; j < i; ++j) {
        fresh = fresh && g.qubits[j] != q;
      }
      if (fresh) {
        g.qubits[i++] = q;
      }
    }
    c.gates.push_back(g);
  }
  return c;
}

Circuit dagger(const Circuit& c) {
  Circuit out;
  out.num_qubits = c.num_qubits;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::T) {
      g.kind = GateKind::Tdg;
    } else if (g.kind == GateKind::Tdg) {
      g.kind = GateKind::T;
    } else if (g.kind == GateKind::S) {
      g.kind = GateKind::Sdg;
    } else if (g.kind == GateKind::Sdg) {
      g.kind = GateKind::S;
    }
    out.gates.push_back(g);
  }
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
  return out;
}

BitVec point_from_index(std::size_t x, std::size_t vars) {
  BitVec v(vars);
  for (std::size_t i = 0; i < vars; ++i) {
    if ((x >> i) & 1) {
      v.set(i, true);
    }
  }
  return v;
}

}  // namespace

TEST_CASE("parse_circuit accepts the documented forms") {
  const Circuit single = parse_circuit("qubits 1\nt 0\n");
  CHECK(single.num_qubits == 1);
  REQUIRE(single.gates.size() == 1);
  CHECK(single.gates[0].kind == GateKind::T);

  const Circuit two = parse_circuit("qubits 2\ncnot 0 1\ntdg 1\n");
  CHECK(two.gates.size() == 2);
  CHECK(two.gates[0].kind == GateKind::Cnot);
  CHECK(two.gates[1].kind == GateKind::Tdg);
}

TEST_CASE("parse_circuit rejects bad input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nh 0\n"), doctest::Contains("line 2"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\ncnot 0 2\n"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\ncnot 1 1\n"),
                       doctest::Contains("distinct"), ParseError);
  CHECK_THROWS_AS(parse_circuit("t 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 3\nccz 0 1\n"), ParseError);
}

TEST_CASE("circuit text format round trips") {
  std::mt19937 rng(501);
  const Circuit c = random_circuit(rng, 4, 20);
  std::ostringstream out;
  write_circuit(out, c);
  CHECK(parse_circuit(out.str()) == c);
}

TEST_CASE("extract_phase_data on a native ccz gate") {
  const PhaseData data = extract_phase_data(parse_circuit("qubits 3\nccz 0 1 2\n"));
  CHECK(data.linear == BitMatrix::identity(3));

  PhasePolynomial expected(3);
  for (const auto& [s, c] : std::vector<std::pair<const char*, int>>{
           {"100", 1}, {"010", 1}, {"001", 1}, {"110", 7}, {"011", 7}, {"101", 7}, {"111", 1}}) {
    expected.add_term(BitVec::from_string(s), static_cast<std::uint8_t>(c));
  }
  CHECK(fuse(data.phases) == fuse(expected));
}

TEST_CASE("extract_phase_data folds a T through a CNOT") {
  const PhaseData data = extract_phase_data(parse_circuit("qubits 2\ncnot 0 1\nt 1\n"));
  REQUIRE(data.phases.terms().size() == 1);
  CHECK(data.phases.terms()[0].support == BitVec::from_string("11"));
  CHECK(data.phases.terms()[0].coeff == 1);
  CHECK(data.linear == BitMatrix::from_strings({"10", "11"}));
}

TEST_CASE("CNOT-only circuits extract to an empty gadget layer") {
  std::mt19937 rng(502);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c;
    c.num_qubits = 4;
    std::uniform_int_distribution<std::uint32_t> qubit(0, 3);
    for (int g = 0; g < 12; ++g) {
      std::uint32_t a = qubit(rng), b = qubit(rng);
      if (a == b) {
        continue;
      }
      c.gates.push_back(Gate{GateKind::Cnot, {a, b}, 2});
    }
    const PhaseData data = extract_phase_data(c);
    CHECK(data.phases.empty());
    // The linear part is the product of the elementary matrices.
    IntMatrix expected(4, std::vector<int>(4, 0));
    for (std::size_t i = 0; i < 4; ++i) {
      expected[i][i] = 1;
    }
    for (const Gate& g : c.gates) {
      for (std::size_t c2 = 0; c2 < 4; ++c2) {
        expected[g.qubits[1]][c2] ^= expected[g.qubits[0]][c2];
      }
    }
    CHECK(to_int_matrix(data.linear) == expected);
  }
}

TEST_CASE("extraction composes: linear part of a concatenation") {
  std::mt19937 rng(503);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c1 = random_circuit(rng, 4, 10);
    const Circuit c2 = random_circuit(rng, 4, 10);
    const BitMatrix lhs = extract_phase_data(concat(c1, c2)).linear;
    const BitMatrix rhs =
        mat_mul(extract_phase_data(c2).linear, extract_phase_data(c1).linear);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("extracted phase data reproduces the basis-state simulation") {
  std::mt19937 rng(504);
  std::uniform_int_distribution<std::size_t> qubits(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = qubits(rng);
    const Circuit c = random_circuit(rng, n, 16);
    const PhaseData data = extract_phase_data(c);
    const SimResult sim = simulate_circuit(c);
    const std::vector<std::uint8_t> phases = oracle_phases(data.phases);
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      CHECK(phases[x] == sim.phase[x]);
      const BitVec image = mat_vec_mul(data.linear, point_from_index(x, n));
      CHECK(image.low_bits() == sim.image[x]);
    }
    CHECK(rank(data.linear) == n);  // CNOT layers are invertible
  }
}

TEST_CASE("the 7-T realisation of CCZ is equivalent to the native gate") {
  const Circuit expanded = parse_circuit(kCcz7T);
  const Circuit native = parse_circuit("qubits 3\nccz 0 1 2\n");
  CHECK(circuits_equivalent(expanded, native));
  // Cross-check on the full 3-qubit phase tables.
  const PhaseData a = extract_phase_data(expanded);
  const PhaseData b = extract_phase_data(native);
  CHECK(a.linear == b.linear);
  CHECK(oracle_phases(a.phases) == oracle_phases(b.phases));
}

TEST_CASE("circuits_equivalent basics") {
  std::mt19937 rng(505);
  const Circuit c = random_circuit(rng, 3, 12);
  CHECK(circuits_equivalent(c, c));
  CHECK_FALSE(circuits_equivalent(parse_circuit("qubits 1\nt 0\n"),
                                  parse_circuit("qubits 1\ns 0\n")));
  CHECK_THROWS_AS(circuits_equivalent(parse_circuit("qubits 1\nt 0\n"),
                                      parse_circuit("qubits 2\nt 0\n")),
                  std::invalid_argument);
}

TEST_CASE("circuits_equivalent agrees with brute-force simulation") {
  std::mt19937 rng(506);
  std::uniform_int_distribution<std::size_t> qubits(1, 5);
  std::uniform_int_distribution<std::size_t> length(0, 14);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = qubits(rng);
    const Circuit c1 = random_circuit(rng, n, length(rng));
    Circuit c2;
    if (trial % 2 == 0) {
      c2 = random_circuit(rng, n, length(rng));
    } else {
      // Equivalent by construction: pad with a circuit times its adjoint.
      const Circuit pad = random_circuit(rng, n, length(rng) / 2);
      c2 = concat(concat(c1, pad), dagger(pad));
    }
    const bool claimed = circuits_equivalent(c1, c2);
    const bool actual =
        simulations_equivalent(simulate_circuit(c1), simulate_circuit(c2));
    CHECK(claimed == actual);
  }
}

TEST_CASE("circuits_equivalent is symmetric and transitive on samples") {
  std::mt19937 rng(507);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit a = random_circuit(rng, 3, 8);
    const Circuit b = random_circuit(rng, 3, 8);
    CHECK(circuits_equivalent(a, b) == circuits_equivalent(b, a));
    const Circuit pad = random_circuit(rng, 3, 4);
    const Circuit a2 = concat(concat(a, pad), dagger(pad));
    const Circuit a3 = concat(dagger(pad), concat(pad, a));
    CHECK(circuits_equivalent(a, a2));
    CHECK(circuits_equivalent(a2, a3));
    CHECK(circuits_equivalent(a, a3));
  }
}
