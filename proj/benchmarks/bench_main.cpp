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

#include <benchmark/benchmark.h>

#include <random>

#include "trinest/bitmat.hpp"
#include "trinest/circuits.hpp"
#include "trinest/css.hpp"
#include "trinest/nests.hpp"
#include "trinest/phasepoly.hpp"
#include "trinest/triortho.hpp"
#include "trinest/zring.hpp"

namespace {

using namespace trinest;

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng)) {
        m.set(r, c, true);
      }
    }
  }
  return m;
}

CssCode rm15_code() {
  const BitMatrix logical = BitMatrix::from_strings({"111111111111111"});
  BitMatrix stab(4, 15);
  for (std::size_t point = 1; point <= 15; ++point) {
    for (std::size_t v = 0; v < 4; ++v) {
      if ((point >> v) & 1) {
        stab.set(v, point - 1, true);
      }
    }
  }
  return CssCode(logical, stab);
}

void BM_MatMul(benchmark::State& state) {
  std::mt19937 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const BitMatrix a = random_matrix(rng, n, n);
  const BitMatrix b = random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_mul(a, b));
  }
}
BENCHMARK(BM_MatMul)->Arg(64)->Arg(256);

void BM_KernelBasis(benchmark::State& state) {
  std::mt19937 rng(2);
  const BitMatrix m = random_matrix(rng, 128, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_basis(m));
  }
}
BENCHMARK(BM_KernelBasis);

void BM_IsTriorthogonal(benchmark::State& state) {
  const BitMatrix m = nest_matrix(1, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_triorthogonal(m));
  }
}
BENCHMARK(BM_IsTriorthogonal)->Arg(8)->Arg(12);

void BM_IndicatorDense(benchmark::State& state) {
  std::mt19937 rng(3);
  const BitMatrix m = random_matrix(rng, 64, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(indicator_polynomial(m, IndicatorPath::Dense));
  }
}
BENCHMARK(BM_IndicatorDense)->Arg(12)->Arg(18);

void BM_IndicatorSparse(benchmark::State& state) {
  // High-weight rows: the per-row expansion touches few monomials each.
  BitMatrix m(40, 48);
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::size_t> off(0, 47);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.set(r, c, true);
    }
    m.set(r, off(rng), false);
    m.set(r, off(rng), false);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(indicator_polynomial(m, IndicatorPath::Sparse));
  }
}
BENCHMARK(BM_IndicatorSparse);

void BM_HowellForm(benchmark::State& state) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> digit(0, 7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Z8Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m.set(r, c, static_cast<std::uint8_t>(digit(rng)));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(howell_form(m));
  }
}
BENCHMARK(BM_HowellForm)->Arg(16)->Arg(48);

void BM_DecomposeIdentity(benchmark::State& state) {
  const BitMatrix m = nest_matrix(2, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_identity(m));
  }
}
BENCHMARK(BM_DecomposeIdentity);

void BM_TransversalGeneratorsRM15(benchmark::State& state) {
  const CssCode code = rm15_code();
  for (auto _ : state) {
    benchmark::DoNotOptimize(transversal_generators(code));
  }
}
BENCHMARK(BM_TransversalGeneratorsRM15);

void BM_ExtractPhaseData(benchmark::State& state) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::uint32_t> qubit(0, 15);
  Circuit c;
  c.num_qubits = 16;
  while (c.gates.size() < 2000) {
    const int k = kind(rng);
    if (k == 0) {
      const std::uint32_t a = qubit(rng), b = qubit(rng);
      if (a == b) {
        continue;
      }
      c.gates.push_back(Gate{GateKind::Cnot, {a, b}, 2});
    } else {
      c.gates.push_back(Gate{k == 1 ? GateKind::T : GateKind::Tdg, {qubit(rng)}, 1});
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_phase_data(c));
  }
}
BENCHMARK(BM_ExtractPhaseData);

}  // namespace

BENCHMARK_MAIN();
