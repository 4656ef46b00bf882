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

#include "trinest/bitmat.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

using namespace trinest;
using namespace trinest::testing;

namespace {

// The 15 nonzero 4-bitstrings as rows, x1 leftmost.
BitMatrix all_nonzero_4bit() {
  std::vector<BitVec> rows;
  for (std::size_t i = 1; i < 16; ++i) {
    BitVec v(4);
    for (std::size_t c = 0; c < 4; ++c) {
      if ((i >> c) & 1) {
        v.set(c, true);
      }
    }
    rows.push_back(v);
  }
  return BitMatrix::from_rows(rows, 4);
}

}  // namespace

TEST_CASE("mat_mul identity leaves any matrix unchanged") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const BitMatrix x = random_bit_matrix(rng, 2, 2);
    CHECK(mat_mul(BitMatrix::identity(2), x) == x);
    CHECK(mat_mul(x, BitMatrix::identity(2)) == x);
  }
}

TEST_CASE("mat_mul 1+1=0 over F2") {
  const BitMatrix a = BitMatrix::from_strings({"11"});
  const BitMatrix b = BitMatrix::from_strings({"1", "1"});
  const BitMatrix expected = BitMatrix::from_strings({"0"});
  CHECK(mat_mul(a, b) == expected);
}

TEST_CASE("mat_mul agrees with the triple-loop oracle") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix a = random_bit_matrix(rng, 4, 4);
    const BitMatrix b = random_bit_matrix(rng, 4, 4);
    CHECK(to_int_matrix(mat_mul(a, b)) == naive_mat_mul(to_int_matrix(a), to_int_matrix(b)));
  }
}

TEST_CASE("mat_mul is associative") {
  std::mt19937 rng(33);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
    const BitMatrix a = random_bit_matrix(rng, p, q);
    const BitMatrix b = random_bit_matrix(rng, q, r);
    const BitMatrix c = random_bit_matrix(rng, r, s);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
  }
}

TEST_CASE("mat_mul rejects mismatched dimensions") {
  const BitMatrix a(2, 3);
  const BitMatrix b(2, 2);
  CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
}

TEST_CASE("column_product of a singleton is the column itself") {
  std::mt19937 rng(44);
  const BitMatrix m = random_bit_matrix(rng, 6, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    const std::size_t idx[1] = {c};
    CHECK(column_product(m, idx) == m.column(c));
  }
}

TEST_CASE("column_product pair weight on the all-nonzero-4-bitstring matrix") {
  const BitMatrix m = all_nonzero_4bit();
  // Rows with both leading bits set: x3, x4 free, so 4 of them.
  std::size_t expected = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.get(r, 0) && m.get(r, 1)) {
      ++expected;
    }
  }
  CHECK(expected == 4);
  const std::size_t idx[2] = {0, 1};
  CHECK(column_product(m, idx).popcount() == 4);
}

TEST_CASE("column_product with a zero column is zero") {
  const BitMatrix m = BitMatrix::from_strings({"10", "10", "10"});
  const std::size_t idx[2] = {0, 1};
  CHECK(column_product(m, idx).is_zero());
}

TEST_CASE("column_product rejects empty sets and bad indices") {
  const BitMatrix m(2, 2);
  CHECK_THROWS_AS(column_product(m, std::span<const std::size_t>{}), std::invalid_argument);
  const std::size_t idx[1] = {2};
  CHECK_THROWS_AS(column_product(m, idx), std::invalid_argument);
}

TEST_CASE("column_product weight is monotone under set inclusion") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const BitMatrix m = random_bit_matrix(rng, 10, 6);
    const std::size_t small[2] = {pick(rng), (pick(rng) + 1) % 6};
    std::vector<std::size_t> larger = {small[0], small[1], pick(rng)};
    CHECK(column_product(m, larger).popcount() <=
          column_product(m, std::span<const std::size_t>(small)).popcount());
  }
}

TEST_CASE("kernel_basis of the zero matrix spans everything") {
  CHECK(kernel_basis(BitMatrix(2, 2)).size() == 2);
}

TEST_CASE("kernel_basis of the identity is empty") {
  CHECK(kernel_basis(BitMatrix::identity(3)).empty());
}

TEST_CASE("kernel_basis vectors are annihilated, independent, and counted") {
  std::mt19937 rng(66);
  for (int trial = 0; trial < 30; ++trial) {
    const BitMatrix m = random_bit_matrix(rng, 5, 8);
    const std::vector<BitVec> basis = kernel_basis(m);
    for (const BitVec& v : basis) {
      CHECK(mat_vec_mul(m, v).is_zero());
    }
    CHECK(basis.size() == 8 - gauss_rank(to_int_matrix(m)));
    if (!basis.empty()) {
      const BitMatrix stacked = BitMatrix::from_rows(basis, 8);
      CHECK(rank(stacked) == basis.size());
    }
  }
}

TEST_CASE("matrix text format round trips") {
  const BitMatrix m = all_nonzero_4bit();
  std::ostringstream out;
  write_bit_matrix(out, m);
  CHECK(parse_bit_matrix(out.str()) == m);
}

TEST_CASE("matrix text format skips comments and blank lines") {
  const BitMatrix m = parse_bit_matrix("# header\n\n10\n01  \n# trailing\n");
  CHECK(m == BitMatrix::identity(2));
}

TEST_CASE("matrix text format rejects ragged and non-binary rows") {
  CHECK_THROWS_AS(parse_bit_matrix("10\n011\n"), ParseError);
  CHECK_THROWS_AS(parse_bit_matrix("10\n0x\n"), ParseError);
}

TEST_CASE("dimensions are capped at 2^16") {
  CHECK_THROWS_AS(BitMatrix((std::size_t{1} << 16) + 1, 1), std::invalid_argument);
  CHECK_NOTHROW(BitMatrix(0, 0));
}

TEST_CASE("empty matrices are legal") {
  const BitMatrix m(0, 5);
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 5);
  CHECK(rank(m) == 0);
  CHECK(kernel_basis(m).size() == 5);
}
