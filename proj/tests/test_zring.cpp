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

#include "trinest/zring.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

using namespace trinest;
using namespace trinest::testing;

TEST_CASE("howell_form keeps an already-Howell 1x1 matrix") {
  const Z8Matrix m = parse_z8_matrix("2");
  CHECK(howell_form(m) == m);
}

TEST_CASE("howell_form of [[4],[2]] collapses to [[2]]") {
  const Z8Matrix m = parse_z8_matrix("4\n2");
  const Z8Matrix h = howell_form(m);
  CHECK(h == parse_z8_matrix("2"));
  // Same span by enumeration.
  CHECK(z8_span(z8_rows(m), 1) == z8_span(z8_rows(h), 1));
}

TEST_CASE("howell_form preserves the row span (enumeration, <= 3 columns)") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const Z8Matrix m = random_z8_matrix(rng, dim(rng), dim(rng));
    const Z8Matrix h = howell_form(m);
    CHECK(z8_span(z8_rows(m), m.cols()) == z8_span(z8_rows(h), m.cols()));
  }
}

TEST_CASE("howell_form is idempotent") {
  std::mt19937 rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    const Z8Matrix m = random_z8_matrix(rng, 3, 3);
    const Z8Matrix h = howell_form(m);
    CHECK(howell_form(h) == h);
  }
}

TEST_CASE("howell_form is canonical for the row span") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> digit(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const Z8Matrix m = random_z8_matrix(rng, 3, 3);
    // A span-preserving scramble: permuted rows plus a row replaced by
    // itself plus a multiple of another.
    std::vector<Z8Vec> rows = {m.row(1), m.row(2), m.row(0)};
    const int factor = digit(rng);
    for (std::size_t c = 0; c < 3; ++c) {
      rows[0][c] = static_cast<std::uint8_t>((rows[0][c] + factor * rows[1][c]) % 8);
    }
    const Z8Matrix scrambled = Z8Matrix::from_rows(rows, 3);
    CHECK(howell_form(scrambled) == howell_form(m));
  }
}

TEST_CASE("howell_form pivots are 1, 2 or 4 in increasing columns") {
  std::mt19937 rng(104);
  for (int trial = 0; trial < 40; ++trial) {
    const Z8Matrix h = howell_form(random_z8_matrix(rng, 4, 4));
    std::size_t last_pivot_col = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      std::size_t c = 0;
      while (c < h.cols() && h.get(r, c) == 0) {
        ++c;
      }
      REQUIRE(c < h.cols());  // zero rows are dropped
      const std::uint8_t pivot = h.get(r, c);
      CHECK((pivot == 1 || pivot == 2 || pivot == 4));
      if (r > 0) {
        CHECK(c > last_pivot_col);
      }
      last_pivot_col = c;
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(h.get(above, c) < pivot);
      }
    }
  }
}

TEST_CASE("kernel_generators on small handworked cases") {
  SUBCASE("invertible entry has a trivial kernel") {
    const KernelGenerators k = kernel_generators(parse_z8_matrix("1"));
    CHECK(z8_span(
              [&] {
                std::vector<Z8IntVec> rows;
                for (const Z8Vec& g : k.generators) {
                  rows.emplace_back(g.begin(), g.end());
                }
                return rows;
              }(),
              1) == std::set<Z8IntVec>{{0}});
  }
  SUBCASE("[[2]] has kernel {0, 4}") {
    const KernelGenerators k = kernel_generators(parse_z8_matrix("2"));
    std::vector<Z8IntVec> rows;
    for (const Z8Vec& g : k.generators) {
      rows.emplace_back(g.begin(), g.end());
    }
    CHECK(z8_span(rows, 1) == std::set<Z8IntVec>{{0}, {4}});
  }
  SUBCASE("diagonal [[4,0],[0,2]]") {
    const KernelGenerators k = kernel_generators(parse_z8_matrix("4 0\n0 2"));
    std::vector<Z8IntVec> rows;
    for (const Z8Vec& g : k.generators) {
      rows.emplace_back(g.begin(), g.end());
    }
    std::set<Z8IntVec> expected;
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        expected.insert({(2 * a) % 8, (4 * b) % 8});
      }
    }
    CHECK(z8_span(rows, 2) == expected);
  }
}

TEST_CASE("kernel_generators generate exactly the brute-force kernel") {
  std::mt19937 rng(105);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const Z8Matrix m = random_z8_matrix(rng, dim(rng), dim(rng));
    const KernelGenerators k = kernel_generators(m);
    for (const Z8Vec& g : k.generators) {
      const Z8Vec image = z8_mat_vec_mul(m, g);
      for (std::uint8_t x : image) {
        CHECK(x == 0);
      }
    }
    // Spanning the whole kernel needs the full combination set; keep the
    // generator count small enough to enumerate.
    if (k.generators.size() <= 5) {
      std::vector<Z8IntVec> rows;
      for (const Z8Vec& g : k.generators) {
        rows.emplace_back(g.begin(), g.end());
      }
      CHECK(z8_span(rows, m.cols()) == z8_brute_kernel(m));
    }
  }
}

TEST_CASE("solve_linear identity case returns b") {
  Z8Matrix identity(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    identity.set(i, i, 1);
  }
  const Z8Vec b = {3, 0, 7};
  const auto solution = solve_linear(identity, b);
  REQUIRE(solution.has_value());
  CHECK(solution->particular == b);
}

TEST_CASE("solve_linear parity obstruction") {
  const Z8Vec b = {1};
  CHECK_FALSE(solve_linear(parse_z8_matrix("2"), b).has_value());
}

TEST_CASE("solve_linear 2x = 6 finds a valid root") {
  const Z8Vec b = {6};
  const auto solution = solve_linear(parse_z8_matrix("2"), b);
  REQUIRE(solution.has_value());
  CHECK((solution->particular[0] == 3 || solution->particular[0] == 7));
}

TEST_CASE("solve_linear agrees with brute-force solvability") {
  std::mt19937 rng(106);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<int> digit(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const Z8Matrix m = random_z8_matrix(rng, rows, cols);
    Z8Vec b(rows);
    for (std::uint8_t& x : b) {
      x = static_cast<std::uint8_t>(digit(rng));
    }

    bool brute_solvable = false;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < cols; ++i) {
      combos *= 8;
    }
    for (std::size_t pick = 0; pick < combos && !brute_solvable; ++pick) {
      Z8Vec v(cols);
      std::size_t rest = pick;
      for (std::size_t c = 0; c < cols; ++c) {
        v[c] = static_cast<std::uint8_t>(rest % 8);
        rest /= 8;
      }
      brute_solvable = z8_mat_vec_mul(m, v) == b;
    }

    const auto solution = solve_linear(m, b);
    CHECK(solution.has_value() == brute_solvable);
    if (solution) {
      CHECK(z8_mat_vec_mul(m, solution->particular) == b);
    }
  }
}

TEST_CASE("solve_linear rejects mismatched dimensions") {
  const Z8Vec b = {1, 2};
  CHECK_THROWS_AS(solve_linear(parse_z8_matrix("2"), b), std::invalid_argument);
}

TEST_CASE("Z8 text format round trips and validates") {
  const Z8Matrix m = parse_z8_matrix("0 1 2\n7 6 5\n# comment\n");
  std::ostringstream out;
  write_z8_matrix(out, m);
  CHECK(parse_z8_matrix(out.str()) == m);
  CHECK_THROWS_AS(parse_z8_matrix("0 9\n"), ParseError);
  CHECK_THROWS_AS(parse_z8_matrix("1 2\n3\n"), ParseError);
}
