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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trinest/bitmat.hpp"

namespace trinest {

/// Polynomial over F2 as a set of monomials; each monomial is a mask of
/// variables (the empty mask is the constant 1).
class IndicatorPolynomial {
 public:
  IndicatorPolynomial() = default;
  explicit IndicatorPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  /// Monomial masks must all have length num_vars; duplicates cancel (F2).
  IndicatorPolynomial(std::size_t num_vars, std::vector<BitVec> monomials);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<BitVec>& monomials() const { return monomials_; }

  bool is_zero() const { return monomials_.empty(); }
  /// Largest monomial size, or -1 for the zero polynomial.
  int degree() const;

  /// XOR over monomials of the AND of their variables at `point`.
  bool evaluate(const BitVec& point) const;

  /// "+"-joined monomials with variables x1..xn; constant "1"; zero "0".
  std::string to_string() const;

  bool operator==(const IndicatorPolynomial&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<BitVec> monomials_;  // canonical graded order, deduplicated
};

/// Reed-Muller code RM(r, m): evaluation vectors of all monomials of degree
/// <= r over the 2^m points, x1 as the least significant index bit.
struct RMCode {
  unsigned r = 0;
  unsigned m = 0;
  BitMatrix generator;
};

/// Columns, distinct column pairs, and distinct column triples have Hamming
/// weights divisible by 8, 4 and 2 respectively.
bool is_triorthogonal(const BitMatrix& m);

/// All column, pair and triple product weights merely even (indices may
/// repeat, so this is the all-subsets-of-size-<=3 parity condition).
bool is_semi_triorthogonal(const BitMatrix& m);

enum class IndicatorPath { Auto, Dense, Sparse };

/// Algebraic normal form of the odd-row-multiplicity indicator function.
/// Evaluating the result at every point reproduces the row-multiplicity
/// parity exactly. Dense transform for cols <= 24, per-row product-formula
/// expansion otherwise; both paths agree where both apply.
IndicatorPolynomial indicator_polynomial(const BitMatrix& m,
                                         IndicatorPath path = IndicatorPath::Auto);

/// The representative of {P, P + indicator(0-point)} without the full-degree
/// monomial. A gadget row equal to 0 is a global phase, so the indicator is
/// only meaningful modulo the point indicator of the all-zero bitstring;
/// this picks the lower-degree representative (exactly one of the two
/// contains x1...xn).
IndicatorPolynomial reduce_global_phase(const IndicatorPolynomial& p);

/// Degree of the reduced indicator together with the semi-triorthogonality
/// predicate "reduced degree <= n-4 (or reduced polynomial zero)". The
/// predicate always equals is_semi_triorthogonal(m).
std::pair<int, bool> degree_check(const BitMatrix& m);

/// Throws std::invalid_argument when 0 <= r <= m fails or m > 20.
RMCode rm_generator(unsigned r, unsigned m);

/// Checks RM(r,m)-perp == RM(m-r-1,m): generator product zero over F2,
/// generators full rank, and dimensions summing to 2^m. Requires r < m.
bool rm_dual_verify(unsigned r, unsigned m);

/// Rows to append so that the union with the semi-triorthogonal input is
/// triorthogonal: two copies of e_i+e_j per column pair with product weight
/// 2 mod 4, then copies of e_i bringing each column weight to 0 mod 8.
/// Throws when the input is not semi-triorthogonal.
BitMatrix clifford_correction(const BitMatrix& m);

}  // namespace trinest
