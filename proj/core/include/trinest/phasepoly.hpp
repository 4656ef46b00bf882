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
#include <iosfwd>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "trinest/bitmat.hpp"

namespace trinest {

/// Default cap on brute-force phase enumeration (memory is about 2^n bytes).
inline constexpr std::size_t kDefaultOracleCap = 24;

/// One pi/4 phase gadget: applies `coeff` (in Z8 units of pi/4) to basis
/// states whose bits XOR to 1 over `support`.
struct PhaseTerm {
  BitVec support;
  std::uint8_t coeff = 0;

  bool operator==(const PhaseTerm&) const = default;
};

/// Diagonal phase function in the XOR basis: a multiset of phase gadgets.
/// Terms with empty support are global phases and are dropped on
/// construction; all equalities in this library are up to global phase.
/// Duplicate supports and zero coefficients are retained until fuse().
class PhasePolynomial {
 public:
  PhasePolynomial() = default;
  explicit PhasePolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Appends a gadget; empty supports are silently dropped (global phase).
  void add_term(const BitVec& support, std::uint8_t coeff);

  /// Terms of `other` appended to a copy of this; variable counts must match.
  PhasePolynomial concat(const PhasePolynomial& other) const;

  /// Coefficients mapped c -> 8-c (the adjoint of a diagonal gate).
  PhasePolynomial negate() const;

  bool operator==(const PhasePolynomial&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<PhaseTerm> terms_;
};

/// Phase function in the monomial (AND) basis. Only nonzero coefficients on
/// variable subsets of size 1..3 are stored: at pi/4 granularity every
/// monomial of degree >= 4 carries a multiple of 8 and vanishes.
class MonomialPolynomial {
 public:
  MonomialPolynomial() = default;
  explicit MonomialPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::map<std::vector<std::uint32_t>, std::uint8_t>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  /// Adds `delta` to the coefficient of the subset (sorted, size 1..3).
  void add(const std::vector<std::uint32_t>& subset, std::uint8_t delta);

  /// Sum of coefficients over subsets of supp(x), mod 8.
  std::uint8_t evaluate(const BitVec& x) const;

 private:
  std::size_t num_vars_ = 0;
  std::map<std::vector<std::uint32_t>, std::uint8_t> coeffs_;
};

enum class GateClass { Identity, CliffordOnly, NonClifford };

std::string_view to_string(GateClass c);

/// One gadget per row of m; `coeffs` defaults to all-1 (a pi/4 gadget per
/// row). Zero rows become global phases and are dropped.
PhasePolynomial from_rows(const BitMatrix& m,
                          std::optional<std::vector<std::uint8_t>> coeffs = std::nullopt);

/// Sum over terms of coeff * (XOR of x over the support), mod 8.
std::uint8_t evaluate(const PhasePolynomial& pp, const BitVec& x);

/// Gadget fusion: equal supports merged by adding coefficients mod 8, zero
/// coefficients dropped, terms in canonical (sorted) order. The phase
/// function is unchanged at every point.
PhasePolynomial fuse(const PhasePolynomial& pp);

/// Boolean Fourier transform to the monomial basis: a term (T, c)
/// contributes c * (-2)^(|S|-1) to every nonempty S subset of supp(T) with
/// |S| <= 3.
MonomialPolynomial to_monomial(const PhasePolynomial& pp);

/// Identity iff the monomial expansion is empty; CliffordOnly iff it is
/// nonempty with every singleton coefficient even, every pair coefficient in
/// {0,4} and every triple coefficient zero; NonClifford otherwise.
GateClass classify(const PhasePolynomial& pp);

/// Phase table over all 2^n basis states; entry at index x (binary, x1 least
/// significant) is evaluate(pp, x). Throws when num_vars exceeds `cap`.
std::vector<std::uint8_t> oracle_phases(const PhasePolynomial& pp,
                                        std::size_t cap = kDefaultOracleCap);

/// Equality up to global phase: classify(p1 + negate(p2)) == Identity.
bool equal(const PhasePolynomial& p1, const PhasePolynomial& p2);

// Gadget list text format: one term per line, "support-bitstring coefficient"
// with the coefficient a digit 0-7; '#' comments and blank lines ignored.
PhasePolynomial read_gadget_list(std::istream& in);
PhasePolynomial parse_gadget_list(std::string_view text);
void write_gadget_list(std::ostream& out, const PhasePolynomial& pp);

}  // namespace trinest
