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
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "trinest/bitmat.hpp"
#include "trinest/zring.hpp"

namespace trinest {

/// CSS code specified by its X side: one row per logical X operator and one
/// row per X stabiliser (row-per-operator; transposed from the column
/// convention some texts use). The stacked rows must be linearly
/// independent.
class CssCode {
 public:
  /// Validates on construction; throws on a column mismatch or when the
  /// stacked rows are rank deficient.
  CssCode(BitMatrix logical_x, BitMatrix stab_x);

  std::size_t n() const { return n_; }
  std::size_t k() const { return logical_x_.rows(); }
  std::size_t r() const { return stab_x_.rows(); }
  const BitMatrix& logical_x() const { return logical_x_; }
  const BitMatrix& stab_x() const { return stab_x_; }

  /// Basis for the Z checks: the null space of the stacked X data. Exposed
  /// for documentation output; not used by the transversality math.
  std::vector<BitVec> z_check_basis() const;

 private:
  std::size_t n_ = 0;
  BitMatrix logical_x_;
  BitMatrix stab_x_;
};

/// Diagonal logical gate at the third level: Z8 coefficient per nonempty
/// logical gadget support of size 1..3. Larger supports are rejected; they
/// always decompose into gadgets of degree at most 3 via spider nest
/// identities.
class LogicalGate {
 public:
  LogicalGate() = default;
  explicit LogicalGate(std::size_t k) : k_(k) {}

  std::size_t k() const { return k_; }
  const std::map<BitVec, std::uint8_t>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  /// Adds to the coefficient of a gadget support (mod 8, zeros dropped).
  void add(const BitVec& support, std::uint8_t coeff);

  bool operator==(const LogicalGate&) const = default;

 private:
  std::size_t k_ = 0;
  std::map<BitVec, std::uint8_t> coeffs_;
};

/// Transversal diagonal physical operation: a T-gate exponent (Z8) per
/// physical qubit, i.e. a multiset of Hamming-weight-1 gadget rows.
struct TransversalOp {
  Z8Vec t_powers;

  std::size_t n() const { return t_powers.size(); }
  bool operator==(const TransversalOp&) const = default;
};

CssCode new_code(BitMatrix logical_x, BitMatrix stab_x);

/// Cap on 2^r / 2^(k+r) style enumerations.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// The 2^r codeword bitstrings for logical basis state b: all b*L + c*S.
/// Throws when length(b) != k or 2^r exceeds the enumeration cap.
std::set<BitVec> codeword_support(const CssCode& code, const BitVec& b,
                                  std::size_t cap = kDefaultEnumerationCap);

/// The transversality criterion matrix over k+r columns: coeff copies of (support | 0^r)
/// per logical gadget, and t_powers[i] copies of (L column i | S column i)
/// per physical qubit.
BitMatrix transversality_matrix(const CssCode& code, const LogicalGate& h, const TransversalOp& p);

/// is_triorthogonal(transversality_matrix(code, h, p)): the code admits the
/// transversal implementation exactly when this holds.
bool check_transversal(const CssCode& code, const LogicalGate& h, const TransversalOp& p);

/// Brute force over all (b, c): checks f_P(b*L + c*S) + f_H(b) = 0 mod 8 for
/// every logical basis state and stabiliser choice, where f_H evaluates the
/// logical gadgets (XOR semantics) and f_P sums t_powers over set bits.
bool oracle_transversal(const CssCode& code, const LogicalGate& h, const TransversalOp& p,
                        std::size_t cap = kDefaultEnumerationCap);

/// The Z8 constraint matrix: one row per nonempty subset of the k+r columns
/// of size <= 3, one column per candidate gadget row (the weight-<=3 logical
/// masks, then the physical qubits), entries 2^(|subset|-1) gated on the row
/// covering the subset. Kernel elements are exactly the multiplicity vectors
/// making the expanded matrix triorthogonal.
Z8Matrix build_nhat(const CssCode& code);

/// Candidate gadget rows in the column order of build_nhat: the logical
/// masks of weight 1..3 in (weight, index) order, followed by the n physical
/// qubits.
std::vector<BitVec> nhat_logical_masks(const CssCode& code);

/// Generating set of all transversal third-level logical gates: the kernel
/// of build_nhat mapped back to (LogicalGate, TransversalOp) pairs. Every
/// returned pair passes check_transversal.
std::vector<std::pair<LogicalGate, TransversalOp>> transversal_generators(const CssCode& code);

/// For a fixed logical gate, a transversal implementation (or nullopt).
std::optional<TransversalOp> solve_for_p(const CssCode& code, const LogicalGate& h);

/// For a fixed transversal operation, the implemented logical gate (or
/// nullopt).
std::optional<LogicalGate> solve_for_h(const CssCode& code, const TransversalOp& p);

// Code file format: line "n <int>", section "LOGICAL_X" with k bitstring
// rows, section "STAB_X" with r bitstring rows; '#' comments.
CssCode read_code(std::istream& in);
CssCode parse_code(std::string_view text);
void write_code(std::ostream& out, const CssCode& code);

// Logical gate format: lines "subset-bitstring coefficient".
LogicalGate read_logical_gate(std::istream& in, std::size_t k);
LogicalGate parse_logical_gate(std::string_view text, std::size_t k);
void write_logical_gate(std::ostream& out, const LogicalGate& h);

// Transversal op format: a single line of n digits 0-7.
TransversalOp read_transversal_op(std::istream& in, std::size_t n);
TransversalOp parse_transversal_op(std::string_view text, std::size_t n);
void write_transversal_op(std::ostream& out, const TransversalOp& p);

}  // namespace trinest
