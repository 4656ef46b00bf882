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

#include <iosfwd>
#include <string_view>
#include <vector>

#include "trinest/bitmat.hpp"
#include "trinest/phasepoly.hpp"

namespace trinest {

/// All n-bitstrings as rows: 2^n rows, n columns, row i the binary expansion
/// of i with x1 least significant. Requires n <= 20.
BitMatrix b_matrix(unsigned n);

/// 2^n rows over k+n columns: row i is (1...1 | row i of b_matrix(n)). The
/// gadget set connected to the first k wires and every combination of the
/// last n; triorthogonal exactly when n >= 4.
BitMatrix nest_matrix(unsigned k, unsigned n);

/// Column-permuted nest matrix over m variables whose indicator polynomial
/// is exactly the monomial with the given variable mask. Requires
/// |monomial| <= m - 4 so the result is triorthogonal.
BitMatrix monomial_nest(const BitVec& monomial, std::size_t m);

/// Witness that a triorthogonal gadget matrix rewrites to a Clifford
/// residual by cancelling one spider nest per monomial of its indicator
/// polynomial.
struct NestCertificate {
  BitMatrix target;
  std::vector<BitVec> monomials;     // graded-lex, highest degree first
  std::vector<BitMatrix> nests;      // one per monomial
  PhasePolynomial residual;          // fused union of target and all nests
};

/// Builds the certificate for a triorthogonal matrix: one nest per monomial
/// of the (global-phase-reduced) indicator polynomial, residual fused with
/// every coefficient even. Throws when the input is not triorthogonal
/// (semi-but-not-triorthogonal inputs are rejected too).
NestCertificate decompose_identity(const BitMatrix& m);

/// Re-checks every certificate invariant from scratch: each nest is
/// triorthogonal with indicator equal to its monomial, every nonzero row of
/// target plus nests appears an even number of times, the residual matches
/// the fused union with all coefficients even, and (when the target has at
/// most 12 columns) the full phase table of target + nests + negated
/// residual is zero. Returns false on any violation.
bool verify_certificate(const NestCertificate& c);

// Sectioned text format: "VARS n", then "TARGET" and "NEST i" sections in
// matrix format, "MONOMIAL i" sections holding one variable mask bitstring,
// and a "RESIDUAL" section in gadget list format.
void write_certificate(std::ostream& out, const NestCertificate& c);
NestCertificate read_certificate(std::istream& in);
NestCertificate parse_certificate(std::string_view text);

}  // namespace trinest
