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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace trinest {

// The ring is Z8 throughout: third level of the Clifford hierarchy, phases
// in units of pi/4. The modulus is carried as a constant to keep the door
// open for Z_{2^l}, but no other modulus is surfaced in the API.
inline constexpr unsigned kZ8Modulus = 8;

using Z8Vec = std::vector<std::uint8_t>;

/// Dense matrix over Z8, entries in {0,...,7}.
class Z8Matrix {
 public:
  Z8Matrix() = default;
  Z8Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  static Z8Matrix from_rows(const std::vector<Z8Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t get(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint8_t v) { entries_[r * cols_ + c] = v % kZ8Modulus; }

  Z8Vec row(std::size_t r) const;

  bool operator==(const Z8Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// Generating set for a Z8-submodule of Z8^n; every generator g satisfies
/// A * g = 0 when produced by kernel_generators.
struct KernelGenerators {
  std::vector<Z8Vec> generators;
};

struct LinearSolution {
  Z8Vec particular;
  KernelGenerators homogeneous;
};

/// A * v over Z8.
Z8Vec z8_mat_vec_mul(const Z8Matrix& a, std::span<const std::uint8_t> v);

/// Howell normal form over Z8. Convention: pivot values restricted to
/// {1, 2, 4} in strictly increasing column positions, entries above a pivot
/// reduced modulo the pivot, zero rows dropped. The form is canonical: two
/// matrices with equal row span produce identical Howell forms.
Z8Matrix howell_form(const Z8Matrix& a);

/// Generating set of {v : A * v = 0 (mod 8)} as a Z8-module, extracted from
/// the Howell form of the [A^T | I] augmentation.
KernelGenerators kernel_generators(const Z8Matrix& a);

/// Inhomogeneous solve: a particular x with A * x = b plus the kernel of A,
/// or nullopt when no solution exists. Throws on a length mismatch.
std::optional<LinearSolution> solve_linear(const Z8Matrix& a, std::span<const std::uint8_t> b);

// Z8 matrix text format: one row per line, space-separated digits 0-7,
// '#' comments and blank lines ignored.
Z8Matrix read_z8_matrix(std::istream& in);
Z8Matrix parse_z8_matrix(std::string_view text);
void write_z8_matrix(std::ostream& out, const Z8Matrix& m);

}  // namespace trinest
