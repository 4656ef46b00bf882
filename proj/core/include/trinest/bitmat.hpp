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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trinest {

/// Thrown by the text-format readers on malformed input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Fixed-length vector over F2, packed 64 bits per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static BitVec from_string(std::string_view s);
  static BitVec unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  std::size_t popcount() const;
  bool any() const;
  bool is_zero() const { return !any(); }

  BitVec& operator^=(const BitVec& other);
  BitVec operator^(const BitVec& other) const;
  BitVec& operator&=(const BitVec& other);
  BitVec operator&(const BitVec& other) const;

  /// Parity of the entrywise AND with `other` (the F2 dot product).
  bool dot(const BitVec& other) const;

  /// Lowest min(size, 64) bits as one machine word.
  std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

  /// Indices of the set bits, ascending.
  std::vector<std::size_t> set_bits() const;

  std::string to_string() const;

  bool operator==(const BitVec& other) const = default;
  // Orders by size, then by words; any strict total order works for
  // canonical sorting of term lists and monomial sets.
  bool operator<(const BitVec& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static std::size_t word_count(std::size_t size) { return (size + 63) / 64; }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const;
};

/// Matrix over F2, rows packed in machine words. Values are treated as
/// immutable once built; every operation returns a fresh matrix. Duplicate
/// rows are permitted and meaningful (multiplicity encodes gadget
/// repetition). Dimensions are capped at 2^16 per side.
class BitMatrix {
 public:
  static constexpr std::size_t kMaxDim = std::size_t{1} << 16;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVec>& rows, std::size_t cols);
  /// Convenience for literals in tests and tools; rows of '0'/'1' characters.
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool value);

  BitVec row(std::size_t r) const;
  BitVec column(std::size_t c) const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Product over F2. Throws std::invalid_argument on an inner-dimension
/// mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// a * v over F2 (v as a column vector).
BitVec mat_vec_mul(const BitMatrix& a, const BitVec& v);

/// v^T * m over F2 (v selects rows of m to XOR).
BitVec vec_mat_mul(const BitVec& v, const BitMatrix& m);

/// Entrywise AND of the selected columns; a singleton set returns the column
/// itself. Throws on an empty set or an out-of-range index.
BitVec column_product(const BitMatrix& m, std::span<const std::size_t> cols);

/// Basis of the right null space: every returned v satisfies m * v = 0, and
/// the vectors are linearly independent with count = cols - rank(m).
std::vector<BitVec> kernel_basis(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

BitMatrix transpose(const BitMatrix& m);

/// Rows of `top` followed by rows of `bottom`; column counts must agree.
BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

// Matrix text format (used repo-wide): one row per line, each line a string
// of '0'/'1' characters with no separators. Blank lines and lines starting
// with '#' are ignored; all rows must have equal length.
BitMatrix read_bit_matrix(std::istream& in);
BitMatrix parse_bit_matrix(std::string_view text);
void write_bit_matrix(std::ostream& out, const BitMatrix& m);

}  // namespace trinest
