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

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace trinest {

BitVec BitVec::from_string(std::string_view s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      v.set(i, true);
    } else if (s[i] != '0') {
      throw ParseError("bit vector character must be '0' or '1', got '" +
                       std::string(1, s[i]) + "'");
    }
  }
  return v;
}

BitVec BitVec::unit(std::size_t size, std::size_t index) {
  if (index >= size) {
    throw std::invalid_argument("unit vector index out of range");
  }
  BitVec v(size);
  v.set(index, true);
  return v;
}

std::size_t BitVec::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVec::any() const {
  for (std::uint64_t w : words_) {
    if (w != 0) {
      return true;
    }
  }
  return false;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (size_ != other.size_) {
    throw std::invalid_argument("bit vector length mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

BitVec BitVec::operator^(const BitVec& other) const {
  BitVec result = *this;
  result ^= other;
  return result;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (size_ != other.size_) {
    throw std::invalid_argument("bit vector length mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

BitVec BitVec::operator&(const BitVec& other) const {
  BitVec result = *this;
  result &= other;
  return result;
}

bool BitVec::dot(const BitVec& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("bit vector length mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVec::set_bits() const {
  std::vector<std::size_t> bits;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      bits.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return bits;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

bool BitVec::operator<(const BitVec& other) const {
  if (size_ != other.size_) {
    return size_ < other.size_;
  }
  return words_ < other.words_;
}

std::size_t BitVecHash::operator()(const BitVec& v) const {
  std::size_t h = v.size();
  for (std::uint64_t w : v.words()) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
  if (rows > kMaxDim || cols > kMaxDim) {
    throw std::invalid_argument("matrix dimension exceeds 2^16");
  }
  words_.assign(rows_ * words_per_row_, 0);
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("row length does not match column count");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r].get(c)) {
        m.set(r, c, true);
      }
    }
  }
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVec> vecs;
  vecs.reserve(rows.size());
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const std::string& s : rows) {
    if (s.size() != cols) {
      throw std::invalid_argument("rows must have equal length");
    }
    vecs.push_back(BitVec::from_string(s));
  }
  return from_rows(vecs, cols);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  std::uint64_t& word = words_[r * words_per_row_ + (c >> 6)];
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

BitVec BitMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (get(r, c)) {
      v.set(c, true);
    }
  }
  return v;
}

BitVec BitMatrix::column(std::size_t c) const {
  if (c >= cols_) {
    throw std::invalid_argument("column index out of range");
  }
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) {
      v.set(r, true);
    }
  }
  return v;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul dimension mismatch");
  }
  BitMatrix result(a.rows(), b.cols());
  // Row-by-row accumulation: result row r is the XOR of the rows of b
  // selected by row r of a.
  std::vector<BitVec> b_rows;
  b_rows.reserve(b.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    b_rows.push_back(b.row(r));
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVec acc(b.cols());
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(r, k)) {
        acc ^= b_rows[k];
      }
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (acc.get(c)) {
        result.set(r, c, true);
      }
    }
  }
  return result;
}

BitVec mat_vec_mul(const BitMatrix& a, const BitVec& v) {
  if (a.cols() != v.size()) {
    throw std::invalid_argument("mat_vec_mul dimension mismatch");
  }
  BitVec result(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row(r).dot(v)) {
      result.set(r, true);
    }
  }
  return result;
}

BitVec vec_mat_mul(const BitVec& v, const BitMatrix& m) {
  if (v.size() != m.rows()) {
    throw std::invalid_argument("vec_mat_mul dimension mismatch");
  }
  BitVec result(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v.get(r)) {
      result ^= m.row(r);
    }
  }
  return result;
}

BitVec column_product(const BitMatrix& m, std::span<const std::size_t> cols) {
  if (cols.empty()) {
    throw std::invalid_argument("column_product requires a nonempty index set");
  }
  for (std::size_t c : cols) {
    if (c >= m.cols()) {
      throw std::invalid_argument("column_product index out of range");
    }
  }
  BitVec product = m.column(cols[0]);
  for (std::size_t i = 1; i < cols.size(); ++i) {
    product &= m.column(cols[i]);
  }
  return product;
}

namespace {

// Row-reduces a copy of the rows in place and returns the pivot columns.
std::vector<std::size_t> reduce_rows(std::vector<BitVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols && next_row < rows.size(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && !rows[pivot].get(c)) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[pivot], rows[next_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && rows[r].get(c)) {
        rows[r] ^= rows[next_row];
      }
    }
    pivot_cols.push_back(c);
    ++next_row;
  }
  return pivot_cols;
}

}  // namespace

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(m.row(r));
  }
  const std::vector<std::size_t> pivots = reduce_rows(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) {
    is_pivot[c] = true;
  }

  std::vector<BitVec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    BitVec v(m.cols());
    v.set(free_col, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free_col)) {
        v.set(pivots[i], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const BitMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(m.row(r));
  }
  return reduce_rows(rows, m.cols()).size();
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix result(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) {
        result.set(c, r, true);
      }
    }
  }
  return result;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0) {
    throw std::invalid_argument("vstack column mismatch");
  }
  const std::size_t cols = top.rows() == 0 && top.cols() == 0 ? bottom.cols() : top.cols();
  BitMatrix result(top.rows() + bottom.rows(), cols);
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) {
      if (top.get(r, c)) {
        result.set(r, c, true);
      }
    }
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    for (std::size_t c = 0; c < bottom.cols(); ++c) {
      if (bottom.get(r, c)) {
        result.set(top.rows() + r, c, true);
      }
    }
  }
  return result;
}

BitMatrix read_bit_matrix(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) {
      sv.remove_prefix(1);
    }
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t')) {
      sv.remove_suffix(1);
    }
    if (sv.empty() || sv.front() == '#') {
      continue;
    }
    for (char ch : sv) {
      if (ch != '0' && ch != '1') {
        throw ParseError("line " + std::to_string(line_no) +
                         ": matrix rows must contain only '0'/'1'");
      }
    }
    if (!rows.empty() && sv.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": all matrix rows must have equal length");
    }
    rows.emplace_back(sv);
  }
  return BitMatrix::from_strings(rows);
}

BitMatrix parse_bit_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_bit_matrix(in);
}

void write_bit_matrix(std::ostream& out, const BitMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << m.row(r).to_string() << '\n';
  }
}

}  // namespace trinest
