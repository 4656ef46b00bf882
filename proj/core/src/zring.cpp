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

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trinest/bitmat.hpp"  // ParseError

namespace trinest {

namespace {

constexpr unsigned kLog2Modulus = 3;  // 8 = 2^3

// 2-adic valuation of a nonzero Z8 element; 0 maps to kLog2Modulus.
unsigned val2(std::uint8_t x) {
  if (x == 0) {
    return kLog2Modulus;
  }
  unsigned v = 0;
  while ((x & 1) == 0) {
    x >>= 1;
    ++v;
  }
  return v;
}

// Odd elements of Z8 are self-inverse: u^2 = 1 (mod 8).
std::uint8_t unit_inverse(std::uint8_t u) { return u; }

std::uint8_t mul8(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>((a * b) % kZ8Modulus);
}

std::uint8_t sub8(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>((a + kZ8Modulus - b) % kZ8Modulus);
}

void scale_row(Z8Vec& row, std::uint8_t factor) {
  for (std::uint8_t& x : row) {
    x = mul8(x, factor);
  }
}

// row -= factor * other (mod 8).
void subtract_multiple(Z8Vec& row, const Z8Vec& other, std::uint8_t factor) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    row[i] = sub8(row[i], mul8(factor, other[i]));
  }
}

bool row_is_zero(const Z8Vec& row) {
  return std::all_of(row.begin(), row.end(), [](std::uint8_t x) { return x == 0; });
}

std::size_t leading_col(const Z8Vec& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) {
      return c;
    }
  }
  return row.size();
}

// Row echelon over Z8: pivots normalised to 2^v with minimal valuation per
// column, everything below a pivot eliminated. Works because Z8 is local:
// the minimal-valuation entry divides every other entry in its column.
void echelonize(std::vector<Z8Vec>& rows, std::size_t cols) {
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t best = rows.size();
    unsigned best_val = kLog2Modulus;
    for (std::size_t r = next; r < rows.size(); ++r) {
      const unsigned v = val2(rows[r][c]);
      if (v < best_val) {
        best_val = v;
        best = r;
      }
    }
    if (best == rows.size()) {
      continue;
    }
    std::swap(rows[best], rows[next]);
    const std::uint8_t unit = static_cast<std::uint8_t>(rows[next][c] >> best_val);
    scale_row(rows[next], unit_inverse(unit));
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        const std::uint8_t factor =
            static_cast<std::uint8_t>(rows[r][c] >> best_val);
        subtract_multiple(rows[r], rows[next], factor);
      }
    }
    ++next;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(), row_is_zero), rows.end());
}

// Forward-reduces `row` through echelon rows; returns the remainder.
Z8Vec forward_reduce(Z8Vec row, const std::vector<Z8Vec>& rows) {
  for (const Z8Vec& pivot_row : rows) {
    const std::size_t c = leading_col(pivot_row);
    if (c == pivot_row.size()) {
      continue;
    }
    if (row[c] != 0) {
      const unsigned pv = val2(pivot_row[c]);
      if (val2(row[c]) >= pv) {
        subtract_multiple(row, pivot_row, static_cast<std::uint8_t>(row[c] >> pv));
      }
    }
  }
  return row;
}

}  // namespace

Z8Matrix Z8Matrix::from_rows(const std::vector<Z8Vec>& rows, std::size_t cols) {
  Z8Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("row length does not match column count");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, rows[r][c]);
    }
  }
  return m;
}

Z8Vec Z8Matrix::row(std::size_t r) const {
  return Z8Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Z8Vec z8_mat_vec_mul(const Z8Matrix& a, std::span<const std::uint8_t> v) {
  if (a.cols() != v.size()) {
    throw std::invalid_argument("z8_mat_vec_mul dimension mismatch");
  }
  Z8Vec result(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      acc += a.get(r, c) * v[c];
    }
    result[r] = static_cast<std::uint8_t>(acc % kZ8Modulus);
  }
  return result;
}

Z8Matrix howell_form(const Z8Matrix& a) {
  std::vector<Z8Vec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows.push_back(a.row(r));
  }

  // Echelon, then close under annihilator rows: for each pivot 2^v with
  // v > 0, (2^(3-v)) * row kills the pivot and may expose new span content
  // further right. Iterate until no new rows appear.
  while (true) {
    echelonize(rows, a.cols());
    std::vector<Z8Vec> extra;
    for (const Z8Vec& row : rows) {
      const std::size_t c = leading_col(row);
      const unsigned v = val2(row[c]);
      if (v == 0) {
        continue;
      }
      Z8Vec ann = row;
      scale_row(ann, static_cast<std::uint8_t>(1u << (kLog2Modulus - v)));
      ann = forward_reduce(std::move(ann), rows);
      if (!row_is_zero(ann)) {
        extra.push_back(std::move(ann));
      }
    }
    if (extra.empty()) {
      break;
    }
    rows.insert(rows.end(), extra.begin(), extra.end());
  }

  // Reduce entries above each pivot modulo the pivot value.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t c = leading_col(rows[i]);
    const std::uint8_t pivot = rows[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      if (rows[j][c] >= pivot) {
        subtract_multiple(rows[j], rows[i],
                          static_cast<std::uint8_t>(rows[j][c] / pivot));
      }
    }
  }

  return Z8Matrix::from_rows(rows, a.cols());
}

KernelGenerators kernel_generators(const Z8Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Rows of [A^T | I]: the i-th row is (column i of A | e_i), so a Z8
  // combination with coefficients v is (A v | v). Howell rows whose left
  // block vanishes generate exactly the kernel.
  Z8Matrix aug(n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      aug.set(i, j, a.get(j, i));
    }
    aug.set(i, m + i, 1);
  }
  const Z8Matrix h = howell_form(aug);

  KernelGenerators result;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < m; ++c) {
      if (h.get(r, c) != 0) {
        left_zero = false;
        break;
      }
    }
    if (left_zero) {
      Z8Vec g(n);
      for (std::size_t c = 0; c < n; ++c) {
        g[c] = h.get(r, m + c);
      }
      result.generators.push_back(std::move(g));
    }
  }
  return result;
}

std::optional<LinearSolution> solve_linear(const Z8Matrix& a,
                                           std::span<const std::uint8_t> b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve_linear dimension mismatch");
  }
  const std::size_t n = a.cols();
  // x solves A x = b iff (x | 7) lies in the kernel of [A | b]; a kernel
  // element with unit last coordinate exists iff some generator has one.
  Z8Matrix augmented(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      augmented.set(r, c, a.get(r, c));
    }
    augmented.set(r, n, b[r]);
  }
  const KernelGenerators aug_kernel = kernel_generators(augmented);
  for (const Z8Vec& g : aug_kernel.generators) {
    const std::uint8_t last = g[n];
    if (last % 2 == 1) {
      // Scale so the last coordinate becomes -1.
      const std::uint8_t factor = mul8(sub8(0, 1), unit_inverse(last));
      Z8Vec x(n);
      for (std::size_t c = 0; c < n; ++c) {
        x[c] = mul8(factor, g[c]);
      }
      return LinearSolution{std::move(x), kernel_generators(a)};
    }
  }
  return std::nullopt;
}

Z8Matrix read_z8_matrix(std::istream& in) {
  std::vector<Z8Vec> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    Z8Vec row;
    int value = 0;
    while (ls >> value) {
      if (value < 0 || value > 7) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": Z8 entries must be digits 0-7");
      }
      row.push_back(static_cast<std::uint8_t>(value));
    }
    if (!ls.eof()) {
      throw ParseError("line " + std::to_string(line_no) + ": malformed Z8 row");
    }
    if (row.empty()) {
      continue;
    }
    if (rows.empty()) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": all Z8 rows must have equal length");
    }
    rows.push_back(std::move(row));
  }
  return Z8Matrix::from_rows(rows, cols);
}

Z8Matrix parse_z8_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_z8_matrix(in);
}

void write_z8_matrix(std::ostream& out, const Z8Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) {
        out << ' ';
      }
      out << static_cast<int>(m.get(r, c));
    }
    out << '\n';
  }
}

}  // namespace trinest
