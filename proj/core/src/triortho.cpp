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

#include "trinest/triortho.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace trinest {

namespace {

constexpr std::size_t kDenseCap = 24;

// Graded order: by monomial size, then by index sequence.
bool monomial_less(const BitVec& a, const BitVec& b) {
  const std::size_t wa = a.popcount();
  const std::size_t wb = b.popcount();
  if (wa != wb) {
    return wa < wb;
  }
  return a.set_bits() < b.set_bits();
}

void canonicalize(std::vector<BitVec>& monomials) {
  std::sort(monomials.begin(), monomials.end(), monomial_less);
  // F2 coefficients: monomials appearing an even number of times cancel.
  std::vector<BitVec> kept;
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) {
      ++j;
    }
    if ((j - i) % 2 == 1) {
      kept.push_back(monomials[i]);
    }
    i = j;
  }
  monomials = std::move(kept);
}

std::size_t row_index(const BitMatrix& m, std::size_t r) {
  std::size_t index = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.get(r, c)) {
      index |= std::size_t{1} << c;
    }
  }
  return index;
}

BitVec mask_from_index(std::size_t index, std::size_t n) {
  BitVec v(n);
  for (std::size_t c = 0; c < n; ++c) {
    if ((index >> c) & 1) {
      v.set(c, true);
    }
  }
  return v;
}

IndicatorPolynomial indicator_dense(const BitMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    f[row_index(m, r)] ^= 1;
  }
  // In-place Moebius (ANF) transform.
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x & step) {
        f[x] ^= f[x ^ step];
      }
    }
  }
  std::vector<BitVec> monomials;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x]) {
      monomials.push_back(mask_from_index(x, n));
    }
  }
  return IndicatorPolynomial(n, std::move(monomials));
}

IndicatorPolynomial indicator_sparse(const BitMatrix& m) {
  const std::size_t n = m.cols();
  // Point indicator of a row y expands as prod_{y_i=1} x_i *
  // prod_{y_i=0} (1+x_i): one monomial per subset of the zero positions.
  std::unordered_set<BitVec, BitVecHash> toggled;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const BitVec row = m.row(r);
    std::vector<std::size_t> zeros;
    for (std::size_t c = 0; c < n; ++c) {
      if (!row.get(c)) {
        zeros.push_back(c);
      }
    }
    const std::size_t subsets = std::size_t{1} << zeros.size();
    for (std::size_t pick = 0; pick < subsets; ++pick) {
      BitVec monomial = row;
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        if ((pick >> i) & 1) {
          monomial.set(zeros[i], true);
        }
      }
      auto [it, inserted] = toggled.insert(monomial);
      if (!inserted) {
        toggled.erase(it);
      }
    }
  }
  std::vector<BitVec> monomials(toggled.begin(), toggled.end());
  return IndicatorPolynomial(n, std::move(monomials));
}

// Saturating cost of the sparse expansion: sum over rows of 2^(zero count).
std::size_t sparse_cost(const BitMatrix& m) {
  constexpr std::size_t kInf = ~std::size_t{0};
  std::size_t total = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::size_t zeros = m.cols() - m.row(r).popcount();
    if (zeros >= 40) {
      return kInf;
    }
    const std::size_t cost = std::size_t{1} << zeros;
    if (total > kInf - cost) {
      return kInf;
    }
    total += cost;
  }
  return total;
}

}  // namespace

IndicatorPolynomial::IndicatorPolynomial(std::size_t num_vars, std::vector<BitVec> monomials)
    : num_vars_(num_vars), monomials_(std::move(monomials)) {
  for (const BitVec& m : monomials_) {
    if (m.size() != num_vars_) {
      throw std::invalid_argument("monomial mask length does not match variable count");
    }
  }
  canonicalize(monomials_);
}

int IndicatorPolynomial::degree() const {
  if (monomials_.empty()) {
    return -1;
  }
  return static_cast<int>(monomials_.back().popcount());
}

bool IndicatorPolynomial::evaluate(const BitVec& point) const {
  if (point.size() != num_vars_) {
    throw std::invalid_argument("evaluation point length does not match variable count");
  }
  bool value = false;
  for (const BitVec& m : monomials_) {
    if ((m & point) == m) {
      value = !value;
    }
  }
  return value;
}

std::string IndicatorPolynomial::to_string() const {
  if (monomials_.empty()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (i > 0) {
      out += " + ";
    }
    const std::vector<std::size_t> bits = monomials_[i].set_bits();
    if (bits.empty()) {
      out += "1";
    } else {
      for (std::size_t b : bits) {
        out += "x" + std::to_string(b + 1);
      }
    }
  }
  return out;
}

bool is_triorthogonal(const BitMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<BitVec> cols;
  cols.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    cols.push_back(m.column(c));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cols[i].popcount() % 8 != 0) {
      return false;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const BitVec pair = cols[i] & cols[j];
      if (pair.popcount() % 4 != 0) {
        return false;
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        if ((pair & cols[k]).popcount() % 2 != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_semi_triorthogonal(const BitMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<BitVec> cols;
  cols.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    cols.push_back(m.column(c));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cols[i].popcount() % 2 != 0) {
      return false;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const BitVec pair = cols[i] & cols[j];
      if (pair.popcount() % 2 != 0) {
        return false;
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        if ((pair & cols[k]).popcount() % 2 != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

IndicatorPolynomial indicator_polynomial(const BitMatrix& m, IndicatorPath path) {
  constexpr std::size_t kSparseCap = std::size_t{1} << 26;
  const bool dense_ok = m.cols() <= kDenseCap;
  const std::size_t sparse = sparse_cost(m);
  switch (path) {
    case IndicatorPath::Dense:
      if (!dense_ok) {
        throw std::invalid_argument("indicator_polynomial dense cap exceeded");
      }
      return indicator_dense(m);
    case IndicatorPath::Sparse:
      if (sparse > kSparseCap) {
        throw std::invalid_argument("indicator_polynomial sparse cap exceeded");
      }
      return indicator_sparse(m);
    case IndicatorPath::Auto:
      break;
  }
  const std::size_t dense_cost =
      dense_ok ? (std::size_t{1} << m.cols()) * (m.cols() + 1) : ~std::size_t{0};
  if (sparse <= dense_cost) {
    if (sparse > kSparseCap) {
      throw std::invalid_argument("indicator_polynomial cap exceeded");
    }
    return indicator_sparse(m);
  }
  if (!dense_ok) {
    throw std::invalid_argument("indicator_polynomial cap exceeded");
  }
  return indicator_dense(m);
}

IndicatorPolynomial reduce_global_phase(const IndicatorPolynomial& p) {
  const std::size_t n = p.num_vars();
  BitVec full(n);
  for (std::size_t i = 0; i < n; ++i) {
    full.set(i, true);
  }
  const bool has_full = std::find(p.monomials().begin(), p.monomials().end(), full) !=
                        p.monomials().end();
  if (!has_full) {
    return p;
  }
  // Adding the 0-point indicator toggles every monomial, so the reduced
  // representative is the complement of the monomial set. Feasible only at
  // dense scale; larger instances never reach here with the full monomial.
  if (n > kDenseCap) {
    throw std::invalid_argument("reduce_global_phase cap exceeded");
  }
  std::set<BitVec> present(p.monomials().begin(), p.monomials().end());
  std::vector<BitVec> complement;
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t x = 0; x < count; ++x) {
    BitVec mask = mask_from_index(x, n);
    if (present.find(mask) == present.end()) {
      complement.push_back(std::move(mask));
    }
  }
  return IndicatorPolynomial(n, std::move(complement));
}

std::pair<int, bool> degree_check(const BitMatrix& m) {
  const IndicatorPolynomial reduced = reduce_global_phase(indicator_polynomial(m));
  const int deg = reduced.degree();
  const bool semi =
      reduced.is_zero() || deg <= static_cast<int>(m.cols()) - 4;
  return {deg, semi};
}

RMCode rm_generator(unsigned r, unsigned m) {
  if (r > m) {
    throw std::invalid_argument("rm_generator requires r <= m");
  }
  if (m > 20) {
    throw std::invalid_argument("rm_generator cap exceeded (m <= 20)");
  }
  const std::size_t points = std::size_t{1} << m;

  // Enumerate monomial variable sets of degree <= r in graded order.
  std::vector<std::vector<unsigned>> monomials;
  std::vector<unsigned> current;
  auto emit_degree = [&](auto&& self, unsigned degree, unsigned first) -> void {
    if (current.size() == degree) {
      monomials.push_back(current);
      return;
    }
    for (unsigned v = first; v < m; ++v) {
      current.push_back(v);
      self(self, degree, v + 1);
      current.pop_back();
    }
  };
  for (unsigned d = 0; d <= r; ++d) {
    emit_degree(emit_degree, d, 0);
  }

  BitMatrix generator(monomials.size(), points);
  for (std::size_t row = 0; row < monomials.size(); ++row) {
    for (std::size_t point = 0; point < points; ++point) {
      bool value = true;
      for (unsigned v : monomials[row]) {
        if (((point >> v) & 1) == 0) {
          value = false;
          break;
        }
      }
      if (value) {
        generator.set(row, point, true);
      }
    }
  }
  return RMCode{r, m, std::move(generator)};
}

bool rm_dual_verify(unsigned r, unsigned m) {
  if (r >= m) {
    throw std::invalid_argument("rm_dual_verify requires r < m");
  }
  const RMCode code = rm_generator(r, m);
  const RMCode dual = rm_generator(m - r - 1, m);
  const BitMatrix product = mat_mul(code.generator, transpose(dual.generator));
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      if (product.get(i, j)) {
        return false;
      }
    }
  }
  if (rank(code.generator) != code.generator.rows() ||
      rank(dual.generator) != dual.generator.rows()) {
    return false;
  }
  return code.generator.rows() + dual.generator.rows() == (std::size_t{1} << m);
}

BitMatrix clifford_correction(const BitMatrix& m) {
  if (!is_semi_triorthogonal(m)) {
    throw std::invalid_argument("clifford_correction requires a semi-triorthogonal matrix");
  }
  const std::size_t n = m.cols();
  std::vector<BitVec> appended;

  // Pair products are even; those at 2 mod 4 are lifted by two copies of
  // e_i + e_j, which touch no other pair or triple.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t indices[2] = {i, j};
      if (column_product(m, indices).popcount() % 4 == 2) {
        BitVec row(n);
        row.set(i, true);
        row.set(j, true);
        appended.push_back(row);
        appended.push_back(row);
      }
    }
  }

  // Column weights, including the pair fixes, are lifted to 0 mod 8 with
  // weight-1 rows.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t weight = m.column(i).popcount();
    for (const BitVec& row : appended) {
      if (row.get(i)) {
        ++weight;
      }
    }
    const std::size_t deficit = (8 - weight % 8) % 8;
    for (std::size_t copy = 0; copy < deficit; ++copy) {
      appended.push_back(BitVec::unit(n, i));
    }
  }
  return BitMatrix::from_rows(appended, n);
}

}  // namespace trinest
