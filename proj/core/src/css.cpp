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

#include "trinest/css.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trinest/triortho.hpp"

namespace trinest {

namespace {

// Nonempty masks over `k` variables of weight <= 3, ordered by (weight,
// index sequence). Fixes the K-block row order used throughout.
std::vector<BitVec> weight_le3_masks(std::size_t k) {
  std::vector<BitVec> masks;
  for (std::size_t i = 0; i < k; ++i) {
    masks.push_back(BitVec::unit(k, i));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      BitVec m(k);
      m.set(i, true);
      m.set(j, true);
      masks.push_back(m);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        BitVec m(k);
        m.set(i, true);
        m.set(j, true);
        m.set(l, true);
        masks.push_back(m);
      }
    }
  }
  return masks;
}

// The candidate gadget rows of the Appendix-B matrix N over k+r columns:
// the weight-<=3 logical masks zero-padded over the stabiliser block, then
// one row (L column i | S column i) per physical qubit.
std::vector<BitVec> nhat_candidate_rows(const CssCode& code) {
  const std::size_t k = code.k();
  const std::size_t r = code.r();
  std::vector<BitVec> rows;
  for (const BitVec& mask : weight_le3_masks(k)) {
    BitVec row(k + r);
    for (std::size_t i = 0; i < k; ++i) {
      if (mask.get(i)) {
        row.set(i, true);
      }
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t q = 0; q < code.n(); ++q) {
    BitVec row(k + r);
    for (std::size_t i = 0; i < k; ++i) {
      if (code.logical_x().get(i, q)) {
        row.set(i, true);
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (code.stab_x().get(i, q)) {
        row.set(k + i, true);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Z8Vec multiplicity_vector(const CssCode& code, const LogicalGate& h,
                          const TransversalOp& p) {
  const std::vector<BitVec> masks = weight_le3_masks(code.k());
  Z8Vec m;
  m.reserve(masks.size() + code.n());
  for (const BitVec& mask : masks) {
    auto it = h.coeffs().find(mask);
    m.push_back(it == h.coeffs().end() ? 0 : it->second);
  }
  m.insert(m.end(), p.t_powers.begin(), p.t_powers.end());
  return m;
}

std::pair<LogicalGate, TransversalOp> pair_from_multiplicities(const CssCode& code,
                                                               const Z8Vec& m) {
  const std::vector<BitVec> masks = weight_le3_masks(code.k());
  LogicalGate h(code.k());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (m[i] != 0) {
      h.add(masks[i], m[i]);
    }
  }
  TransversalOp p{Z8Vec(m.begin() + static_cast<std::ptrdiff_t>(masks.size()), m.end())};
  return {std::move(h), std::move(p)};
}

}  // namespace

CssCode::CssCode(BitMatrix logical_x, BitMatrix stab_x)
    : logical_x_(std::move(logical_x)), stab_x_(std::move(stab_x)) {
  if (logical_x_.rows() > 0 && stab_x_.rows() > 0 &&
      logical_x_.cols() != stab_x_.cols()) {
    throw std::invalid_argument("logical and stabiliser operators must share a qubit count");
  }
  n_ = logical_x_.rows() > 0 ? logical_x_.cols() : stab_x_.cols();
  const BitMatrix stacked = vstack(logical_x_, stab_x_);
  if (rank(stacked) != stacked.rows()) {
    throw std::invalid_argument("logical and stabiliser rows must be linearly independent");
  }
}

std::vector<BitVec> CssCode::z_check_basis() const {
  return kernel_basis(vstack(logical_x_, stab_x_));
}

void LogicalGate::add(const BitVec& support, std::uint8_t coeff) {
  if (support.size() != k_) {
    throw std::invalid_argument("logical gadget support length does not match k");
  }
  const std::size_t weight = support.popcount();
  if (weight == 0) {
    return;  // global phase
  }
  if (weight > 3) {
    throw std::invalid_argument(
        "logical gadgets must have degree at most 3; decompose larger gadgets "
        "with spider nest identities first");
  }
  auto it = coeffs_.find(support);
  const std::uint8_t base = it == coeffs_.end() ? 0 : it->second;
  const std::uint8_t next = static_cast<std::uint8_t>((base + coeff) % 8);
  if (next == 0) {
    if (it != coeffs_.end()) {
      coeffs_.erase(it);
    }
  } else if (it == coeffs_.end()) {
    coeffs_.emplace(support, next);
  } else {
    it->second = next;
  }
}

CssCode new_code(BitMatrix logical_x, BitMatrix stab_x) {
  return CssCode(std::move(logical_x), std::move(stab_x));
}

std::set<BitVec> codeword_support(const CssCode& code, const BitVec& b, std::size_t cap) {
  if (b.size() != code.k()) {
    throw std::invalid_argument("logical bitstring length does not match k");
  }
  if (code.r() > cap) {
    throw std::invalid_argument("codeword_support enumeration cap exceeded");
  }
  const BitVec base = vec_mat_mul(b, code.logical_x());
  std::set<BitVec> words;
  const std::size_t count = std::size_t{1} << code.r();
  for (std::size_t c = 0; c < count; ++c) {
    BitVec choice(code.r());
    for (std::size_t i = 0; i < code.r(); ++i) {
      if ((c >> i) & 1) {
        choice.set(i, true);
      }
    }
    words.insert(base ^ vec_mat_mul(choice, code.stab_x()));
  }
  return words;
}

BitMatrix transversality_matrix(const CssCode& code, const LogicalGate& h, const TransversalOp& p) {
  if (h.k() != code.k()) {
    throw std::invalid_argument("logical gate k does not match the code");
  }
  if (p.n() != code.n()) {
    throw std::invalid_argument("transversal op qubit count does not match the code");
  }
  const std::size_t k = code.k();
  const std::size_t r = code.r();
  std::vector<BitVec> rows;

  for (const auto& [support, coeff] : h.coeffs()) {
    BitVec row(k + r);
    for (std::size_t i = 0; i < k; ++i) {
      if (support.get(i)) {
        row.set(i, true);
      }
    }
    for (std::uint8_t copy = 0; copy < coeff; ++copy) {
      rows.push_back(row);
    }
  }
  for (std::size_t q = 0; q < code.n(); ++q) {
    BitVec row(k + r);
    for (std::size_t i = 0; i < k; ++i) {
      if (code.logical_x().get(i, q)) {
        row.set(i, true);
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (code.stab_x().get(i, q)) {
        row.set(k + i, true);
      }
    }
    for (std::uint8_t copy = 0; copy < p.t_powers[q]; ++copy) {
      rows.push_back(row);
    }
  }
  return BitMatrix::from_rows(rows, k + r);
}

bool check_transversal(const CssCode& code, const LogicalGate& h, const TransversalOp& p) {
  return is_triorthogonal(transversality_matrix(code, h, p));
}

bool oracle_transversal(const CssCode& code, const LogicalGate& h, const TransversalOp& p,
                        std::size_t cap) {
  if (h.k() != code.k()) {
    throw std::invalid_argument("logical gate k does not match the code");
  }
  if (p.n() != code.n()) {
    throw std::invalid_argument("transversal op qubit count does not match the code");
  }
  if (code.k() + code.r() > cap) {
    throw std::invalid_argument("oracle_transversal enumeration cap exceeded");
  }

  const std::size_t logical_count = std::size_t{1} << code.k();
  const std::size_t stab_count = std::size_t{1} << code.r();
  for (std::size_t bi = 0; bi < logical_count; ++bi) {
    BitVec b(code.k());
    for (std::size_t i = 0; i < code.k(); ++i) {
      if ((bi >> i) & 1) {
        b.set(i, true);
      }
    }
    // f_H(b): the phase of the logical gadget layer on |b>.
    unsigned fh = 0;
    for (const auto& [support, coeff] : h.coeffs()) {
      if (support.dot(b)) {
        fh += coeff;
      }
    }
    const BitVec base = vec_mat_mul(b, code.logical_x());
    for (std::size_t ci = 0; ci < stab_count; ++ci) {
      BitVec c(code.r());
      for (std::size_t i = 0; i < code.r(); ++i) {
        if ((ci >> i) & 1) {
          c.set(i, true);
        }
      }
      const BitVec word = base ^ vec_mat_mul(c, code.stab_x());
      unsigned fp = 0;
      for (std::size_t q = 0; q < code.n(); ++q) {
        if (word.get(q)) {
          fp += p.t_powers[q];
        }
      }
      if ((fp + fh) % 8 != 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<BitVec> nhat_logical_masks(const CssCode& code) {
  return weight_le3_masks(code.k());
}

Z8Matrix build_nhat(const CssCode& code) {
  const std::size_t width = code.k() + code.r();
  const std::vector<BitVec> candidates = nhat_candidate_rows(code);
  const std::vector<BitVec> subsets = weight_le3_masks(width);

  Z8Matrix nhat(subsets.size(), candidates.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    const std::uint8_t entry = static_cast<std::uint8_t>(1u << (subsets[s].popcount() - 1));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((subsets[s] & candidates[i]) == subsets[s]) {
        nhat.set(s, i, entry);
      }
    }
  }
  return nhat;
}

std::vector<std::pair<LogicalGate, TransversalOp>> transversal_generators(const CssCode& code) {
  const KernelGenerators kernel = kernel_generators(build_nhat(code));
  std::vector<Z8Vec> sorted = kernel.generators;
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::pair<LogicalGate, TransversalOp>> result;
  result.reserve(sorted.size());
  for (const Z8Vec& g : sorted) {
    result.push_back(pair_from_multiplicities(code, g));
  }
  return result;
}

std::optional<TransversalOp> solve_for_p(const CssCode& code, const LogicalGate& h) {
  if (h.k() != code.k()) {
    throw std::invalid_argument("logical gate k does not match the code");
  }
  const Z8Matrix nhat = build_nhat(code);
  const std::size_t k_cols = weight_le3_masks(code.k()).size();
  const Z8Vec fixed = multiplicity_vector(code, h, TransversalOp{Z8Vec(code.n(), 0)});

  // Split N-hat columns: solve N_phys * x = -N_K * m_K.
  Z8Matrix phys(nhat.rows(), code.n());
  Z8Vec rhs(nhat.rows(), 0);
  for (std::size_t row = 0; row < nhat.rows(); ++row) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < k_cols; ++c) {
      acc += nhat.get(row, c) * fixed[c];
    }
    rhs[row] = static_cast<std::uint8_t>((8 - acc % 8) % 8);
    for (std::size_t c = 0; c < code.n(); ++c) {
      phys.set(row, c, nhat.get(row, k_cols + c));
    }
  }
  const auto solution = solve_linear(phys, rhs);
  if (!solution) {
    return std::nullopt;
  }
  return TransversalOp{solution->particular};
}

std::optional<LogicalGate> solve_for_h(const CssCode& code, const TransversalOp& p) {
  if (p.n() != code.n()) {
    throw std::invalid_argument("transversal op qubit count does not match the code");
  }
  const Z8Matrix nhat = build_nhat(code);
  const std::vector<BitVec> masks = weight_le3_masks(code.k());
  const std::size_t k_cols = masks.size();

  Z8Matrix logical(nhat.rows(), k_cols);
  Z8Vec rhs(nhat.rows(), 0);
  for (std::size_t row = 0; row < nhat.rows(); ++row) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < code.n(); ++c) {
      acc += nhat.get(row, k_cols + c) * p.t_powers[c];
    }
    rhs[row] = static_cast<std::uint8_t>((8 - acc % 8) % 8);
    for (std::size_t c = 0; c < k_cols; ++c) {
      logical.set(row, c, nhat.get(row, c));
    }
  }
  const auto solution = solve_linear(logical, rhs);
  if (!solution) {
    return std::nullopt;
  }
  LogicalGate h(code.k());
  for (std::size_t i = 0; i < k_cols; ++i) {
    if (solution->particular[i] != 0) {
      h.add(masks[i], solution->particular[i]);
    }
  }
  return h;
}

CssCode read_code(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  enum class Section { None, Logical, Stab };
  Section section = Section::None;
  std::vector<std::string> logical_rows;
  std::vector<std::string> stab_rows;

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token)) {
      continue;
    }
    if (token == "n") {
      std::size_t value = 0;
      if (!(ls >> value)) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed n header");
      }
      n = value;
      continue;
    }
    if (token == "LOGICAL_X") {
      section = Section::Logical;
      continue;
    }
    if (token == "STAB_X") {
      section = Section::Stab;
      continue;
    }
    if (section == Section::None) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": operator rows must follow LOGICAL_X or STAB_X");
    }
    (section == Section::Logical ? logical_rows : stab_rows).push_back(token);
  }

  if (!n) {
    throw ParseError("code file is missing the \"n <int>\" header");
  }
  auto build = [&](const std::vector<std::string>& rows) {
    std::vector<BitVec> vecs;
    for (const std::string& s : rows) {
      if (s.size() != *n) {
        throw ParseError("operator row length does not match the n header");
      }
      vecs.push_back(BitVec::from_string(s));
    }
    return BitMatrix::from_rows(vecs, *n);
  };
  return CssCode(build(logical_rows), build(stab_rows));
}

CssCode parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_code(in);
}

void write_code(std::ostream& out, const CssCode& code) {
  out << "n " << code.n() << '\n';
  out << "LOGICAL_X\n";
  write_bit_matrix(out, code.logical_x());
  out << "STAB_X\n";
  write_bit_matrix(out, code.stab_x());
}

LogicalGate read_logical_gate(std::istream& in, std::size_t k) {
  LogicalGate h(k);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string support;
    if (!(ls >> support)) {
      continue;
    }
    int coeff = -1;
    if (!(ls >> coeff) || coeff < 0 || coeff > 7) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected \"subset-bitstring coefficient(0-7)\"");
    }
    if (support.size() != k) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": subset length does not match the logical qubit count");
    }
    h.add(BitVec::from_string(support), static_cast<std::uint8_t>(coeff));
  }
  return h;
}

LogicalGate parse_logical_gate(std::string_view text, std::size_t k) {
  std::istringstream in{std::string(text)};
  return read_logical_gate(in, k);
}

void write_logical_gate(std::ostream& out, const LogicalGate& h) {
  for (const auto& [support, coeff] : h.coeffs()) {
    out << support.to_string() << ' ' << static_cast<int>(coeff) << '\n';
  }
}

TransversalOp read_transversal_op(std::istream& in, std::size_t n) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string digits;
    if (!(ls >> digits)) {
      continue;
    }
    if (digits.size() != n) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected " + std::to_string(n) + " digits 0-7");
    }
    TransversalOp p{Z8Vec(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i] < '0' || digits[i] > '7') {
        throw ParseError("line " + std::to_string(line_no) + ": T powers must be digits 0-7");
      }
      p.t_powers[i] = static_cast<std::uint8_t>(digits[i] - '0');
    }
    return p;
  }
  throw ParseError("transversal op file holds no digit line");
}

TransversalOp parse_transversal_op(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  return read_transversal_op(in, n);
}

void write_transversal_op(std::ostream& out, const TransversalOp& p) {
  for (std::uint8_t t : p.t_powers) {
    out << static_cast<int>(t);
  }
  out << '\n';
}

}  // namespace trinest
