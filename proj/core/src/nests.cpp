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

#include "trinest/nests.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trinest/triortho.hpp"

namespace trinest {

namespace {

// Graded-lex with highest degree first; ties by index sequence.
bool decomposition_order(const BitVec& a, const BitVec& b) {
  const std::size_t wa = a.popcount();
  const std::size_t wb = b.popcount();
  if (wa != wb) {
    return wa > wb;
  }
  return a.set_bits() < b.set_bits();
}

// Multiset of nonzero rows has all-even multiplicities; zero rows are global
// phases and ignored. Equivalent to the reduced indicator being zero.
bool nonzero_rows_all_even(const std::vector<BitVec>& rows) {
  std::map<BitVec, std::size_t> counts;
  for (const BitVec& row : rows) {
    if (row.any()) {
      ++counts[row];
    }
  }
  return std::all_of(counts.begin(), counts.end(),
                     [](const auto& entry) { return entry.second % 2 == 0; });
}

bool all_coefficients_even(const PhasePolynomial& pp) {
  return std::all_of(pp.terms().begin(), pp.terms().end(),
                     [](const PhaseTerm& t) { return t.coeff % 2 == 0; });
}

}  // namespace

BitMatrix b_matrix(unsigned n) {
  if (n > 20) {
    throw std::invalid_argument("b_matrix cap exceeded (n <= 20)");
  }
  const std::size_t rows = std::size_t{1} << n;
  BitMatrix m(rows, n);
  for (std::size_t i = 0; i < rows; ++i) {
    for (unsigned c = 0; c < n; ++c) {
      if ((i >> c) & 1) {
        m.set(i, c, true);
      }
    }
  }
  return m;
}

BitMatrix nest_matrix(unsigned k, unsigned n) {
  if (n > 20 || k > BitMatrix::kMaxDim - n) {
    throw std::invalid_argument("nest_matrix cap exceeded");
  }
  const std::size_t rows = std::size_t{1} << n;
  BitMatrix m(rows, k + n);
  for (std::size_t i = 0; i < rows; ++i) {
    for (unsigned c = 0; c < k; ++c) {
      m.set(i, c, true);
    }
    for (unsigned c = 0; c < n; ++c) {
      if ((i >> c) & 1) {
        m.set(i, k + c, true);
      }
    }
  }
  return m;
}

BitMatrix monomial_nest(const BitVec& monomial, std::size_t m) {
  if (monomial.size() != m) {
    throw std::invalid_argument("monomial mask length does not match variable count");
  }
  const std::size_t degree = monomial.popcount();
  if (degree + 4 > m) {
    throw std::invalid_argument("monomial degree too large: need degree <= m - 4");
  }
  const unsigned k = static_cast<unsigned>(degree);
  const unsigned rest = static_cast<unsigned>(m - degree);
  const BitMatrix base = nest_matrix(k, rest);

  // Column c of the base maps to the c-th monomial variable for c < k, and
  // to the (c-k)-th complement variable otherwise.
  std::vector<std::size_t> perm;
  perm.reserve(m);
  for (std::size_t v = 0; v < m; ++v) {
    if (monomial.get(v)) {
      perm.push_back(v);
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (!monomial.get(v)) {
      perm.push_back(v);
    }
  }

  BitMatrix result(base.rows(), m);
  for (std::size_t r = 0; r < base.rows(); ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (base.get(r, c)) {
        result.set(r, perm[c], true);
      }
    }
  }
  return result;
}

NestCertificate decompose_identity(const BitMatrix& m) {
  if (!is_triorthogonal(m)) {
    throw std::invalid_argument(
        "decompose_identity requires a triorthogonal matrix (semi-triorthogonal is not enough)");
  }
  const IndicatorPolynomial reduced = reduce_global_phase(indicator_polynomial(m));

  NestCertificate cert;
  cert.target = m;
  cert.monomials = reduced.monomials();
  std::sort(cert.monomials.begin(), cert.monomials.end(), decomposition_order);

  PhasePolynomial combined = from_rows(m);
  for (const BitVec& monomial : cert.monomials) {
    cert.nests.push_back(monomial_nest(monomial, m.cols()));
    combined = combined.concat(from_rows(cert.nests.back()));
  }
  cert.residual = fuse(combined);
  return cert;
}

bool verify_certificate(const NestCertificate& c) {
  if (c.monomials.size() != c.nests.size()) {
    return false;
  }
  const std::size_t n = c.target.cols();

  std::vector<BitVec> all_rows;
  for (std::size_t r = 0; r < c.target.rows(); ++r) {
    all_rows.push_back(c.target.row(r));
  }
  PhasePolynomial combined = from_rows(c.target);

  for (std::size_t i = 0; i < c.nests.size(); ++i) {
    const BitMatrix& nest = c.nests[i];
    if (nest.cols() != n || c.monomials[i].size() != n) {
      return false;
    }
    if (!is_triorthogonal(nest)) {
      return false;
    }
    if (indicator_polynomial(nest) != IndicatorPolynomial(n, {c.monomials[i]})) {
      return false;
    }
    for (std::size_t r = 0; r < nest.rows(); ++r) {
      all_rows.push_back(nest.row(r));
    }
    combined = combined.concat(from_rows(nest));
  }

  if (!nonzero_rows_all_even(all_rows)) {
    return false;
  }

  const PhasePolynomial refused = fuse(combined);
  if (refused != fuse(c.residual) || !all_coefficients_even(refused)) {
    return false;
  }
  const GateClass cls = classify(refused);
  if (cls != GateClass::Identity && cls != GateClass::CliffordOnly) {
    return false;
  }

  if (n <= 12) {
    const std::vector<std::uint8_t> phases =
        oracle_phases(combined.concat(c.residual.negate()));
    if (std::any_of(phases.begin(), phases.end(),
                    [](std::uint8_t p) { return p != 0; })) {
      return false;
    }
  }
  return true;
}

void write_certificate(std::ostream& out, const NestCertificate& c) {
  out << "VARS " << c.target.cols() << '\n';
  out << "TARGET\n";
  write_bit_matrix(out, c.target);
  for (std::size_t i = 0; i < c.monomials.size(); ++i) {
    out << "MONOMIAL " << (i + 1) << '\n';
    out << c.monomials[i].to_string() << '\n';
    out << "NEST " << (i + 1) << '\n';
    write_bit_matrix(out, c.nests[i]);
  }
  out << "RESIDUAL\n";
  write_gadget_list(out, c.residual);
}

NestCertificate read_certificate(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t vars = 0;
  bool vars_seen = false;

  enum class Section { None, Target, Monomial, Nest, Residual };
  Section section = Section::None;

  std::vector<std::string> target_rows;
  std::vector<std::string> monomial_lines;
  std::vector<std::vector<std::string>> nest_rows;
  std::string residual_text;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::string trimmed = line;
    const std::size_t hash = trimmed.find('#');
    if (hash != std::string::npos) {
      trimmed.erase(hash);
    }
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) {
      trimmed.pop_back();
    }
    std::size_t start = 0;
    while (start < trimmed.size() && (trimmed[start] == ' ' || trimmed[start] == '\t')) {
      ++start;
    }
    trimmed.erase(0, start);
    if (trimmed.empty()) {
      continue;
    }

    std::istringstream ls(trimmed);
    std::string keyword;
    ls >> keyword;
    if (keyword == "VARS") {
      if (!(ls >> vars)) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed VARS header");
      }
      vars_seen = true;
      continue;
    }
    if (keyword == "TARGET") {
      section = Section::Target;
      continue;
    }
    if (keyword == "MONOMIAL") {
      section = Section::Monomial;
      monomial_lines.emplace_back();
      continue;
    }
    if (keyword == "NEST") {
      section = Section::Nest;
      nest_rows.emplace_back();
      continue;
    }
    if (keyword == "RESIDUAL") {
      section = Section::Residual;
      continue;
    }

    switch (section) {
      case Section::Target:
        target_rows.push_back(trimmed);
        break;
      case Section::Monomial:
        if (!monomial_lines.back().empty()) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": MONOMIAL sections hold exactly one mask");
        }
        monomial_lines.back() = trimmed;
        break;
      case Section::Nest:
        nest_rows.back().push_back(trimmed);
        break;
      case Section::Residual:
        residual_text += trimmed;
        residual_text += '\n';
        break;
      case Section::None:
        throw ParseError("line " + std::to_string(line_no) +
                         ": content before any certificate section");
    }
  }

  if (!vars_seen) {
    throw ParseError("certificate is missing the VARS header");
  }
  if (monomial_lines.size() != nest_rows.size()) {
    throw ParseError("certificate MONOMIAL/NEST section counts differ");
  }

  NestCertificate cert;
  auto build_matrix = [&](const std::vector<std::string>& rows) {
    std::vector<BitVec> vecs;
    vecs.reserve(rows.size());
    for (const std::string& s : rows) {
      if (s.size() != vars) {
        throw ParseError("certificate matrix row length differs from VARS");
      }
      vecs.push_back(BitVec::from_string(s));
    }
    return BitMatrix::from_rows(vecs, vars);
  };

  cert.target = build_matrix(target_rows);
  for (std::size_t i = 0; i < monomial_lines.size(); ++i) {
    if (monomial_lines[i].size() != vars) {
      throw ParseError("certificate monomial mask length differs from VARS");
    }
    cert.monomials.push_back(BitVec::from_string(monomial_lines[i]));
    cert.nests.push_back(build_matrix(nest_rows[i]));
  }
  PhasePolynomial residual = parse_gadget_list(residual_text);
  if (residual.empty() && residual.num_vars() == 0) {
    residual = PhasePolynomial(vars);
  }
  if (residual.num_vars() != vars) {
    throw ParseError("certificate residual variable count differs from VARS");
  }
  cert.residual = std::move(residual);
  return cert;
}

NestCertificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_certificate(in);
}

}  // namespace trinest
