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

#include "trinest/phasepoly.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace trinest {

void PhasePolynomial::add_term(const BitVec& support, std::uint8_t coeff) {
  if (support.size() != num_vars_) {
    throw std::invalid_argument("gadget support length does not match variable count");
  }
  if (support.is_zero()) {
    return;  // global phase
  }
  terms_.push_back(PhaseTerm{support, static_cast<std::uint8_t>(coeff % 8)});
}

PhasePolynomial PhasePolynomial::concat(const PhasePolynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw std::invalid_argument("cannot concatenate polynomials over different variable counts");
  }
  PhasePolynomial result = *this;
  result.terms_.insert(result.terms_.end(), other.terms_.begin(), other.terms_.end());
  return result;
}

PhasePolynomial PhasePolynomial::negate() const {
  PhasePolynomial result(num_vars_);
  for (const PhaseTerm& t : terms_) {
    result.terms_.push_back(PhaseTerm{t.support, static_cast<std::uint8_t>((8 - t.coeff) % 8)});
  }
  return result;
}

void MonomialPolynomial::add(const std::vector<std::uint32_t>& subset, std::uint8_t delta) {
  if (subset.empty() || subset.size() > 3) {
    throw std::invalid_argument("monomial subsets must have size 1..3");
  }
  auto it = coeffs_.find(subset);
  const std::uint8_t base = it == coeffs_.end() ? 0 : it->second;
  const std::uint8_t next = static_cast<std::uint8_t>((base + delta) % 8);
  if (next == 0) {
    if (it != coeffs_.end()) {
      coeffs_.erase(it);
    }
  } else if (it == coeffs_.end()) {
    coeffs_.emplace(subset, next);
  } else {
    it->second = next;
  }
}

std::uint8_t MonomialPolynomial::evaluate(const BitVec& x) const {
  unsigned total = 0;
  for (const auto& [subset, coeff] : coeffs_) {
    bool covered = true;
    for (std::uint32_t i : subset) {
      if (!x.get(i)) {
        covered = false;
        break;
      }
    }
    if (covered) {
      total += coeff;
    }
  }
  return static_cast<std::uint8_t>(total % 8);
}

std::string_view to_string(GateClass c) {
  switch (c) {
    case GateClass::Identity:
      return "identity";
    case GateClass::CliffordOnly:
      return "clifford";
    case GateClass::NonClifford:
      return "non_clifford";
  }
  return "unknown";
}

PhasePolynomial from_rows(const BitMatrix& m,
                          std::optional<std::vector<std::uint8_t>> coeffs) {
  if (coeffs && coeffs->size() != m.rows()) {
    throw std::invalid_argument("coefficient vector length does not match row count");
  }
  PhasePolynomial pp(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    pp.add_term(m.row(r), coeffs ? (*coeffs)[r] : std::uint8_t{1});
  }
  return pp;
}

std::uint8_t evaluate(const PhasePolynomial& pp, const BitVec& x) {
  if (x.size() != pp.num_vars()) {
    throw std::invalid_argument("evaluation point length does not match variable count");
  }
  unsigned total = 0;
  for (const PhaseTerm& t : pp.terms()) {
    if (t.support.dot(x)) {
      total += t.coeff;
    }
  }
  return static_cast<std::uint8_t>(total % 8);
}

PhasePolynomial fuse(const PhasePolynomial& pp) {
  std::map<BitVec, std::uint8_t> merged;
  for (const PhaseTerm& t : pp.terms()) {
    auto [it, inserted] = merged.emplace(t.support, t.coeff);
    if (!inserted) {
      it->second = static_cast<std::uint8_t>((it->second + t.coeff) % 8);
    }
  }
  PhasePolynomial result(pp.num_vars());
  for (const auto& [support, coeff] : merged) {
    if (coeff != 0) {
      result.add_term(support, coeff);
    }
  }
  return result;
}

MonomialPolynomial to_monomial(const PhasePolynomial& pp) {
  MonomialPolynomial mono(pp.num_vars());
  for (const PhaseTerm& t : pp.terms()) {
    const std::vector<std::size_t> bits = t.support.set_bits();
    // (-2)^(|S|-1) mod 8: 1 for singletons, 6 for pairs, 4 for triples.
    for (std::size_t i = 0; i < bits.size(); ++i) {
      mono.add({static_cast<std::uint32_t>(bits[i])}, t.coeff);
    }
    const std::uint8_t pair_delta = static_cast<std::uint8_t>((6 * t.coeff) % 8);
    const std::uint8_t triple_delta = static_cast<std::uint8_t>((4 * t.coeff) % 8);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      for (std::size_t j = i + 1; j < bits.size(); ++j) {
        if (pair_delta != 0) {
          mono.add({static_cast<std::uint32_t>(bits[i]),
                    static_cast<std::uint32_t>(bits[j])},
                   pair_delta);
        }
        if (triple_delta != 0) {
          for (std::size_t k = j + 1; k < bits.size(); ++k) {
            mono.add({static_cast<std::uint32_t>(bits[i]),
                      static_cast<std::uint32_t>(bits[j]),
                      static_cast<std::uint32_t>(bits[k])},
                     triple_delta);
          }
        }
      }
    }
  }
  return mono;
}

GateClass classify(const PhasePolynomial& pp) {
  const MonomialPolynomial mono = to_monomial(pp);
  if (mono.empty()) {
    return GateClass::Identity;
  }
  for (const auto& [subset, coeff] : mono.coeffs()) {
    switch (subset.size()) {
      case 1:
        if (coeff % 2 != 0) {
          return GateClass::NonClifford;
        }
        break;
      case 2:
        if (coeff != 4) {
          return GateClass::NonClifford;
        }
        break;
      default:
        return GateClass::NonClifford;  // nonzero triple coefficient
    }
  }
  return GateClass::CliffordOnly;
}

std::vector<std::uint8_t> oracle_phases(const PhasePolynomial& pp, std::size_t cap) {
  const std::size_t n = pp.num_vars();
  if (n > cap || n >= 64) {
    throw std::invalid_argument("oracle_phases cap exceeded");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> phases(count, 0);
  for (const PhaseTerm& t : pp.terms()) {
    const std::uint64_t mask = t.support.low_bits();
    for (std::size_t x = 0; x < count; ++x) {
      if (std::popcount(x & mask) & 1) {
        phases[x] = static_cast<std::uint8_t>((phases[x] + t.coeff) % 8);
      }
    }
  }
  return phases;
}

bool equal(const PhasePolynomial& p1, const PhasePolynomial& p2) {
  if (p1.num_vars() != p2.num_vars()) {
    throw std::invalid_argument("cannot compare polynomials over different variable counts");
  }
  return classify(p1.concat(p2.negate())) == GateClass::Identity;
}

PhasePolynomial read_gadget_list(std::istream& in) {
  std::vector<std::pair<std::string, std::uint8_t>> entries;
  std::string line;
  std::size_t line_no = 0;
  std::size_t vars = 0;
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
                       ": expected \"support-bitstring coefficient(0-7)\"");
    }
    std::string rest;
    if (ls >> rest) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing input");
    }
    if (entries.empty()) {
      vars = support.size();
    } else if (support.size() != vars) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": support length differs from earlier terms");
    }
    entries.emplace_back(support, static_cast<std::uint8_t>(coeff));
  }
  PhasePolynomial pp(vars);
  for (const auto& [support, coeff] : entries) {
    pp.add_term(BitVec::from_string(support), coeff);
  }
  return pp;
}

PhasePolynomial parse_gadget_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_gadget_list(in);
}

void write_gadget_list(std::ostream& out, const PhasePolynomial& pp) {
  for (const PhaseTerm& t : pp.terms()) {
    out << t.support.to_string() << ' ' << static_cast<int>(t.coeff) << '\n';
  }
}

}  // namespace trinest
