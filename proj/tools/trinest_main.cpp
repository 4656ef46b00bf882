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

// Batch CLI over the matrix, gadget, certificate, code and circuit file
// formats. Exit codes: 0 = property holds / success, 1 = property fails,
// 2 = usage or format error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trinest/bitmat.hpp"
#include "trinest/circuits.hpp"
#include "trinest/css.hpp"
#include "trinest/nests.hpp"
#include "trinest/phasepoly.hpp"
#include "trinest/triortho.hpp"
#include "trinest/zring.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::size_t oracle_cap = 20;
  bool machine = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw trinest::ParseError("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string gate_summary(const trinest::LogicalGate& h) {
  if (h.empty()) {
    return "-";
  }
  std::string out;
  for (const auto& [support, coeff] : h.coeffs()) {
    if (!out.empty()) {
      out += ',';
    }
    out += support.to_string() + ':' + std::to_string(static_cast<int>(coeff));
  }
  return out;
}

std::string op_digits(const trinest::TransversalOp& p) {
  std::string out;
  for (std::uint8_t t : p.t_powers) {
    out += static_cast<char>('0' + t);
  }
  return out;
}

int run_check_triortho(const CliConfig& cfg, const std::string& path) {
  const trinest::BitMatrix m = trinest::parse_bit_matrix(slurp(path));
  const bool tri = trinest::is_triorthogonal(m);
  const bool semi = trinest::is_semi_triorthogonal(m);
  const trinest::GateClass cls = trinest::classify(trinest::from_rows(m));

  std::optional<bool> oracle_zero;
  if (m.cols() <= cfg.oracle_cap) {
    const std::vector<std::uint8_t> phases =
        trinest::oracle_phases(trinest::from_rows(m), cfg.oracle_cap);
    oracle_zero = std::all_of(phases.begin(), phases.end(),
                              [](std::uint8_t p) { return p == 0; });
  }

  if (cfg.machine) {
    std::cout << "rows=" << m.rows() << '\n'
              << "cols=" << m.cols() << '\n'
              << "triorthogonal=" << bool_str(tri) << '\n'
              << "semi_triorthogonal=" << bool_str(semi) << '\n'
              << "class=" << trinest::to_string(cls) << '\n'
              << "oracle_zero="
              << (oracle_zero ? bool_str(*oracle_zero) : "skipped") << '\n';
  } else {
    std::cout << (tri ? "triorthogonal" : semi ? "semi-triorthogonal" : "neither") << '\n'
              << "gate class: " << trinest::to_string(cls) << '\n';
    if (oracle_zero) {
      std::cout << "oracle: phase table " << (*oracle_zero ? "all zero" : "nonzero") << '\n';
    }
  }
  return tri ? kExitHolds : kExitFails;
}

int run_indicator(const CliConfig& cfg, const std::string& path) {
  const trinest::BitMatrix m = trinest::parse_bit_matrix(slurp(path));
  const trinest::IndicatorPolynomial p = trinest::indicator_polynomial(m);
  const auto [reduced_degree, semi] = trinest::degree_check(m);
  const bool consistent = semi == trinest::is_semi_triorthogonal(m);

  if (cfg.machine) {
    std::cout << "cols=" << m.cols() << '\n'
              << "indicator=" << strip_spaces(p.to_string()) << '\n'
              << "degree=" << p.degree() << '\n'
              << "reduced_degree=" << reduced_degree << '\n'
              << "semi_triorthogonal=" << bool_str(semi) << '\n'
              << "degree_check_consistent=" << bool_str(consistent) << '\n';
  } else {
    std::cout << "indicator: " << p.to_string() << '\n'
              << "degree: " << p.degree() << '\n'
              << "reduced degree: " << reduced_degree << '\n'
              << "semi-triorthogonal: " << bool_str(semi) << '\n'
              << "degree criterion consistency: " << (consistent ? "ok" : "VIOLATED") << '\n';
  }
  return consistent ? kExitHolds : kExitFails;
}

int run_gen_nest(const CliConfig&, const std::string& monomial_bits, std::size_t vars) {
  trinest::BitVec monomial(vars);
  if (!monomial_bits.empty()) {
    if (monomial_bits.size() != vars) {
      throw trinest::ParseError("--monomial mask length must equal --vars");
    }
    monomial = trinest::BitVec::from_string(monomial_bits);
  }
  trinest::write_bit_matrix(std::cout, trinest::monomial_nest(monomial, vars));
  return kExitHolds;
}

int run_prove_identity(const CliConfig& cfg, const std::string& matrix_path,
                       const std::string& verify_path, const std::string& out_path) {
  if (!verify_path.empty()) {
    const trinest::NestCertificate cert = trinest::parse_certificate(slurp(verify_path));
    bool ok = trinest::verify_certificate(cert);
    bool target_matches = true;
    if (!matrix_path.empty()) {
      target_matches = cert.target == trinest::parse_bit_matrix(slurp(matrix_path));
      ok = ok && target_matches;
    }
    if (cfg.machine) {
      std::cout << "verified=" << bool_str(ok) << '\n';
      if (!matrix_path.empty()) {
        std::cout << "target_matches=" << bool_str(target_matches) << '\n';
      }
    } else {
      std::cout << (ok ? "certificate verified" : "certificate INVALID") << '\n';
    }
    return ok ? kExitHolds : kExitFails;
  }

  if (matrix_path.empty()) {
    throw trinest::ParseError("prove-identity needs a matrix file or --verify");
  }
  const trinest::BitMatrix m = trinest::parse_bit_matrix(slurp(matrix_path));
  if (!trinest::is_triorthogonal(m)) {
    std::cerr << "matrix is not triorthogonal; no identity to prove\n";
    return kExitFails;
  }
  const trinest::NestCertificate cert = trinest::decompose_identity(m);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      throw trinest::ParseError("cannot write file: " + out_path);
    }
    trinest::write_certificate(out, cert);
  } else {
    trinest::write_certificate(std::cout, cert);
  }
  return kExitHolds;
}

int run_rm_dual(const CliConfig& cfg, unsigned r, unsigned m) {
  if (r >= m) {
    throw trinest::ParseError("rm-dual requires r < m");
  }
  const bool ok = trinest::rm_dual_verify(r, m);
  const std::size_t dim1 = trinest::rm_generator(r, m).generator.rows();
  const std::size_t dim2 = trinest::rm_generator(m - r - 1, m).generator.rows();
  if (cfg.machine) {
    std::cout << "r=" << r << '\n'
              << "m=" << m << '\n'
              << "dim1=" << dim1 << '\n'
              << "dim2=" << dim2 << '\n'
              << "points=" << (std::size_t{1} << m) << '\n'
              << "verified=" << bool_str(ok) << '\n';
  } else {
    std::cout << "RM(" << r << "," << m << ") dual of RM(" << (m - r - 1) << "," << m
              << "): " << (ok ? "verified" : "FAILED") << " (dims " << dim1 << " + " << dim2
              << " = " << (dim1 + dim2) << ")\n";
  }
  return ok ? kExitHolds : kExitFails;
}

int run_css_transversal(const CliConfig& cfg, const std::string& code_path,
                        const std::string& h_path, const std::string& p_path, bool all) {
  const trinest::CssCode code = trinest::parse_code(slurp(code_path));
  if (all && (!h_path.empty() || !p_path.empty())) {
    throw trinest::ParseError("--all cannot be combined with --h or --p");
  }

  // Code summary; the Z checks are recovered from the X data but play no
  // further part in the transversality math.
  if (cfg.machine) {
    std::cout << "n=" << code.n() << '\n'
              << "k=" << code.k() << '\n'
              << "r=" << code.r() << '\n'
              << "z_checks=" << code.z_check_basis().size() << '\n';
  } else {
    std::cout << "code: n=" << code.n() << " k=" << code.k() << " r=" << code.r()
              << " z-checks=" << code.z_check_basis().size() << '\n';
  }

  if (all) {
    const auto generators = trinest::transversal_generators(code);
    if (cfg.machine) {
      std::cout << "generators=" << generators.size() << '\n';
      for (std::size_t i = 0; i < generators.size(); ++i) {
        std::cout << "generator_" << (i + 1) << "_h=" << gate_summary(generators[i].first)
                  << '\n'
                  << "generator_" << (i + 1) << "_p=" << op_digits(generators[i].second)
                  << '\n';
      }
    } else {
      std::cout << "generators: " << generators.size() << '\n';
      for (std::size_t i = 0; i < generators.size(); ++i) {
        std::cout << "generator " << (i + 1) << ": h " << gate_summary(generators[i].first)
                  << " | p " << op_digits(generators[i].second) << '\n';
      }
    }
    return kExitHolds;
  }

  if (!h_path.empty() && !p_path.empty()) {
    const trinest::LogicalGate h = trinest::parse_logical_gate(slurp(h_path), code.k());
    const trinest::TransversalOp p = trinest::parse_transversal_op(slurp(p_path), code.n());
    const bool ok = trinest::check_transversal(code, h, p);
    std::string oracle = "skipped";
    if (code.k() + code.r() <= cfg.oracle_cap) {
      oracle = trinest::oracle_transversal(code, h, p, cfg.oracle_cap) == ok ? "agrees"
                                                                             : "disagrees";
    }
    if (cfg.machine) {
      std::cout << "transversal=" << bool_str(ok) << '\n' << "oracle=" << oracle << '\n';
    } else {
      std::cout << "transversal: " << (ok ? "yes" : "no") << '\n'
                << "oracle: " << oracle << '\n';
    }
    return ok ? kExitHolds : kExitFails;
  }

  if (!h_path.empty()) {
    const trinest::LogicalGate h = trinest::parse_logical_gate(slurp(h_path), code.k());
    const auto p = trinest::solve_for_p(code, h);
    if (cfg.machine) {
      std::cout << "solvable=" << bool_str(p.has_value()) << '\n';
      if (p) {
        std::cout << "p=" << op_digits(*p) << '\n';
      }
    } else if (p) {
      std::cout << "transversal op: " << op_digits(*p) << '\n';
    } else {
      std::cout << "unsolvable\n";
    }
    return p ? kExitHolds : kExitFails;
  }

  if (!p_path.empty()) {
    const trinest::TransversalOp p = trinest::parse_transversal_op(slurp(p_path), code.n());
    const auto h = trinest::solve_for_h(code, p);
    if (cfg.machine) {
      std::cout << "solvable=" << bool_str(h.has_value()) << '\n';
      if (h) {
        std::cout << "h=" << gate_summary(*h) << '\n';
      }
    } else if (h) {
      std::cout << "logical gate:\n";
      trinest::write_logical_gate(std::cout, *h);
    } else {
      std::cout << "unsolvable\n";
    }
    return h ? kExitHolds : kExitFails;
  }

  throw trinest::ParseError("css-transversal needs --h, --p, or --all");
}

int run_circ_equiv(const CliConfig& cfg, const std::string& path1, const std::string& path2) {
  const trinest::Circuit c1 = trinest::parse_circuit(slurp(path1));
  const trinest::Circuit c2 = trinest::parse_circuit(slurp(path2));
  if (c1.num_qubits != c2.num_qubits) {
    throw trinest::ParseError("circuits act on different qubit counts");
  }
  const bool ok = trinest::circuits_equivalent(c1, c2);
  if (cfg.machine) {
    std::cout << "equivalent=" << bool_str(ok) << '\n';
  } else {
    std::cout << (ok ? "equivalent" : "not equivalent") << '\n';
  }
  return ok ? kExitHolds : kExitFails;
}

int run_simulate(const CliConfig& cfg, const std::string& path) {
  const trinest::PhasePolynomial pp = trinest::parse_gadget_list(slurp(path));
  const std::vector<std::uint8_t> phases = trinest::oracle_phases(pp, cfg.oracle_cap);
  for (std::size_t x = 0; x < phases.size(); ++x) {
    std::string bits(pp.num_vars(), '0');
    for (std::size_t i = 0; i < pp.num_vars(); ++i) {
      if ((x >> i) & 1) {
        bits[i] = '1';
      }
    }
    if (cfg.machine) {
      std::cout << "phase_" << bits << '=' << static_cast<int>(phases[x]) << '\n';
    } else {
      std::cout << bits << ' ' << static_cast<int>(phases[x]) << '\n';
    }
  }
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  if (const char* env_cap = std::getenv("TRINEST_ORACLE_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(env_cap, &end, 10);
    if (end != env_cap && *end == '\0' && value > 0) {
      cfg.oracle_cap = static_cast<std::size_t>(value);
    }
  }

  CLI::App app{"Phase-polynomial analysis of diagonal Clifford+T operations: "
               "spider nest identities, CNOT+T equivalence, and transversal "
               "third-level gates of CSS codes"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "Output format: human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--oracle-cap", cfg.oracle_cap,
                 "Max variables for brute-force phase tables "
                 "(env TRINEST_ORACLE_CAP)");

  std::string matrix_path, verify_path, out_path, monomial_bits;
  std::string code_path, h_path, p_path, circ1, circ2, gadget_path;
  std::size_t vars = 0;
  unsigned rm_r = 0, rm_m = 0;
  bool all = false;

  CLI::App* check = app.add_subcommand("check-triortho",
                                       "Classify a gadget matrix: triorthogonal, "
                                       "semi-triorthogonal, or neither");
  check->add_option("matrix", matrix_path, "Matrix file")->required();

  CLI::App* indicator = app.add_subcommand("indicator",
                                           "Indicator polynomial, its degree, and the "
                                           "degree-based semi-triorthogonality check");
  indicator->add_option("matrix", matrix_path, "Matrix file")->required();

  CLI::App* gen_nest = app.add_subcommand("gen-nest",
                                          "Emit the spider nest matrix for a monomial");
  gen_nest->add_option("--monomial", monomial_bits,
                       "Variable mask bitstring (default: the constant monomial)");
  gen_nest->add_option("--vars", vars, "Total variable count")->required();

  CLI::App* prove = app.add_subcommand("prove-identity",
                                       "Emit or verify a nest-decomposition certificate");
  prove->add_option("matrix", matrix_path, "Triorthogonal matrix file");
  prove->add_option("--verify", verify_path, "Certificate file to verify");
  prove->add_option("--out", out_path, "Write the certificate here instead of stdout");

  CLI::App* rm_dual = app.add_subcommand("rm-dual", "Check RM(r,m)-perp == RM(m-r-1,m)");
  rm_dual->add_option("--r", rm_r, "Degree bound r")->required();
  rm_dual->add_option("--m", rm_m, "Variable count m")->required();

  CLI::App* css = app.add_subcommand("css-transversal",
                                     "Check, solve, or enumerate transversal third-level "
                                     "gates of a CSS code");
  // Free the short -h so the --h option can exist.
  css->set_help_flag("--help", "Print this help message and exit");
  css->add_option("code", code_path, "Code file")->required();
  css->add_option("--h", h_path, "Logical gate file");
  css->add_option("--p", p_path, "Transversal op file");
  css->add_flag("--all", all, "Enumerate a generating set of all transversal gates");

  CLI::App* equiv = app.add_subcommand("circ-equiv", "CNOT+T circuit equivalence check");
  equiv->add_option("circuit1", circ1, "First circuit file")->required();
  equiv->add_option("circuit2", circ2, "Second circuit file")->required();

  CLI::App* simulate = app.add_subcommand("simulate",
                                          "Brute-force phase table of a gadget list");
  simulate->add_option("gadgets", gadget_path, "Gadget list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  cfg.machine = format == "machine";

  try {
    if (*check) {
      return run_check_triortho(cfg, matrix_path);
    }
    if (*indicator) {
      return run_indicator(cfg, matrix_path);
    }
    if (*gen_nest) {
      return run_gen_nest(cfg, monomial_bits, vars);
    }
    if (*prove) {
      return run_prove_identity(cfg, matrix_path, verify_path, out_path);
    }
    if (*rm_dual) {
      return run_rm_dual(cfg, rm_r, rm_m);
    }
    if (*css) {
      return run_css_transversal(cfg, code_path, h_path, p_path, all);
    }
    if (*equiv) {
      return run_circ_equiv(cfg, circ1, circ2);
    }
    if (*simulate) {
      return run_simulate(cfg, gadget_path);
    }
  } catch (const trinest::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
