// Copyright 2026 The planedec Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "planedec/constructions.hpp"
#include "planedec/io.hpp"
#include "planedec/oracle.hpp"
#include "planedec/selftest.hpp"
#include "planedec/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification/oracle mismatch, 2 invalid input,
// 3 oracle budget exhausted.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;
constexpr int kBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw planedec::InvalidInputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw planedec::InvalidInputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw planedec::InvalidInputError("write to '" + path + "' failed");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace planedec;

  CLI::App app{"planar decompositions of K_{1,n,n}, K_{2,n,n}, K_{1,1,n,n} "
               "with independent verification"};
  app.require_subcommand(1);

  // gen
  std::string gen_family, gen_out;
  int gen_n = 0;
  auto* gen = app.add_subcommand("gen", "generate a verified decomposition");
  gen->add_option("--family", gen_family, "knn|k1nn|k2nn|k11nn")->required();
  gen->add_option("--n", gen_n, "family size n")->required();
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  // verify
  std::string verify_file;
  std::optional<int> verify_expect;
  auto* verify = app.add_subcommand("verify", "verify a decomposition document");
  verify->add_option("file", verify_file, "decomposition JSON")->required();
  verify->add_option("--expect-count", verify_expect, "required page count");

  // formula
  std::string formula_family;
  int formula_n = 0;
  auto* formula = app.add_subcommand("formula", "print the thickness formula value");
  formula->add_option("--family", formula_family, "knn|k1nn|k2nn|k11nn")->required();
  formula->add_option("--n", formula_n, "family size n")->required();

  // base
  int base_p = 0;
  std::string base_out;
  auto* base = app.add_subcommand("base", "emit the base decomposition of K_{4p,4p}");
  base->add_option("--p", base_p, "block count p >= 1")->required();
  base->add_option("--out", base_out, "output file (default: stdout)");

  // oracle
  std::string oracle_file;
  int oracle_max_k = 4;
  long long oracle_budget = kDefaultOracleBudget;
  auto* oracle = app.add_subcommand("oracle", "exact thickness of a tiny graph");
  oracle->add_option("--file", oracle_file, "graph/v1 JSON")->required();
  oracle->add_option("--max-k", oracle_max_k, "largest page count to try");
  oracle->add_option("--budget", oracle_budget, "assignment budget");

  // export-dot
  std::string dot_file, dot_mode = "per-page", dot_dir;
  auto* dot = app.add_subcommand("export-dot", "render a decomposition as DOT");
  dot->add_option("file", dot_file, "decomposition JSON")->required();
  dot->add_option("--mode", dot_mode, "per-page|colored-union");
  dot->add_option("--out", dot_dir, "output directory")->required();

  // selftest
  SelftestOptions selftest_options;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance sweep");
  selftest->add_option("--n-max", selftest_options.n_max, "cap for the family sweeps");
  selftest->add_option("--random-graphs", selftest_options.random_graphs,
                       "sample size for the planarity cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream dummy;
    int code = app.exit(e, dummy, dummy);
    if (code == 0) {  // --help and friends
      std::cout << dummy.str();
      return kOk;
    }
    std::cerr << dummy.str() << app.help();
    return kBadInput;
  }

  try {
    if (gen->parsed()) {
      Decomposition d = generate(GraphFamily::parse(gen_family), gen_n);
      emit(save_decomposition(d), gen_out);
      return kOk;
    }
    if (verify->parsed()) {
      Decomposition d = load_decomposition(read_file(verify_file));
      VerificationReport report = verify_decomposition(d, verify_expect);
      std::cout << report_to_json(report);
      return report.overall ? kOk : kMismatch;
    }
    if (formula->parsed()) {
      std::cout << thickness_formula(GraphFamily::parse(formula_family), formula_n)
                << "\n";
      return kOk;
    }
    if (base->parsed()) {
      Decomposition d = generate(GraphFamily::knn(), 4 * base_p);
      emit(save_decomposition(d), base_out);
      return kOk;
    }
    if (oracle->parsed()) {
      GraphDocument doc = load_graph(read_file(oracle_file));
      OracleResult result = exact_thickness(doc.graph, oracle_max_k, oracle_budget);
      std::ostringstream os;
      os << "{\n";
      switch (result.kind) {
        case OracleResult::Kind::Exact:
          os << "  \"kind\": \"exact\",\n  \"thickness\": " << result.k << ",\n";
          break;
        case OracleResult::Kind::LowerBoundOnly:
          os << "  \"kind\": \"lower-bound-only\",\n  \"lower_bound\": " << result.k
             << ",\n";
          break;
        case OracleResult::Kind::BudgetExhausted:
          os << "  \"kind\": \"budget-exhausted\",\n";
          break;
      }
      os << "  \"nodes_explored\": " << result.nodes_explored;
      if (result.kind == OracleResult::Kind::Exact) {
        os << ",\n  \"witness\": [";
        for (std::size_t i = 0; i < result.witness.size(); ++i) {
          os << (i ? ", " : "") << "[";
          for (std::size_t j = 0; j < result.witness[i].size(); ++j) {
            os << (j ? ", " : "") << "[" << result.witness[i][j].first << ", "
               << result.witness[i][j].second << "]";
          }
          os << "]";
        }
        os << "]";
      }
      os << "\n}\n";
      std::cout << os.str();
      if (result.kind == OracleResult::Kind::BudgetExhausted) return kBudget;
      return result.kind == OracleResult::Kind::Exact ? kOk : kMismatch;
    }
    if (dot->parsed()) {
      DotMode mode;
      if (dot_mode == "per-page") {
        mode = DotMode::PerPage;
      } else if (dot_mode == "colored-union") {
        mode = DotMode::ColoredUnion;
      } else {
        throw InvalidInputError("unknown mode '" + dot_mode + "'");
      }
      Decomposition d = load_decomposition(read_file(dot_file));
      std::filesystem::create_directories(dot_dir);
      for (const DotFile& file : export_dot(d, mode)) {
        write_file((std::filesystem::path(dot_dir) / file.filename).string(),
                   file.content);
        std::cout << (std::filesystem::path(dot_dir) / file.filename).string()
                  << "\n";
      }
      return kOk;
    }
    if (selftest->parsed()) {
      auto results = run_selftest(selftest_options, std::cout);
      return selftest_ok(results) ? kOk : kMismatch;
    }
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kBadInput;
}
