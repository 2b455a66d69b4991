// Copyright 2026 The sigconj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sigconj command-line front end.
//
// Usage: sigconj <subcommand> [options]; run with --help for the list.
// Reports are JSON on stdout. Exit status: 0 when every check passed,
// 1 when a check failed, 2 for usage or input errors.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "sigconj/sigconj.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct MatrixDeleter {
  void operator()(sc_matrix* m) const { sc_matrix_free(m); }
};
struct SignsDeleter {
  void operator()(sc_signs* s) const { sc_signs_free(s); }
};

struct InputError {
  std::string message;
};

void require_ok(sc_status status, const std::string& context) {
  if (status != SC_OK) {
    throw InputError{context + ": " + sc_status_name(status) + ": " + sc_last_error()};
  }
}

struct Arguments {
  std::string matrix_path;
  std::string format = "auto";
  std::string signs;
  bool classic = false;
  std::string kind = "auto";
  std::size_t cayley_n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t perm_cap = 0;
  std::size_t permpoly_cap = 0;
  std::size_t minor_cap = 0;
  std::size_t orbit_cap = 0;
  unsigned threads = 1;
};

int run_command(sc_command command, const Arguments& args) {
  sc_options options;
  sc_options_init(&options);
  options.perm_cap = args.perm_cap;
  options.permpoly_cap = args.permpoly_cap;
  options.minor_sum_cap = args.minor_cap;
  options.orbit_cap = args.orbit_cap;
  options.threads = args.threads;
  options.classic = args.classic ? 1 : 0;
  options.samples = args.samples;
  options.seed = args.seed;
  options.cayley_n = args.cayley_n;
  static const std::map<std::string, sc_block_kind> kinds{
      {"auto", SC_BLOCK_AUTO}, {"sym", SC_BLOCK_SYM}, {"antisym", SC_BLOCK_ANTISYM}};
  options.block_kind = kinds.at(args.kind);

  std::unique_ptr<sc_matrix, MatrixDeleter> matrix;
  if (command != SC_CMD_CAYLEY) {
    static const std::map<std::string, sc_format> formats{
        {"auto", SC_FORMAT_AUTO}, {"csv", SC_FORMAT_CSV}, {"json", SC_FORMAT_JSON}};
    sc_matrix* raw = nullptr;
    require_ok(sc_matrix_load(args.matrix_path.c_str(), formats.at(args.format), &raw),
               "cannot read matrix '" + args.matrix_path + "'");
    matrix.reset(raw);
  }

  std::unique_ptr<sc_signs, SignsDeleter> signs;
  if (!args.signs.empty()) {
    sc_signs* raw = nullptr;
    require_ok(sc_signs_parse(args.signs.c_str(), &raw), "bad --signs '" + args.signs + "'");
    signs.reset(raw);
    options.signs = raw;
  }

  char* json = nullptr;
  int failed = 0;
  require_ok(sc_report(command, matrix.get(), &options, &json, &failed), "error");
  std::fputs(json, stdout);
  std::fflush(stdout);
  sc_string_free(json);
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact signature conjugation of rational matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sc_version());

  Arguments args;
  sc_options defaults;
  sc_options_init(&defaults);
  args.perm_cap = defaults.perm_cap;
  args.permpoly_cap = defaults.permpoly_cap;
  args.minor_cap = defaults.minor_sum_cap;
  args.orbit_cap = defaults.orbit_cap;

  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix,-m", args.matrix_path, "Matrix file (.csv or .json)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--format", args.format, "Input format")
        ->check(CLI::IsMember({"auto", "csv", "json"}))
        ->capture_default_str();
  };
  auto add_signs = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--signs,-c", args.signs, "Sign vector such as \"1,-1,1\"");
    if (required) opt->required();
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--perm-cap", args.perm_cap, "Largest n for permanents")->capture_default_str();
    sub->add_option("--permpoly-cap", args.permpoly_cap, "Largest n for the permanental polynomial")
        ->capture_default_str();
    sub->add_option("--minor-cap", args.minor_cap, "Largest n for principal subset sums")
        ->capture_default_str();
    sub->add_option("--orbit-cap", args.orbit_cap, "Largest n for orbit enumeration")
        ->capture_default_str();
    sub->add_option("--threads", args.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  std::map<CLI::App*, sc_command> commands;

  auto* apply = app.add_subcommand("apply", "Print phi_c(A)");
  add_matrix(apply);
  add_signs(apply, true);
  add_caps(apply);
  commands[apply] = SC_CMD_APPLY;

  auto* invariants = app.add_subcommand("invariants", "Trace, determinant, permanent, rank and polynomials");
  add_matrix(invariants);
  add_signs(invariants, false);
  add_caps(invariants);
  commands[invariants] = SC_CMD_INVARIANTS;

  auto* decompose = app.add_subcommand("decompose", "Split A into its fixed and negated parts");
  add_matrix(decompose);
  add_signs(decompose, false);
  decompose->add_flag("--classic", args.classic, "Use the transpose split");
  add_caps(decompose);
  commands[decompose] = SC_CMD_DECOMPOSE;

  auto* blockform = app.add_subcommand("blockform", "Permutation block form of a fixed or negated matrix");
  add_matrix(blockform);
  add_signs(blockform, true);
  blockform->add_option("--kind", args.kind, "Expected symmetry")
      ->check(CLI::IsMember({"auto", "sym", "antisym"}))
      ->capture_default_str();
  add_caps(blockform);
  commands[blockform] = SC_CMD_BLOCKFORM;

  auto* orbit = app.add_subcommand("orbit", "Orbit and stabilizer of A under all sign vectors");
  add_matrix(orbit);
  add_caps(orbit);
  commands[orbit] = SC_CMD_ORBIT;

  auto* cayley = app.add_subcommand("cayley", "Cayley table of the group of maps");
  cayley->add_option("--n", args.cayley_n, "Matrix order")->required()->check(CLI::Range(1, 6));
  commands[cayley] = SC_CMD_CAYLEY;

  auto* verify = app.add_subcommand("verify", "Run every applicable check on A");
  add_matrix(verify);
  verify->add_option("--samples", args.samples, "Random sign vectors (0: all when n <= 8)")
      ->capture_default_str();
  verify->add_option("--seed", args.seed, "Seed for sampled sign vectors")->capture_default_str();
  add_caps(verify);
  commands[verify] = SC_CMD_VERIFY;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const auto& [sub, command] : commands) {
      if (sub->parsed()) return run_command(command, args);
    }
  } catch (const InputError& e) {
    std::cerr << "sigconj: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
