// Copyright 2026 The prgain Authors
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

// prgain: command-line front end over libprgain.
//
//   prgain anonymize --input D.csv --config C.json --output D2.csv
//                    --report R.json [--k N] [--residual drop|keep|suppress]
//                    [--max-branches N] [--trace best|all] [--no-timing]
//   prgain verify    --input D2.csv --config C.json [--k N]
//   prgain evaluate  --original D.csv --anonymized D2.csv --class-attr A
//                    [--seed S] [--split F] [--alpha A] [--config C.json]
//                    [--output E.json] [--no-timing]
//
// Exit codes: 0 success, 1 invalid input or config, 2 anonymization
// impossible, 3 verification failed, 4 I/O failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "prgain/prgain.h"

namespace {

struct ConfigDeleter {
  void operator()(prg_config* c) const { prg_config_free(c); }
};
struct TableDeleter {
  void operator()(prg_table* t) const { prg_table_free(t); }
};
struct ResultDeleter {
  void operator()(prg_result* r) const { prg_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { prg_string_free(s); }
};

using ConfigPtr = std::unique_ptr<prg_config, ConfigDeleter>;
using TablePtr = std::unique_ptr<prg_table, TableDeleter>;
using ResultPtr = std::unique_ptr<prg_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int Report(prg_status status) {
  std::cerr << "prgain: error: " << prg_last_error() << "\n";
  return static_cast<int>(status);
}

int WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) out << contents;
  if (!out) {
    std::cerr << "prgain: error: cannot write '" << path << "'\n";
    return PRG_ERR_IO;
  }
  return PRG_OK;
}

prg_status LoadConfig(const std::string& path, ConfigPtr* out) {
  prg_config* raw = nullptr;
  prg_status s = prg_config_load(path.c_str(), &raw);
  out->reset(raw);
  return s;
}

prg_status LoadTable(const std::string& path, TablePtr* out) {
  prg_table* raw = nullptr;
  prg_status s = prg_table_load(path.c_str(), &raw);
  out->reset(raw);
  return s;
}

struct AnonymizeArgs {
  std::string input, config, output, report;
  int k = 0;
  std::string residual;
  int max_branches = -1;
  std::string trace = "best";
  bool no_timing = false;
};

int RunAnonymize(const AnonymizeArgs& args) {
  ConfigPtr config;
  if (prg_status s = LoadConfig(args.config, &config); s != PRG_OK) {
    return Report(s);
  }
  TablePtr table;
  if (prg_status s = LoadTable(args.input, &table); s != PRG_OK) {
    return Report(s);
  }

  static const std::map<std::string, int> kPolicies = {
      {"", PRG_RESIDUAL_FROM_CONFIG},
      {"drop", PRG_RESIDUAL_DROP},
      {"keep", PRG_RESIDUAL_KEEP},
      {"suppress", PRG_RESIDUAL_SUPPRESS}};
  prg_anonymize_options options;
  prg_anonymize_options_init(&options);
  options.k = args.k;
  options.residual_policy = kPolicies.at(args.residual);
  options.max_branches = args.max_branches;
  options.record_all_branches = args.trace == "all" ? 1 : 0;
  options.record_timing = args.no_timing ? 0 : 1;

  prg_result* raw = nullptr;
  prg_status s = prg_anonymize(table.get(), config.get(), &options, &raw);
  ResultPtr result(raw);
  if (s != PRG_OK) return Report(s);

  if ((s = prg_result_write_csv(result.get(), args.output.c_str())) !=
      PRG_OK) {
    return Report(s);
  }
  char* json = nullptr;
  if ((s = prg_result_report_json(result.get(), &json)) != PRG_OK) {
    return Report(s);
  }
  StringPtr report(json);
  if (int rc = WriteFile(args.report, report.get()); rc != PRG_OK) return rc;

  std::printf("anonymized %.4f of %zu rows, %zu residual\n",
              prg_result_privacy_achieved(result.get()),
              prg_table_num_rows(table.get()),
              prg_result_residual_count(result.get()));
  return PRG_OK;
}

struct VerifyArgs {
  std::string input, config;
  int k = 0;
};

int RunVerify(const VerifyArgs& args) {
  ConfigPtr config;
  if (prg_status s = LoadConfig(args.config, &config); s != PRG_OK) {
    return Report(s);
  }
  TablePtr table;
  if (prg_status s = LoadTable(args.input, &table); s != PRG_OK) {
    return Report(s);
  }
  char* json = nullptr;
  prg_status s = prg_verify(table.get(), config.get(), args.k, &json);
  StringPtr report(json);
  if (report != nullptr) std::cout << report.get();
  if (s != PRG_OK) return Report(s);
  return PRG_OK;
}

struct EvaluateArgs {
  std::string original, anonymized, class_attr, config, output;
  uint64_t seed = 42;
  double split = 0.7;
  double alpha = 1.0;
  bool no_timing = false;
};

int RunEvaluate(const EvaluateArgs& args) {
  ConfigPtr config;
  if (!args.config.empty()) {
    if (prg_status s = LoadConfig(args.config, &config); s != PRG_OK) {
      return Report(s);
    }
  }
  std::string class_attr = args.class_attr;
  if (class_attr.empty() && config != nullptr &&
      prg_config_class_attr(config.get()) != nullptr) {
    class_attr = prg_config_class_attr(config.get());
  }
  if (class_attr.empty()) {
    std::cerr << "prgain: error: --class-attr is required\n";
    return PRG_ERR_INVALID;
  }
  TablePtr original, anonymized;
  if (prg_status s = LoadTable(args.original, &original); s != PRG_OK) {
    return Report(s);
  }
  if (prg_status s = LoadTable(args.anonymized, &anonymized); s != PRG_OK) {
    return Report(s);
  }
  char* json = nullptr;
  prg_status s = prg_evaluate(original.get(), anonymized.get(),
                              class_attr.c_str(), args.split, args.seed,
                              args.alpha, config.get(),
                              args.no_timing ? 0 : 1, &json);
  StringPtr report(json);
  if (s != PRG_OK) return Report(s);
  std::cout << report.get();
  if (!args.output.empty()) return WriteFile(args.output, report.get());
  return PRG_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-gain driven k-anonymization of CSV tables"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(prg_version()));

  AnonymizeArgs anon;
  CLI::App* anonymize =
      app.add_subcommand("anonymize", "k-anonymize a CSV table");
  anonymize->add_option("--input", anon.input, "input CSV")
      ->required();
  anonymize->add_option("--config", anon.config, "run config JSON")
      ->required();
  anonymize->add_option("--output", anon.output, "anonymized CSV")
      ->required();
  anonymize->add_option("--report", anon.report, "report JSON")->required();
  anonymize->add_option("--k", anon.k, "override the config's k")
      ->check(CLI::Range(2, 1 << 30));
  anonymize->add_option("--residual", anon.residual, "residual policy")
      ->check(CLI::IsMember({"drop", "keep", "suppress"}));
  anonymize
      ->add_option("--max-branches", anon.max_branches,
                   "branch cap (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
  anonymize->add_option("--trace", anon.trace, "best or all")
      ->check(CLI::IsMember({"best", "all"}));
  anonymize->add_flag("--no-timing", anon.no_timing,
                      "report wall_time_ms as 0");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "check k-anonymity");
  verify->add_option("--input", ver.input, "CSV to check")->required();
  verify->add_option("--config", ver.config, "run config JSON")->required();
  verify->add_option("--k", ver.k, "k (default: the config's k)")
      ->check(CLI::PositiveNumber);

  EvaluateArgs eval;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "compare Naive Bayes accuracy on two tables");
  evaluate->add_option("--original", eval.original, "original CSV")
      ->required();
  evaluate->add_option("--anonymized", eval.anonymized, "anonymized CSV")
      ->required();
  evaluate->add_option("--class-attr", eval.class_attr, "class column");
  evaluate->add_option("--seed", eval.seed, "split seed");
  evaluate->add_option("--split", eval.split, "training fraction in (0, 1]");
  evaluate->add_option("--alpha", eval.alpha, "Laplace smoothing");
  evaluate->add_option("--config", eval.config,
                       "bin interval attributes to level 1");
  evaluate->add_option("--output", eval.output, "comparison JSON");
  evaluate->add_flag("--no-timing", eval.no_timing,
                     "report train_time_ms as 0");

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
    return PRG_ERR_INVALID;
  }

  if (*anonymize) return RunAnonymize(anon);
  if (*verify) return RunVerify(ver);
  return RunEvaluate(eval);
}
