/*
 * Copyright (c) 2026, The denserank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "denserank/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "denserank/axioms.hpp"
#include "denserank/enumerate.hpp"
#include "denserank/error.hpp"
#include "denserank/json_io.hpp"
#include "denserank/scores.hpp"

namespace denserank::cli {

namespace {

struct RankArgs {
  std::string method = "dense";
  std::string input_format = "csv-scores";
  std::string output_format = "csv";
  std::optional<std::string> tie_epsilon;
  bool has_header = false;
  std::string input_path;
};

struct VerifyArgs {
  int max_n = 4;
  std::string report_path;
  std::size_t threads = 1;
};

struct EnumerateArgs {
  int n = 0;
  bool count_only = false;
};

constexpr int kMaxCountN = 8;
constexpr int kMaxListN = 5;
constexpr int kMaxVerifyN = 6;

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int cmd_rank(const RankArgs& args, std::istream& in, std::ostream& out) {
  const auto op = find_operator(args.method);

  std::string data;
  if (args.input_path.empty() || args.input_path == "-") {
    data = read_all(in);
  } else {
    std::ifstream file(args.input_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::EmptyInput, "cannot open '" + args.input_path + "'");
    data = read_all(file);
  }

  std::optional<WeakOrder> order;
  if (args.input_format == "json-tiers") {
    if (args.tie_epsilon) throw Error(ErrorKind::ParseError, "--tie-epsilon only applies to csv-scores input");
    if (data.find_first_not_of(" \t\r\n") == std::string::npos) throw Error(ErrorKind::EmptyInput, "no input");
    order = parse_weak_order(data);
  } else {
    std::optional<Score> epsilon;
    if (args.tie_epsilon) {
      epsilon = parse_decimal(*args.tie_epsilon);
      if (*epsilon < 0) throw Error(ErrorKind::ParseError, "--tie-epsilon must be non-negative");
    }
    order = order_from_scores(parse_scores_csv(data, args.has_header), epsilon);
  }

  const auto rows = rank_rows(*order, op);
  out << (args.output_format == "json" ? format_rows_json(op.id(), rows) : format_rows_csv(rows));
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < kMinBound || args.max_n > kMaxVerifyN) {
    err << "error: --max-n must lie in [" << kMinBound << ", " << kMaxVerifyN << "]\n";
    return kExitInputError;
  }
  EngineOptions options;
  options.threads = args.threads;
  const auto matrix = verify_matrix(args.max_n, options);
  const auto results = verify_implications(matrix);
  const auto report = verification_report(matrix, results);

  std::size_t violated = 0;
  for (const auto& r : results) violated += r.status == ImplicationStatus::violated ? 1 : 0;
  const auto mismatches = matrix.mismatches();

  if (args.report_path.empty()) {
    out << report.dump(2) << '\n';
  } else {
    std::ofstream file(args.report_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << args.report_path << "'\n";
      return kExitInputError;
    }
    file << report.dump(2) << '\n';
    for (const auto& c : mismatches) {
      out << "MISMATCH " << c.observed.op << ' ' << to_string(c.observed.axiom) << ": expected "
          << to_string(c.expected) << ", observed " << to_string(c.observed.verdict) << '\n';
    }
    out << "matrix: " << matrix.cells.size() << " cells, " << mismatches.size() << " mismatched\n";
    out << "implications: " << results.size() << " instances, " << violated << " violated\n";
  }
  return mismatches.empty() && violated == 0 ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  const int limit = args.count_only ? kMaxCountN : kMaxListN;
  if (args.n < 1 || args.n > limit) {
    err << "error: n must lie in [1, " << limit << "]" << (args.count_only ? "" : " when listing") << '\n';
    return kExitInputError;
  }
  const auto ground = standard_ground(static_cast<std::size_t>(args.n));
  if (args.count_only) {
    out << for_each_weak_order(ground, [](const WeakOrder&) { return true; }) << '\n';
    return kExitOk;
  }
  for_each_weak_order(ground, [&](const WeakOrder& r) {
    out << to_json(r).dump() << '\n';
    return true;
  });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Position operators on weak orders and exhaustive axiom checks", "denserank"};
  app.require_subcommand(1);

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Assign positions to scored or tiered alternatives");
  rank->add_option("--method", rank_args.method, "Operator name, e.g. dense, standard, affine:a=2/1,b=1/1");
  rank->add_option("--input-format", rank_args.input_format)->check(CLI::IsMember({"csv-scores", "json-tiers"}));
  rank->add_option("--output-format", rank_args.output_format)->check(CLI::IsMember({"csv", "json"}));
  rank->add_option("--tie-epsilon", rank_args.tie_epsilon, "Chain scores at most this far apart into one tier");
  rank->add_flag("--has-header", rank_args.has_header, "Skip the first non-blank CSV line");
  rank->add_option("input", rank_args.input_path, "Input file (default: stdin)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check every operator against every axiom");
  verify->add_option("--max-n", verify_args.max_n, "Largest ground set in the universe");
  verify->add_option("--report", verify_args.report_path, "Write the JSON report here");
  verify->add_option("--threads", verify_args.threads, "Worker threads")->check(CLI::Range(1, 64));

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List or count the weak orders on {x1..xn}");
  enumerate->add_option("n", enum_args.n)->required();
  enumerate->add_flag("--count-only", enum_args.count_only);

  std::vector<std::string> storage{"denserank"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*rank) return cmd_rank(rank_args, in, out);
    if (*verify) return cmd_verify(verify_args, out, err);
    if (*enumerate) return cmd_enumerate(enum_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace denserank::cli
