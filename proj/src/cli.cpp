// Copyright 2026 The qdilate Authors
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

#include "qdilate/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdilate/canonical.hpp"
#include "qdilate/pipeline.hpp"
#include "qdilate/random.hpp"

namespace qdilate::cli {

namespace {

const std::vector<std::string> kRandomKinds = {"haar_unitary_channel", "random_mixed_unitary", "random_unital_choi"};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  file << text;
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

std::string format_distance(double d) {
  std::ostringstream os;
  os << std::setprecision(17) << d;
  return os.str();
}

MixedUnitaryDecomposition random_mixture(Rng& rng, std::size_t k) {
  MixedUnitaryDecomposition m;
  m.weights = rng.dirichlet(k);
  for (std::size_t i = 0; i < k; ++i) m.unitaries.push_back(haar_unitary(2, rng));
  return m;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kParseError;
    case ErrorCode::NotUnital: return kNotUnital;
    case ErrorCode::NotCP:
    case ErrorCode::NotPSD: return kNotCP;
    case ErrorCode::NotTracePreserving:
    case ErrorCode::InvalidKraus: return kNotTracePreserving;
    case ErrorCode::KTooSmall: return kKTooSmall;
    case ErrorCode::NotMajorized: return kNotMajorized;
    case ErrorCode::AssertionFailure: return kAssertionFailure;
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidWeights:
    case ErrorCode::InvalidDecomposition:
    case ErrorCode::DimensionMismatch: return kUsageError;
    default: return kInternalError;
  }
}

io::Json cmd_decompose(const io::Json& channel) {
  const ChannelRep rep = io::channel_from_json(channel);
  require_unital_qubit(rep);
  return io::channel_to_json(mixed_unitary_decomposition(rep));
}

DilateOutput cmd_dilate(const io::Json& channel, std::size_t k) {
  const DilationReport report = dilate_channel(io::channel_from_json(channel), k);
  return {io::dilation_to_json(report.dilation), report.distance, report.kraus_rank};
}

io::Json cmd_rebalance(const io::Json& channel, const std::optional<std::vector<double>>& target) {
  const ChannelRep rep = io::channel_from_json(channel);
  require_unital_qubit(rep);
  MixedUnitaryDecomposition source;
  if (const auto* m = std::get_if<MixedUnitaryDecomposition>(&rep)) {
    source = *m;
  } else {
    source = mixed_unitary_decomposition(rep);
  }
  const std::vector<double> q = target ? *target : std::vector<double>(source.size(), 1.0 / static_cast<double>(source.size()));
  const ReweightResult result = reweight(source, q);
  return io::Json{{"decomposition", io::channel_to_json(result.decomposition)}, {"steps", io::steps_to_json(result.steps)}};
}

double cmd_verify(const io::Json& channel, const io::Json& dilation) {
  const ChannelRep rep = io::channel_from_json(channel);
  const DilationUnitary u = io::dilation_from_json(dilation);
  if (u.matrix.rows() != channel_dim(rep) * u.env_dim) {
    fail(ErrorCode::DimensionMismatch, "dilation does not match the channel dimension");
  }
  return verify_noisy_representation(rep, u, u.env_dim);
}

io::Json cmd_random(const std::string& kind, std::uint64_t seed, std::size_t k) {
  Rng rng(seed);
  if (kind == "haar_unitary_channel") {
    return io::channel_to_json(KrausDecomposition{2, {haar_unitary(2, rng)}});
  }
  if (k == 0) fail(ErrorCode::InvalidArgument, "mixture size must be at least 1");
  if (kind == "random_mixed_unitary") return io::channel_to_json(random_mixture(rng, k));
  if (kind == "random_unital_choi") return io::channel_to_json(to_choi(random_mixture(rng, k)));
  fail(ErrorCode::InvalidArgument, "unknown random kind " + kind);
}

RankHistogram cmd_census(Index d, Index n, std::size_t trials, std::uint64_t seed) {
  RankHistogram h = rank_census(d, n, trials, seed);
  if (d == 2 && n == 2 && h.counts.contains(3)) {
    fail(ErrorCode::AssertionFailure, "2-noisy qubit operation with Kraus rank 3 observed (" +
                                          std::to_string(h.counts.at(3)) + " trials)");
  }
  if (h.rank_mismatches > 0) {
    fail(ErrorCode::AssertionFailure, std::to_string(h.rank_mismatches) + " trials with Kraus rank != Schmidt rank");
  }
  return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unital qubit channels as noisy operations: decomposition, rebalancing, dilation, rank census"};
  app.name("qdilate");
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string dilation_path;
  std::string kind;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  std::size_t k = 4;
  Index sys_dim = 2;
  double tolerance = kDefaultVerifyTol;
  std::vector<double> target;

  auto* decompose = app.add_subcommand("decompose", "Mixed-unitary decomposition of a unital qubit channel");
  decompose->add_option("-i,--input", input, "Channel JSON")->required();
  decompose->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* rebalance = app.add_subcommand("rebalance", "Reweight a decomposition to a majorized target");
  rebalance->add_option("-i,--input", input, "Channel JSON")->required();
  rebalance->add_option("--target", target, "Comma-separated target weights (default: uniform)")->delimiter(',');
  rebalance->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* dilate = app.add_subcommand("dilate", "Environment dilation with a k-dimensional maximally mixed environment");
  dilate->add_option("-i,--input", input, "Channel JSON")->required();
  dilate->add_option("-k,--env-dim", k, "Environment dimension k >= Kraus rank")->capture_default_str();
  dilate->add_option("--tol", tolerance, "Maximum accepted Choi distance")->capture_default_str();
  dilate->add_option("-o,--output", output, "Dilation JSON output (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Choi distance between a channel and a dilation");
  verify->add_option("-i,--input", input, "Channel JSON")->required();
  verify->add_option("--dilation", dilation_path, "Dilation JSON")->required();
  verify->add_option("--tol", tolerance, "Maximum accepted Choi distance")->capture_default_str();

  auto* census = app.add_subcommand("census", "Kraus-rank histogram of Haar-random n-noisy operations");
  census->add_option("--sys-dim", sys_dim, "System dimension d")->capture_default_str()->check(CLI::PositiveNumber);
  census->add_option("-k,--env-dim", k, "Environment dimension n")->capture_default_str()->check(CLI::PositiveNumber);
  census->add_option("--trials", trials, "Number of samples")->capture_default_str()->check(CLI::PositiveNumber);
  census->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  census->add_option("--format", format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  census->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* random = app.add_subcommand("random", "Seeded random channel instance");
  random->add_option("--kind", kind, "Instance family")->required()->check(CLI::IsMember(kRandomKinds));
  random->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  random->add_option("-k,--env-dim", k, "Number of mixture terms")->capture_default_str()->check(CLI::PositiveNumber);
  random->add_option("-o,--output", output, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (!output.empty() && (output == input || output == dilation_path)) {
    err << "error: output path must differ from input paths\n";
    return kUsageError;
  }

  try {
    if (*decompose) {
      emit(dump(cmd_decompose(io::read_file(input))), output, out);
    } else if (*rebalance) {
      std::optional<std::vector<double>> q;
      if (!target.empty()) q = target;
      emit(dump(cmd_rebalance(io::read_file(input), q)), output, out);
    } else if (*dilate) {
      const DilateOutput result = cmd_dilate(io::read_file(input), k);
      emit(dump(result.dilation), output, out);
      std::ostream& report = output.empty() ? err : out;
      report << "choi_distance " << format_distance(result.distance) << "\n";
      if (!(result.distance <= tolerance)) {
        err << "error: Choi distance " << format_distance(result.distance) << " exceeds " << tolerance << "\n";
        return kToleranceExceeded;
      }
    } else if (*verify) {
      const double distance = cmd_verify(io::read_file(input), io::read_file(dilation_path));
      out << "choi_distance " << format_distance(distance) << "\n";
      if (!(distance <= tolerance)) {
        err << "error: Choi distance " << format_distance(distance) << " exceeds " << tolerance << "\n";
        return kToleranceExceeded;
      }
    } else if (*census) {
      const RankHistogram h = cmd_census(sys_dim, static_cast<Index>(k), trials, seed);
      emit(format == "csv" ? io::census_to_csv(h) : dump(io::census_to_json(h)), output, out);
    } else if (*random) {
      emit(dump(cmd_random(kind, seed, k)), output, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}

}  // namespace qdilate::cli
