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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdilate/errors.hpp"
#include "qdilate/json_io.hpp"
#include "qdilate/schmidt.hpp"

namespace qdilate::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kParseError = 3,
  kNotUnital = 4,
  kNotCP = 5,
  kNotTracePreserving = 6,
  kKTooSmall = 7,
  kNotMajorized = 8,
  kToleranceExceeded = 9,
  kAssertionFailure = 10,
};

inline constexpr double kDefaultVerifyTol = 1e-9;

int exit_code_for(ErrorCode code);

// In-memory forms of the subcommands; `run` adds argument parsing and file
// handling around them.

io::Json cmd_decompose(const io::Json& channel);

struct DilateOutput {
  io::Json dilation;
  double distance = 0.0;
  std::size_t kraus_rank = 0;
};
DilateOutput cmd_dilate(const io::Json& channel, std::size_t k);

/// {"decomposition": channel, "steps": [...]}; target defaults to uniform.
io::Json cmd_rebalance(const io::Json& channel, const std::optional<std::vector<double>>& target);

double cmd_verify(const io::Json& channel, const io::Json& dilation);

/// kind is one of haar_unitary_channel, random_mixed_unitary, random_unital_choi.
io::Json cmd_random(const std::string& kind, std::uint64_t seed, std::size_t k);

/// Throws AssertionFailure if a d = n = 2 census finds Kraus rank 3.
RankHistogram cmd_census(Index d, Index n, std::size_t trials, std::uint64_t seed);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdilate::cli
