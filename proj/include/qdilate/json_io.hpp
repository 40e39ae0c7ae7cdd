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

#include <string>
#include <vector>

#include <json.hpp>

#include "qdilate/channel.hpp"
#include "qdilate/dilation.hpp"
#include "qdilate/rebalance.hpp"
#include "qdilate/schmidt.hpp"

// Interchange formats. A complex matrix is
//   {"rows": r, "cols": c, "entries": [[re, im], ...]}   (row-major)
// A channel is {"dim": d} plus exactly one of
//   "kraus": [matrix, ...]
//   "mixed_unitary": {"weights": [...], "unitaries": [matrix, ...]}
//   "choi": matrix
// A dilation is {"env_dim": k, "matrix": matrix}.
namespace qdilate::io {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json channel_to_json(const ChannelRep& rep);
ChannelRep channel_from_json(const Json& j);

Json dilation_to_json(const DilationUnitary& u);
DilationUnitary dilation_from_json(const Json& j);

Json steps_to_json(const std::vector<TTransformStep>& steps);

Json census_to_json(const RankHistogram& h);
std::string census_to_csv(const RankHistogram& h);

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace qdilate::io
